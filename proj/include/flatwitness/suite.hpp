#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flatwitness/hardy.hpp"
#include "flatwitness/report.hpp"

namespace flatwitness {

struct SuiteOptions {
  std::uint64_t seed = 20240611;
};

struct CriterionInfo {
  int id = 0;
  std::string title;
  double time_limit = 0.0;  ///< seconds
};

/// Criteria 1..9; the whole-suite timing run lives with the caller.
const std::vector<CriterionInfo>& criteria();

/// Runs one criterion and appends a wall-time check against its limit.
RunReport run_criterion(int id, const SuiteOptions& options = {});

/// f = 1 on the 2^14 grid, factored with 256 shells.
HardyFactorization constant_one_factorization(std::size_t grid = 16384, std::size_t shells = 256);

/// |theta| grid samples of log(2 |sin(theta / 2)|); -inf at theta = 0.
std::vector<double> log_sine_modulus(std::size_t grid);

}  // namespace flatwitness
