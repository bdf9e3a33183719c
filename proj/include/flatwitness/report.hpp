#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"

namespace flatwitness {

enum class Compare { le, lt, ge, eq };

const char* to_string(Compare c);

/// One residual or bound next to the threshold it is judged against, so that
/// pass can be recomputed from the report alone.
struct Check {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  Compare compare = Compare::le;
  bool pass = false;
};

bool evaluate(double value, Compare c, double threshold);

class RunReport {
 public:
  using Json = nlohmann::ordered_json;

  explicit RunReport(std::string subcommand);

  Json& parameters() { return parameters_; }
  Json& values() { return values_; }
  const std::vector<Check>& checks() const { return checks_; }

  /// Adds a check; a non-finite value fails.
  bool check(std::string name, double value, double threshold, Compare c = Compare::le);
  bool check_flag(std::string name, bool ok);

  bool passed() const;
  void stop_clock();
  double wall_time() const { return wall_time_; }

  Json to_json() const;
  /// One line per check, then PASS or FAIL.
  std::string to_text() const;

 private:
  std::string subcommand_;
  Json parameters_ = Json::object();
  Json values_ = Json::object();
  std::vector<Check> checks_;
  std::chrono::steady_clock::time_point start_;
  double wall_time_ = 0.0;
};

}  // namespace flatwitness
