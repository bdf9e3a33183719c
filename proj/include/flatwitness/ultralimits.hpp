#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace flatwitness {

using Complex = std::complex<double>;

/// A finite window a_1..a_N of a bounded sequence.
class BoundedSequence {
 public:
  explicit BoundedSequence(std::vector<Complex> values);

  std::size_t size() const { return values_.size(); }
  /// a_m for 1 <= m <= N.
  Complex at(std::size_t m) const { return values_.at(m - 1); }
  std::span<const Complex> values() const { return values_; }
  double sup_norm() const { return sup_norm_; }

 private:
  std::vector<Complex> values_;
  double sup_norm_ = 0.0;
};

/// Limit along the principal ultrafilter at m, which is a_m.
Complex principal_limit(const BoundedSequence& a, std::size_t m);

struct EventualLimit {
  Complex limit;
  double radius = 0.0;
};

/// Mean of the trailing tail_fraction of samples when every one of them lies
/// within tol of it. nullopt means no verdict: the tail has not settled.
std::optional<EventualLimit> eventual_limit(const BoundedSequence& a, double tol,
                                            double tail_fraction = 0.25);

enum class Membership { yes, no, undecidable };

const char* to_string(Membership m);

/// Whether a lies in m_F = {f : lim_F f = 0} for every non-principal
/// ultrafilter F, as far as the stored tail decides it.
Membership ideal_membership_nonprincipal(const BoundedSequence& a, double tol,
                                         double tail_fraction = 0.25);

}  // namespace flatwitness
