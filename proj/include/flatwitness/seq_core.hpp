#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace flatwitness {

using Complex = std::complex<double>;

/// Closed-form continuation of a stored prefix: |a_{N+1+j}|^2 = first_sq * ratio^j.
/// ratio = 0 models a single lump of mass first_sq.
struct GeometricTail {
  double first_sq = 0.0;
  double ratio = 0.0;

  double sum() const { return first_sq / (1.0 - ratio); }
};

/// Squared magnitudes |a_k|^2 (k = 1..N) of a square-summable sequence and
/// their suffix sums r_n = sum_{k>n} |a_k|^2 (n = 0..N), accumulated
/// backwards so that r_{n-1} - r_n reproduces |a_n|^2 up to one rounding.
class TailProfile {
 public:
  TailProfile() = default;

  /// Builds from squared magnitudes. Throws InvalidInput on negative or
  /// non-finite entries or an invalid tail.
  static TailProfile from_squares(std::vector<double> magnitudes_sq,
                                  std::optional<GeometricTail> tail = {});

  /// Number of stored terms N.
  std::size_t size() const { return magnitudes_sq_.size(); }

  /// |a_k|^2 for 1 <= k <= N.
  double a_sq(std::size_t k) const { return magnitudes_sq_.at(k - 1); }

  /// r_n for 0 <= n <= N.
  double r(std::size_t n) const { return suffix_sums_.at(n); }

  std::span<const double> magnitudes_sq() const { return magnitudes_sq_; }
  std::span<const double> suffix_sums() const { return suffix_sums_; }
  const std::optional<GeometricTail>& tail() const { return tail_; }

  /// True when nothing beyond the stored prefix carries mass.
  bool has_finite_support() const { return !tail_ || tail_->sum() == 0.0; }

  /// Largest |(r_{k-1} - r_k) - |a_k|^2| over the stored range.
  double telescoping_defect() const;

 private:
  std::vector<double> magnitudes_sq_;
  std::vector<double> suffix_sums_;
  std::optional<GeometricTail> tail_;
};

/// Suffix-sum profile of a complex sequence a_1..a_N.
TailProfile tail_profile(std::span<const Complex> a,
                         std::optional<GeometricTail> tail = {});

/// sum_{k=m+1}^{n} |a_k|^2 / sqrt(r_{k-1}) for 1 <= m < n <= N.
/// Throws DegenerateTail if some r_{k-1} in the window is zero.
double olympiad_weighted_sum(const TailProfile& profile, std::size_t from,
                             std::size_t to);

/// The same series summed to infinity through the closed-form tail.
double olympiad_weighted_sum_to_infinity(const TailProfile& profile,
                                         std::size_t from);

struct OlympiadReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double tolerance = 0.0;
  bool holds = false;
};

/// Default absolute slack 1e-12 * (1 + r_0).
double default_olympiad_tolerance(const TailProfile& profile);

/// Checks sum_{k=m+1}^{n} |a_k|^2/sqrt(r_{k-1}) <= 2(sqrt(r_m) - sqrt(r_n)).
OlympiadReport verify_olympiad_bound(const TailProfile& profile,
                                     std::size_t from, std::size_t to,
                                     std::optional<double> tolerance = {});

}  // namespace flatwitness
