#include "flatwitness/seq_core.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "flatwitness/errors.hpp"

namespace flatwitness {

TailProfile TailProfile::from_squares(std::vector<double> magnitudes_sq,
                                      std::optional<GeometricTail> tail) {
  for (std::size_t k = 0; k < magnitudes_sq.size(); ++k) {
    const double v = magnitudes_sq[k];
    if (!std::isfinite(v) || v < 0.0)
      throw InvalidInput(fmt::format("bad squared magnitude at index {}", k + 1));
  }
  if (tail) {
    if (!std::isfinite(tail->first_sq) || tail->first_sq < 0.0 ||
        !(tail->ratio >= 0.0 && tail->ratio < 1.0))
      throw InvalidInput("geometric tail needs first_sq >= 0 and 0 <= ratio < 1");
  }

  TailProfile p;
  p.magnitudes_sq_ = std::move(magnitudes_sq);
  p.tail_ = tail;
  const std::size_t n = p.magnitudes_sq_.size();
  p.suffix_sums_.assign(n + 1, 0.0);
  p.suffix_sums_[n] = tail ? tail->sum() : 0.0;
  for (std::size_t k = n; k > 0; --k)
    p.suffix_sums_[k - 1] = p.suffix_sums_[k] + p.magnitudes_sq_[k - 1];
  return p;
}

double TailProfile::telescoping_defect() const {
  double worst = 0.0;
  for (std::size_t k = 1; k <= size(); ++k) {
    const double d = std::abs((suffix_sums_[k - 1] - suffix_sums_[k]) -
                              magnitudes_sq_[k - 1]);
    worst = std::max(worst, d);
  }
  return worst;
}

TailProfile tail_profile(std::span<const Complex> a,
                         std::optional<GeometricTail> tail) {
  if (a.empty()) throw InvalidInput("tail_profile needs at least one term");
  std::vector<double> sq(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!std::isfinite(a[k].real()) || !std::isfinite(a[k].imag()))
      throw InvalidInput(fmt::format("non-finite entry at index {}", k + 1));
    sq[k] = std::norm(a[k]);
  }
  return TailProfile::from_squares(std::move(sq), tail);
}

double olympiad_weighted_sum(const TailProfile& profile, std::size_t from,
                             std::size_t to) {
  if (from < 1 || from >= to || to > profile.size())
    throw InvalidInput(fmt::format("window ({}, {}] outside 1..{}", from, to,
                                   profile.size()));
  double sum = 0.0;
  for (std::size_t k = from + 1; k <= to; ++k) {
    const double r_prev = profile.r(k - 1);
    if (r_prev <= 0.0)
      throw DegenerateTail(fmt::format("r_{} = 0 inside window", k - 1));
    sum += profile.a_sq(k) / std::sqrt(r_prev);
  }
  return sum;
}

double olympiad_weighted_sum_to_infinity(const TailProfile& profile,
                                         std::size_t from) {
  const std::size_t n = profile.size();
  if (profile.has_finite_support())
    throw DegenerateTail("series to infinity needs a nonzero closed-form tail");
  if (from < 1 || from > n)
    throw InvalidInput(fmt::format("window start {} outside 1..{}", from, n));
  double sum = from < n ? olympiad_weighted_sum(profile, from, n) : 0.0;
  // sum_{j>=0} t q^j / sqrt(t q^j / (1-q)) = sqrt(t (1-q)) / (1 - sqrt q)
  const GeometricTail& t = *profile.tail();
  sum += std::sqrt(t.first_sq * (1.0 - t.ratio)) / (1.0 - std::sqrt(t.ratio));
  return sum;
}

double default_olympiad_tolerance(const TailProfile& profile) {
  const auto r = profile.suffix_sums();
  return 1e-12 * (1.0 + (r.empty() ? 0.0 : r.front()));
}

OlympiadReport verify_olympiad_bound(const TailProfile& profile,
                                     std::size_t from, std::size_t to,
                                     std::optional<double> tolerance) {
  OlympiadReport rep;
  rep.lhs = olympiad_weighted_sum(profile, from, to);
  rep.rhs = 2.0 * (std::sqrt(profile.r(from)) - std::sqrt(profile.r(to)));
  rep.tolerance = tolerance.value_or(default_olympiad_tolerance(profile));
  rep.holds = rep.lhs <= rep.rhs + rep.tolerance;
  return rep;
}

}  // namespace flatwitness
