#include "flatwitness/ultralimits.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "flatwitness/errors.hpp"

namespace flatwitness {

BoundedSequence::BoundedSequence(std::vector<Complex> values) : values_(std::move(values)) {
  for (const Complex& z : values_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw InvalidInput("bounded sequence: non-finite entry");
    sup_norm_ = std::max(sup_norm_, std::abs(z));
  }
}

Complex principal_limit(const BoundedSequence& a, std::size_t m) {
  if (m < 1 || m > a.size())
    throw InvalidInput(fmt::format("principal index {} outside 1..{}", m, a.size()));
  return a.at(m);
}

std::optional<EventualLimit> eventual_limit(const BoundedSequence& a, double tol,
                                            double tail_fraction) {
  if (!(tail_fraction > 0.0 && tail_fraction < 1.0))
    throw InvalidInput("tail_fraction must lie in (0, 1)");
  if (!(tol >= 0.0)) throw InvalidInput("tol must be >= 0");
  if (a.size() == 0) return std::nullopt;

  const auto len = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(tail_fraction * static_cast<double>(a.size()))));
  const auto tail = a.values().last(len);
  Complex mean = 0.0;
  for (const Complex& z : tail) mean += z;
  mean /= static_cast<double>(len);
  double radius = 0.0;
  for (const Complex& z : tail) radius = std::max(radius, std::abs(z - mean));
  if (radius > tol) return std::nullopt;
  return EventualLimit{mean, radius};
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::yes: return "Yes";
    case Membership::no: return "No";
    case Membership::undecidable: return "Undecidable";
  }
  return "?";
}

Membership ideal_membership_nonprincipal(const BoundedSequence& a, double tol,
                                         double tail_fraction) {
  const auto lim = eventual_limit(a, tol, tail_fraction);
  if (!lim) return Membership::undecidable;
  const double size = std::abs(lim->limit);
  if (size <= tol) return Membership::yes;
  if (size > 2.0 * tol) return Membership::no;
  return Membership::undecidable;
}

}  // namespace flatwitness
