#include <cmath>

#include "flatwitness/bezout.hpp"
#include "flatwitness/errors.hpp"

namespace flatwitness::reference {

namespace {

Complex unit_of(Complex v, double a) {
  if (a == 0.0) return 1.0;
  return {v.real() / a, v.imag() / a};
}

Complex unit_of_ld(Complex v, long double a) {
  if (a == 0.0L) return 1.0;
  return {static_cast<double>(v.real() / a), static_cast<double>(v.imag() / a)};
}

}  // namespace

PolarParts polar_parts(const SampledFunction& f) {
  f.validate();
  PolarParts out;
  out.modulus.weights = f.weights;
  out.unit.weights = f.weights;
  for (const Complex& v : f.values) {
    const double a = std::abs(v);
    out.modulus.values.emplace_back(a);
    out.unit.values.push_back(unit_of(v, a));
  }
  return out;
}

PrincipalGenerator principal_generator(const SampledFunction& f, const SampledFunction& g) {
  f.validate();
  g.validate();
  if (f.size() != g.size()) throw InvalidInput("f and g live on different atom sets");
  PrincipalGenerator out;
  for (SampledFunction* s : {&out.d, &out.F, &out.G, &out.cf, &out.cg}) s->weights = f.weights;
  for (std::size_t x = 0; x < f.size(); ++x) {
    const long double af = std::hypot<long double>(f.values[x].real(), f.values[x].imag());
    const long double ag = std::hypot<long double>(g.values[x].real(), g.values[x].imag());
    const double d = static_cast<double>(af + ag);
    out.d.values.emplace_back(d);
    out.F.values.push_back(unit_of_ld(f.values[x], d));
    out.G.values.push_back(unit_of_ld(g.values[x], d));
    out.cf.values.push_back(std::conj(unit_of_ld(f.values[x], af)));
    out.cg.values.push_back(std::conj(unit_of_ld(g.values[x], ag)));
  }
  return out;
}

}  // namespace flatwitness::reference
