#include "flatwitness/bezout.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "flatwitness/errors.hpp"

namespace flatwitness {

void SampledFunction::validate() const {
  if (weights.size() != values.size())
    throw InvalidInput("sampled function: values and weights differ in length");
  for (const Complex& z : values)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw InvalidInput("sampled function: non-finite value");
  for (double w : weights)
    if (!std::isfinite(w) || w < 0.0)
      throw InvalidInput("sampled function: weights must be finite and >= 0");
}

double ess_sup(const SampledFunction& f) {
  double s = 0.0;
  for (std::size_t x = 0; x < f.size(); ++x)
    if (f.weights[x] > 0.0) s = std::max(s, std::abs(f.values[x]));
  return s;
}

double l2_norm_sq(const SampledFunction& f) {
  double s = 0.0;
  for (std::size_t x = 0; x < f.size(); ++x) s += f.weights[x] * std::norm(f.values[x]);
  return s;
}

PolarParts polar_parts(const SampledFunction& f, Execution exec) {
  f.validate();
  PolarParts out{{std::vector<Complex>(f.size()), f.weights},
                 {std::vector<Complex>(f.size()), f.weights}};
  for_each_index(f.size(), exec, [&](std::size_t x) {
    const Complex v = f.values[x];
    const double a = std::abs(v);
    out.modulus.values[x] = a;
    out.unit.values[x] = a != 0.0 ? Complex(v.real() / a, v.imag() / a) : Complex(1.0);
  });
  return out;
}

PrincipalGenerator principal_generator(const SampledFunction& f, const SampledFunction& g,
                                       Execution exec) {
  f.validate();
  g.validate();
  if (f.size() != g.size()) throw InvalidInput("f and g live on different atom sets");
  const std::size_t count = f.size();
  auto blank = [&] { return SampledFunction{std::vector<Complex>(count), f.weights}; };
  PrincipalGenerator out{blank(), blank(), blank(), blank(), blank()};

  for_each_index(count, exec, [&](std::size_t x) {
    // Moduli and quotients in extended precision, rounded once on store.
    const long double fr = f.values[x].real(), fi = f.values[x].imag();
    const long double gr = g.values[x].real(), gi = g.values[x].imag();
    const long double af = std::hypot(fr, fi);
    const long double ag = std::hypot(gr, gi);
    const double d = static_cast<double>(af + ag);
    const long double dl = d;
    out.d.values[x] = d;
    out.F.values[x] = d != 0.0 ? Complex(double(fr / dl), double(fi / dl)) : Complex(1.0);
    out.G.values[x] = d != 0.0 ? Complex(double(gr / dl), double(gi / dl)) : Complex(1.0);
    out.cf.values[x] = af != 0.0L ? Complex(double(fr / af), double(-fi / af)) : Complex(1.0);
    out.cg.values[x] = ag != 0.0L ? Complex(double(gr / ag), double(-gi / ag)) : Complex(1.0);
  });
  return out;
}

double ulp_distance(Complex a, Complex b) {
  const double diff = std::abs(a - b);
  if (diff == 0.0) return 0.0;
  const double scale = std::max(std::abs(a), std::abs(b));
  const double ulp = std::nextafter(scale, std::numeric_limits<double>::infinity()) - scale;
  return diff / std::max(ulp, std::numeric_limits<double>::denorm_min());
}

namespace {

using ComplexLD = std::complex<long double>;

ComplexLD widen(Complex z) { return {z.real(), z.imag()}; }

// Distance in units of the double spacing at the larger modulus, with the
// identity evaluated in extended precision so the check adds no rounding.
double ulp_distance_ld(ComplexLD a, ComplexLD b) {
  const long double diff = std::abs(a - b);
  if (diff == 0.0L) return 0.0;
  const double scale = static_cast<double>(std::max(std::abs(a), std::abs(b)));
  const double ulp = std::nextafter(scale, std::numeric_limits<double>::infinity()) - scale;
  return static_cast<double>(diff / std::max(ulp, std::numeric_limits<double>::denorm_min()));
}

}  // namespace

bool BezoutReport::within(double ulps) const {
  const double eps = std::numeric_limits<double>::epsilon();
  return f_equals_Fd_ulp <= ulps && g_equals_Gd_ulp <= ulps && d_combination_ulp <= ulps &&
         unit_cofactor_ulp <= ulps && max_abs_F <= 1.0 + ulps * eps &&
         max_abs_G <= 1.0 + ulps * eps;
}

BezoutReport verify_bezout(const SampledFunction& f, const SampledFunction& g,
                           const PrincipalGenerator& gen) {
  if (gen.d.size() != f.size() || g.size() != f.size())
    throw InvalidInput("generator does not match f and g");
  BezoutReport rep;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f.weights[x] <= 0.0) continue;
    const long double d = gen.d.values[x].real();
    const ComplexLD fx = widen(f.values[x]), gx = widen(g.values[x]);
    rep.f_equals_Fd_ulp =
        std::max(rep.f_equals_Fd_ulp, ulp_distance_ld(fx, widen(gen.F.values[x]) * d));
    rep.g_equals_Gd_ulp =
        std::max(rep.g_equals_Gd_ulp, ulp_distance_ld(gx, widen(gen.G.values[x]) * d));
    const ComplexLD combo = fx * widen(gen.cf.values[x]) + gx * widen(gen.cg.values[x]);
    rep.d_combination_ulp = std::max(rep.d_combination_ulp, ulp_distance_ld(d, combo));
    rep.max_abs_F = std::max(rep.max_abs_F, std::abs(gen.F.values[x]));
    rep.max_abs_G = std::max(rep.max_abs_G, std::abs(gen.G.values[x]));
    rep.unit_cofactor_ulp = std::max({rep.unit_cofactor_ulp,
                                      ulp_distance_ld(std::abs(widen(gen.cf.values[x])), 1.0L),
                                      ulp_distance_ld(std::abs(widen(gen.cg.values[x])), 1.0L)});
  }
  return rep;
}

}  // namespace flatwitness
