#pragma once

#include <complex>
#include <vector>

#include "flatwitness/parallel.hpp"

namespace flatwitness {

using Complex = std::complex<double>;

/// A function sampled on weighted atoms; atoms of weight zero are a null set.
struct SampledFunction {
  std::vector<Complex> values;
  std::vector<double> weights;

  std::size_t size() const { return values.size(); }
  void validate() const;
};

/// Supremum of |f| over atoms of positive weight.
double ess_sup(const SampledFunction& f);

/// Weighted sum of |f|^2.
double l2_norm_sq(const SampledFunction& f);

struct PolarParts {
  SampledFunction modulus;
  SampledFunction unit;
};

/// f = |f| * u_f with u_f = f/|f|, and u_f = 1 where f vanishes.
PolarParts polar_parts(const SampledFunction& f, Execution exec = Execution::parallel);

/// Generator d = |f| + |g| of the ideal <f, g> with its cofactors:
/// f = F d, g = G d, d = f cf + g cg.
struct PrincipalGenerator {
  SampledFunction d;
  SampledFunction F;
  SampledFunction G;
  SampledFunction cf;
  SampledFunction cg;
};

PrincipalGenerator principal_generator(const SampledFunction& f, const SampledFunction& g,
                                       Execution exec = Execution::parallel);

/// Worst deviation of each identity, measured in units in the last place
/// of the larger side.
struct BezoutReport {
  double f_equals_Fd_ulp = 0.0;
  double g_equals_Gd_ulp = 0.0;
  double d_combination_ulp = 0.0;
  double max_abs_F = 0.0;
  double max_abs_G = 0.0;
  double unit_cofactor_ulp = 0.0;

  bool within(double ulps) const;
};

BezoutReport verify_bezout(const SampledFunction& f, const SampledFunction& g,
                           const PrincipalGenerator& gen);

/// |a - b| in units of the spacing of doubles at max(|a|, |b|).
double ulp_distance(Complex a, Complex b);

namespace reference {

PolarParts polar_parts(const SampledFunction& f);
PrincipalGenerator principal_generator(const SampledFunction& f, const SampledFunction& g);

}  // namespace reference

}  // namespace flatwitness
