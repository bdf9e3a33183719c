#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace flatwitness {

using Complex = std::complex<double>;
using Evaluator = std::function<Complex(Complex)>;

/// (s - 1) / (s + 1). Throws InvalidInput at s = -1.
Complex mobius(Complex s);
/// (1 + z) / (1 - z). Throws InvalidInput at z = 1.
Complex mobius_inv(Complex z);

struct HalfPlaneSamples {
  std::vector<Complex> points;  ///< Re s > 0
  std::vector<Complex> values;

  void validate() const;
};

/// Truncated power series sum_m c_m z^m, restricted to |z| < 1.
Evaluator taylor_evaluator(std::vector<Complex> coefficients);
/// z -> f(z) / g(z).
Evaluator quotient_evaluator(Evaluator f, Evaluator g);

/// F(s) = f(phi(s)) / (1 + s); rejects Re s <= 0.
Evaluator disk_to_halfplane_h2(Evaluator f);
/// f(z) = 2 F(phi^{-1}(z)) / (1 - z); rejects |z| >= 1.
Evaluator halfplane_to_disk_h2(Evaluator F);
/// G(s) = g(phi(s)); bounded functions carry no Jacobian factor.
Evaluator disk_to_halfplane_hinf(Evaluator g);

HalfPlaneSamples sample_halfplane(const Evaluator& F, std::span<const Complex> points);

struct TransferredFactorization {
  HalfPlaneSamples F;
  HalfPlaneSamples G;
  HalfPlaneSamples H;
  double max_product_residual = 0.0;  ///< max |F - G H|
  double disk_residual = 0.0;         ///< max |f - g h| at phi(s)
  double max_jacobian = 0.0;          ///< max |1 / (1 + s)|
  double sup_G = 0.0;
  double sup_g_images = 0.0;          ///< max |g(phi(s))| evaluated directly
};

TransferredFactorization transfer_factorization(const Evaluator& f, const Evaluator& g,
                                                const Evaluator& h,
                                                std::span<const Complex> points);

}  // namespace flatwitness
