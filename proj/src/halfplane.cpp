#include "flatwitness/halfplane.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "flatwitness/errors.hpp"
#include "flatwitness/hardy.hpp"

namespace flatwitness {

namespace {

void require_halfplane(Complex s) {
  if (!(s.real() > 0.0) || !std::isfinite(s.imag()) || !std::isfinite(s.real()))
    throw InvalidInput(fmt::format("point ({}, {}) is not in the open right half-plane",
                                   s.real(), s.imag()));
}

void require_disk(Complex z) {
  if (!(std::abs(z) < 1.0))
    throw InvalidInput(fmt::format("point ({}, {}) is not in the open unit disk", z.real(),
                                   z.imag()));
}

}  // namespace

Complex mobius(Complex s) {
  if (s == Complex(-1.0, 0.0)) throw InvalidInput("phi has a pole at s = -1");
  return (s - 1.0) / (s + 1.0);
}

Complex mobius_inv(Complex z) {
  if (z == Complex(1.0, 0.0)) throw InvalidInput("phi^{-1} has a pole at z = 1");
  return (1.0 + z) / (1.0 - z);
}

void HalfPlaneSamples::validate() const {
  if (points.size() != values.size()) throw InvalidInput("points and values differ in length");
  for (Complex s : points) require_halfplane(s);
}

Evaluator taylor_evaluator(std::vector<Complex> coefficients) {
  return [c = std::move(coefficients)](Complex z) {
    require_disk(z);
    return evaluate_taylor(c, z);
  };
}

Evaluator quotient_evaluator(Evaluator f, Evaluator g) {
  return [f = std::move(f), g = std::move(g)](Complex z) { return f(z) / g(z); };
}

Evaluator disk_to_halfplane_h2(Evaluator f) {
  return [f = std::move(f)](Complex s) {
    require_halfplane(s);
    return f(mobius(s)) / (1.0 + s);
  };
}

Evaluator halfplane_to_disk_h2(Evaluator F) {
  return [F = std::move(F)](Complex z) {
    require_disk(z);
    return 2.0 * F(mobius_inv(z)) / (1.0 - z);
  };
}

Evaluator disk_to_halfplane_hinf(Evaluator g) {
  return [g = std::move(g)](Complex s) {
    require_halfplane(s);
    return g(mobius(s));
  };
}

HalfPlaneSamples sample_halfplane(const Evaluator& F, std::span<const Complex> points) {
  HalfPlaneSamples out;
  out.points.assign(points.begin(), points.end());
  out.values.reserve(points.size());
  for (Complex s : points) out.values.push_back(F(s));
  return out;
}

TransferredFactorization transfer_factorization(const Evaluator& f, const Evaluator& g,
                                                const Evaluator& h,
                                                std::span<const Complex> points) {
  TransferredFactorization out;
  out.F = sample_halfplane(disk_to_halfplane_h2(f), points);
  out.G = sample_halfplane(disk_to_halfplane_hinf(g), points);
  out.H = sample_halfplane(disk_to_halfplane_h2(h), points);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Complex s = points[i];
    const Complex z = mobius(s);
    const Complex gz = g(z);
    out.max_product_residual = std::max(
        out.max_product_residual, std::abs(out.F.values[i] - out.G.values[i] * out.H.values[i]));
    out.disk_residual = std::max(out.disk_residual, std::abs(f(z) - gz * h(z)));
    out.max_jacobian = std::max(out.max_jacobian, 1.0 / std::abs(1.0 + s));
    out.sup_G = std::max(out.sup_G, std::abs(out.G.values[i]));
    out.sup_g_images = std::max(out.sup_g_images, std::abs(gz));
  }
  return out;
}

}  // namespace flatwitness
