#include "flatwitness/witness.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "flatwitness/errors.hpp"

namespace flatwitness {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double norm2(std::span<const Complex> v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return std::sqrt(s);
}

/// |sum_i r_i m_i| / (1 + ||r|| ||m||) at one atom.
double point_residual(std::span<const Complex> r, std::span<const Complex> m) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) s += r[i] * m[i];
  return std::abs(s) / (1.0 + norm2(r) * norm2(m));
}

}  // namespace

void PointwiseRelation::validate() const {
  if (n == 0) throw InvalidInput("relation needs n >= 1");
  if (weights.size() != points || r.size() != points * n || m.size() != points * n)
    throw InvalidInput(fmt::format(
        "relation shape mismatch: n={}, points={}, |weights|={}, |r|={}, |m|={}", n,
        points, weights.size(), r.size(), m.size()));
  for (double w : weights)
    if (!std::isfinite(w) || w < 0.0) throw InvalidInput("weights must be finite and >= 0");
  for (const Complex& z : r)
    if (!finite(z)) throw InvalidInput("non-finite coefficient entry");
  for (const Complex& z : m)
    if (!finite(z)) throw InvalidInput("non-finite module entry");
}

namespace detail {

bool householder_complement(std::span<const Complex> r, double zero_threshold,
                            std::span<Complex> out) {
  const std::size_t n = r.size();
  const double norm = norm2(r);
  if (norm <= zero_threshold) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) out[j * n + i] = (i == j) ? 1.0 : 0.0;
    return true;
  }
  // v = r + phase(r_0) ||r|| e_1; |v_0| = |r_0| + ||r|| so nothing cancels.
  const double a0 = std::abs(r[0]);
  const Complex phase = a0 > 0.0 ? r[0] / a0 : Complex(1.0);
  const Complex v0 = r[0] + phase * norm;
  const double vv = 2.0 * norm * (norm + a0);
  auto v = [&](std::size_t i) { return i == 0 ? v0 : r[i]; };

  // Columns 1..n-1 of I - 2 v v^* / (v^* v) span r^perp.
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const std::size_t c = j + 1;
    const Complex scale = 2.0 * std::conj(v(c)) / vv;
    for (std::size_t i = 0; i < n; ++i)
      out[j * n + i] = (i == c ? Complex(1.0) : Complex(0.0)) - v(i) * scale;
  }
  for (std::size_t i = 0; i < n; ++i) out[(n - 1) * n + i] = 0.0;
  return false;
}

}  // namespace detail

OrthonormalFrame orthocomplement_frame(std::span<const Complex> r,
                                       double zero_threshold) {
  if (r.empty()) throw InvalidInput("frame needs n >= 1");
  for (const Complex& z : r)
    if (!finite(z)) throw InvalidInput("non-finite frame input");
  OrthonormalFrame frame;
  frame.n = r.size();
  frame.vectors.resize(frame.n * frame.n);
  frame.last_is_zero = !detail::householder_complement(r, zero_threshold, frame.vectors);
  return frame;
}

double default_zero_threshold(const PointwiseRelation& rel) {
  double scale = 0.0;
  for (const Complex& z : rel.r) scale = std::max(scale, std::abs(z));
  return 1e-13 * scale;
}

double relation_residual(const PointwiseRelation& rel) {
  double worst = 0.0;
  for (std::size_t x = 0; x < rel.points; ++x) {
    if (rel.weights[x] <= 0.0) continue;
    worst = std::max(worst, point_residual(rel.r_row(x), rel.m_row(x)));
  }
  return worst;
}

namespace {

void require_relation(const PointwiseRelation& rel, const WitnessOptions& options) {
  std::vector<double> residual(rel.points, 0.0);
  for_each_index(rel.points, options.execution, [&](std::size_t x) {
    if (rel.weights[x] > 0.0) residual[x] = point_residual(rel.r_row(x), rel.m_row(x));
  });
  for (std::size_t x = 0; x < rel.points; ++x)
    if (residual[x] > options.relation_tol) throw NotARelation(x, residual[x]);
}

}  // namespace

WitnessCertificate synthesize_witness(const PointwiseRelation& rel,
                                      const WitnessOptions& options) {
  rel.validate();
  require_relation(rel, options);
  const double threshold = options.zero_threshold.value_or(default_zero_threshold(rel));
  const std::size_t n = rel.n;

  WitnessCertificate cert;
  cert.n = n;
  cert.k = n;
  cert.points = rel.points;
  cert.rho.assign(rel.points * n * n, 0.0);
  cert.mu.assign(rel.points * n, 0.0);

  for_each_index(rel.points, options.execution, [&](std::size_t x) {
    thread_local std::vector<Complex> row, frame;
    row.resize(n);
    frame.resize(n * n);
    const auto r = rel.r_row(x);
    const auto m = rel.m_row(x);
    // sum_i r_i m_i = 0 says m is Hermitian-orthogonal to conj(r).
    for (std::size_t i = 0; i < n; ++i) row[i] = std::conj(r[i]);
    detail::householder_complement(row, threshold, frame);

    Complex* rho = cert.rho.data() + x * n * n;
    Complex* mu = cert.mu.data() + x * n;
    for (std::size_t j = 0; j < n; ++j) {
      const Complex* e = frame.data() + j * n;
      Complex s = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        rho[i * n + j] = e[i];
        s += m[i] * std::conj(e[i]);
      }
      mu[j] = s;
    }
  });
  return cert;
}

WitnessReport verify_witness(const PointwiseRelation& rel,
                             const WitnessCertificate& cert, double tol) {
  rel.validate();
  const std::size_t n = rel.n;
  const std::size_t k = cert.k;
  if (cert.n != n || cert.points != rel.points || cert.rho.size() != rel.points * n * k ||
      cert.mu.size() != rel.points * k)
    throw InvalidInput("certificate shape does not match relation");

  WitnessReport rep;
  rep.mu_norms_sq.assign(k, 0.0);
  double max_r = 0.0;
  double max_m = 0.0;
  for (std::size_t x = 0; x < rel.points; ++x) {
    const double w = rel.weights[x];
    if (w <= 0.0) continue;
    const auto r = rel.r_row(x);
    const auto m = rel.m_row(x);
    max_r = std::max(max_r, norm2(r));
    max_m = std::max(max_m, norm2(m));

    for (std::size_t j = 0; j < k; ++j) {
      Complex s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += r[i] * cert.rho_at(x, i, j);
      rep.max_coeff_residual = std::max(rep.max_coeff_residual, std::abs(s));
      rep.mu_norms_sq[j] += w * std::norm(cert.mu_at(x, j));
    }
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = 0.0;
      for (std::size_t j = 0; j < k; ++j) {
        s += cert.rho_at(x, i, j) * cert.mu_at(x, j);
        rep.max_abs_rho = std::max(rep.max_abs_rho, std::abs(cert.rho_at(x, i, j)));
      }
      rep.max_reconstruction_residual =
          std::max(rep.max_reconstruction_residual, std::abs(m[i] - s));
      rep.m_norm_sq += w * std::norm(m[i]);
    }
  }

  rep.coeff_threshold = tol * (1.0 + max_r);
  rep.reconstruction_threshold = tol * (1.0 + max_m);
  rep.mu_tolerance = tol * (1.0 + rep.m_norm_sq);
  rep.coeff_ok = rep.max_coeff_residual <= rep.coeff_threshold;
  rep.reconstruction_ok = rep.max_reconstruction_residual <= rep.reconstruction_threshold;
  rep.rho_bound_ok = rep.max_abs_rho <= 1.0 + 1e-12;
  double total = 0.0;
  rep.mu_norm_ok = true;
  for (double v : rep.mu_norms_sq) {
    total += v;
    if (v > rep.m_norm_sq + rep.mu_tolerance) rep.mu_norm_ok = false;
  }
  if (total > static_cast<double>(n) * rep.m_norm_sq + rep.mu_tolerance) rep.mu_norm_ok = false;
  return rep;
}

}  // namespace flatwitness
