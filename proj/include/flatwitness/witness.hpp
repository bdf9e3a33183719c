#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "flatwitness/parallel.hpp"

namespace flatwitness {

using Complex = std::complex<double>;

/// A linear relation sum_i r_i m_i = 0 sampled on P weighted atoms.
/// Rows are stored point-major: entry (x, i) lives at x * n + i.
/// Atoms of weight zero form the null set and are never checked.
struct PointwiseRelation {
  std::size_t n = 0;
  std::size_t points = 0;
  std::vector<double> weights;
  std::vector<Complex> r;
  std::vector<Complex> m;

  std::span<const Complex> r_row(std::size_t x) const { return {r.data() + x * n, n}; }
  std::span<const Complex> m_row(std::size_t x) const { return {m.data() + x * n, n}; }

  /// Throws InvalidInput on shape mismatch, negative weights or non-finite data.
  void validate() const;
};

/// n vectors e_1..e_n of C^n, stored vector-major. When the defining row is
/// nonzero the last vector is the zero vector.
struct OrthonormalFrame {
  std::size_t n = 0;
  std::vector<Complex> vectors;
  bool last_is_zero = false;

  std::span<const Complex> vector(std::size_t j) const { return {vectors.data() + j * n, n}; }
};

/// Orthonormal basis of the Hermitian complement r^perp (plus a zero vector),
/// or the standard basis when ||r|| <= zero_threshold. The basis is the tail
/// of the Householder reflector that maps r/||r|| to a multiple of e_1.
OrthonormalFrame orthocomplement_frame(std::span<const Complex> r,
                                       double zero_threshold);

/// rho(x)_{ij} and mu(x)_j with m_i = sum_j rho_ij mu_j and sum_i r_i rho_ij = 0.
/// rho is stored at (x * n + i) * k + j, mu at x * k + j.
struct WitnessCertificate {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t points = 0;
  std::vector<Complex> rho;
  std::vector<Complex> mu;

  Complex rho_at(std::size_t x, std::size_t i, std::size_t j) const {
    return rho[(x * n + i) * k + j];
  }
  Complex mu_at(std::size_t x, std::size_t j) const { return mu[x * k + j]; }
};

struct WitnessOptions {
  /// Rows with ||r(x)|| at or below this count as zero. Defaults to
  /// 1e-13 * max_x ||r(x)||_inf.
  std::optional<double> zero_threshold;
  /// Relative residual allowed in sum_i r_i(x) m_i(x).
  double relation_tol = 1e-10;
  Execution execution = Execution::parallel;
};

double default_zero_threshold(const PointwiseRelation& rel);

/// Largest |sum_i r_i(x) m_i(x)| / (1 + ||r(x)|| ||m(x)||) over positive-weight atoms.
double relation_residual(const PointwiseRelation& rel);

/// Builds the flatness certificate point by point. Throws NotARelation when
/// the input is not a relation within relation_tol.
WitnessCertificate synthesize_witness(const PointwiseRelation& rel,
                                      const WitnessOptions& options = {});

struct WitnessReport {
  double max_coeff_residual = 0.0;
  double max_reconstruction_residual = 0.0;
  double coeff_threshold = 0.0;
  double reconstruction_threshold = 0.0;
  double max_abs_rho = 0.0;
  /// weighted ||mu_j||^2 per column, and sum_i weighted ||m_i||^2.
  std::vector<double> mu_norms_sq;
  double m_norm_sq = 0.0;
  double mu_tolerance = 0.0;
  bool coeff_ok = false;
  bool reconstruction_ok = false;
  bool rho_bound_ok = false;
  bool mu_norm_ok = false;

  bool ok() const { return coeff_ok && reconstruction_ok && rho_bound_ok && mu_norm_ok; }
};

/// Checks both defining identities and the two norm bounds on every atom
/// of positive weight. tol scales the residual thresholds.
WitnessReport verify_witness(const PointwiseRelation& rel,
                             const WitnessCertificate& cert, double tol = 1e-10);

namespace reference {

/// Plain serial construction, kept as the reference for the OpenMP kernel.
WitnessCertificate synthesize_witness(const PointwiseRelation& rel,
                                      const WitnessOptions& options = {});

}  // namespace reference

namespace detail {

/// Writes the n x n frame for row r into out (vector-major). Returns true
/// when the row was treated as zero.
bool householder_complement(std::span<const Complex> r, double zero_threshold,
                            std::span<Complex> out);

}  // namespace detail

}  // namespace flatwitness
