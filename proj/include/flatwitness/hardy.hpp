#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "flatwitness/parallel.hpp"
#include "flatwitness/seq_core.hpp"

namespace flatwitness {

using Complex = std::complex<double>;

/// Boundary samples on the uniform circle grid theta_j = 2 pi j / N folded
/// into (-pi, pi], together with their Fourier coefficients
/// h_m = (1/N) sum_j h_j e^{-i m theta_j}. The norm is the normalised one:
/// ||h||^2 = (1/N) sum_j |h_j|^2 = sum_m |h_m|^2.
class GridFunction {
 public:
  GridFunction() = default;
  /// N must be a power of two, >= 2, and every sample finite.
  explicit GridFunction(std::vector<Complex> samples);
  /// Builds from coefficients in FFT index order (mode m at m mod N).
  static GridFunction from_spectrum(std::vector<Complex> spectrum);
  static GridFunction from_theta(std::size_t n, const std::function<Complex(double)>& fn);
  static GridFunction from_z(std::size_t n, const std::function<Complex(Complex)>& fn);

  std::size_t size() const { return samples_.size(); }
  std::span<const Complex> samples() const { return samples_; }
  std::span<const Complex> spectrum() const { return spectrum_; }
  /// Coefficient of e^{i m theta} for -N/2 <= m < N/2.
  Complex mode(long m) const;
  double theta(std::size_t j) const { return grid_theta(j, size()); }
  double norm_sq() const;
  double norm() const;
  /// |(1/N) sum |h_j|^2 - sum |h_m|^2|.
  double parseval_defect() const;
  /// ||P_- h|| / ||h||: relative size of the modes m < 0.
  double negative_mode_leakage() const;

  static double grid_theta(std::size_t j, std::size_t n);

 private:
  std::vector<Complex> samples_;
  std::vector<Complex> spectrum_;
};

/// (1/N) sum_j a_j conj(b_j).
Complex grid_inner(const GridFunction& a, const GridFunction& b);

/// Zeroes every negatively indexed coefficient (Nyquist included).
GridFunction analytic_project(const GridFunction& h);

/// Assignment of grid samples to the arcs 1/(n+1) <= |theta| < 1/n, n = 1..M,
/// the outer region |theta| >= 1 and the residual core |theta| < 1/(M+1).
struct ArcLayout {
  std::size_t grid = 0;
  std::size_t max_shell = 0;
  /// 0 = outer, 1..M = arc shell, M+1 = core, indexed by sample.
  std::vector<std::size_t> region_of;
  std::vector<std::vector<std::size_t>> shell_samples;  ///< [n] for n = 1..M ([0] unused)
  std::vector<std::size_t> outer;
  std::vector<std::size_t> core;
  std::size_t empty_shells = 0;

  std::size_t core_region() const { return max_shell + 1; }
};

ArcLayout make_arc_layout(std::size_t grid, std::size_t max_shell);

struct ArcEnergies {
  ArcLayout layout;
  /// a_n^2 for the M shells; the core energy is the closed tail, so r_M = core.
  TailProfile profile;
  double core_energy = 0.0;
  double outer_energy = 0.0;
};

/// a_n^2 = (1/N) sum_{j in shell n} |f_j|^2 (arc integral with the 1/(2 pi)
/// normalisation). Throws GridTooCoarse on an empty shell unless allowed.
ArcEnergies arc_energies(const GridFunction& f, std::size_t max_shell,
                         bool allow_empty_shells = false);

struct CircleWeight {
  GridFunction w;
  std::vector<double> shell_values;  ///< [n] for n = 1..M ([0] unused)
  double core_value = 1.0;
  std::size_t floored = 0;           ///< suffix sums raised to 1e-280
};

/// w = 1 for |theta| >= 1/2, min{r_{n-1}^{-1/4}, n} on shell n >= 2 and
/// min{r_M^{-1/4}, M+1} on the core.
CircleWeight build_circle_weight(const TailProfile& profile, const ArcLayout& layout);

struct LogIntegrability {
  double integral_value = 0.0;    ///< (1/N) sum |log(1/w_j)|
  double comparison_bound = 0.0;  ///< 2 sum_{n=2}^M log n / n^2 + core term
  bool holds = false;
};

/// Throws InvalidWeight if some w_j < 1 or is not finite.
LogIntegrability check_log_integrable(const GridFunction& w, std::size_t max_shell,
                                      double tol = 1e-12);

struct OuterOptions {
  /// Samples equal to -inf are replaced by log(clamp). Defaults to 1/N.
  std::optional<double> clamp;
  Execution execution = Execution::parallel;
};

struct OuterFunction {
  GridFunction boundary;       ///< g(e^{i theta_j}) = exp(k_j + i k~_j)
  std::vector<Complex> taylor; ///< g_m for m = 0..N/2-1
  std::size_t clamped = 0;
  double l1_norm = 0.0;        ///< (1/N) sum |k_j|
};

/// Outer function with log-modulus k on the circle, alpha = 1.
OuterFunction outer_from_modulus(std::span<const double> log_modulus,
                                 const OuterOptions& options = {});

struct HardyOptions {
  std::optional<double> clamp;
  bool allow_empty_shells = true;
  double analytic_tol = 1e-10;
  Execution execution = Execution::parallel;
};

struct HardyFactorization {
  double scale = 1.0;          ///< f was multiplied by this to reach ||f|| <= 1
  GridFunction f;
  GridFunction g;
  GridFunction h;
  CircleWeight weight;
  ArcEnergies energies;
  LogIntegrability log_check;
  std::vector<Complex> g_taylor;
  double modulus_residual = 0.0;  ///< max_j ||g_j| - 1/w_j|
  double product_residual = 0.0;  ///< max_j |f_j - g_j h_j|
  double f_norm_sq = 0.0;
  double h_norm_sq = 0.0;
  double star_bound = 0.0;        ///< ||f||^2 + sum a_n^2/sqrt(r_{n-1}) + core/sqrt(r_M)
  double olympiad_certificate = 0.0;  ///< 2 (sqrt r_1 - sqrt r_M)
  double max_abs_g = 0.0;
};

/// f = g h with g outer, |g| = 1/w <= 1, g -> 0 at z = 1 and h = f / g.
HardyFactorization hardy_factor(const GridFunction& f, std::size_t max_shell,
                                const HardyOptions& options = {});

/// sum_m c_m z^m.
Complex evaluate_taylor(std::span<const Complex> coefficients, Complex z);

struct RadialDecay {
  std::vector<double> values;  ///< |g(1 - 2^{-j})| for j = 1..J
  double ratio = 0.0;          ///< last / first
  bool truncation_warning = false;

  /// |g(1 - 2^{-j})| > |g(1 - 2^{-j-1})| for every j >= from (1-based).
  bool strictly_decreasing_from(std::size_t from) const;
};

/// Evaluates the Taylor series along the radius towards z = 1.
RadialDecay radial_decay_check(std::span<const Complex> taylor, std::size_t depth);

struct InnerCheck {
  double boundary_dev = 0.0;  ///< max_j ||b_j| - 1|
  double interior_max = 0.0;  ///< max |b| on a polar grid of radius <= 0.95
  bool interior_ok = false;
  bool inner = false;
};

InnerCheck inner_check(const GridFunction& b, double tol = 1e-8);

struct Projection {
  GridFunction projection;
  double distance = 0.0;
};

/// Orthogonal projection b P_+(conj(b) f) onto b H^2; throws NotInner.
Projection project_onto_bH2(const GridFunction& f, const GridFunction& b, double tol = 1e-8);

/// (z - a) / (1 - conj(a) z).
GridFunction blaschke_factor(std::size_t n, Complex a);

}  // namespace flatwitness
