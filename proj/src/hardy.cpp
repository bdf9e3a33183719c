#include "flatwitness/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "flatwitness/errors.hpp"
#include "flatwitness/fft.hpp"

namespace flatwitness {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSuffixFloor = 1e-280;

bool is_power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

void require_grid(std::size_t n) {
  if (!is_power_of_two(n))
    throw InvalidInput(fmt::format("grid size {} is not a power of two >= 2", n));
}

}  // namespace

double GridFunction::grid_theta(std::size_t j, std::size_t n) {
  const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
  return 2 * j > n ? t - kTwoPi : t;
}

GridFunction::GridFunction(std::vector<Complex> samples) : samples_(std::move(samples)) {
  require_grid(samples_.size());
  for (const Complex& z : samples_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw InvalidInput("grid function: non-finite sample");
  spectrum_ = fft_forward(samples_);
}

GridFunction GridFunction::from_spectrum(std::vector<Complex> spectrum) {
  require_grid(spectrum.size());
  GridFunction g;
  g.samples_ = fft_inverse(spectrum);
  g.spectrum_ = std::move(spectrum);
  return g;
}

GridFunction GridFunction::from_theta(std::size_t n, const std::function<Complex(double)>& fn) {
  require_grid(n);
  std::vector<Complex> s(n);
  for (std::size_t j = 0; j < n; ++j) s[j] = fn(grid_theta(j, n));
  return GridFunction(std::move(s));
}

GridFunction GridFunction::from_z(std::size_t n, const std::function<Complex(Complex)>& fn) {
  return from_theta(n, [&](double t) { return fn(std::polar(1.0, t)); });
}

Complex GridFunction::mode(long m) const {
  const long n = static_cast<long>(size());
  if (m < -n / 2 || m >= n / 2) throw InvalidInput(fmt::format("mode {} outside [-N/2, N/2)", m));
  return spectrum_[static_cast<std::size_t>((m + n) % n)];
}

double GridFunction::norm_sq() const {
  double s = 0.0;
  for (const Complex& z : samples_) s += std::norm(z);
  return s / static_cast<double>(size());
}

double GridFunction::norm() const { return std::sqrt(norm_sq()); }

double GridFunction::parseval_defect() const {
  double s = 0.0;
  for (const Complex& c : spectrum_) s += std::norm(c);
  return std::abs(norm_sq() - s);
}

double GridFunction::negative_mode_leakage() const {
  double neg = 0.0, total = 0.0;
  for (std::size_t i = 0; i < spectrum_.size(); ++i) {
    const double e = std::norm(spectrum_[i]);
    total += e;
    if (2 * i >= spectrum_.size()) neg += e;
  }
  return total > 0.0 ? std::sqrt(neg / total) : 0.0;
}

Complex grid_inner(const GridFunction& a, const GridFunction& b) {
  if (a.size() != b.size()) throw InvalidInput("grid sizes differ");
  Complex s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a.samples()[j] * std::conj(b.samples()[j]);
  return s / static_cast<double>(a.size());
}

GridFunction analytic_project(const GridFunction& h) {
  std::vector<Complex> spec(h.spectrum().begin(), h.spectrum().end());
  std::fill(spec.begin() + static_cast<long>(spec.size() / 2), spec.end(), Complex(0.0));
  return GridFunction::from_spectrum(std::move(spec));
}

ArcLayout make_arc_layout(std::size_t grid, std::size_t max_shell) {
  require_grid(grid);
  if (max_shell == 0) throw InvalidInput("need at least one arc shell");
  ArcLayout lay;
  lay.grid = grid;
  lay.max_shell = max_shell;
  lay.region_of.assign(grid, 0);
  lay.shell_samples.resize(max_shell + 1);
  const double core_edge = 1.0 / static_cast<double>(max_shell + 1);

  for (std::size_t j = 0; j < grid; ++j) {
    const double a = std::abs(GridFunction::grid_theta(j, grid));
    if (a >= 1.0) {
      lay.region_of[j] = 0;
      lay.outer.push_back(j);
      continue;
    }
    if (a < core_edge) {
      lay.region_of[j] = lay.core_region();
      lay.core.push_back(j);
      continue;
    }
    // 1/(n+1) <= a < 1/n, decided with the same double comparisons throughout.
    auto n = static_cast<std::size_t>(std::floor(1.0 / a));
    while (n > 1 && a >= 1.0 / static_cast<double>(n)) --n;
    while (a < 1.0 / static_cast<double>(n + 1)) ++n;
    n = std::min(n, max_shell);
    lay.region_of[j] = n;
    lay.shell_samples[n].push_back(j);
  }
  for (std::size_t n = 1; n <= max_shell; ++n)
    if (lay.shell_samples[n].empty()) ++lay.empty_shells;
  return lay;
}

ArcEnergies arc_energies(const GridFunction& f, std::size_t max_shell, bool allow_empty_shells) {
  ArcEnergies out;
  out.layout = make_arc_layout(f.size(), max_shell);
  const double inv_n = 1.0 / static_cast<double>(f.size());
  const auto s = f.samples();

  std::vector<double> a_sq(max_shell, 0.0);
  for (std::size_t n = 1; n <= max_shell; ++n) {
    const auto& idx = out.layout.shell_samples[n];
    if (idx.empty() && !allow_empty_shells) throw GridTooCoarse(n);
    double e = 0.0;
    for (std::size_t j : idx) e += std::norm(s[j]);
    a_sq[n - 1] = e * inv_n;
  }
  for (std::size_t j : out.layout.core) out.core_energy += std::norm(s[j]);
  for (std::size_t j : out.layout.outer) out.outer_energy += std::norm(s[j]);
  out.core_energy *= inv_n;
  out.outer_energy *= inv_n;
  out.profile = TailProfile::from_squares(std::move(a_sq), GeometricTail{out.core_energy, 0.0});
  return out;
}

CircleWeight build_circle_weight(const TailProfile& profile, const ArcLayout& layout) {
  const std::size_t m = layout.max_shell;
  if (profile.size() != m) throw InvalidInput("profile and arc layout disagree on M");
  CircleWeight out;
  out.shell_values.assign(m + 1, 1.0);

  auto floored = [&](double r) {
    if (r < kSuffixFloor) {
      ++out.floored;
      return kSuffixFloor;
    }
    return r;
  };
  for (std::size_t n = 2; n <= m; ++n) {
    const double r = floored(profile.r(n - 1));
    out.shell_values[n] = std::min(1.0 / std::pow(r, 0.25), static_cast<double>(n));
  }
  out.core_value =
      std::min(1.0 / std::pow(floored(profile.r(m)), 0.25), static_cast<double>(m + 1));

  std::vector<Complex> w(layout.grid, 1.0);
  for (std::size_t j = 0; j < layout.grid; ++j) {
    const std::size_t region = layout.region_of[j];
    if (region == layout.core_region())
      w[j] = out.core_value;
    else if (region >= 1)
      w[j] = out.shell_values[region];
  }
  out.w = GridFunction(std::move(w));
  return out;
}

LogIntegrability check_log_integrable(const GridFunction& w, std::size_t max_shell, double tol) {
  LogIntegrability out;
  for (const Complex& z : w.samples()) {
    if (z.imag() != 0.0 || !std::isfinite(z.real()) || !(z.real() >= 1.0))
      throw InvalidWeight(fmt::format("weight sample ({}, {}) is not a real number >= 1",
                                      z.real(), z.imag()));
    out.integral_value += std::log(z.real());
  }
  out.integral_value /= static_cast<double>(w.size());
  for (std::size_t n = 2; n <= max_shell; ++n) {
    const double dn = static_cast<double>(n);
    out.comparison_bound += 2.0 * std::log(dn) / (dn * dn);
  }
  const double core = static_cast<double>(max_shell + 1);
  out.comparison_bound += 2.0 / core * std::log(core);
  out.holds = out.integral_value <= out.comparison_bound * (1.0 + tol);
  return out;
}

OuterFunction outer_from_modulus(std::span<const double> log_modulus, const OuterOptions& options) {
  const std::size_t n = log_modulus.size();
  require_grid(n);
  const double clamp = options.clamp.value_or(1.0 / static_cast<double>(n));
  if (!(clamp > 0.0) || !std::isfinite(clamp)) throw InvalidInput("clamp must be positive");

  OuterFunction out;
  std::vector<double> k(log_modulus.begin(), log_modulus.end());
  double kmax = -std::numeric_limits<double>::infinity();
  double kmin = std::numeric_limits<double>::infinity();
  for (double& v : k) {
    if (std::isnan(v) || v == std::numeric_limits<double>::infinity())
      throw InvalidInput("log-modulus sample is NaN or +inf");
    if (v == -std::numeric_limits<double>::infinity()) {
      v = std::log(clamp);
      ++out.clamped;
    }
    kmax = std::max(kmax, v);
    kmin = std::min(kmin, v);
    out.l1_norm += std::abs(v);
  }
  out.l1_norm /= static_cast<double>(n);
  if (kmax > 700.0) throw ScaleOverflow(kmax, std::exp(700.0 - kmax));
  if (kmin < -700.0) throw ScaleOverflow(kmin, std::exp(-700.0 - kmin));

  std::vector<Complex> kc(k.begin(), k.end());
  const std::vector<Complex> kh = fft_forward(kc);
  // Herglotz completion: c_0 = k_0, c_m = 2 k_m (0 < m < N/2), and the
  // self-conjugate Nyquist mode once, so Re u = k on the grid.
  std::vector<Complex> c(n, 0.0);
  c[0] = kh[0];
  for (std::size_t m = 1; m < n / 2; ++m) c[m] = 2.0 * kh[m];
  c[n / 2] = kh[n / 2];
  const std::vector<Complex> u = fft_inverse(c);

  std::vector<Complex> g(n);
  for_each_index(n, options.execution,
                 [&](std::size_t j) { g[j] = std::polar(std::exp(k[j]), u[j].imag()); });
  out.boundary = GridFunction(std::move(g));
  const auto spec = out.boundary.spectrum();
  out.taylor.assign(spec.begin(), spec.begin() + static_cast<long>(n / 2));
  return out;
}

HardyFactorization hardy_factor(const GridFunction& f, std::size_t max_shell,
                                const HardyOptions& options) {
  const double norm = f.norm();
  if (!(norm > 0.0)) throw InvalidInput("f is numerically zero");
  if (f.negative_mode_leakage() > options.analytic_tol)
    throw InvalidInput(fmt::format("f is not analytic: negative-mode leakage {:.3e}",
                                   f.negative_mode_leakage()));

  HardyFactorization out;
  out.scale = norm > 1.0 ? 1.0 / norm : 1.0;
  if (out.scale != 1.0) {
    std::vector<Complex> s(f.samples().begin(), f.samples().end());
    for (Complex& z : s) z *= out.scale;
    out.f = GridFunction(std::move(s));
  } else {
    out.f = f;
  }
  const std::size_t n = f.size();

  out.energies = arc_energies(out.f, max_shell, options.allow_empty_shells);
  out.weight = build_circle_weight(out.energies.profile, out.energies.layout);
  out.log_check = check_log_integrable(out.weight.w, max_shell);

  std::vector<double> k(n);
  for (std::size_t j = 0; j < n; ++j) k[j] = -std::log(out.weight.w.samples()[j].real());
  OuterFunction outer = outer_from_modulus(k, {options.clamp, options.execution});
  out.g = std::move(outer.boundary);
  out.g_taylor = std::move(outer.taylor);

  std::vector<Complex> h(n);
  const auto fs = out.f.samples();
  const auto gs = out.g.samples();
  for_each_index(n, options.execution, [&](std::size_t j) { h[j] = fs[j] / gs[j]; });
  out.h = GridFunction(std::move(h));

  const auto hs = out.h.samples();
  const auto ws = out.weight.w.samples();
  for (std::size_t j = 0; j < n; ++j) {
    out.modulus_residual =
        std::max(out.modulus_residual, std::abs(std::abs(gs[j]) - 1.0 / ws[j].real()));
    out.product_residual = std::max(out.product_residual, std::abs(fs[j] - gs[j] * hs[j]));
    out.max_abs_g = std::max(out.max_abs_g, std::abs(gs[j]));
  }
  out.f_norm_sq = out.f.norm_sq();
  out.h_norm_sq = out.h.norm_sq();

  const TailProfile& p = out.energies.profile;
  double series = 0.0;
  for (std::size_t m = 2; m <= max_shell; ++m)
    series += p.a_sq(m) / std::sqrt(std::max(p.r(m - 1), kSuffixFloor));
  series += out.energies.core_energy / std::sqrt(std::max(p.r(max_shell), kSuffixFloor));
  out.star_bound = out.f_norm_sq + series;
  out.olympiad_certificate = 2.0 * std::sqrt(p.r(1));
  return out;
}

Complex evaluate_taylor(std::span<const Complex> coefficients, Complex z) {
  Complex acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * z + *it;
  return acc;
}

bool RadialDecay::strictly_decreasing_from(std::size_t from) const {
  for (std::size_t j = std::max<std::size_t>(from, 1); j < values.size(); ++j)
    if (!(values[j - 1] > values[j])) return false;
  return true;
}

RadialDecay radial_decay_check(std::span<const Complex> taylor, std::size_t depth) {
  if (depth == 0) throw InvalidInput("radial depth must be >= 1");
  if (taylor.empty()) throw InvalidInput("no Taylor coefficients");
  RadialDecay out;
  for (std::size_t j = 1; j <= depth; ++j) {
    const double r = 1.0 - std::ldexp(1.0, -static_cast<int>(j));
    out.values.push_back(std::abs(evaluate_taylor(taylor, r)));
  }
  out.ratio = out.values.front() > 0.0 ? out.values.back() / out.values.front() : 0.0;
  const double resolution = 1.0 / (2.0 * static_cast<double>(taylor.size()));
  out.truncation_warning = std::ldexp(1.0, -static_cast<int>(depth)) < resolution;
  return out;
}

InnerCheck inner_check(const GridFunction& b, double tol) {
  InnerCheck out;
  for (const Complex& z : b.samples())
    out.boundary_dev = std::max(out.boundary_dev, std::abs(std::abs(z) - 1.0));
  const auto spec = b.spectrum();
  const std::span<const Complex> taylor(spec.data(), spec.size() / 2);
  constexpr int kAngles = 64;
  for (double r : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95}) {
    for (int a = 0; a < kAngles; ++a) {
      const Complex z = std::polar(r, kTwoPi * a / kAngles);
      out.interior_max = std::max(out.interior_max, std::abs(evaluate_taylor(taylor, z)));
    }
  }
  out.interior_ok = out.interior_max <= 1.0 + tol;
  out.inner = out.boundary_dev <= tol && out.interior_ok;
  return out;
}

Projection project_onto_bH2(const GridFunction& f, const GridFunction& b, double tol) {
  if (f.size() != b.size()) throw InvalidInput("f and b live on different grids");
  const InnerCheck check = inner_check(b, tol);
  if (!check.inner) throw NotInner(check.boundary_dev);

  const std::size_t n = f.size();
  const auto fs = f.samples();
  const auto bs = b.samples();
  std::vector<Complex> q(n);
  for (std::size_t j = 0; j < n; ++j) q[j] = std::conj(bs[j]) * fs[j];
  const GridFunction pq = analytic_project(GridFunction(std::move(q)));

  std::vector<Complex> p(n);
  double dist_sq = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    p[j] = bs[j] * pq.samples()[j];
    dist_sq += std::norm(fs[j] - p[j]);
  }
  return {GridFunction(std::move(p)), std::sqrt(dist_sq / static_cast<double>(n))};
}

GridFunction blaschke_factor(std::size_t n, Complex a) {
  if (!(std::abs(a) < 1.0)) throw InvalidInput("Blaschke parameter must lie in the open disk");
  return GridFunction::from_z(n, [a](Complex z) { return (z - a) / (1.0 - std::conj(a) * z); });
}

}  // namespace flatwitness
