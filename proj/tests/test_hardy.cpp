#include "doctest.h"

#include <cmath>
#include <numbers>

#include "flatwitness/errors.hpp"
#include "flatwitness/hardy.hpp"
#include "test_util.hpp"

namespace fw = flatwitness;
using fw::Complex;
using fw::GridFunction;

namespace {

constexpr double kPi = std::numbers::pi;

GridFunction constant(std::size_t n, Complex c) {
  return GridFunction::from_theta(n, [c](double) { return c; });
}

double max_diff(const GridFunction& a, const GridFunction& b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a.samples()[j] - b.samples()[j]));
  return m;
}

// Grid measure of {|theta| < t}, counted directly.
long double measure_below(std::size_t n, double t) {
  std::size_t c = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (std::abs(GridFunction::grid_theta(j, n)) < t) ++c;
  return static_cast<long double>(c) / n;
}

}  // namespace

TEST_CASE("grid conventions") {
  CHECK(GridFunction::grid_theta(0, 8) == 0.0);
  CHECK(GridFunction::grid_theta(4, 8) == doctest::Approx(kPi));
  CHECK(GridFunction::grid_theta(5, 8) == doctest::Approx(-0.75 * kPi));
  CHECK_THROWS_AS(GridFunction(std::vector<Complex>(6, 1.0)), fw::InvalidInput);
  CHECK_THROWS_AS(GridFunction(std::vector<Complex>(1, 1.0)), fw::InvalidInput);
  const auto zmode = GridFunction::from_z(16, [](Complex z) { return z * z * z; });
  CHECK(std::abs(zmode.mode(3) - 1.0) <= 1e-15);
  CHECK(std::abs(zmode.mode(-3)) <= 1e-15);
  CHECK_THROWS_AS(zmode.mode(8), fw::InvalidInput);
}

TEST_CASE("round trip and Parseval") {
  for (std::size_t n : {2u, 64u, 4096u}) {
    const GridFunction h(testutil::gaussian_vector(n));
    const GridFunction back = GridFunction::from_spectrum({h.spectrum().begin(), h.spectrum().end()});
    CHECK(max_diff(h, back) <= 1e-12 * h.norm());
    CHECK(h.parseval_defect() <= 1e-12 * h.norm_sq());
  }
}

TEST_CASE("analytic projection") {
  const auto neg = GridFunction::from_theta(64, [](double t) { return std::polar(1.0, -t); });
  CHECK(fw::analytic_project(neg).norm() <= 1e-15);

  const auto c = GridFunction::from_theta(64, [](double t) { return Complex(std::cos(t)); });
  const auto pc = fw::analytic_project(c);
  for (long m = -32; m < 32; ++m)
    CHECK(std::abs(pc.mode(m) - (m == 1 ? 0.5 : 0.0)) <= 1e-15);

  const auto an = GridFunction::from_z(64, [](Complex z) { return 1.0 + 2.0 * z - z * z * z; });
  CHECK(max_diff(fw::analytic_project(an), an) <= 1e-12);

  const GridFunction r(testutil::gaussian_vector(256));
  const auto p = fw::analytic_project(r);
  CHECK(max_diff(fw::analytic_project(p), p) <= 1e-12);
  CHECK(p.norm() <= r.norm());
  CHECK(r.negative_mode_leakage() > 0.5);
}

TEST_CASE("arc layout partitions the grid") {
  const auto lay = fw::make_arc_layout(4096, 40);
  std::vector<int> seen(4096, 0);
  for (std::size_t j : lay.outer) ++seen[j];
  for (std::size_t j : lay.core) ++seen[j];
  for (std::size_t n = 1; n <= 40; ++n) {
    for (std::size_t j : lay.shell_samples[n]) {
      ++seen[j];
      const double a = std::abs(GridFunction::grid_theta(j, 4096));
      CHECK(a >= 1.0 / double(n + 1));
      CHECK(a < 1.0 / double(n));
    }
  }
  for (int s : seen) CHECK(s == 1);
  CHECK(lay.region_of[0] == lay.core_region());
}

TEST_CASE("arc energies of f = 1") {
  constexpr std::size_t kN = 65536, kM = 20;
  const auto e = fw::arc_energies(constant(kN, 1.0), kM);
  for (std::size_t n = 1; n <= kM; ++n) {
    CHECK(std::abs(e.profile.a_sq(n) - 1.0 / (kPi * n * (n + 1))) <= 4.0 / kN);
    CHECK(std::abs(e.profile.r(n) - 1.0 / (kPi * (n + 1))) <= 4.0 / kN);
  }
  CHECK(e.profile.r(kM) == e.core_energy);

  const auto zero = fw::arc_energies(constant(1024, 0.0), 5);
  for (std::size_t n = 1; n <= 5; ++n) CHECK(zero.profile.a_sq(n) == 0.0);

  const auto outer = GridFunction::from_theta(1024, [](double t) { return Complex(std::abs(t) >= 1.0); });
  const auto eo = fw::arc_energies(outer, 5);
  for (std::size_t n = 1; n <= 5; ++n) CHECK(eo.profile.a_sq(n) == 0.0);
  CHECK(eo.profile.r(1) == eo.core_energy);
}

TEST_CASE("coarse grids report the first empty shell") {
  CHECK_THROWS_AS(fw::arc_energies(constant(256, 1.0), 64), fw::GridTooCoarse);
  CHECK_NOTHROW(fw::arc_energies(constant(256, 1.0), 64, true));
}

TEST_CASE("circle weight for f = 1 against a counting oracle") {
  constexpr std::size_t kN = 16384, kM = 40;
  const auto e = fw::arc_energies(constant(kN, 1.0), kM);
  const auto w = fw::build_circle_weight(e.profile, e.layout);
  CHECK(w.shell_values[1] == 1.0);
  for (std::size_t n = 2; n <= kM; ++n) {
    const double r = double(measure_below(kN, 1.0 / double(n)));
    const double expect = std::min(std::pow(r, -0.25), double(n));
    CHECK(std::abs(w.shell_values[n] - expect) <= 1e-12 * expect);
  }
  const double rc = double(measure_below(kN, 1.0 / double(kM + 1)));
  CHECK(std::abs(w.core_value - std::min(std::pow(rc, -0.25), double(kM + 1))) <= 1e-12 * w.core_value);
  for (Complex z : w.w.samples()) CHECK(z.real() >= 1.0);
}

TEST_CASE("circle weight: no decay and fast decay") {
  const auto lay = fw::make_arc_layout(1024, 6);
  const auto flat = fw::TailProfile::from_squares(std::vector<double>(6, 0.0), fw::GeometricTail{1.0, 0.0});
  const auto wf = fw::build_circle_weight(flat, lay);
  for (Complex z : wf.w.samples()) CHECK(z.real() == 1.0);

  std::vector<double> a(6);
  for (std::size_t k = 1; k <= 6; ++k) a[k - 1] = std::pow(10.0, -6.0 * double(k));
  const auto fast = fw::TailProfile::from_squares(a, fw::GeometricTail{1e-40, 0.0});
  const auto w = fw::build_circle_weight(fast, lay);
  for (std::size_t n = 2; n <= 6; ++n) CHECK(w.shell_values[n] == double(n));
}

TEST_CASE("log integrability") {
  CHECK(fw::check_log_integrable(constant(64, 1.0), 10).integral_value == 0.0);
  CHECK(fw::check_log_integrable(constant(64, std::exp(1.0)), 10).integral_value == doctest::Approx(1.0));
  CHECK_THROWS_AS(fw::check_log_integrable(constant(64, 0.5), 10), fw::InvalidWeight);

  constexpr std::size_t kN = 16384, kM = 256;
  const auto e = fw::arc_energies(constant(kN, 1.0), kM, true);
  const auto w = fw::build_circle_weight(e.profile, e.layout);
  const auto li = fw::check_log_integrable(w.w, kM);
  long double partial = 0.0L;
  for (std::size_t n = 2; n <= kM; ++n) partial += 2.0L * std::log((long double)n) / ((long double)n * n);
  partial += 2.0L / (kM + 1) * std::log((long double)(kM + 1));
  CHECK(li.comparison_bound == doctest::Approx(double(partial)).epsilon(1e-13));
  CHECK(li.holds);
}

TEST_CASE("outer functions from simple log-moduli") {
  const std::vector<double> zero(256, 0.0);
  const auto g0 = fw::outer_from_modulus(zero);
  for (Complex z : g0.boundary.samples()) CHECK(std::abs(z - 1.0) <= 1e-15);

  const std::vector<double> logc(256, std::log(2.5));
  const auto gc = fw::outer_from_modulus(logc);
  for (Complex z : gc.boundary.samples()) CHECK(std::abs(z - 2.5) <= 1e-14);
  CHECK(gc.boundary.negative_mode_leakage() <= 1e-15);

  // k = Re(a z) is the log-modulus of exp(a z), whose Taylor series is a^m / m!.
  const double a = 0.7;
  std::vector<double> k(256);
  for (std::size_t j = 0; j < 256; ++j) k[j] = a * std::cos(GridFunction::grid_theta(j, 256));
  const auto ge = fw::outer_from_modulus(k);
  double term = 1.0;
  for (std::size_t m = 0; m < 20; ++m) {
    CHECK(std::abs(ge.taylor[m] - term) <= 1e-14);
    term *= a / double(m + 1);
  }
  CHECK(ge.boundary.negative_mode_leakage() <= 1e-8);
  for (std::size_t j = 0; j < 256; ++j) CHECK(std::abs(std::abs(ge.boundary.samples()[j]) - std::exp(k[j])) <= 1e-14);
}

TEST_CASE("outer factor of 1 - z from the clamped log-sine modulus") {
  constexpr std::size_t kN = 16384;
  std::vector<double> k(kN);
  for (std::size_t j = 0; j < kN; ++j)
    k[j] = j == 0 ? -INFINITY : std::log(2.0 * std::abs(std::sin(GridFunction::grid_theta(j, kN) / 2.0)));
  const auto g = fw::outer_from_modulus(k);
  CHECK(g.clamped == 1);
  for (std::size_t m = 0; m < 16; ++m)
    CHECK(std::abs(g.taylor[m] - Complex(m == 0 ? 1.0 : (m == 1 ? -1.0 : 0.0))) <= 1e-3);
}

TEST_CASE("outer synthesis errors") {
  std::vector<double> k(64, 0.0);
  k[3] = NAN;
  CHECK_THROWS_AS(fw::outer_from_modulus(k), fw::InvalidInput);
  k[3] = INFINITY;
  CHECK_THROWS_AS(fw::outer_from_modulus(k), fw::InvalidInput);
  k[3] = 800.0;
  CHECK_THROWS_AS(fw::outer_from_modulus(k), fw::ScaleOverflow);
  k[3] = -INFINITY;
  CHECK_THROWS_AS(fw::outer_from_modulus(k, {-1.0}), fw::InvalidInput);
}

TEST_CASE("factorization of f = 1") {
  constexpr std::size_t kN = 16384, kM = 256;
  const auto hf = fw::hardy_factor(constant(kN, 1.0), kM);
  CHECK(hf.scale == 1.0);
  CHECK(hf.modulus_residual <= 1e-10);
  CHECK(hf.product_residual <= 1e-15);
  CHECK(hf.max_abs_g <= 1.0 + 1e-12);
  CHECK(hf.h_norm_sq >= hf.f_norm_sq);
  CHECK(hf.h_norm_sq <= hf.star_bound + 1e-8);
  CHECK(hf.log_check.holds);

  // Independent bound: counts from the grid, sums in extended precision.
  long double bound = 1.0L;
  for (std::size_t n = 2; n <= kM; ++n) {
    const long double a2 = measure_below(kN, 1.0 / double(n)) - measure_below(kN, 1.0 / double(n + 1));
    const long double r = measure_below(kN, 1.0 / double(n));
    if (r > 0) bound += a2 / std::sqrt(r);
  }
  const long double core = measure_below(kN, 1.0 / double(kM + 1));
  bound += core / std::sqrt(core);
  CHECK(hf.star_bound == doctest::Approx(double(bound)).epsilon(1e-12));
  CHECK(hf.star_bound - 1.0 <= hf.olympiad_certificate);
}

TEST_CASE("f = z has the arc energies of f = 1") {
  const auto one = fw::hardy_factor(constant(4096, 1.0), 32);
  const auto z = fw::hardy_factor(GridFunction::from_z(4096, [](Complex w) { return w; }), 32);
  for (std::size_t n = 0; n <= 32; ++n)
    CHECK(std::abs(one.energies.profile.r(n) - z.energies.profile.r(n)) <= 1e-15);
  CHECK(z.h_norm_sq <= z.star_bound + 1e-8);
  CHECK(z.modulus_residual <= 1e-10);
}

TEST_CASE("f vanishing to high order at z = 1 still factors") {
  const auto f = GridFunction::from_z(4096, [](Complex z) { return std::pow((1.0 - z) / 2.0, 4); });
  const auto hf = fw::hardy_factor(f, 32);
  CHECK(hf.modulus_residual <= 1e-10);
  CHECK(hf.max_abs_g <= 1.0 + 1e-12);
  CHECK(hf.h_norm_sq <= hf.star_bound + 1e-8);
  // w = 1 away from the arcs near theta = 0, so |g| = 1 there.
  for (std::size_t j : hf.energies.layout.outer) CHECK(std::abs(std::abs(hf.g.samples()[j]) - 1.0) <= 1e-10);
}

TEST_CASE("factorization rejects bad input and rescales large input") {
  CHECK_THROWS_AS(fw::hardy_factor(constant(1024, 0.0), 8), fw::InvalidInput);
  const auto conj_z = GridFunction::from_theta(1024, [](double t) { return std::polar(1.0, -t); });
  CHECK_THROWS_AS(fw::hardy_factor(conj_z, 8), fw::InvalidInput);
  const auto big = fw::hardy_factor(constant(1024, 4.0), 8);
  CHECK(big.scale == 0.25);
  CHECK(big.f_norm_sq == doctest::Approx(1.0));
}

TEST_CASE("radial evaluation") {
  const std::vector<Complex> one{1.0};
  const auto r1 = fw::radial_decay_check(one, 8);
  for (double v : r1.values) CHECK(v == 1.0);

  const std::vector<Complex> lin{1.0, -1.0};
  const auto rl = fw::radial_decay_check(lin, 10);
  for (std::size_t j = 1; j <= 10; ++j) CHECK(rl.values[j - 1] == std::ldexp(1.0, -int(j)));
  CHECK(rl.ratio == std::ldexp(1.0, -9));
  CHECK(rl.strictly_decreasing_from(1));
  CHECK(rl.truncation_warning);  // 2 coefficients mean N = 4

  std::vector<Complex> long_series(4096, 0.0);
  long_series[0] = 1.0;
  CHECK_FALSE(fw::radial_decay_check(long_series, 12).truncation_warning);
  CHECK_THROWS_AS(fw::radial_decay_check(one, 0), fw::InvalidInput);
}

TEST_CASE("radial decay of the f = 1 factor") {
  const auto hf = fw::hardy_factor(constant(16384, 1.0), 256);
  const auto rd = fw::radial_decay_check(hf.g_taylor, 12);
  CHECK(rd.strictly_decreasing_from(4));
  CHECK(rd.ratio < 1.0);
}

TEST_CASE("inner checks") {
  const auto z = fw::blaschke_factor(1024, 0.0);
  const auto iz = fw::inner_check(z);
  CHECK(iz.boundary_dev <= 1e-15);
  CHECK(iz.inner);

  const auto ib = fw::inner_check(fw::blaschke_factor(1024, 0.5));
  CHECK(ib.boundary_dev <= 1e-10);
  CHECK(ib.interior_ok);

  const auto half = GridFunction::from_z(1024, [](Complex w) { return (1.0 + w) / 2.0; });
  const auto ih = fw::inner_check(half);
  // |(1 + e^{i pi})/2| = 0, so the largest deviation is 1, attained at theta = pi.
  CHECK(ih.boundary_dev == doctest::Approx(1.0));
  CHECK_FALSE(ih.inner);
  CHECK_THROWS_AS(fw::project_onto_bH2(constant(1024, 1.0), half), fw::NotInner);
  CHECK_THROWS_AS(fw::blaschke_factor(64, 1.0), fw::InvalidInput);
}

TEST_CASE("projection onto b H^2") {
  constexpr std::size_t kN = 4096;
  const auto one = constant(kN, 1.0);
  const auto pz = fw::project_onto_bH2(one, fw::blaschke_factor(kN, 0.0));
  CHECK(pz.projection.norm() <= 1e-15);
  CHECK(std::abs(pz.distance - 1.0) <= 1e-12);

  for (Complex a : {Complex(0.3), Complex(0.5), Complex(0.9), Complex(-0.2, 0.6)}) {
    const auto b = fw::blaschke_factor(kN, a);
    const auto p = fw::project_onto_bH2(one, b);
    CHECK(std::abs(p.distance * p.distance - (1.0 - std::norm(a))) <= 1e-8);
    // projection = -conj(a) b, the brute-force inner product <1, b> b.
    const Complex coef = fw::grid_inner(one, b);
    CHECK(std::abs(coef + std::conj(a)) <= 1e-12);
    double err = 0.0;
    for (std::size_t j = 0; j < kN; ++j)
      err = std::max(err, std::abs(p.projection.samples()[j] - coef * b.samples()[j]));
    CHECK(err <= 1e-10);
  }

  const auto b = fw::blaschke_factor(kN, Complex(0.1, 0.4));
  std::vector<Complex> bz(kN);
  for (std::size_t j = 0; j < kN; ++j) bz[j] = b.samples()[j] * std::polar(1.0, GridFunction::grid_theta(j, kN));
  CHECK(fw::project_onto_bH2(GridFunction(bz), b).distance <= 1e-10);

  const GridFunction f1(testutil::gaussian_vector(kN)), f2(testutil::gaussian_vector(kN));
  const auto p1 = fw::project_onto_bH2(f1, b).projection;
  const auto p2 = fw::project_onto_bH2(f2, b).projection;
  CHECK(max_diff(fw::project_onto_bH2(p1, b).projection, p1) <= 1e-10);
  CHECK(std::abs(fw::grid_inner(p1, f2) - fw::grid_inner(f1, p2)) <= 1e-10);
  CHECK(p1.norm() <= f1.norm());
}

TEST_CASE("serial and parallel outer synthesis agree bitwise") {
  std::vector<double> k(2048);
  for (std::size_t j = 0; j < k.size(); ++j) k[j] = std::sin(3.0 * GridFunction::grid_theta(j, 2048));
  const auto a = fw::outer_from_modulus(k, {std::nullopt, fw::Execution::parallel});
  const auto b = fw::outer_from_modulus(k, {std::nullopt, fw::Execution::serial});
  CHECK(std::equal(a.boundary.samples().begin(), a.boundary.samples().end(), b.boundary.samples().begin()));
}
