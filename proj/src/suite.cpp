#include "flatwitness/suite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "flatwitness/bezout.hpp"
#include "flatwitness/errors.hpp"
#include "flatwitness/halfplane.hpp"
#include "flatwitness/layered.hpp"
#include "flatwitness/seq_core.hpp"
#include "flatwitness/ultralimits.hpp"
#include "flatwitness/witness.hpp"

namespace flatwitness {

namespace {

using Rng = std::mt19937_64;

Complex normal_complex(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng), n(rng)};
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<std::size_t> log_grid(std::size_t n) {
  std::vector<std::size_t> pts{1};
  for (double x = 1.0; x < static_cast<double>(n); x *= 1.7) {
    const auto k = static_cast<std::size_t>(std::llround(x));
    if (k > pts.back() && k < n) pts.push_back(k);
  }
  pts.push_back(n);
  return pts;
}

// Heavy-tailed, polynomially or exponentially decaying entries.
std::vector<Complex> random_l2_sequence(Rng& rng, std::size_t n) {
  std::lognormal_distribution<double> spread(0.0, 1.5);
  const bool exponential = coin(rng, 0.25);
  const double alpha = uniform(rng, 0.55, 2.5);
  const double lambda = uniform(rng, 1e-4, 5e-3);
  std::vector<Complex> a(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const double kk = static_cast<double>(k);
    double amp = exponential ? std::exp(-lambda * kk) : std::pow(kk, -alpha);
    amp *= spread(rng);
    if (coin(rng, 0.01)) amp *= 100.0;
    a[k - 1] = std::polar(amp, uniform(rng, -std::numbers::pi, std::numbers::pi));
  }
  return a;
}

void criterion_olympiad(RunReport& rep, Rng& rng) {
  constexpr std::size_t kSequences = 100, kLength = 10000;
  const auto grid = log_grid(kLength);
  double worst_excess = -std::numeric_limits<double>::infinity();
  double worst_oracle = 0.0;
  std::size_t windows = 0;
  for (std::size_t s = 0; s < kSequences; ++s) {
    const TailProfile p = tail_profile(random_l2_sequence(rng, kLength));
    const double scale = 1.0 + p.r(0);
    // Independent extended-precision recomputation of the suffix sums.
    std::vector<long double> r_ld(kLength + 1, 0.0L);
    for (std::size_t k = kLength; k >= 1; --k) r_ld[k - 1] = r_ld[k] + p.a_sq(k);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      for (std::size_t j = i + 1; j < grid.size(); ++j) {
        const std::size_t m = grid[i], n = grid[j];
        const double lhs = olympiad_weighted_sum(p, m, n);
        const double rhs = 2.0 * (std::sqrt(p.r(m)) - std::sqrt(p.r(n)));
        worst_excess = std::max(worst_excess, (lhs - rhs) / scale);
        long double lhs_ld = 0.0L;
        for (std::size_t k = m + 1; k <= n; ++k) lhs_ld += p.a_sq(k) / std::sqrt(r_ld[k - 1]);
        worst_oracle = std::max(worst_oracle,
                                static_cast<double>(std::fabs(lhs - lhs_ld)) / scale);
        ++windows;
      }
    }
  }
  rep.values()["windows"] = windows;
  rep.check("max (lhs - rhs) / (1 + r0)", worst_excess, 1e-12);
  rep.check("max |lhs - extended lhs| / (1 + r0)", worst_oracle, 1e-10);
}

PointwiseRelation random_relation(Rng& rng) {
  PointwiseRelation rel;
  rel.n = 1 + rng() % 5;
  rel.points = 1 + rng() % 512;
  const double r_scale = std::pow(10.0, uniform(rng, -3.0, 3.0));
  const double m_scale = std::pow(10.0, uniform(rng, -3.0, 3.0));
  rel.weights.resize(rel.points);
  rel.r.resize(rel.points * rel.n);
  rel.m.resize(rel.points * rel.n);
  for (std::size_t x = 0; x < rel.points; ++x) {
    rel.weights[x] = uniform(rng, 0.1, 2.0);
    const bool zero_r = coin(rng, 0.05), zero_m = coin(rng, 0.05);
    Complex* r = rel.r.data() + x * rel.n;
    Complex* m = rel.m.data() + x * rel.n;
    for (std::size_t i = 0; i < rel.n; ++i) {
      r[i] = zero_r ? 0.0 : r_scale * normal_complex(rng);
      m[i] = zero_m ? 0.0 : m_scale * normal_complex(rng);
    }
    // Remove the component of m along conj(r) so that sum r_i m_i = 0.
    Complex dot = 0.0;
    double rr = 0.0;
    for (std::size_t i = 0; i < rel.n; ++i) {
      dot += r[i] * m[i];
      rr += std::norm(r[i]);
    }
    if (rr > 0.0 && rel.n == 1)
      m[0] = 0.0;  // the projection would leave only rounding noise
    else if (rr > 0.0)
      for (std::size_t i = 0; i < rel.n; ++i) m[i] -= dot / rr * std::conj(r[i]);
  }
  return rel;
}

void criterion_witness(RunReport& rep, Rng& rng) {
  constexpr double kTol = 1e-10;
  double coeff = 0.0, recon = 0.0, rho = 0.0;
  std::size_t mu_failures = 0, serial_mismatches = 0;
  for (int t = 0; t < 200; ++t) {
    const PointwiseRelation rel = random_relation(rng);
    const WitnessCertificate cert = synthesize_witness(rel);
    const WitnessReport wr = verify_witness(rel, cert, kTol);
    coeff = std::max(coeff, wr.max_coeff_residual / wr.coeff_threshold * kTol);
    recon = std::max(recon, wr.max_reconstruction_residual / wr.reconstruction_threshold * kTol);
    rho = std::max(rho, wr.max_abs_rho);
    if (!wr.mu_norm_ok) ++mu_failures;
    const WitnessCertificate ref = reference::synthesize_witness(rel);
    if (ref.rho != cert.rho || ref.mu != cert.mu) ++serial_mismatches;
  }
  rep.check("coefficient residual / scale", coeff, kTol);
  rep.check("reconstruction residual / scale", recon, kTol);
  rep.check("max |rho|", rho, 1.0 + 1e-12);
  rep.check("mu-norm bound failures", static_cast<double>(mu_failures), 0.0, Compare::eq);
  rep.check("parallel vs serial mismatches", static_cast<double>(serial_mismatches), 0.0,
            Compare::eq);
}

SampledFunction random_sampled(Rng& rng, std::size_t atoms, const std::vector<double>& weights) {
  SampledFunction f{std::vector<Complex>(atoms), weights};
  for (auto& v : f.values)
    v = coin(rng, 0.05) ? Complex(0.0) : std::pow(10.0, uniform(rng, -5.0, 5.0)) * normal_complex(rng);
  return f;
}

void criterion_bezout(RunReport& rep, Rng& rng) {
  constexpr std::size_t kAtoms = 1000;
  BezoutReport worst;
  for (int t = 0; t < 100; ++t) {
    std::vector<double> w(kAtoms);
    for (auto& x : w) x = coin(rng, 0.01) ? 0.0 : uniform(rng, 0.1, 1.0);
    SampledFunction f = random_sampled(rng, kAtoms, w);
    SampledFunction g = random_sampled(rng, kAtoms, w);
    f.values[0] = g.values[0] = 0.0;
    const BezoutReport b = verify_bezout(f, g, principal_generator(f, g));
    worst.f_equals_Fd_ulp = std::max(worst.f_equals_Fd_ulp, b.f_equals_Fd_ulp);
    worst.g_equals_Gd_ulp = std::max(worst.g_equals_Gd_ulp, b.g_equals_Gd_ulp);
    worst.d_combination_ulp = std::max(worst.d_combination_ulp, b.d_combination_ulp);
    worst.max_abs_F = std::max({worst.max_abs_F, b.max_abs_F, b.max_abs_G});
    worst.unit_cofactor_ulp = std::max(worst.unit_cofactor_ulp, b.unit_cofactor_ulp);
  }
  rep.check("f = F d (ulp)", worst.f_equals_Fd_ulp, 2.0);
  rep.check("g = G d (ulp)", worst.g_equals_Gd_ulp, 2.0);
  rep.check("d = f cf + g cg (ulp)", worst.d_combination_ulp, 2.0);
  rep.check("max(|F|, |G|)", worst.max_abs_F, 1.0 + 2.0 * std::numeric_limits<double>::epsilon());
  rep.check("||cf| - 1|, ||cg| - 1| (ulp)", worst.unit_cofactor_ulp, 2.0);
}

FactorizationResult geometric_factorization() {
  const LayeredPreset p = make_l2_preset(64, 0.5);
  return factor(p.f, p.layout, {WeightMode::automatic, p.tail});
}

void criterion_layered(RunReport& rep, Rng&) {
  const FactorizationResult res = geometric_factorization();
  double g_err = 0.0, h_closed = 0.0;
  for (std::size_t k = 1; k <= 64; ++k) {
    const double kk = static_cast<double>(k);
    g_err = std::max(g_err, std::abs(res.g.values[k - 1] - std::exp2(-(kk - 1.0) / 4.0)));
    h_closed += std::exp2(-(kk + 1.0) / 2.0);
  }
  rep.check("max |g_k - 2^{-(k-1)/4}|", g_err, 1e-12);
  rep.check("| ||h||^2 - closed form |", std::abs(res.h_norm_sq - h_closed), 1e-10);
  const StarReport star = verify_star_bound(res, res.profile);
  rep.check("weighted energy - star bound", star.lhs - star.rhs, star.tolerance);
  rep.check("factorization residual", res.residual, 1e-12);

  // Finite support: f lives on shells 1..8 of 12.
  LayeredPreset c = make_l2_preset(12, 0.5);
  for (std::size_t k = 8; k < 12; ++k) c.f.values[k] = 0.0;
  const FactorizationResult cres = factor(c.f, c.layout);
  std::size_t mismatches = cres.compact_branch ? 0 : 1;
  for (std::size_t n = 1; n <= cres.w_values.size(); ++n)
    if (cres.w_values[n - 1] != static_cast<double>(n)) ++mismatches;
  rep.check("compact branch w != (1, 2, 3, ...)", static_cast<double>(mismatches), 0.0,
            Compare::eq);
}

void criterion_outer(RunReport& rep, Rng&) {
  constexpr std::size_t kGrid = 16384;
  const double c = 0.37;
  const std::vector<double> k_const(kGrid, std::log(c));
  const OuterFunction oc = outer_from_modulus(k_const);
  double err = 0.0;
  for (Complex z : oc.boundary.samples()) err = std::max(err, std::abs(z - c));
  rep.check("(a) max |g - c|", err, 1e-10);

  const OuterFunction os = outer_from_modulus(log_sine_modulus(kGrid));
  double coeff_err = 0.0;
  for (std::size_t m = 0; m < 16; ++m) {
    const Complex expect = m == 0 ? 1.0 : (m == 1 ? -1.0 : 0.0);
    coeff_err = std::max(coeff_err, std::abs(os.taylor[m] - expect));
  }
  rep.values()["clamped_samples"] = os.clamped;
  rep.check("(b) taylor error, first 16 modes", coeff_err, 1e-3);
  rep.check("(c) negative-mode leakage of g", oc.boundary.negative_mode_leakage(), 1e-8);
}

void criterion_hardy(RunReport& rep, Rng&) {
  const HardyFactorization hf = constant_one_factorization();
  rep.check("max ||g| - 1/w|", hf.modulus_residual, 1e-10);
  rep.check("||h||^2 - (||f||^2 + sum a_n^2/sqrt r_{n-1} + core)", hf.h_norm_sq - hf.star_bound,
            1e-8);
  const double leak = hf.h.negative_mode_leakage();
  rep.values()["h_negative_energy_fraction"] = leak * leak;
  rep.check("negative-mode leakage of h", leak, 1e-6);
  const RadialDecay rd = radial_decay_check(hf.g_taylor, 12);
  rep.values()["radial_values"] = rd.values;
  std::size_t violations = 0;
  for (std::size_t j = 4; j < rd.values.size(); ++j)
    if (!(rd.values[j - 1] > rd.values[j])) ++violations;
  rep.check("radial non-decreases for j >= 4", static_cast<double>(violations), 0.0,
            Compare::eq);
  rep.check("radial last / first", rd.ratio, 0.1);
}

void criterion_projection(RunReport& rep, Rng& rng) {
  constexpr std::size_t kGrid = 4096;
  const GridFunction one = GridFunction::from_theta(kGrid, [](double) { return Complex(1.0); });
  const GridFunction z = blaschke_factor(kGrid, 0.0);
  rep.check("|dist(1, zH^2) - 1|", std::abs(project_onto_bH2(one, z).distance - 1.0), 1e-12);
  for (double a : {0.3, 0.5, 0.9}) {
    const GridFunction b = blaschke_factor(kGrid, a);
    const double d = project_onto_bH2(one, b).distance;
    rep.check(fmt::format("|dist^2(1, b H^2) - (1 - a^2)|, a = {}", a),
              std::abs(d * d - (1.0 - a * a)), 1e-8);
  }
  const GridFunction b = blaschke_factor(kGrid, Complex(0.4, -0.3));
  std::vector<Complex> s1(kGrid), s2(kGrid);
  for (auto& v : s1) v = normal_complex(rng);
  for (auto& v : s2) v = normal_complex(rng);
  const GridFunction f1(std::move(s1)), f2(std::move(s2));
  const GridFunction p1 = project_onto_bH2(f1, b).projection;
  const GridFunction p11 = project_onto_bH2(p1, b).projection;
  const GridFunction p2 = project_onto_bH2(f2, b).projection;
  double idem = 0.0;
  for (std::size_t j = 0; j < kGrid; ++j)
    idem = std::max(idem, std::abs(p11.samples()[j] - p1.samples()[j]));
  rep.check("idempotence residual", idem, 1e-10);
  rep.check("self-adjointness residual", std::abs(grid_inner(p1, f2) - grid_inner(f1, p2)), 1e-10);
}

std::vector<Complex> random_halfplane_points(Rng& rng, std::size_t n) {
  std::vector<Complex> pts(n);
  for (auto& s : pts) s = {std::pow(10.0, uniform(rng, -2.0, 1.0)), uniform(rng, -10.0, 10.0)};
  return pts;
}

void criterion_transfer(RunReport& rep, Rng& rng) {
  std::vector<Complex> zs(100);
  for (auto& z : zs)
    z = std::polar(0.95 * std::sqrt(uniform(rng, 0.0, 1.0)), uniform(rng, -std::numbers::pi, std::numbers::pi));
  double round_trip = 0.0;
  for (int t = 0; t < 100; ++t) {
    std::vector<Complex> c(1 + rng() % 24);
    for (std::size_t m = 0; m < c.size(); ++m) c[m] = std::pow(0.8, m) * normal_complex(rng);
    const Evaluator f = taylor_evaluator(c);
    const Evaluator back = halfplane_to_disk_h2(disk_to_halfplane_h2(f));
    for (Complex z : zs) round_trip = std::max(round_trip, std::abs(back(z) - f(z)));
  }
  rep.check("round trip disk -> half-plane -> disk", round_trip, 1e-10);

  const auto pts = random_halfplane_points(rng, 100);
  const Evaluator fix = [](Complex z) { return (1.0 - z) / 2.0; };
  const Evaluator F = disk_to_halfplane_h2(fix);
  const Evaluator fix_back =
      halfplane_to_disk_h2([](Complex s) { return 1.0 / ((1.0 + s) * (1.0 + s)); });
  double fixture = 0.0;
  for (Complex s : pts) fixture = std::max(fixture, std::abs(F(s) - 1.0 / ((1.0 + s) * (1.0 + s))));
  for (Complex z : zs) fixture = std::max(fixture, std::abs(fix_back(z) - fix(z)));
  rep.check("(1 - z)/2 <-> 1/(1 + s)^2", fixture, 1e-12);

  const HardyFactorization hf = constant_one_factorization();
  const auto fspec = hf.f.spectrum();
  const Evaluator f = taylor_evaluator({fspec.begin(), fspec.begin() + static_cast<long>(fspec.size() / 2)});
  const Evaluator g = taylor_evaluator(hf.g_taylor);
  const TransferredFactorization tf = transfer_factorization(f, g, quotient_evaluator(f, g), pts);
  rep.check("max |F - G H| over half-plane samples", tf.max_product_residual, 1e-8);
  rep.check("sup |G| vs sup |g o phi|", std::abs(tf.sup_G - tf.sup_g_images), 0.0, Compare::eq);
}

void criterion_ultralimits(RunReport& rep, Rng& rng) {
  std::vector<Complex> v(50);
  for (auto& x : v) x = normal_complex(rng);
  const BoundedSequence a(v);
  std::size_t mismatches = 0;
  for (std::size_t m = 1; m <= a.size(); ++m)
    if (principal_limit(a, m) != v[m - 1]) ++mismatches;
  rep.check("principal limit mismatches", static_cast<double>(mismatches), 0.0, Compare::eq);

  const FactorizationResult res = geometric_factorization();
  const Membership g_verdict = ideal_membership_nonprincipal(BoundedSequence(res.g.values), 1e-3);
  rep.values()["g_sequence_verdict"] = to_string(g_verdict);
  rep.check_flag("g-sequence classified Yes", g_verdict == Membership::yes);

  std::vector<Complex> alt(1000);
  for (std::size_t n = 0; n < alt.size(); ++n) alt[n] = (n % 2 == 0) ? -1.0 : 1.0;
  const Membership alt_verdict = ideal_membership_nonprincipal(BoundedSequence(alt), 1e-3);
  rep.values()["alternating_verdict"] = to_string(alt_verdict);
  rep.check_flag("(-1)^n classified Undecidable", alt_verdict == Membership::undecidable);
}

using CriterionFn = void (*)(RunReport&, Rng&);

CriterionFn criterion_fn(int id) {
  switch (id) {
    case 1: return criterion_olympiad;
    case 2: return criterion_witness;
    case 3: return criterion_bezout;
    case 4: return criterion_layered;
    case 5: return criterion_outer;
    case 6: return criterion_hardy;
    case 7: return criterion_projection;
    case 8: return criterion_transfer;
    case 9: return criterion_ultralimits;
  }
  throw InvalidInput(fmt::format("no criterion {}", id));
}

}  // namespace

const std::vector<CriterionInfo>& criteria() {
  static const std::vector<CriterionInfo> list = {
      {1, "olympiad bound", 5.0},      {2, "witness synthesis", 10.0},
      {3, "bezout identities", 1.0},   {4, "layered factorization", 1.0},
      {5, "outer functions", 5.0},     {6, "circle factorization", 20.0},
      {7, "projection strictness", 5.0}, {8, "half-plane transfer", 5.0},
      {9, "ultralimits", 1.0},
  };
  return list;
}

RunReport run_criterion(int id, const SuiteOptions& options) {
  const CriterionFn fn = criterion_fn(id);
  const auto& info = criteria().at(static_cast<std::size_t>(id - 1));
  RunReport rep(fmt::format("criterion-{}", id));
  rep.parameters()["title"] = info.title;
  rep.parameters()["seed"] = options.seed;
  Rng rng(options.seed + static_cast<std::uint64_t>(id));
  try {
    fn(rep, rng);
  } catch (const Error& e) {
    rep.values()["error"] = e.what();
    rep.check_flag("completed without error", false);
  }
  rep.stop_clock();
  rep.check("wall time (s)", rep.wall_time(), info.time_limit, Compare::lt);
  return rep;
}

HardyFactorization constant_one_factorization(std::size_t grid, std::size_t shells) {
  const GridFunction one = GridFunction::from_theta(grid, [](double) { return Complex(1.0); });
  return hardy_factor(one, shells);
}

std::vector<double> log_sine_modulus(std::size_t grid) {
  std::vector<double> k(grid);
  for (std::size_t j = 0; j < grid; ++j)
    k[j] = j == 0 ? -std::numeric_limits<double>::infinity()
                  : std::log(2.0 * std::abs(std::sin(GridFunction::grid_theta(j, grid) / 2.0)));
  return k;
}

}  // namespace flatwitness
