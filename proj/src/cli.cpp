#include "flatwitness/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>

#include <fmt/format.h>

#include "CLI11.hpp"

#include "flatwitness/bezout.hpp"
#include "flatwitness/errors.hpp"
#include "flatwitness/halfplane.hpp"
#include "flatwitness/hardy.hpp"
#include "flatwitness/io.hpp"
#include "flatwitness/layered.hpp"
#include "flatwitness/parallel.hpp"
#include "flatwitness/report.hpp"
#include "flatwitness/seq_core.hpp"
#include "flatwitness/suite.hpp"
#include "flatwitness/ultralimits.hpp"
#include "flatwitness/witness.hpp"

namespace flatwitness::cli {

namespace {

using Json = io::Json;

struct Common {
  bool json = false;
  std::string out_path;
  std::uint64_t seed = 20240611;
};

void add_common(CLI::App* app, Common& c) {
  app->add_flag("--json", c.json, "Print the JSON report instead of the text summary");
  app->add_option("--out", c.out_path, "Write the JSON report to PATH");
  app->add_option("--seed", c.seed, "Seed for generated inputs");
}

int emit(RunReport& rep, const Common& c, std::ostream& out) {
  if (rep.wall_time() == 0.0) rep.stop_clock();
  const Json j = rep.to_json();
  if (!c.out_path.empty()) io::write_text_file(c.out_path, j.dump(2) + "\n");
  if (c.json)
    out << j.dump(2) << "\n";
  else
    out << rep.to_text();
  return rep.passed() ? 0 : 1;
}

GridFunction builtin_or_file(const std::string& input, std::size_t grid) {
  if (input == "constant1") return GridFunction::from_theta(grid, [](double) { return Complex(1.0); });
  if (input == "z") return GridFunction::from_z(grid, [](Complex z) { return z; });
  return io::read_grid_file(input);
}

// ---- witness -------------------------------------------------------------

struct WitnessArgs {
  Common c;
  std::string input, certificate;
  double tol = 1e-10;
  std::size_t atoms = 64, n = 3;
  bool serial = false;
};

PointwiseRelation generated_relation(const WitnessArgs& a) {
  std::mt19937_64 rng(a.c.seed);
  std::normal_distribution<double> nd;
  PointwiseRelation rel;
  rel.n = a.n;
  rel.points = a.atoms;
  rel.weights.assign(a.atoms, 1.0);
  rel.r.resize(a.atoms * a.n);
  rel.m.resize(a.atoms * a.n);
  for (std::size_t x = 0; x < a.atoms; ++x) {
    Complex* r = rel.r.data() + x * a.n;
    Complex* m = rel.m.data() + x * a.n;
    Complex dot = 0.0;
    double rr = 0.0;
    for (std::size_t i = 0; i < a.n; ++i) {
      r[i] = {nd(rng), nd(rng)};
      m[i] = {nd(rng), nd(rng)};
      dot += r[i] * m[i];
      rr += std::norm(r[i]);
    }
    if (a.n == 1)
      m[0] = 0.0;
    else
      for (std::size_t i = 0; i < a.n; ++i) m[i] -= dot / rr * std::conj(r[i]);
  }
  return rel;
}

int cmd_witness(const WitnessArgs& a, std::ostream& out) {
  RunReport rep("witness");
  const PointwiseRelation rel =
      a.input.empty() ? generated_relation(a) : io::relation_from_json(io::read_json_file(a.input));
  rep.parameters() = {{"input", a.input.empty() ? "generated" : a.input},
                      {"n", rel.n}, {"points", rel.points}, {"tol", a.tol}, {"serial", a.serial}};
  WitnessOptions opts;
  opts.execution = a.serial ? Execution::serial : Execution::parallel;
  const WitnessCertificate cert =
      a.serial ? reference::synthesize_witness(rel, opts) : synthesize_witness(rel, opts);
  const WitnessReport wr = verify_witness(rel, cert, a.tol);
  rep.values()["relation_residual"] = relation_residual(rel);
  rep.values()["mu_norms_sq"] = wr.mu_norms_sq;
  rep.values()["m_norm_sq"] = wr.m_norm_sq;
  rep.check("coefficient residual", wr.max_coeff_residual, wr.coeff_threshold);
  rep.check("reconstruction residual", wr.max_reconstruction_residual, wr.reconstruction_threshold);
  rep.check("max |rho|", wr.max_abs_rho, 1.0 + 1e-12);
  rep.check_flag("mu-norm bound", wr.mu_norm_ok);
  if (!a.certificate.empty())
    io::write_text_file(a.certificate, io::certificate_to_json(cert).dump(2) + "\n");
  return emit(rep, a.c, out);
}

// ---- olympiad ------------------------------------------------------------

struct OlympiadArgs {
  Common c;
  std::string input;
  double geometric = 0.5;
  std::size_t shells = 64, from = 1, to = 0;
  std::optional<double> tol;
};

int cmd_olympiad(const OlympiadArgs& a, std::ostream& out) {
  RunReport rep("olympiad");
  TailProfile p;
  if (a.input.empty()) {
    if (!(a.geometric > 0.0 && a.geometric < 1.0)) throw InvalidInput("--geometric must lie in (0, 1)");
    std::vector<Complex> v(a.shells);
    for (std::size_t k = 1; k <= a.shells; ++k) v[k - 1] = std::pow(a.geometric, 0.5 * k);
    p = tail_profile(v, GeometricTail{std::pow(a.geometric, a.shells + 1.0), a.geometric});
  } else {
    const Json j = io::read_json_file(a.input);
    p = tail_profile(io::parse_complex_array(j.is_array() ? j : j.at("values")));
  }
  const std::size_t to = a.to ? a.to : p.size();
  rep.parameters() = {{"input", a.input.empty() ? "geometric" : a.input}, {"from", a.from}, {"to", to}};
  const OlympiadReport o = verify_olympiad_bound(p, a.from, to, a.tol);
  rep.values()["lhs"] = o.lhs;
  rep.values()["rhs"] = o.rhs;
  rep.values()["r0"] = p.r(0);
  if (!p.has_finite_support())
    rep.values()["lhs_to_infinity"] = olympiad_weighted_sum_to_infinity(p, a.from);
  rep.check("lhs - 2 (sqrt r_m - sqrt r_n)", o.lhs - o.rhs, o.tolerance);
  rep.check("telescoping defect", p.telescoping_defect(), 1e-12 * (1.0 + p.r(0)));
  return emit(rep, a.c, out);
}

// ---- bezout --------------------------------------------------------------

struct BezoutArgs {
  Common c;
  std::string input;
  std::size_t atoms = 1000;
  double ulps = 2.0;
};

int cmd_bezout(const BezoutArgs& a, std::ostream& out) {
  RunReport rep("bezout");
  SampledFunction f, g;
  if (a.input.empty()) {
    std::mt19937_64 rng(a.c.seed);
    std::normal_distribution<double> nd;
    f = {std::vector<Complex>(a.atoms), std::vector<double>(a.atoms, 1.0)};
    g = f;
    for (std::size_t x = 0; x < a.atoms; ++x) {
      f.values[x] = {nd(rng), nd(rng)};
      g.values[x] = {nd(rng), nd(rng)};
    }
  } else {
    const Json j = io::read_json_file(a.input);
    f = io::sampled_function_from_json(j.at("f"));
    g = io::sampled_function_from_json(j.at("g"));
  }
  rep.parameters() = {{"input", a.input.empty() ? "generated" : a.input}, {"atoms", f.size()}, {"ulps", a.ulps}};
  const PrincipalGenerator gen = principal_generator(f, g);
  const BezoutReport b = verify_bezout(f, g, gen);
  rep.values()["ess_sup_d"] = ess_sup(gen.d);
  rep.check("f = F d (ulp)", b.f_equals_Fd_ulp, a.ulps);
  rep.check("g = G d (ulp)", b.g_equals_Gd_ulp, a.ulps);
  rep.check("d = f cf + g cg (ulp)", b.d_combination_ulp, a.ulps);
  const double unit = 1.0 + a.ulps * std::numeric_limits<double>::epsilon();
  rep.check("max |F|", b.max_abs_F, unit);
  rep.check("max |G|", b.max_abs_G, unit);
  rep.check("unit cofactors (ulp)", b.unit_cofactor_ulp, a.ulps);
  return emit(rep, a.c, out);
}

// ---- ulim ----------------------------------------------------------------

struct UlimArgs {
  Common c;
  std::string input;
  double tol = 1e-3, tail_fraction = 0.25;
  std::size_t index = 0;
};

int cmd_ulim(const UlimArgs& a, std::ostream& out) {
  RunReport rep("ulim");
  const Json j = io::read_json_file(a.input);
  const BoundedSequence seq(io::parse_complex_array(j.is_array() ? j : j.at("values")));
  rep.parameters() = {{"input", a.input}, {"tol", a.tol}, {"tail_fraction", a.tail_fraction}};
  if (a.index) {
    const Complex v = principal_limit(seq, a.index);
    rep.values()["principal_limit"] = {v.real(), v.imag()};
  }
  if (auto ev = eventual_limit(seq, a.tol, a.tail_fraction))
    rep.values()["eventual_limit"] = {{"value", {ev->limit.real(), ev->limit.imag()}}, {"radius", ev->radius}};
  else
    rep.values()["eventual_limit"] = nullptr;
  // Verdicts are informational; only errors make this command fail.
  rep.values()["membership_nonprincipal"] = to_string(ideal_membership_nonprincipal(seq, a.tol, a.tail_fraction));
  rep.values()["sup_norm"] = seq.sup_norm();
  return emit(rep, a.c, out);
}

// ---- layered -------------------------------------------------------------

struct LayeredArgs {
  Common c;
  std::string preset = "l2", space, input, mode = "auto";
  std::size_t shells = 64, atoms_per_shell = 64;
  double geometric = 0.5, tol = 1e-12;
};

int cmd_layered(const LayeredArgs& a, std::ostream& out) {
  RunReport rep("layered");
  LayeredPreset p;
  if (!a.space.empty()) {
    if (a.input.empty()) throw InvalidInput("--space needs --input with the sampled function");
    p.name = "file";
    p.layout = io::layered_space_from_json(io::read_json_file(a.space));
    p.f = io::sampled_function_from_json(io::read_json_file(a.input));
  } else {
    p = make_preset(a.preset, a.shells, a.atoms_per_shell, a.geometric);
  }
  WeightMode mode = WeightMode::automatic;
  if (a.mode == "compact") mode = WeightMode::compact;
  else if (a.mode == "general") mode = WeightMode::general;
  rep.parameters() = {{"preset", p.name}, {"shells", p.layout.shells.size()}, {"atoms", p.f.size()},
                      {"mode", a.mode}, {"tol", a.tol}};
  if (p.name == "l2") rep.parameters()["geometric"] = a.geometric;

  const FactorizationResult res = factor(p.f, p.layout, {mode, p.tail});
  const StarReport star = verify_star_bound(res, res.profile);
  rep.values()["compact_branch"] = res.compact_branch;
  rep.values()["clamped"] = res.clamped;
  rep.values()["f_norm_sq"] = res.f_norm_sq;
  rep.values()["h_norm_sq"] = res.h_norm_sq;
  rep.values()["star_rhs"] = star.rhs;
  rep.values()["olympiad_certificate"] = star.olympiad_certificate;
  rep.values()["w"] = res.w_values;
  rep.check("factorization residual", res.residual, a.tol * (1.0 + std::sqrt(res.f_norm_sq)));
  rep.check("weighted energy - star bound", star.lhs - star.rhs, star.tolerance);
  rep.check("olympiad sum - certificate", star.olympiad_sum - star.olympiad_certificate,
            1e-12 * (1.0 + res.profile.r(0)));
  if (p.name == "l2" && !res.compact_branch) {
    double err = 0.0;
    for (std::size_t k = 1; k <= p.layout.shells.size(); ++k) {
      const double closed = std::pow(std::pow(a.geometric, double(k)) / (1.0 - a.geometric), 0.25);
      err = std::max(err, std::abs(res.g.values[k - 1] - closed));
    }
    rep.check("max |g_k - closed form|", err, a.tol);
  }
  return emit(rep, a.c, out);
}

// ---- hardy ---------------------------------------------------------------

struct HardyArgs {
  Common c;
  std::string input = "constant1", artifact, csv, inner;
  std::size_t grid = 16384, shells = 256, depth = 12, modes = 16;
  std::optional<double> clamp, max_radial_ratio;
  double tol = 1e-10, leakage_tol = 1e-6, blaschke = 0.5, blaschke_im = 0.0;
};

int cmd_hardy_factor(const HardyArgs& a, std::ostream& out) {
  RunReport rep("hardy factor");
  const GridFunction f = builtin_or_file(a.input, a.grid);
  rep.parameters() = {{"input", a.input}, {"grid", f.size()}, {"shells", a.shells}, {"radial_depth", a.depth}};
  HardyOptions opts;
  opts.clamp = a.clamp;
  const HardyFactorization hf = hardy_factor(f, a.shells, opts);
  const RadialDecay rd = radial_decay_check(hf.g_taylor, a.depth);
  const double leak = hf.h.negative_mode_leakage();

  rep.values()["scale"] = hf.scale;
  rep.values()["empty_shells"] = hf.energies.layout.empty_shells;
  rep.values()["floored_suffix_sums"] = hf.weight.floored;
  rep.values()["core_energy"] = hf.energies.core_energy;
  rep.values()["f_norm_sq"] = hf.f_norm_sq;
  rep.values()["h_norm_sq"] = hf.h_norm_sq;
  rep.values()["star_bound"] = hf.star_bound;
  rep.values()["log_integral"] = hf.log_check.integral_value;
  rep.values()["log_comparison_bound"] = hf.log_check.comparison_bound;
  rep.values()["max_abs_g"] = hf.max_abs_g;
  rep.values()["h_negative_energy_fraction"] = leak * leak;
  rep.values()["radial_values"] = rd.values;
  rep.values()["radial_ratio"] = rd.ratio;
  rep.values()["radial_truncation_warning"] = rd.truncation_warning;

  rep.check("max ||g| - 1/w|", hf.modulus_residual, a.tol);
  rep.check("max |f - g h|", hf.product_residual, a.tol);
  rep.check("max |g|", hf.max_abs_g, 1.0 + a.tol);
  rep.check("||h||^2 - star bound", hf.h_norm_sq - hf.star_bound, 1e-8);
  rep.check("log integral - comparison bound", hf.log_check.integral_value - hf.log_check.comparison_bound,
            1e-12 * hf.log_check.comparison_bound);
  rep.check("negative-mode leakage of h", leak, a.leakage_tol);
  std::size_t violations = 0;
  for (std::size_t j = 4; j < rd.values.size(); ++j)
    if (!(rd.values[j - 1] > rd.values[j])) ++violations;
  rep.check("radial non-decreases for j >= 4", double(violations), 0.0, Compare::eq);
  if (a.max_radial_ratio) rep.check("radial last / first", rd.ratio, *a.max_radial_ratio);

  if (!a.artifact.empty()) {
    const auto fs = hf.f.spectrum();
    io::DiskArtifact art{{fs.begin(), fs.begin() + long(fs.size() / 2)}, hf.g_taylor, {}};
    const auto hs = hf.h.spectrum();
    art.h_taylor.assign(hs.begin(), hs.begin() + long(hs.size() / 2));
    io::write_text_file(a.artifact, io::disk_artifact_to_json(art).dump() + "\n");
  }
  if (!a.csv.empty()) {
    std::ofstream os(a.csv);
    io::write_csv(os, hf.g.samples());
  }
  return emit(rep, a.c, out);
}

int cmd_hardy_outer(const HardyArgs& a, std::ostream& out) {
  RunReport rep("hardy outer");
  std::vector<double> k;
  if (a.input == "log-sine") {
    k = log_sine_modulus(a.grid);
  } else if (a.input.rfind("constant:", 0) == 0) {
    const double c = std::stod(a.input.substr(9));
    if (!(c > 0.0)) throw InvalidInput("constant modulus must be positive");
    k.assign(a.grid, std::log(c));
  } else {
    const Json j = io::read_json_file(a.input);
    k = io::parse_real_array(j.is_array() ? j : j.at("samples"));
  }
  rep.parameters() = {{"input", a.input}, {"grid", k.size()}, {"modes", a.modes}};
  if (a.clamp) rep.parameters()["clamp"] = *a.clamp;
  const OuterFunction o = outer_from_modulus(k, {a.clamp, Execution::parallel});
  double mod_err = 0.0, max_ek = 0.0;
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (std::isinf(k[j])) continue;
    max_ek = std::max(max_ek, std::exp(k[j]));
    mod_err = std::max(mod_err, std::abs(std::abs(o.boundary.samples()[j]) - std::exp(k[j])));
  }
  const std::size_t shown = std::min(a.modes, o.taylor.size());
  rep.values()["clamped"] = o.clamped;
  rep.values()["l1_norm"] = o.l1_norm;
  rep.values()["negative_mode_leakage"] = o.boundary.negative_mode_leakage();
  rep.values()["taylor"] = io::complex_array({o.taylor.data(), shown});
  rep.check("max ||g| - e^k|", mod_err, a.tol * (1.0 + max_ek));
  if (a.input == "log-sine") {
    double err = 0.0;
    for (std::size_t m = 0; m < shown; ++m)
      err = std::max(err, std::abs(o.taylor[m] - Complex(m == 0 ? 1.0 : (m == 1 ? -1.0 : 0.0))));
    rep.check("taylor error against 1 - z", err, 1e-3);
  }
  return emit(rep, a.c, out);
}

int cmd_hardy_project(const HardyArgs& a, std::ostream& out) {
  RunReport rep("hardy project");
  const GridFunction f = builtin_or_file(a.input, a.grid);
  const Complex alpha(a.blaschke, a.blaschke_im);
  const GridFunction b = a.inner.empty() ? blaschke_factor(f.size(), alpha) : builtin_or_file(a.inner, f.size());
  rep.parameters() = {{"input", a.input}, {"grid", f.size()}};
  if (a.inner.empty())
    rep.parameters()["blaschke"] = {alpha.real(), alpha.imag()};
  else
    rep.parameters()["inner"] = a.inner;
  const InnerCheck ic = inner_check(b);
  rep.values()["inner_boundary_dev"] = ic.boundary_dev;
  rep.values()["inner_interior_max"] = ic.interior_max;
  const Projection p = project_onto_bH2(f, b);
  const Projection pp = project_onto_bH2(p.projection, b);
  double idem = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j)
    idem = std::max(idem, std::abs(pp.projection.samples()[j] - p.projection.samples()[j]));
  rep.values()["distance"] = p.distance;
  rep.values()["distance_sq"] = p.distance * p.distance;
  rep.check("idempotence residual", idem, a.tol);
  rep.check("||P f|| - ||f||", p.projection.norm() - f.norm(), a.tol);
  return emit(rep, a.c, out);
}

// ---- transfer ------------------------------------------------------------

struct TransferArgs {
  Common c;
  std::string artifact, points, h_mode = "quotient";
  std::size_t count = 100;
  double tol = 1e-8;
};

int cmd_transfer(const TransferArgs& a, std::ostream& out) {
  RunReport rep("transfer");
  const io::DiskArtifact art = io::disk_artifact_from_json(io::read_json_file(a.artifact));
  std::vector<Complex> pts;
  if (a.points.empty()) {
    std::mt19937_64 rng(a.c.seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    pts.resize(a.count);
    for (auto& s : pts) s = {std::pow(10.0, -2.0 + 3.0 * u(rng)), -10.0 + 20.0 * u(rng)};
  } else {
    pts = io::points_from_json(io::read_json_file(a.points));
  }
  rep.parameters() = {{"artifact", a.artifact}, {"points", a.points.empty() ? "generated" : a.points},
                      {"count", pts.size()}, {"h_mode", a.h_mode}, {"tol", a.tol}};
  const Evaluator f = taylor_evaluator(art.f_taylor);
  const Evaluator g = taylor_evaluator(art.g_taylor);
  Evaluator h;
  if (a.h_mode == "taylor") {
    if (art.h_taylor.empty()) throw InvalidInput("artifact has no h_taylor for --h-mode taylor");
    h = taylor_evaluator(art.h_taylor);
  } else {
    h = quotient_evaluator(f, g);
  }
  const TransferredFactorization tf = transfer_factorization(f, g, h, pts);
  rep.values()["disk_residual"] = tf.disk_residual;
  rep.values()["max_jacobian"] = tf.max_jacobian;
  rep.values()["sup_G"] = tf.sup_G;
  rep.check("max |F - G H|", tf.max_product_residual, a.tol);
  rep.check("sup |G| vs sup |g o phi|", std::abs(tf.sup_G - tf.sup_g_images), 0.0, Compare::eq);
  return emit(rep, a.c, out);
}

// ---- suite ---------------------------------------------------------------

struct SuiteArgs {
  Common c;
  std::vector<int> only;
};

int cmd_suite(const SuiteArgs& a, std::ostream& out) {
  Json all = Json::array();
  bool ok = true;
  for (const CriterionInfo& info : criteria()) {
    if (!a.only.empty() && std::find(a.only.begin(), a.only.end(), info.id) == a.only.end()) continue;
    RunReport rep = run_criterion(info.id, {a.c.seed});
    ok = ok && rep.passed();
    if (!a.c.json)
      out << fmt::format("criterion {}: {} {} ({:.3f} s)\n", info.id, rep.passed() ? "PASS" : "FAIL",
                         info.title, rep.wall_time())
          << std::flush;
    all.push_back(rep.to_json());
  }
  const Json doc = {{"subcommand", "suite"}, {"seed", a.c.seed}, {"criteria", all}, {"pass", ok}};
  if (!a.c.out_path.empty()) io::write_text_file(a.c.out_path, doc.dump(2) + "\n");
  if (a.c.json) out << doc.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  configure_threads_from_env();
  CLI::App app{"Flatness witnesses, Bezout generators and Hardy-space factorizations"};
  app.require_subcommand(1);

  WitnessArgs wa;
  auto* witness = app.add_subcommand("witness", "Synthesize and verify a pointwise flatness witness");
  add_common(witness, wa.c);
  witness->add_option("--input", wa.input, "Relation JSON");
  witness->add_option("--certificate", wa.certificate, "Write the certificate JSON here");
  witness->add_option("--tol", wa.tol);
  witness->add_option("--atoms", wa.atoms, "Points of a generated relation");
  witness->add_option("--n", wa.n, "Length of a generated relation");
  witness->add_flag("--serial", wa.serial, "Use the serial reference kernel");

  OlympiadArgs oa;
  auto* olympiad = app.add_subcommand("olympiad", "Check the weighted tail-sum bound");
  add_common(olympiad, oa.c);
  olympiad->add_option("--input", oa.input, "Sequence JSON");
  olympiad->add_option("--geometric", oa.geometric, "Ratio of the built-in geometric sequence");
  olympiad->add_option("--shells", oa.shells, "Stored length of the geometric sequence");
  olympiad->add_option("--from", oa.from);
  olympiad->add_option("--to", oa.to);
  olympiad->add_option("--tol", oa.tol);

  BezoutArgs ba;
  auto* bezout = app.add_subcommand("bezout", "Principal generator of <f, g> in L-infinity");
  add_common(bezout, ba.c);
  bezout->add_option("--input", ba.input, "JSON {f: {values, weights}, g: {...}}");
  bezout->add_option("--atoms", ba.atoms);
  bezout->add_option("--tol", ba.ulps, "Tolerance in ulps");

  UlimArgs ua;
  auto* ulim = app.add_subcommand("ulim", "Ultrafilter limits of a bounded sequence");
  add_common(ulim, ua.c);
  ulim->add_option("--input", ua.input, "Sequence JSON")->required();
  ulim->add_option("--tol", ua.tol);
  ulim->add_option("--index", ua.index, "Principal ultrafilter at this index (1-based)");
  ulim->add_option("--tail-fraction", ua.tail_fraction);

  LayeredArgs la;
  auto* layered = app.add_subcommand("layered", "Weight construction on a layered space");
  add_common(layered, la.c);
  layered->add_option("--preset", la.preset)->check(CLI::IsMember({"l2", "lebesgue-r", "circle"}));
  layered->add_option("--shells", la.shells);
  layered->add_option("--atoms-per-shell", la.atoms_per_shell);
  layered->add_option("--geometric", la.geometric);
  layered->add_option("--space", la.space, "LayeredSpace JSON");
  layered->add_option("--input", la.input, "Sampled function JSON");
  layered->add_option("--mode", la.mode)->check(CLI::IsMember({"auto", "compact", "general"}));
  layered->add_option("--tol", la.tol);

  HardyArgs ha;
  auto* hardy = app.add_subcommand("hardy", "Hardy-space tools on a circle grid");
  hardy->require_subcommand(1);
  auto add_hardy = [&](CLI::App* sub) {
    add_common(sub, ha.c);
    sub->add_option("--grid", ha.grid, "Grid size N (power of two)");
    sub->add_option("--input", ha.input);
    sub->add_option("--tol", ha.tol);
  };
  auto* hfactor = hardy->add_subcommand("factor", "Factor f = g h with g outer and g -> 0 at 1");
  add_hardy(hfactor);
  hfactor->add_option("--shells", ha.shells);
  hfactor->add_option("--clamp", ha.clamp);
  hfactor->add_option("--radial-depth", ha.depth);
  hfactor->add_option("--max-radial-ratio", ha.max_radial_ratio);
  hfactor->add_option("--leakage-tol", ha.leakage_tol);
  hfactor->add_option("--artifact", ha.artifact, "Write Taylor coefficients of f, g, h");
  hfactor->add_option("--csv", ha.csv, "Write boundary samples of g as CSV");
  auto* houter = hardy->add_subcommand("outer", "Outer function from a log-modulus");
  add_hardy(houter);
  houter->add_option("--clamp", ha.clamp);
  houter->add_option("--modes", ha.modes);
  auto* hproject = hardy->add_subcommand("project", "Projection onto b H^2");
  add_hardy(hproject);
  hproject->add_option("--blaschke", ha.blaschke, "Real part of the Blaschke parameter");
  hproject->add_option("--blaschke-im", ha.blaschke_im);
  hproject->add_option("--inner", ha.inner, "Inner function: z or a grid file");

  TransferArgs ta;
  auto* transfer = app.add_subcommand("transfer", "Carry a disk factorization to the half-plane");
  add_common(transfer, ta.c);
  transfer->add_option("--artifact", ta.artifact)->required();
  transfer->add_option("--points", ta.points, "Half-plane points JSON");
  transfer->add_option("--count", ta.count);
  transfer->add_option("--h-mode", ta.h_mode)->check(CLI::IsMember({"quotient", "taylor"}));
  transfer->add_option("--tol", ta.tol);

  SuiteArgs sa;
  auto* suite = app.add_subcommand("suite", "Run the acceptance battery");
  add_common(suite, sa.c);
  suite->add_option("--only", sa.only, "Criterion ids to run")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*witness) return cmd_witness(wa, out);
    if (*olympiad) return cmd_olympiad(oa, out);
    if (*bezout) return cmd_bezout(ba, out);
    if (*ulim) return cmd_ulim(ua, out);
    if (*layered) return cmd_layered(la, out);
    if (*hfactor) return cmd_hardy_factor(ha, out);
    if (*houter) return cmd_hardy_outer(ha, out);
    if (*hproject) return cmd_hardy_project(ha, out);
    if (*transfer) return cmd_transfer(ta, out);
    if (*suite) return cmd_suite(sa, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"flatwitness"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace flatwitness::cli
