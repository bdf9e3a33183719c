#include "flatwitness/layered.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "flatwitness/errors.hpp"

namespace flatwitness {

namespace {

constexpr double kRootFloor = 1e-300;

}  // namespace

std::size_t LayeredSpace::atom_count() const {
  std::size_t count = 0;
  for (const Shell& s : shells) count += s.atoms.size();
  return count;
}

void LayeredSpace::validate() const {
  if (shells.empty()) throw InvalidInput("layered space has no shells");
  const std::size_t count = atom_count();
  std::vector<bool> seen(count, false);
  for (std::size_t n = 0; n < shells.size(); ++n) {
    const Shell& s = shells[n];
    if (s.index != n + 1)
      throw InvalidInput(fmt::format("shell indices must be 1, 2, ...; got {} at position {}",
                                     s.index, n + 1));
    double measure = 0.0;
    for (const Atom& a : s.atoms) {
      if (a.id >= count || seen[a.id])
        throw InvalidInput(fmt::format("atom id {} is out of range or repeated", a.id));
      if (!std::isfinite(a.weight) || a.weight <= 0.0)
        throw InvalidInput(fmt::format("atom {} needs a positive weight", a.id));
      seen[a.id] = true;
      measure += a.weight;
    }
    if (!(measure > 0.0))
      throw InvalidInput(fmt::format("shell {} has zero measure", s.index));
  }
}

std::vector<double> LayeredSpace::weights() const {
  std::vector<double> w(atom_count(), 0.0);
  for (const Shell& s : shells)
    for (const Atom& a : s.atoms) w.at(a.id) = a.weight;
  return w;
}

std::vector<std::size_t> LayeredSpace::shell_of() const {
  std::vector<std::size_t> of(atom_count(), 0);
  for (const Shell& s : shells)
    for (const Atom& a : s.atoms) of.at(a.id) = s.index;
  return of;
}

SampledFunction LayeredSpace::sample(std::vector<Complex> values) const {
  if (values.size() != atom_count())
    throw InvalidInput(fmt::format("expected {} atom values, got {}", atom_count(), values.size()));
  return {std::move(values), weights()};
}

namespace {

void check_on_layout(const SampledFunction& f, const LayeredSpace& layout) {
  layout.validate();
  f.validate();
  if (f.size() != layout.atom_count())
    throw InvalidInput(fmt::format("function has {} values, layout has {} atoms", f.size(),
                                   layout.atom_count()));
  for (const Shell& s : layout.shells)
    for (const Atom& a : s.atoms)
      if (f.weights[a.id] != a.weight)
        throw InvalidInput(fmt::format("atom {} weight differs between f and layout", a.id));
}

}  // namespace

TailProfile shell_energies(const SampledFunction& f, const LayeredSpace& layout,
                           std::optional<GeometricTail> tail, Execution exec) {
  check_on_layout(f, layout);
  std::vector<double> energy(layout.shells.size(), 0.0);
  for_each_index(layout.shells.size(), exec, [&](std::size_t n) {
    double s = 0.0;
    for (const Atom& a : layout.shells[n].atoms) s += a.weight * std::norm(f.values[a.id]);
    energy[n] = s;
  });
  return TailProfile::from_squares(std::move(energy), tail);
}

ShellWeights build_weight(const TailProfile& profile, WeightMode mode) {
  const std::size_t shells = profile.size();
  if (shells == 0) throw InvalidInput("no shells");
  ShellWeights out;
  out.omega.assign(shells, 1.0);

  bool compact = mode == WeightMode::compact;
  if (mode == WeightMode::automatic) compact = shells >= 2 && profile.r(shells - 1) == 0.0;
  out.compact_branch = compact;

  for (std::size_t n = 2; n <= shells; ++n) {
    if (compact) {
      out.omega[n - 1] = static_cast<double>(n);
      continue;
    }
    double r = profile.r(n - 1);
    if (r <= 0.0)
      throw DegenerateTail(fmt::format(
          "r_{} = 0: f vanishes beyond shell {}, use the compact branch", n - 1, n - 1));
    if (r < kRootFloor) {
      r = kRootFloor;
      ++out.clamped;
    }
    out.omega[n - 1] = 1.0 / std::pow(r, 0.25);
  }
  return out;
}

FactorizationResult factor(const SampledFunction& f, const LayeredSpace& layout,
                           const LayeredOptions& options) {
  FactorizationResult res;
  res.profile = shell_energies(f, layout, options.tail, options.execution);
  const ShellWeights weights = build_weight(res.profile, options.mode);
  res.w_values = weights.omega;
  res.compact_branch = weights.compact_branch;
  res.clamped = weights.clamped;

  const auto shell_of = layout.shell_of();
  const std::size_t count = f.size();
  res.g = {std::vector<Complex>(count), f.weights};
  res.h = {std::vector<Complex>(count), f.weights};
  for_each_index(count, options.execution, [&](std::size_t x) {
    const double w = res.w_values[shell_of[x] - 1];
    res.g.values[x] = 1.0 / w;
    res.h.values[x] = f.values[x] * w;
  });

  double residual_sq = 0.0;
  for (std::size_t x = 0; x < count; ++x) {
    const double wt = f.weights[x];
    residual_sq += wt * std::norm(f.values[x] - res.g.values[x].real() * res.h.values[x]);
    res.f_norm_sq += wt * std::norm(f.values[x]);
    res.h_norm_sq += wt * std::norm(res.h.values[x]);
  }
  res.residual = std::sqrt(residual_sq);

  const std::size_t shells = res.profile.size();
  if (res.compact_branch) {
    std::size_t last = 1;
    for (std::size_t n = 1; n <= shells; ++n)
      if (res.profile.a_sq(n) > 0.0) last = n;
    res.star_bound = static_cast<double>(last * last) * res.f_norm_sq;
  } else {
    res.star_bound =
        res.f_norm_sq + (shells >= 2 ? olympiad_weighted_sum(res.profile, 1, shells) : 0.0);
  }
  return res;
}

StarReport verify_star_bound(const FactorizationResult& result, const TailProfile& profile) {
  const std::size_t shells = profile.size();
  if (result.w_values.size() != shells)
    throw InvalidInput("weights and profile have different shell counts");
  StarReport rep;
  for (std::size_t n = 1; n <= shells; ++n) {
    const double w = result.w_values[n - 1];
    rep.lhs += w * w * profile.a_sq(n);
  }
  if (result.compact_branch) {
    rep.rhs = result.star_bound;
  } else {
    if (shells >= 2) {
      rep.olympiad_sum = olympiad_weighted_sum(profile, 1, shells);
      rep.olympiad_certificate =
          2.0 * (std::sqrt(profile.r(1)) - std::sqrt(profile.r(shells)));
    }
    double f_norm_sq = 0.0;
    for (std::size_t n = 1; n <= shells; ++n) f_norm_sq += profile.a_sq(n);
    rep.rhs = f_norm_sq + rep.olympiad_sum;
  }
  rep.tolerance = 1e-10 * (1.0 + rep.rhs);
  rep.holds = rep.lhs <= rep.rhs + rep.tolerance &&
              rep.olympiad_sum <= rep.olympiad_certificate + rep.tolerance;
  return rep;
}

LayeredPreset make_l2_preset(std::size_t shells, double ratio) {
  if (shells == 0) throw InvalidInput("need at least one shell");
  if (!(ratio > 0.0 && ratio < 1.0)) throw InvalidInput("geometric ratio must lie in (0, 1)");
  LayeredPreset p;
  p.name = "l2";
  std::vector<Complex> values(shells);
  for (std::size_t k = 1; k <= shells; ++k) {
    p.layout.shells.push_back({k, {{k - 1, 1.0}}});
    values[k - 1] = std::pow(ratio, 0.5 * static_cast<double>(k));
  }
  p.f = p.layout.sample(std::move(values));
  p.tail = GeometricTail{std::pow(ratio, static_cast<double>(shells + 1)), ratio};
  return p;
}

namespace {

/// Midpoint atoms on [lo, hi) and on its mirror image (-hi, -lo].
void add_symmetric_atoms(Shell& shell, std::vector<Complex>& values, double lo, double hi,
                         std::size_t per_side, double (*fn)(double)) {
  const double width = (hi - lo) / static_cast<double>(per_side);
  for (double sign : {-1.0, 1.0}) {
    for (std::size_t j = 0; j < per_side; ++j) {
      const double x = sign * (lo + (static_cast<double>(j) + 0.5) * width);
      shell.atoms.push_back({values.size(), width});
      values.emplace_back(fn(x));
    }
  }
}

std::size_t atoms_per_side(std::size_t atoms_per_shell) {
  if (atoms_per_shell < 2 || atoms_per_shell % 2 != 0)
    throw InvalidInput("atoms per shell must be even and >= 2 (split across both sides)");
  return atoms_per_shell / 2;
}

}  // namespace

LayeredPreset make_lebesgue_r_preset(std::size_t shells, std::size_t atoms_per_shell) {
  if (shells == 0) throw InvalidInput("need at least one shell");
  const std::size_t per_side = atoms_per_side(atoms_per_shell);
  LayeredPreset p;
  p.name = "lebesgue-r";
  std::vector<Complex> values;
  for (std::size_t n = 1; n <= shells; ++n) {
    Shell s{n, {}};
    add_symmetric_atoms(s, values, static_cast<double>(n - 1), static_cast<double>(n), per_side,
                        [](double x) { return 1.0 / (1.0 + std::abs(x)); });
    p.layout.shells.push_back(std::move(s));
  }
  p.f = p.layout.sample(std::move(values));
  return p;
}

LayeredPreset make_circle_preset(std::size_t shells, std::size_t atoms_per_shell) {
  if (shells == 0) throw InvalidInput("need at least one shell");
  const std::size_t per_side = atoms_per_side(atoms_per_shell);
  LayeredPreset p;
  p.name = "circle";
  std::vector<Complex> values;
  for (std::size_t n = 1; n <= shells; ++n) {
    const double lo = 1.0 / static_cast<double>(n);
    const double hi = n == 1 ? std::numbers::pi : 1.0 / static_cast<double>(n - 1);
    Shell s{n, {}};
    add_symmetric_atoms(s, values, lo, hi, per_side,
                        [](double t) { return std::pow(std::abs(t), -0.25); });
    p.layout.shells.push_back(std::move(s));
  }
  p.f = p.layout.sample(std::move(values));
  return p;
}

LayeredPreset make_preset(const std::string& name, std::size_t shells,
                          std::size_t atoms_per_shell, double ratio) {
  if (name == "l2") return make_l2_preset(shells, ratio);
  if (name == "lebesgue-r") return make_lebesgue_r_preset(shells, atoms_per_shell);
  if (name == "circle") return make_circle_preset(shells, atoms_per_shell);
  throw InvalidInput(fmt::format("unknown preset '{}' (l2, lebesgue-r, circle)", name));
}

}  // namespace flatwitness
