#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "flatwitness/bezout.hpp"
#include "flatwitness/parallel.hpp"
#include "flatwitness/seq_core.hpp"

namespace flatwitness {

struct Atom {
  std::size_t id = 0;
  double weight = 0.0;
};

/// U_n \ U_{n-1} as a list of weighted atoms.
struct Shell {
  std::size_t index = 0;
  std::vector<Atom> atoms;
};

/// An exhaustion U_1 c U_2 c ... recorded through its shells. Atom ids are
/// dense in [0, atom_count) and each appears in exactly one shell.
struct LayeredSpace {
  std::vector<Shell> shells;

  std::size_t atom_count() const;
  /// Throws InvalidInput unless shells are numbered 1, 2, ... with positive
  /// measure and the atom ids form a partition of [0, atom_count).
  void validate() const;
  /// Atom weights indexed by id.
  std::vector<double> weights() const;
  /// Shell number of every atom, indexed by id.
  std::vector<std::size_t> shell_of() const;
  /// Wraps values indexed by atom id into a sampled function on this space.
  SampledFunction sample(std::vector<Complex> values) const;
};

enum class WeightMode { automatic, compact, general };

struct ShellWeights {
  std::vector<double> omega;  ///< omega_n for n = 1..N at [n-1]
  bool compact_branch = false;
  std::size_t clamped = 0;    ///< suffix sums raised to the 1e-300 floor
};

/// a_k^2 = integral of |f|^2 over shell k, with optional closed-form tail.
TailProfile shell_energies(const SampledFunction& f, const LayeredSpace& layout,
                           std::optional<GeometricTail> tail = {},
                           Execution exec = Execution::parallel);

/// omega_1 = 1; omega_n = n on the compact branch, r_{n-1}^{-1/4} otherwise.
ShellWeights build_weight(const TailProfile& profile, WeightMode mode = WeightMode::automatic);

struct FactorizationResult {
  SampledFunction g;
  SampledFunction h;
  std::vector<double> w_values;
  double residual = 0.0;     ///< weighted ||f - g h||_2
  double f_norm_sq = 0.0;
  double h_norm_sq = 0.0;
  double star_bound = 0.0;   ///< majorant of ||h||_2^2
  bool compact_branch = false;
  std::size_t clamped = 0;
  TailProfile profile;
};

struct LayeredOptions {
  WeightMode mode = WeightMode::automatic;
  std::optional<GeometricTail> tail;
  Execution execution = Execution::parallel;
};

/// f = g h with g = 1/w shellwise constant and h = f w.
FactorizationResult factor(const SampledFunction& f, const LayeredSpace& layout,
                           const LayeredOptions& options = {});

struct StarReport {
  double lhs = 0.0;          ///< sum_n omega_n^2 a_n^2
  double rhs = 0.0;
  double tolerance = 0.0;
  double olympiad_sum = 0.0;
  double olympiad_certificate = 0.0;  ///< 2 (sqrt r_1 - sqrt r_N)
  bool holds = false;
};

/// Recomputes integral |f|^2 w^2 shell by shell against its majorant.
StarReport verify_star_bound(const FactorizationResult& result, const TailProfile& profile);

struct LayeredPreset {
  std::string name;
  LayeredSpace layout;
  SampledFunction f;
  std::optional<GeometricTail> tail;
};

/// N with counting measure, f_k = ratio^{k/2}, exact geometric tail.
LayeredPreset make_l2_preset(std::size_t shells, double ratio);
/// R with Lebesgue measure, U_n = (-n, n), f(x) = 1/(1+|x|), midpoint atoms.
LayeredPreset make_lebesgue_r_preset(std::size_t shells, std::size_t atoms_per_shell);
/// The circle with arc measure, U_n = {1/n < |theta| <= pi}, f = |theta|^{-1/4}.
LayeredPreset make_circle_preset(std::size_t shells, std::size_t atoms_per_shell);

LayeredPreset make_preset(const std::string& name, std::size_t shells,
                          std::size_t atoms_per_shell, double ratio);

}  // namespace flatwitness
