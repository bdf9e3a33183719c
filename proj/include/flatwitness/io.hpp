#pragma once

#include <complex>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "flatwitness/bezout.hpp"
#include "flatwitness/hardy.hpp"
#include "flatwitness/layered.hpp"
#include "flatwitness/witness.hpp"

namespace flatwitness::io {

using Json = nlohmann::ordered_json;

/// Complex arrays are [[re, im], ...]; plain real numbers are accepted on input.
Json complex_array(std::span<const Complex> values);
std::vector<Complex> parse_complex_array(const Json& j);
std::vector<double> parse_real_array(const Json& j);

/// index,re,im rows with a header line.
void write_csv(std::ostream& os, std::span<const Complex> values);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// {"weights": [...], "r": [[...], ...], "m": [[...], ...]}; r and m point-major.
PointwiseRelation relation_from_json(const Json& j);
Json relation_to_json(const PointwiseRelation& rel);
/// {"n", "k", "points", "rho": [[[...]]], "mu": [[...]]}
Json certificate_to_json(const WitnessCertificate& cert);

/// {"values": [...], "weights": [...]}; weights default to 1.
SampledFunction sampled_function_from_json(const Json& j);
Json sampled_function_to_json(const SampledFunction& f);

/// {"shells": [{"n": 1, "atoms": [{"id": 0, "weight": 1.0}]}]}
LayeredSpace layered_space_from_json(const Json& j);
Json layered_space_to_json(const LayeredSpace& space);

/// 8-byte little-endian N, then N interleaved little-endian f64 (re, im) pairs.
void write_grid_binary(std::ostream& os, const GridFunction& f);
GridFunction read_grid_binary(std::istream& is);
/// {"samples": [[re, im], ...]} or a bare array.
GridFunction grid_from_json(const Json& j);
Json grid_to_json(const GridFunction& f);
/// Picks binary or JSON by extension (.bin / .json).
GridFunction read_grid_file(const std::filesystem::path& path);

/// {"points": [[re, im], ...]} or a bare array.
std::vector<Complex> points_from_json(const Json& j);

/// Disk-side factorization: Taylor coefficients of f and g, optionally h.
struct DiskArtifact {
  std::vector<Complex> f_taylor;
  std::vector<Complex> g_taylor;
  std::vector<Complex> h_taylor;  ///< may be empty
};

Json disk_artifact_to_json(const DiskArtifact& a);
DiskArtifact disk_artifact_from_json(const Json& j);

}  // namespace flatwitness::io
