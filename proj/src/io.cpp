#include "flatwitness/io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "flatwitness/errors.hpp"

namespace flatwitness::io {

namespace {

Complex parse_complex(const Json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw InvalidInput(fmt::format("expected a number or [re, im], got {}", v.dump()));
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidInput(fmt::format("missing field \"{}\"", key));
  return j.at(key);
}

std::uint64_t to_le(std::uint64_t v) {
  if constexpr (std::endian::native == std::endian::big) v = __builtin_bswap64(v);
  return v;
}

void put_u64(std::ostream& os, std::uint64_t v) {
  v = to_le(v);
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

std::uint64_t get_u64(std::istream& is) {
  std::uint64_t v = 0;
  if (!is.read(reinterpret_cast<char*>(&v), sizeof v))
    throw InvalidInput("truncated binary grid file");
  return to_le(v);
}

}  // namespace

Json complex_array(std::span<const Complex> values) {
  Json out = Json::array();
  for (Complex z : values) out.push_back({z.real(), z.imag()});
  return out;
}

std::vector<Complex> parse_complex_array(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of complex numbers");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(parse_complex(v));
  return out;
}

std::vector<double> parse_real_array(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of real numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (v.is_number())
      out.push_back(v.get<double>());
    else if (v.is_string() && v.get<std::string>() == "-inf")
      out.push_back(-std::numeric_limits<double>::infinity());
    else
      throw InvalidInput(fmt::format("expected a real number, got {}", v.dump()));
  }
  return out;
}

void write_csv(std::ostream& os, std::span<const Complex> values) {
  os << "index,re,im\n";
  for (std::size_t i = 0; i < values.size(); ++i)
    os << fmt::format("{},{:.17g},{:.17g}\n", i, values[i].real(), values[i].imag());
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput(fmt::format("cannot open {}", path.string()));
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(fmt::format("{}: {}", path.string(), e.what()));
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput(fmt::format("cannot write {}", path.string()));
  out << text;
}

PointwiseRelation relation_from_json(const Json& j) {
  PointwiseRelation rel;
  const Json& r = member(j, "r");
  const Json& m = member(j, "m");
  if (!r.is_array() || !m.is_array() || r.size() != m.size())
    throw InvalidInput("r and m must be arrays of equal length");
  rel.points = r.size();
  rel.n = rel.points ? parse_complex_array(r[0]).size() : 0;
  for (std::size_t x = 0; x < rel.points; ++x) {
    auto rr = parse_complex_array(r[x]);
    auto mm = parse_complex_array(m[x]);
    if (rr.size() != rel.n || mm.size() != rel.n)
      throw InvalidInput(fmt::format("row {} does not have {} entries", x, rel.n));
    rel.r.insert(rel.r.end(), rr.begin(), rr.end());
    rel.m.insert(rel.m.end(), mm.begin(), mm.end());
  }
  if (j.contains("weights"))
    rel.weights = parse_real_array(j.at("weights"));
  else
    rel.weights.assign(rel.points, 1.0);
  rel.validate();
  return rel;
}

Json relation_to_json(const PointwiseRelation& rel) {
  Json r = Json::array(), m = Json::array();
  for (std::size_t x = 0; x < rel.points; ++x) {
    r.push_back(complex_array(rel.r_row(x)));
    m.push_back(complex_array(rel.m_row(x)));
  }
  return {{"weights", rel.weights}, {"r", r}, {"m", m}};
}

Json certificate_to_json(const WitnessCertificate& cert) {
  Json rho = Json::array(), mu = Json::array();
  for (std::size_t x = 0; x < cert.points; ++x) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < cert.n; ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < cert.k; ++j) {
        const Complex z = cert.rho_at(x, i, j);
        row.push_back({z.real(), z.imag()});
      }
      rows.push_back(row);
    }
    rho.push_back(rows);
    mu.push_back(complex_array({cert.mu.data() + x * cert.k, cert.k}));
  }
  return {{"n", cert.n}, {"k", cert.k}, {"points", cert.points}, {"rho", rho}, {"mu", mu}};
}

SampledFunction sampled_function_from_json(const Json& j) {
  SampledFunction f;
  f.values = parse_complex_array(member(j, "values"));
  if (j.contains("weights"))
    f.weights = parse_real_array(j.at("weights"));
  else
    f.weights.assign(f.values.size(), 1.0);
  f.validate();
  return f;
}

Json sampled_function_to_json(const SampledFunction& f) {
  return {{"values", complex_array(f.values)}, {"weights", f.weights}};
}

LayeredSpace layered_space_from_json(const Json& j) {
  LayeredSpace space;
  for (const auto& s : member(j, "shells")) {
    Shell shell;
    shell.index = member(s, "n").get<std::size_t>();
    for (const auto& a : member(s, "atoms"))
      shell.atoms.push_back({member(a, "id").get<std::size_t>(), member(a, "weight").get<double>()});
    space.shells.push_back(std::move(shell));
  }
  space.validate();
  return space;
}

Json layered_space_to_json(const LayeredSpace& space) {
  Json shells = Json::array();
  for (const Shell& s : space.shells) {
    Json atoms = Json::array();
    for (const Atom& a : s.atoms) atoms.push_back({{"id", a.id}, {"weight", a.weight}});
    shells.push_back({{"n", s.index}, {"atoms", atoms}});
  }
  return {{"shells", shells}};
}

void write_grid_binary(std::ostream& os, const GridFunction& f) {
  put_u64(os, f.size());
  for (Complex z : f.samples()) {
    put_u64(os, std::bit_cast<std::uint64_t>(z.real()));
    put_u64(os, std::bit_cast<std::uint64_t>(z.imag()));
  }
}

GridFunction read_grid_binary(std::istream& is) {
  const std::uint64_t n = get_u64(is);
  if (n > (std::uint64_t{1} << 30)) throw InvalidInput("binary grid header is implausibly large");
  std::vector<Complex> s(n);
  for (auto& z : s) {
    const double re = std::bit_cast<double>(get_u64(is));
    const double im = std::bit_cast<double>(get_u64(is));
    z = {re, im};
  }
  return GridFunction(std::move(s));
}

GridFunction grid_from_json(const Json& j) {
  return GridFunction(parse_complex_array(j.is_array() ? j : member(j, "samples")));
}

Json grid_to_json(const GridFunction& f) { return {{"samples", complex_array(f.samples())}}; }

GridFunction read_grid_file(const std::filesystem::path& path) {
  if (path.extension() == ".bin") {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput(fmt::format("cannot open {}", path.string()));
    return read_grid_binary(in);
  }
  return grid_from_json(read_json_file(path));
}

std::vector<Complex> points_from_json(const Json& j) {
  return parse_complex_array(j.is_array() ? j : member(j, "points"));
}

Json disk_artifact_to_json(const DiskArtifact& a) {
  Json out = {{"f_taylor", complex_array(a.f_taylor)}, {"g_taylor", complex_array(a.g_taylor)}};
  if (!a.h_taylor.empty()) out["h_taylor"] = complex_array(a.h_taylor);
  return out;
}

DiskArtifact disk_artifact_from_json(const Json& j) {
  DiskArtifact a;
  a.f_taylor = parse_complex_array(member(j, "f_taylor"));
  a.g_taylor = parse_complex_array(member(j, "g_taylor"));
  if (j.contains("h_taylor")) a.h_taylor = parse_complex_array(j.at("h_taylor"));
  if (a.f_taylor.empty() || a.g_taylor.empty()) throw InvalidInput("empty Taylor series");
  return a;
}

}  // namespace flatwitness::io
