#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "flatwitness/cli.hpp"
#include "flatwitness/errors.hpp"
#include "flatwitness/io.hpp"

namespace fw = flatwitness;
namespace io = flatwitness::io;
using fw::Complex;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "flatwitness_test_io_cli";
  std::filesystem::create_directories(dir);
  return dir / name;
}

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = fw::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string("\"") + FLATWITNESS_CLI_PATH + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

io::Json strip_time(io::Json j) {
  j.erase("wall_time");
  return j;
}

}  // namespace

TEST_CASE("complex arrays accept pairs and plain reals") {
  const std::vector<Complex> v{{1.5, -2.0}, {0.0, 0.25}, {3.0, 0.0}};
  CHECK(io::parse_complex_array(io::complex_array(v)) == v);
  const auto mixed = io::parse_complex_array(io::Json::parse("[1, [2, 3]]"));
  CHECK(mixed == std::vector<Complex>{{1, 0}, {2, 3}});
  const auto reals = io::parse_real_array(io::Json::parse(R"([0.5, "-inf"])"));
  CHECK(reals[0] == 0.5);
  CHECK(std::isinf(reals[1]));
  CHECK(reals[1] < 0);
}

TEST_CASE("csv has a header and round-trippable digits") {
  std::ostringstream os;
  const std::vector<Complex> v{{0.1, -1.0 / 3.0}};
  io::write_csv(os, v);
  std::istringstream is(os.str());
  std::string header, row;
  std::getline(is, header);
  std::getline(is, row);
  CHECK(header == "index,re,im");
  double re = 0, im = 0;
  CHECK(std::sscanf(row.c_str(), "0,%lf,%lf", &re, &im) == 2);
  CHECK(re == 0.1);
  CHECK(im == -1.0 / 3.0);
}

TEST_CASE("relation json round trip") {
  fw::PointwiseRelation rel;
  rel.n = 2;
  rel.points = 2;
  rel.weights = {0.5, 1.5};
  rel.r = {{1, 0}, {0, 1}, {0, 0}, {2, -1}};
  rel.m = {{0, 0}, {0, 0}, {1, 1}, {0, 0}};
  const auto back = io::relation_from_json(io::relation_to_json(rel));
  CHECK(back.n == 2);
  CHECK(back.points == 2);
  CHECK(back.weights == rel.weights);
  CHECK(back.r == rel.r);
  CHECK(back.m == rel.m);
}

TEST_CASE("sampled function and layered space round trips") {
  fw::SampledFunction f{{{1, 2}, {-0.5, 0}}, {0.25, 4.0}};
  const auto g = io::sampled_function_from_json(io::sampled_function_to_json(f));
  CHECK(g.values == f.values);
  CHECK(g.weights == f.weights);

  const auto defaulted = io::sampled_function_from_json(io::Json::parse(R"({"values": [1, 2]})"));
  CHECK(defaulted.weights == std::vector<double>{1.0, 1.0});

  fw::LayeredSpace s;
  s.shells = {{1, {{0, 1.0}}}, {2, {{1, 0.5}, {2, 0.25}}}};
  const auto t = io::layered_space_from_json(io::layered_space_to_json(s));
  REQUIRE(t.shells.size() == 2);
  CHECK(t.shells[1].index == 2);
  CHECK(t.shells[1].atoms[1].id == 2);
  CHECK(t.shells[1].atoms[1].weight == 0.25);
}

TEST_CASE("grid binary is little-endian with an 8-byte count") {
  const fw::GridFunction f = fw::GridFunction::from_theta(8, [](double t) { return std::polar(1.0, 3 * t); });
  std::ostringstream os(std::ios::binary);
  io::write_grid_binary(os, f);
  const std::string bytes = os.str();
  REQUIRE(bytes.size() == 8 + 8 * 16);
  std::uint64_t n = 0;
  for (int b = 7; b >= 0; --b) n = (n << 8) | static_cast<unsigned char>(bytes[b]);
  CHECK(n == 8);

  std::istringstream is(bytes, std::ios::binary);
  const auto g = io::read_grid_binary(is);
  REQUIRE(g.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) CHECK(g.samples()[i] == f.samples()[i]);

  const auto path = scratch("grid.bin");
  std::ofstream(path, std::ios::binary) << bytes;
  CHECK(io::read_grid_file(path).samples()[3] == f.samples()[3]);

  const auto h = io::grid_from_json(io::grid_to_json(f));
  CHECK(h.samples()[5] == f.samples()[5]);
}

TEST_CASE("truncated grid binary is rejected") {
  std::istringstream is(std::string("\x04\0\0\0\0\0\0\0", 8) + std::string(20, '\0'), std::ios::binary);
  CHECK_THROWS_AS(io::read_grid_binary(is), fw::Error);
}

TEST_CASE("disk artifact round trip") {
  io::DiskArtifact a{{{1, 0}, {0.5, 0}}, {{0.5, 0}}, {}};
  const auto b = io::disk_artifact_from_json(io::disk_artifact_to_json(a));
  CHECK(b.f_taylor == a.f_taylor);
  CHECK(b.g_taylor == a.g_taylor);
  CHECK(b.h_taylor.empty());
}

TEST_CASE("cli usage errors exit 2") {
  CHECK(run_cli({"witness", "--no-such-flag"}).code == 2);
  CHECK(run_cli({"layered", "--preset", "nope"}).code == 2);
  CHECK(run_cli({"ulim"}).code == 2);
}

TEST_CASE("cli subcommands pass on their defaults") {
  CHECK(run_cli({"layered", "--preset", "l2", "--shells", "64", "--geometric", "0.5"}).code == 0);
  CHECK(run_cli({"witness", "--atoms", "500", "--n", "4"}).code == 0);
  CHECK(run_cli({"bezout", "--atoms", "500"}).code == 0);
  CHECK(run_cli({"olympiad", "--geometric", "0.5", "--shells", "64"}).code == 0);
  CHECK(run_cli({"hardy", "outer", "--input", "log-sine", "--grid", "4096"}).code == 0);
  CHECK(run_cli({"hardy", "project", "--grid", "4096", "--blaschke", "0.5"}).code == 0);
}

TEST_CASE("ulim reports an oscillating sequence as undecidable") {
  const auto path = scratch("alt.json");
  io::Json values = io::Json::array();
  for (int k = 1; k <= 2000; ++k) values.push_back(k % 2 ? -1.0 : 1.0);
  io::write_text_file(path, io::Json{{"values", values}}.dump());
  const auto r = run_cli({"ulim", "--input", path.string(), "--json"});
  CHECK(r.code == 0);
  const auto j = io::Json::parse(r.out);
  CHECK(j.at("values").at("membership_nonprincipal") == "Undecidable");
  CHECK(j.at("values").at("eventual_limit").is_null());
}

TEST_CASE("json output is deterministic apart from timing") {
  const std::vector<std::string> args{"witness", "--atoms", "300", "--n", "3", "--seed", "7", "--json"};
  const auto a = run_cli(args), b = run_cli(args);
  REQUIRE(a.code == 0);
  CHECK(strip_time(io::Json::parse(a.out)) == strip_time(io::Json::parse(b.out)));

  const auto out_path = scratch("bezout_report.json");
  CHECK(run_cli({"bezout", "--atoms", "100", "--out", out_path.string()}).code == 0);
  const auto rep = io::read_json_file(out_path);
  CHECK(rep.at("subcommand") == "bezout");
  CHECK(rep.at("pass") == true);
}

TEST_CASE("hardy factor artifact feeds transfer") {
  const auto artifact = scratch("factor.json");
  const auto csv = scratch("g.csv");
  const auto r = run_cli({"hardy", "factor", "--grid", "4096", "--input", "constant1", "--shells", "64",
                          "--leakage-tol", "1e-2", "--artifact", artifact.string(), "--csv", csv.string()});
  CHECK(r.code == 0);
  REQUIRE(std::filesystem::exists(artifact));
  CHECK(std::filesystem::file_size(csv) > 0);
  CHECK(run_cli({"transfer", "--artifact", artifact.string(), "--count", "50"}).code == 0);
}

TEST_CASE("bad input files exit 1") {
  const auto path = scratch("broken.json");
  io::write_text_file(path, "{ not json");
  const auto r = run_cli({"ulim", "--input", path.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("installed binary exit codes") {
  CHECK(run_binary("--help") == 0);
  CHECK(run_binary("witness --bogus") == 2);
  CHECK(run_binary("layered --preset l2 --shells 32") == 0);
}
