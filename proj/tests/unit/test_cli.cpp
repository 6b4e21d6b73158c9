#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "p1z/cli.hpp"

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;

  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Outcome o;
  o.code = p1z::cli::run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("classify") {
  const auto o = run({"classify", "--a", "2", "--b", "2"});
  REQUIRE(o.code == p1z::cli::kExitOk);
  const auto j = o.json();
  CHECK(j["schema_version"] == "1");
  CHECK(j["command"] == "classify");
  CHECK(j["params"]["a"] == "2");
  CHECK(j["payload"]["class"] == "Ample");
  CHECK(j["payload"]["nef"] == true);
  CHECK(j["diagnostics"].is_array());
}

TEST_CASE("rational parameters are echoed verbatim and decided exactly") {
  const auto o = run({"classify", "--a", "2/3", "--b", "1/3"});
  REQUIRE(o.code == 0);
  const auto j = o.json();
  CHECK(j["params"]["a"] == "2/3");
  CHECK(j["params"]["b"] == "1/3");
  CHECK(j["payload"]["class"] == "PseudoEffectiveBoundary");
  CHECK(j["payload"]["exact"] == true);
}

TEST_CASE("volume") {
  auto j = run({"volume", "--a", "1", "--b", "1", "--method", "closed"}).json();
  CHECK(j["payload"]["value"].get<double>() == doctest::Approx(0.5));
  j = run({"volume", "--a", "2", "--b", "2", "--method", "lattice", "--n", "400"}).json();
  CHECK(j["payload"]["lower"].get<double>() <= j["payload"]["closed"].get<double>());
  CHECK(j["payload"]["closed"].get<double>() <= j["payload"]["upper"].get<double>());
  CHECK(run({"volume", "--a", "1", "--b", "1", "--method", "guess"}).code == p1z::cli::kExitUsage);
}

TEST_CASE("theta") {
  const auto j = run({"theta", "--a", "0.3", "--b", "0.3"}).json();
  CHECK(j["payload"]["kind"] == "Empty");
  CHECK(j["payload"]["lower"].is_null());
}

TEST_CASE("zariski of a non pseudo-effective divisor is a domain error") {
  const auto o = run({"zariski", "--a", "0.3", "--b", "0.3"});
  CHECK(o.code == p1z::cli::kExitDomain);
  const auto j = o.json();
  CHECK(j["payload"].is_null());
  REQUIRE(j["diagnostics"].size() >= 1);
}

TEST_CASE("zariski json") {
  const auto o = run({"zariski", "--a", "0.6", "--b", "0.6", "--samples", "50"});
  REQUIRE(o.code == 0);
  const auto j = o.json();
  CHECK(j["payload"]["exists"] == true);
  CHECK(j["payload"]["positive"]["pieces"].size() == 3);
  CHECK(j["payload"]["nef_witness"]["passed"] == true);
  CHECK(j["payload"]["profile"].size() == 50);
  const auto nef = run({"zariski", "--a", "2", "--b", "2"}).json();
  CHECK(nef["payload"]["breakpoints"]["r_out"] == "inf");
}

TEST_CASE("zariski csv profile") {
  const auto o = run({"zariski", "--a", "0.6", "--b", "0.6", "--format", "csv", "--samples", "100",
                      "--rmin", "0.01", "--rmax", "100"});
  REQUIRE(o.code == 0);
  const auto lines = split_lines(o.out);
  REQUIRE(lines.size() == 101);
  CHECK(lines[0] == "radius,p,g,neg");
  double prev = 0.0;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    std::istringstream row(lines[k]);
    std::string cell;
    std::vector<double> v;
    while (std::getline(row, cell, ',')) v.push_back(std::stod(cell));
    REQUIRE(v.size() == 4);
    CHECK(v[0] > prev);
    prev = v[0];
    CHECK(v[3] >= -1e-12);
  }
}

TEST_CASE("csv is only accepted for zariski") {
  CHECK(run({"classify", "--a", "2", "--b", "2", "--format", "csv"}).code == p1z::cli::kExitUsage);
  CHECK(run({"volume", "--a", "2", "--b", "2", "--format", "csv"}).code == p1z::cli::kExitUsage);
  CHECK(run({"classify", "--a", "2", "--b", "2", "--format", "xml"}).code == p1z::cli::kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({"classify", "--a", "2", "--b", "2", "--bogus"}).code == p1z::cli::kExitUsage);
  CHECK(run({}).code == p1z::cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == p1z::cli::kExitUsage);
  CHECK(run({"sections", "--a", "2", "--b", "2"}).code == p1z::cli::kExitUsage);
}

TEST_CASE("invalid parameter values") {
  const auto o = run({"classify", "--a", "-1", "--b", "2"});
  CHECK((o.code == p1z::cli::kExitDomain || o.code == p1z::cli::kExitUsage));
  CHECK(run({"classify", "--a", "1/0", "--b", "2"}).code != 0);
}

TEST_CASE("sections") {
  auto j = run({"sections", "--a", "1/2", "--b", "1/2", "--n", "2", "--enumerate", "sup"}).json();
  CHECK(j["payload"]["h0_nonzero"] == true);
  CHECK(j["payload"]["enumeration"]["count"] == 3);
  j = run({"sections", "--a", "1/2", "--b", "1/2", "--n", "3", "--span"}).json();
  CHECK(j["payload"]["h0_nonzero"] == false);
  CHECK(j["payload"]["span"].empty());
}

TEST_CASE("construct-gap") {
  const auto o = run({"construct-gap", "--n", "2"});
  REQUIRE(o.code == 0);
  const auto j = o.json();
  CHECK(j["params"]["n"] == 2);
  CHECK(j["payload"]["base_a"] == "2/3");
  CHECK(j["payload"]["base_b"] == "1/3");
  CHECK(j["payload"]["class"] == "BigNotNef");
  CHECK(j["payload"]["no_small_sections"] == true);
  CHECK(j["payload"]["theta_inside"] == true);
}

TEST_CASE("lattice volume below the first usable level reports it") {
  const auto gap = run({"construct-gap", "--n", "3"}).json();
  const std::string a = gap["payload"]["a"];
  const std::string b = gap["payload"]["b"];
  const auto o = run({"volume", "--a", a, "--b", b, "--method", "lattice", "--n", "2"});
  CHECK(o.code == p1z::cli::kExitDomain);
  const auto j = o.json();
  REQUIRE(j["diagnostics"].size() == 2);
  CHECK(j["diagnostics"][1].get<std::string>().find("smallest usable level") != std::string::npos);
}

TEST_CASE("verify") {
  const auto o = run({"verify", "--suite", "charfun"});
  CHECK(o.code == 0);
  const auto j = o.json();
  CHECK(j["params"].empty());
  CHECK(j["payload"]["passed"] == true);
  CHECK(run({"verify", "--suite", "nothing"}).code == p1z::cli::kExitUsage);
}

TEST_CASE("--out writes to a file") {
  const auto path = std::filesystem::temp_directory_path() / "p1z_cli_out_test.json";
  std::filesystem::remove(path);
  const auto o = run({"selfint", "--a", "1", "--b", "1", "--out", path.string()});
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  const auto j = nlohmann::json::parse(in);
  CHECK(j["payload"]["value"].get<double>() == doctest::Approx(0.5));
  std::filesystem::remove(path);
}
