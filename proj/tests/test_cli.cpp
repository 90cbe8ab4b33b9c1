#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "skeinrep/io.hpp"
#include "skeinrep/mcg_rep.hpp"

using namespace skeinrep;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = {}) {
  const std::string cmd = env + (env.empty() ? "" : " ") + SKEINREP_CLI + std::string(" ") + args + " 2>&1";
  Run res;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) res.out.append(buf, n);
  const int st = pclose(p);
  res.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return res;
}

std::filesystem::path scratch(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "skeinrep_cli_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << content;
  return path;
}

const char* kHopf44 =
    "R 7\n"
    "FRAMING 0 0\n"
    "CUP 0 4\n"
    "CUP 2 4\n"
    "X+ 1\n"
    "X+ 1\n"
    "CAP 0\n"
    "CAP 0\n";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("irr at r = 5, genus 1") {
  const auto r = run("irr --r 5 --genus 1");
  CHECK(r.status == 0);
  CHECK(r.out.find("commutant dimension: 1") != std::string::npos);
  CHECK(r.out.find("verdict: irreducible") != std::string::npos);
  const auto j = run("irr --r 5 --genus 1 --format json");
  const json rep = json::parse(j.out);
  CHECK(rep["commutant_dimension"] == 1);
  CHECK(rep["irreducible"] == true);
}

TEST_CASE("basis at r = 5, genus 2") {
  const auto r = run("basis --r 5 --genus 2 --format json");
  CHECK(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["dimension"] == 20);
  CHECK(j["labelings"].size() == 20);
  CHECK(run("basis --r 5 --genus 2").out.find("20 labelings") != std::string::npos);
}

TEST_CASE("eval of the empty diagram") {
  const auto path = scratch("empty.diag", "");
  const auto r = run("eval --file " + path.string());
  CHECK(r.status == 0);
  CHECK(r.out == "1\n");
}

TEST_CASE("eval engines agree and report JSON") {
  const auto path = scratch("hopf44.diag", kHopf44);
  const json a = json::parse(run("eval --format json --engine accel --file " + path.string()).out);
  const json n = json::parse(run("eval --format json --engine naive --file " + path.string()).out);
  CHECK(scalar_from_json(a["value"]) == scalar_from_json(n["value"]));
  CHECK(a["r"] == 7);
}

TEST_CASE("rep output round trips through the serializers") {
  const auto r = run("rep --r 5 --genus 1 --format json");
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  REQUIRE(j["matrices"].size() == 2);
  const auto gens = generator_matrices(1, Level(5));
  CHECK(j["matrices"][0]["curve"] == "meridian");
  CHECK(matrix_from_json(j["matrices"][0]["exact"]) == gens[0]);
  CHECK(matrix_from_json(j["matrices"][1]["exact"]) == gens[1]);
}

TEST_CASE("rep with a curve file") {
  GraphDiagram bare = curve_insertion(CurveSpec::named("longitude"), 1, Level(3));
  bare.framings.clear();
  bare.weights.clear();
  const auto path = scratch("longitude.diag", format_diagram(bare));
  const auto r = run("rep --r 3 --genus 1 --format json --curve " + path.string());
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  const auto gens = generator_matrices(1, Level(3));
  CHECK(matrix_from_json(j["matrices"][0]["exact"]) == gens[1]);
}

TEST_CASE("tables") {
  const auto r = run("tables --r 3");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("table,a,b,c,exact,numeric\n", 0) == 0);
  CHECK(r.out.find("theta,0,1,1,") != std::string::npos);
  const json j = json::parse(run("tables --r 5 --format json").out);
  CHECK(j["delta"].size() == 4);
  CHECK(scalar_from_json(j["delta"][3]["exact"]) == CycloScalar(-1));
}

TEST_CASE("invariants at r = 6") {
  const json j = json::parse(run("invariants --r 6 --format json").out);
  bool non_diagonal = false;
  for (const auto& z : j["invariants"]) non_diagonal |= z["diagonal"] == false;
  CHECK(non_diagonal);
  CHECK(j["commutant_dimension"] == 2);
}

TEST_CASE("check suite") {
  const auto r = run("check --r 3 --genus 2 --samples 10");
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("checks passed") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const auto a = run("rep --r 5 --genus 1 --format json");
  const auto b = run("rep --r 5 --genus 1 --format json");
  CHECK(a.out == b.out);
  const auto out = std::filesystem::temp_directory_path() / "skeinrep_cli_tests" / "tables.csv";
  CHECK(run("tables --r 7 --output " + out.string()).status == 0);
  std::ifstream f(out);
  const std::string file((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(file == run("tables --r 7").out);
}

TEST_CASE("invalid input exits with 1") {
  CHECK(run("irr --r 2").status == 1);
  CHECK(run("frobnicate").status == 1);
  CHECK(run("basis --genus 4").status == 1);
  CHECK(run("rep --r 5 --curve nowhere").status == 1);
  CHECK(run("eval --file /nonexistent/x.diag").status == 1);
  const auto bad = scratch("bad.diag", "CUP 0 1\nCAP 1\n");
  const auto r = run("eval --file " + bad.string());
  CHECK(r.status == 1);
  CHECK(r.out.find("skeinrep: diagram:") != std::string::npos);
  CHECK(run("--help").status == 0);
}

TEST_CASE("resource limits exit with 2") {
  const auto path = scratch("hopf44.diag", kHopf44);
  const auto r = run("eval --engine naive --budget 5 --file " + path.string());
  CHECK(r.status == 2);
  CHECK(r.out.find("skeinrep: engine:") != std::string::npos);
  CHECK(run("eval --engine naive --file " + path.string(), "SKEINREP_BUDGET=5").status == 2);
  // an explicit flag takes precedence over the environment
  CHECK(run("eval --engine naive --budget 100000 --file " + path.string(), "SKEINREP_BUDGET=5").status == 0);
  CHECK(run("eval --file " + path.string(), "SKEINREP_BUDGET=zero").status == 1);
}

}  // TEST_SUITE
