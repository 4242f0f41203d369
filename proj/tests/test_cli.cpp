// End-to-end tests of the command-line tool: spawns the built binary and
// checks output text, file artifacts and exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "golden_tables.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  const std::string cmd = std::string(GIESEKING_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CommandResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) {
      if (!field.empty() && field.front() == '"' && field.back() == '"')
        field = field.substr(1, field.size() - 2);
      fields.push_back(field);
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("solve emits the documented JSON schema") {
  const auto r = run_cli("solve --branch gies1 --k 2 --format json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  for (const char* key :
       {"branch", "k", "z_re", "z_im", "alpha1", "alpha2", "alpha3", "v_re", "v_im",
        "phi", "volume", "classification", "cone_angle"})
    CHECK(j.contains(key));
  CHECK(j["branch"] == "gies1");
  CHECK(j["k"] == 2);
  CHECK(std::abs(j["volume"].get<double>() - 0.696701139104) < 1e-9);
  CHECK(j["classification"] == "orbifold");
}

TEST_CASE("solve gies4 matches the half-turn partner volume") {
  const auto r = run_cli("solve --branch gies4 --k 3 --format json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(std::abs(j["volume"].get<double>() - 0.865129197896) < 1e-9);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("solve --branch gies1 --k 1").exit_code == 2);
  CHECK(run_cli("solve --branch gies7 --k 2").exit_code == 2);
  CHECK(run_cli("solve --branch gies1").exit_code == 2);  // missing --k
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);  // a subcommand is required
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("lobachevsky --theta abc").exit_code == 2);
}

TEST_CASE("table --paper reproduces the reference tables in CSV") {
  using gieseking::testing::golden_rows;
  const std::map<std::string, gieseking::Branch> branches = {
      {"gies1", gieseking::Branch::Gies1},
      {"gies2", gieseking::Branch::Gies2},
      {"gies3", gieseking::Branch::Gies3}};
  for (const auto& [name, branch] : branches) {
    CAPTURE(name);
    const auto r = run_cli("table --branch " + name + " --paper --format csv");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.output);
    REQUIRE(rows.size() == 7);  // header + 5 data rows + limit row
    CHECK(rows[0][0] == "k_label");
    const auto& golden = golden_rows(branch);
    for (int i = 0; i < 5; ++i) {
      const auto& csv = rows[i + 1];
      const auto& ref = golden[i];
      CHECK(csv[1] == std::to_string(ref.k));
      CHECK(std::abs(std::stod(csv[2]) - ref.z_re) < 1e-9);
      CHECK(std::abs(std::stod(csv[3]) - ref.z_im) < 1e-9);
      // CSV prints alpha1..alpha3 of the branch root; the reference rows may
      // permute them, so compare through the recorded permutation.
      for (int p = 0; p < 3; ++p)
        CHECK(std::abs(std::stod(csv[4 + ref.perm[p]]) - ref.angles[p]) < 1e-9);
      CHECK(std::abs(std::stod(csv[10]) - ref.volume) < 1e-9);
    }
    // limit row has an empty k and an empty classification
    CHECK(rows[6][0] == "k->infinity");
    CHECK(rows[6][1].empty());
  }
}

TEST_CASE("table labels and degree rendering") {
  const auto r = run_cli("table --branch gies1 --paper --format csv");
  REQUIRE(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  CHECK(rows[1][0] == "1/2 i.e. k=2");
  CHECK(rows[2][0] == "2/3 i.e. k=3");
  CHECK(rows[5][0] == "49/50 i.e. k=50");
  CHECK(rows[1][11] == "orbifold");
  CHECK(rows[2][11] == "cone_manifold");
  // degrees carry two decimals: alpha1 of the k=2 row is 38.67
  CHECK(rows[1][7] == "38.67");
  CHECK(rows[1][8] == "25.67");
  CHECK(rows[1][9] == "115.67");
  // radians carry 12 fractional digits with a '.' separator
  CHECK(rows[1][4] == "0.674888845586");

  const auto r3 = run_cli("table --branch gies3 --paper --format csv");
  CHECK(parse_csv(r3.output)[1][0] == "k=2");  // third series: plain labels
}

TEST_CASE("table single-k values") {
  const auto r2 = run_cli("table --branch gies2 --k-list 3 --format csv");
  REQUIRE(r2.exit_code == 0);
  CHECK(std::abs(std::stod(parse_csv(r2.output)[1][10]) - 0.486617604149) < 1e-9);

  const auto r3 = run_cli("table --branch gies3 --k-list 50 --format csv");
  REQUIRE(r3.exit_code == 0);
  CHECK(std::abs(std::stod(parse_csv(r3.output)[1][10]) - 1.014371909442) < 1e-9);

  CHECK(run_cli("table --branch gies1 --format csv").exit_code == 2);  // no rows
}

TEST_CASE("table formats: markdown and json, and --check-limit") {
  const auto md = run_cli("table --branch gies1 --k-list 2 --format md");
  REQUIRE(md.exit_code == 0);
  CHECK(md.output.find("| k=2 |") != std::string::npos);

  const auto js = run_cli("table --branch gies3 --paper --check-limit --format json");
  REQUIRE(js.exit_code == 0);
  const json doc = json::parse(js.output);
  CHECK(doc["branch"] == "gies3");
  REQUIRE(doc["rows"].size() == 6);
  CHECK(doc["rows"][5]["k"].is_null());
  CHECK(std::abs(doc["rows"][5]["volume"].get<double>() - 1.014941606409) < 1e-9);
  CHECK(doc["limit_check"]["volume_gap"].get<double>() < 1e-6);
}

TEST_CASE("verify exits 0 on surgery roots and 1 on perturbed parameters") {
  const auto ok1 = run_cli("verify --branch gies1 --k 2");
  CHECK(ok1.exit_code == 0);
  CHECK(ok1.output.find("verdict: PASS") != std::string::npos);

  const auto ok2 = run_cli("verify --branch gies3 --k 9");
  CHECK(ok2.exit_code == 0);

  const auto bad = run_cli("verify --branch gies1 --k 2 --perturb 1e-3");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("verdict: FAIL") != std::string::npos);
}

TEST_CASE("verify reports the parity-flagged relators without failing") {
  const auto r = run_cli("verify --branch gies2 --k 4");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("[FLAG]") != std::string::npos);
  CHECK(r.output.find("odd orientation-reversal parity") != std::string::npos);
  CHECK(r.output.find("2 flagged structural") != std::string::npos);
}

TEST_CASE("render writes deterministic SVG files") {
  const std::string p1 = "/tmp/gieseking_cli_render_1.svg";
  const std::string p2 = "/tmp/gieseking_cli_render_2.svg";
  REQUIRE(run_cli("render --branch gies1 --k 3 --depth 6 --out " + p1).exit_code == 0);
  REQUIRE(run_cli("render --branch gies1 --k 3 --depth 6 --out " + p2).exit_code == 0);
  const std::string svg1 = slurp(p1), svg2 = slurp(p2);
  CHECK(svg1 == svg2);  // byte-identical
  CHECK(svg1.rfind("<?xml", 0) == 0);
  CHECK(svg1.find("<svg") != std::string::npos);
  CHECK(svg1.find("</svg>") != std::string::npos);
  std::remove(p1.c_str());
  std::remove(p2.c_str());

  const std::string p0 = "/tmp/gieseking_cli_render_depth0.svg";
  REQUIRE(run_cli("render --branch gies1 --k 3 --depth 0 --out " + p0).exit_code == 0);
  const std::string svg0 = slurp(p0);
  std::size_t paths = 0, pos = 0;
  while ((pos = svg0.find("<path", pos)) != std::string::npos) {
    ++paths;
    pos += 5;
  }
  CHECK(paths == 1);
  std::remove(p0.c_str());

  CHECK(run_cli("render --manifold --depth 3 --out /tmp/gieseking_cli_manifold.svg")
            .exit_code == 0);
  std::remove("/tmp/gieseking_cli_manifold.svg");

  CHECK(run_cli("render --branch gies1 --k 3 --depth 3 --out /nonexistent/x.svg")
            .exit_code == 1);
  CHECK(run_cli("render --branch gies1 --k 3 --depth 42 --out /tmp/too_deep.svg")
            .exit_code == 2);
}

TEST_CASE("limit subcommand") {
  const auto r1 = run_cli("limit --branch gies1 --format json");
  REQUIRE(r1.exit_code == 0);
  const json j1 = json::parse(r1.output);
  CHECK(std::abs(j1["z_re"].get<double>() - 2.618033988749895) < 1e-12);
  CHECK(std::abs(j1["v_re"].get<double>() + 1.618033988749895) < 1e-12);
  CHECK(j1["v_infinite"] == false);
  CHECK(j1["volume"] == 0.0);

  const auto r3 = run_cli("limit --branch gies3 --format json");
  const json j3 = json::parse(r3.output);
  CHECK(j3["v_infinite"] == true);
  CHECK(std::abs(j3["volume"].get<double>() - 1.014941606409) < 1e-9);
}

TEST_CASE("lobachevsky subcommand") {
  const auto r = run_cli("lobachevsky --theta 1.0471975511965976");
  REQUIRE(r.exit_code == 0);
  const double third = std::stod(r.output);
  CHECK(std::abs(3.0 * third - 1.014941606409) < 1e-9);

  CHECK(run_cli("lobachevsky --theta 0").output.substr(0, 14) == "0.000000000000");
  const auto rp = run_cli("lobachevsky --theta 3.14159265358979312");
  CHECK(std::abs(std::stod(rp.output)) < 1e-12);  // pi-periodicity
}
