#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cotwell/cli.hpp"

using namespace cotwell;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cotwell");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("cotwell_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int exit_code(const std::string& args) {
  const std::string cmd = std::string(COTWELL_BINARY) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("level ranges") {
  CHECK(parse_levels("0..8") == std::pair{0, 8});
  CHECK(parse_levels("1..2") == std::pair{1, 2});
  CHECK(parse_levels("0..0") == std::pair{0, 1});
  CHECK(parse_levels("5") == std::pair{5, 6});
  CHECK_THROWS_AS(parse_levels("4..2"), UsageError);
  CHECK_THROWS_AS(parse_levels("-1..2"), UsageError);
  CHECK_THROWS_AS(parse_levels("a..b"), UsageError);
  CHECK_THROWS_AS(parse_levels(""), UsageError);
}

TEST_CASE("solve") {
  auto r = run({"solve", "--method", "numerov", "--levels", "0..8", "--n-grid", "2000"});
  CHECK(r.code == 0);
  auto rows = lines(r.out);
  REQUIRE(rows.size() == 9);
  CHECK(rows[0] == "n,energy,nodes,parity");
  CHECK(std::stod(rows[1].substr(2)) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(rows[8].find(",7,odd") != std::string::npos);

  r = run({"solve", "--method", "wkb-closed", "--levels", "1..2"});
  CHECK(r.code == 0);
  CHECK(lines(r.out)[1].rfind("1,0.5244", 0) == 0);

  r = run({"solve", "--levels", "0..0", "--v0", "1", "--method", "analytic"});
  CHECK(r.code == 0);
  CHECK(lines(r.out)[1] == "0,0.5");

  r = run({"--method", "spt", "solve", "--levels", "0..2", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["levels"].size() == 2);
  CHECK(doc["levels"][0]["e2"].get<double>() == doctest::Approx(-0.028234621).epsilon(1e-8));

  r = run({"solve", "--method", "wkb", "--levels", "2"});
  CHECK(lines(r.out)[0] == "n,energy,x1,x2,action");
  CHECK(r.err.empty());
}

TEST_CASE("compare") {
  auto r = run({"compare", "--levels", "0..1", "--format", "json", "--n-grid", "1000"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["rows"].size() == 1);

  const auto dir = scratch_dir("compare");
  const auto first = dir / "a.csv";
  const auto second = dir / "b.csv";
  CHECK(run({"compare", "--levels", "0..8", "--n-grid", "1000", "--out", first.string()}).code == 0);
  CHECK(run({"compare", "--levels", "0..8", "--n-grid", "1000", "--out", second.string()}).code == 0);
  CHECK(slurp(first) == slurp(second));
  CHECK(lines(slurp(first)).size() == 9);
  CHECK(fs::exists(dir / "a.full.csv"));

  r = run({"compare", "--levels", "0..2", "--v0", "2", "--n-grid", "1000"});
  CHECK(r.code == 1);
  CHECK(r.err.find("spt") != std::string::npos);
  CHECK(lines(r.out).size() == 3);
}

TEST_CASE("wavefunction") {
  auto r = run({"wavefunction", "--level", "0", "--methods", "analytic,numerov", "--n-grid", "1000"});
  CHECK(r.code == 0);
  auto rows = lines(r.out);
  CHECK(rows[0] == "x,analytic,numerov");
  CHECK(rows.size() == 1002);

  r = run({"wavefunction", "--level", "9", "--methods", "spt", "--n-grid", "1000"});
  CHECK(r.code == 0);

  r = run({"wavefunction", "--panel", "d", "--n-grid", "1000", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["level"] == 7);

  CHECK(run({"wavefunction", "--level", "1", "--methods", "analytic", "--n-grid", "1000"}).code == 1);
  CHECK(run({"wavefunction", "--methods", "magic"}).code == 2);
  CHECK(run({"wavefunction", "--panel", "z"}).code == 2);
}

TEST_CASE("convergence") {
  auto r = run({"convergence", "--level", "0", "--grids", "500,1000,2000,4000"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 2; i < rows.size(); ++i) {
    const double order = std::stod(rows[i].substr(rows[i].rfind(',') + 1));
    CHECK(order > 3.5);
    CHECK(order < 4.5);
  }
  r = run({"convergence", "--grids", "1000"});
  CHECK(r.code == 2);
  CHECK(r.err.find("at least 2") != std::string::npos);
  CHECK(run({"convergence", "--grids", "1000,1001"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({"solve", "--n-grid", "2001"}).code == 2);
  CHECK(run({"solve", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"solve", "--format", "xml"}).code == 2);
  CHECK(run({"solve", "--wkb-tol", "0"}).code == 2);
  CHECK(run({"solve", "--levels", "3..1"}).code == 2);
  CHECK(run({"solve", "--method", "wkb-closed", "--levels", "0..2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("solver failures") {
  CHECK(run({"solve", "--method", "analytic", "--levels", "1..2"}).code == 1);
  CHECK(run({"solve", "--method", "numerov", "--n-grid", "1000", "--levels", "0..4", "--scan-step", "5"}).code == 1);
}

TEST_CASE("output directory and config file") {
  const auto dir = scratch_dir("env");
  ::setenv("COTWELL_OUTPUT_DIR", dir.c_str(), 1);
  CHECK(resolve_output_path("t.csv") == dir / "t.csv");
  CHECK(resolve_output_path("/abs/t.csv") == fs::path("/abs/t.csv"));
  auto r = run({"profile", "--n-grid", "100", "--out", "profile.csv"});
  ::unsetenv("COTWELL_OUTPUT_DIR");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(lines(slurp(dir / "profile.csv")).size() == 102);

  const auto cfg = dir / "run.ini";
  std::ofstream(cfg) << "method=wkb\nlevels=\"0..3\"\nn-grid=1000\n";
  r = run({"solve", "--config", cfg.string()});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 4);
  CHECK(lines(r.out)[0] == "n,energy,x1,x2,action");
  r = run({"solve", "--config", cfg.string(), "--levels", "0..1"});
  CHECK(lines(r.out).size() == 2);
}

TEST_CASE("binary exit codes") {
  CHECK(exit_code("solve --method analytic --levels 0..0") == 0);
  CHECK(exit_code("solve --method analytic --levels 1..2") == 1);
  CHECK(exit_code("solve --n-grid 7") == 2);
  CHECK(exit_code("frobnicate") == 2);
}
