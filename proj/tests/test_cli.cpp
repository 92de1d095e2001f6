#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(CCQED_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("ccqed_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("successful commands exit 0") {
  CHECK(run("point --delta 0 --hop 0.01") == 0);
  CHECK(run("point --delta=-3 --hop 1 --format json") == 0);
  CHECK(run("sweep --delta-range=-2:2 --steps 5") == 0);
  CHECK(run("self-check") == 0);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run("") == 1);
  CHECK(run("frobnicate") == 1);
  CHECK(run("point --delta abc") == 1);
  CHECK(run("sweep --delta-range 5") == 1);
  CHECK(run("sweep --delta-range=1:-1 --steps 5") == 1);
  CHECK(run("sweep --steps 1") == 1);
  CHECK(run("point --g 0") == 1);
  CHECK(run("point --format xml") == 1);
  CHECK(run("phase") == 1);
  CHECK(run("sweep --delta 0 --delta-range=-1:1") == 1);
  CHECK(run("sweep --steps 3 --out /nonexistent-dir/x.csv") == 1);
  CHECK(run("point --config /nonexistent-dir/cfg.ini") == 1);
}

TEST_CASE("numerical failure exits 2") {
  // 2 omega_a overflows while assembling the two-atom diagonal
  CHECK(run("sweep --g 1e308 --delta-range=1:1.5 --steps 2") == 2);
  CHECK(run("point --g 1e308 --delta 1.5") == 2);
}

TEST_CASE("config file supplies defaults and the command line overrides it") {
  const fs::path dir = scratch("config");
  {
    std::ofstream cfg(dir / "run.ini");
    cfg << "delta-range = -4:4\nsteps = 9\nhop = 0.5\n";
  }
  REQUIRE(run("sweep --config " + (dir / "run.ini").string() + " --out " + (dir / "a.csv").string()) == 0);
  REQUIRE(run("sweep --config " + (dir / "run.ini").string() + " --steps 3 --out " + (dir / "b.csv").string()) == 0);
  REQUIRE(run("sweep --delta-range=-4:4 --steps 9 --hop 0.5 --out " + (dir / "c.csv").string()) == 0);

  const std::string a = slurp(dir / "a.csv");
  const auto count = [](const std::string& s) { return std::count(s.begin(), s.end(), '\n'); };
  CHECK(count(a) == 10);
  CHECK(a.find("\n-4,0.5,") != std::string::npos);
  CHECK(count(slurp(dir / "b.csv")) == 4);
  CHECK(a == slurp(dir / "c.csv"));
  fs::remove_all(dir);
}

TEST_CASE("sweep writes csv, json and a gnuplot script") {
  const fs::path dir = scratch("sweep");
  REQUIRE(run("sweep --delta-range=-1:1 --steps 3 --out " + (dir / "s.csv").string() + " --emit-gnuplot") == 0);
  CHECK(fs::exists(dir / "s.csv.gp"));
  CHECK(slurp(dir / "s.csv.gp").find("'s.csv'") != std::string::npos);
  REQUIRE(run("sweep --delta-range=-1:1 --steps 3 --format json --out " + (dir / "s.json").string()) == 0);
  CHECK(slurp(dir / "s.json").find("\"schema_version\": 1") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("phase writes the grid and both boundary files") {
  const fs::path dir = scratch("phase");
  REQUIRE(run("phase --steps 21 --hop-steps 11 --out " + (dir / "p.csv").string() + " --emit-gnuplot") == 0);
  const std::string grid = slurp(dir / "p.csv");
  CHECK(std::count(grid.begin(), grid.end(), '\n') == 21 * 11 + 1);
  CHECK(fs::file_size(dir / "p_superfluid_boundary.csv") > 40);
  CHECK(fs::file_size(dir / "p_polaritonic_boundary.csv") > 40);
  CHECK(fs::exists(dir / "p.csv.gp"));
  fs::remove_all(dir);
}
