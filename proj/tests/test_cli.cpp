#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <numbers>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "vdw/energy.hpp"

using doctest::Approx;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "vdwlat_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Run run(const std::string& args, const std::string& env = "") {
  const fs::path err = scratch() / "stderr.txt";
  const std::string cmd =
      env + " " + VDWLAT_BIN + " " + args + " 2>" + err.string();
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, slurp(err)};
}

}  // namespace

TEST_CASE("energy in the plane limit") {
  const Run r = run("energy --beta 1 --theta 0 --gamma 0 --rbar 1e-8 --x 0 --y 0");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["u0"].get<double>() == -4.0);
  CHECK(std::abs(j["u_h"].get<double>()) < 1e-20);
  CHECK(j["units"]["mode"] == "reduced");
}

TEST_CASE("energy output matches the library") {
  const Run r = run("energy --beta 0.3 --theta 40 --gamma 25 --degrees --rbar 0.45 "
                    "--x 0.3 --y -0.2");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  const double deg = std::numbers::pi / 180;
  const vdw::EnergyBreakdown e =
      vdw::energy_total(vdw::ParticleAnisotropy(0.3), vdw::Orientation(40 * deg, 25 * deg),
                        {0.3, -0.2}, vdw::GeometryConfig(0.45));
  CHECK(j["total"].get<double>() == e.total);
  CHECK(j["u_h"].get<double>() == e.u_h);
  CHECK(j["r_coefficients"]["rho_z"].get<double>() == e.r.rho_z);
}

TEST_CASE("SI units") {
  const Run r = run("energy --beta 1 --rbar 1e-8 --dpsq 1e-58 --z0 1e-9");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  const double unit = 1e-58 / (64 * std::numbers::pi * 8.8541878128e-12 * 1e-27);
  CHECK(j["si"]["u0_joule"].get<double>() == Approx(-4 * unit).epsilon(1e-14));

  const Run half = run("energy --beta 1 --rbar 0.5 --dpsq 1e-58");
  CHECK(half.code == 3);
  CHECK(half.out.empty());
}

TEST_CASE("errors and exit codes") {
  SUBCASE("malformed flag") {
    const Run r = run("energy --beta 0.2 --rbar 0.3 --bogus 1");
    CHECK(r.code == 3);
    CHECK(r.out.empty());
    CHECK(json::parse(r.err)["error"] == "config");
  }
  SUBCASE("anisotropy out of range") {
    const Run r = run("energy --beta 1.5 --rbar 0.3");
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(json::parse(r.err)["error"] == "domain");
  }
  SUBCASE("particle inside the boss") {
    const Run r = run("energy --beta 0.5 --rbar 1.2 --x 0.1");
    CHECK(r.code == 2);
  }
  SUBCASE("missing subcommand") {
    CHECK(run("").code == 3);
  }
}

TEST_CASE("landscape files") {
  const fs::path stem = scratch() / "rod";
  const Run r = run("landscape --beta 0.2 --theta 90 --degrees --rbar 0.6 --nx 41 --ny 41 --out " +
                    stem.string());
  REQUIRE(r.code == 0);
  const json side = json::parse(slurp(stem.string() + ".json"));
  CHECK(side["grid_minimum"]["x0_bar"].get<double>() == 0.0);
  CHECK(side["grid_minimum"]["y0_bar"].get<double>() == 0.0);
  std::istringstream csv(slurp(stem.string() + ".csv"));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "x0_bar,y0_bar,u_h");
  int rows = 0;
  while (std::getline(csv, line)) ++rows;
  CHECK(rows == 41 * 41);
}

TEST_CASE("tilted rod has a single off-centre minimum") {
  const Run r = run("minima --beta 0.2 --theta 60 --degrees --rbar 0.2");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j["minima"].size() == 1);
  CHECK(j["minima"][0]["x0_bar"].get<double>() == Approx(0.230).epsilon(5e-3));
}

TEST_CASE("phase diagram sidecar") {
  const fs::path stem = scratch() / "phase";
  const Run r = run("phase --beta 0 --rbar 0 --nbeta 20 --nrbar 20 --out " + stem.string());
  CHECK(r.code == 3);
  const Run ok = run("phase --nbeta 20 --nrbar 20 --out " + stem.string());
  REQUIRE(ok.code == 0);
  const json side = json::parse(slurp(stem.string() + ".json"));
  CHECK(side["beta_critical"].get<double>() == Approx(0.375).epsilon(1e-3 / 0.375));
  CHECK(fs::exists(stem.string() + "_grid.csv"));
  CHECK(fs::exists(stem.string() + "_boundary.csv"));
}

TEST_CASE("verification") {
  const Run good = run("verify --samples 20");
  CHECK(good.code == 0);
  CHECK(json::parse(good.out)["passed"] == true);
  CHECK(run("verify --samples 20 --perturb-green 1e-3").code == 4);
  CHECK(run("verify --samples 0").code == 3);
}

TEST_CASE("output does not depend on the thread count") {
  const fs::path a = scratch() / "threads1";
  const fs::path b = scratch() / "threads4";
  const std::string args = "landscape --beta 0.3 --theta 0.8 --gamma 0.3 --rbar 0.35 "
                           "--nx 51 --ny 47 --out ";
  REQUIRE(run(args + a.string(), "VDW_THREADS=1").code == 0);
  REQUIRE(run(args + b.string(), "VDW_THREADS=4").code == 0);
  CHECK(slurp(a.string() + ".csv") == slurp(b.string() + ".csv"));
}
