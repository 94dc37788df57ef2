#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "doctest.h"
#include "vdw/analysis.hpp"
#include "vdw/io.hpp"

using namespace vdw;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("numbers round-trip through text") {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> u(-30.0, 30.0);
  for (int k = 0; k < 10000; ++k) {
    const double v = std::pow(10.0, u(rng)) * (k % 2 ? -1 : 1);
    const std::string s = format_number(v);
    double back = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    CHECK(back == v);
  }
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("landscape CSV layout") {
  const LandscapeGrid g = landscape(ParticleAnisotropy(0.2),
                                    Orientation(std::numbers::pi / 2, 0.0),
                                    GeometryConfig(0.2), {-1, 1}, {-0.5, 0.5}, 5, 3);
  std::ostringstream os;
  write_landscape_csv(os, g);
  const auto lines = lines_of(os.str());
  REQUIRE(lines.size() == 1 + 15);
  CHECK(lines[0] == "x0_bar,y0_bar,u_h");
  CHECK(lines[1].rfind("-1,-0.5,", 0) == 0);
  CHECK(lines[2].rfind("-1,0,", 0) == 0);
}

TEST_CASE("phase CSV layout") {
  const PhaseDiagram pd = phase_diagram(Orientation(std::numbers::pi / 2, 0.0),
                                        {0.0, 0.9}, {0.0, 1.0}, {6, 4});
  std::ostringstream grid, boundary;
  write_phase_grid_csv(grid, pd);
  write_boundary_csv(boundary, pd);
  const auto g = lines_of(grid.str());
  REQUIRE(g.size() == 1 + 24);
  CHECK(g[0] == "beta,r_bar,curvature_xx,classification");
  const auto b = lines_of(boundary.str());
  CHECK(b[0] == "beta,r_bar");
  CHECK(b.size() == 1 + pd.boundary.size());
}
