#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>

#include "doctest.h"
#include "vdw/analysis.hpp"
#include "vdw/errors.hpp"
#include "vdw/search.hpp"

using namespace vdw;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

// Local minima of U_h(x, 0) from a plain scan, no refinement.
std::vector<double> scan_minima(const ParticleAnisotropy& aniso,
                                const Orientation& orient,
                                const GeometryConfig& geo, double lo, double hi,
                                int n) {
  std::vector<double> xs, us;
  for (int i = 0; i < n; ++i) {
    xs.push_back(lo + (hi - lo) * i / (n - 1));
    us.push_back(hemisphere_energy_at(aniso, orient, {xs.back(), 0.0}, geo));
  }
  std::vector<double> out;
  for (int i = 1; i + 1 < n; ++i) {
    if (us[i] < us[i - 1] && us[i] <= us[i + 1]) out.push_back(xs[i]);
  }
  return out;
}

}  // namespace

TEST_CASE("golden-section search and bisection") {
  const auto m = golden_section_minimize(
      [](double x) { return (x - 0.3) * (x - 0.3) + 1.0; }, -1.0, 2.0, 1e-10);
  CHECK(m.x == Approx(0.3).epsilon(1e-8));
  CHECK(m.value == Approx(1.0).epsilon(1e-15));

  const auto r = bisect_root([](double x) { return std::cos(x); }, 0.0, 3.0, 1e-13);
  REQUIRE(r.has_value());
  CHECK(*r == Approx(kPi / 2).epsilon(1e-12));
  CHECK_FALSE(bisect_root([](double x) { return x * x + 1; }, -1.0, 1.0, 1e-8).has_value());
}

TEST_CASE("linspace") {
  const auto v = linspace({-2.0, 2.0}, 5);
  REQUIRE(v.size() == 5);
  CHECK(v.front() == -2.0);
  CHECK(v.back() == 2.0);
  CHECK(v[2] == 0.0);
  CHECK(linspace({0.5, 3.0}, 1) == std::vector<double>{0.5});
}

TEST_CASE("landscapes of an in-plane rod") {
  const ParticleAnisotropy aniso(0.2);
  const Orientation orient(kPi / 2, 0.0);
  SUBCASE("large boss") {
    const LandscapeGrid g = landscape(aniso, orient, GeometryConfig(0.6),
                                      {-2, 2}, {-2, 2}, 81, 81);
    const auto [ix, iy] = g.argmin();
    CHECK(g.xs[ix] == 0.0);
    CHECK(g.ys[iy] == 0.0);
    CHECK(g.at(ix, iy) == Approx(-11.822).epsilon(1e-4));
  }
  SUBCASE("small boss") {
    const LandscapeGrid g = landscape(aniso, orient, GeometryConfig(0.2),
                                      {-2, 2}, {-2, 2}, 201, 201);
    const auto [ix, iy] = g.argmin();
    CHECK(std::abs(g.xs[ix]) == Approx(0.32).epsilon(0.1));
    CHECK(g.ys[iy] == 0.0);
    // the mirror image of the grid minimum is also a grid minimum
    CHECK(g.at(g.nx - 1 - ix, iy) == Approx(g.at(ix, iy)).epsilon(1e-12));
    // the apex is higher than its x neighbours
    CHECK(g.at(100, 100) > g.at(101, 100));
    CHECK(g.at(100, 100) < g.at(100, 101));
  }
}

TEST_CASE("landscape of an upright rod") {
  const LandscapeGrid g = landscape(ParticleAnisotropy(0.2), Orientation(0.0, 0.0),
                                    GeometryConfig(0.2), {-2, 2}, {-2, 2}, 41, 41);
  const auto [ix, iy] = g.argmin();
  CHECK(g.xs[ix] == 0.0);
  CHECK(g.ys[iy] == 0.0);
}

TEST_CASE("degenerate and invalid landscape grids") {
  const LandscapeGrid one = landscape(ParticleAnisotropy(0.5), Orientation(0.3, 0.0),
                                      GeometryConfig(0.4), {0.2, 0.2}, {0.1, 0.1}, 1, 1);
  REQUIRE(one.values.size() == 1);
  CHECK(one.values[0] == hemisphere_energy_at(ParticleAnisotropy(0.5), Orientation(0.3, 0.0),
                                              {0.2, 0.1}, GeometryConfig(0.4)));
  CHECK_THROWS_AS(landscape(ParticleAnisotropy(0.5), Orientation(0.3, 0.0),
                            GeometryConfig(1.2), {-1, 1}, {-1, 1}, 11, 11),
                  DomainError);
}

TEST_CASE("classification of the apex") {
  const Orientation flat(kPi / 2, 0.0);
  CHECK(classify_origin(ParticleAnisotropy(0.2), flat, GeometryConfig(0.6)).kind ==
        OriginKind::minimum);
  const auto small = classify_origin(ParticleAnisotropy(0.2), flat, GeometryConfig(0.2));
  CHECK(small.kind == OriginKind::maximum);
  CHECK(small.axis_kind == AxisExtremum::maximum);
  CHECK(small.curvature_xx < 0.0);
  CHECK(small.curvature_yy > 0.0);
  CHECK(classify_origin(ParticleAnisotropy(0.2), Orientation(0.0, 0.0), GeometryConfig(0.2))
            .kind == OriginKind::minimum);
  CHECK_THROWS_AS(classify_origin(ParticleAnisotropy(0.2), flat, GeometryConfig(1.0)),
                  DomainError);

  CHECK(classify_axis(1e-11) == AxisExtremum::degenerate);
  CHECK(classify_axis(-1e-9) == AxisExtremum::maximum);
  CHECK(std::string(to_string(OriginKind::saddle)) == "saddle");
  CHECK(std::string(to_string(AxisExtremum::minimum)) == "minimum");
}

TEST_CASE("isotropic particles sit above the apex") {
  for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const ParticleAnisotropy iso(1.0);
    const Orientation orient(0.0, 0.0);
    const GeometryConfig geo(r);
    const auto c = classify_origin(iso, orient, geo);
    CHECK(c.kind == OriginKind::minimum);
    CHECK(c.curvature_xx == Approx(c.curvature_yy).epsilon(1e-6));
    const double at = hemisphere_energy_at(iso, orient, {0, 0}, geo);
    for (double x = 0.01; x < 3.0; x += 0.01) {
      CHECK(hemisphere_energy_at(iso, orient, {x, 0.0}, geo) > at);
    }
  }
}

TEST_CASE("curvature matches a scan of the energy") {
  const ParticleAnisotropy aniso(0.3);
  const Orientation orient(1.1, 0.7);
  const GeometryConfig geo(0.35);
  const double h = 1e-2;
  auto u = [&](double x) { return hemisphere_energy_at(aniso, orient, {x, 0.0}, geo); };
  const double fd = (u(h) - 2 * u(0) + u(-h)) / (h * h);
  CHECK(origin_curvature(aniso, orient, geo, 0.0) == Approx(fd).epsilon(1e-3));
}

TEST_CASE("minima of an in-plane rod above a small boss") {
  const auto m = find_minima_on_axis(ParticleAnisotropy(0.2), Orientation(kPi / 2, 0.0),
                                     GeometryConfig(0.2), {-2, 2});
  REQUIRE(m.size() == 2);
  // 30-digit reference for the location of the minimum
  CHECK(m[1].x == Approx(0.32370235309559326).epsilon(1e-8));
  CHECK(std::abs(m[0].x + m[1].x) < 1e-8);
  CHECK(m[0].u_h == Approx(m[1].u_h).epsilon(1e-12));
  CHECK(m[1].u_h == Approx(-0.13711241849612997).epsilon(1e-12));
}

TEST_CASE("minima of a tilted rod are not mirror images") {
  const auto m = find_minima_on_axis(ParticleAnisotropy(0.2), Orientation(kPi / 3, 0.0),
                                     GeometryConfig(0.2), {-2, 2});
  REQUIRE(!m.empty());
  CHECK(m.size() == 1);
  CHECK(m[0].x == Approx(0.230).epsilon(5e-3));
}

TEST_CASE("minima agree with a dense scan") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  for (int k = 0; k < 100; ++k) {
    const ParticleAnisotropy aniso(0.05 + 0.95 * u(rng));
    const Orientation orient(kPi / 2, 0.0);
    const GeometryConfig geo(0.05 + 0.9 * u(rng));
    const auto refined = find_minima_on_axis(aniso, orient, geo, {-2, 2});
    const auto scanned = scan_minima(aniso, orient, geo, -2, 2, 40001);
    // skip configurations close to the boundary where minima merge
    if (std::abs(axis_curvature(aniso.beta(), geo.r_bar(), orient)) < 1e-2) continue;
    ++checked;
    REQUIRE(refined.size() == scanned.size());
    for (std::size_t i = 0; i < refined.size(); ++i) {
      CHECK(std::abs(refined[i].x - scanned[i]) <= 2e-4);
    }
    if (refined.size() == 2) CHECK(std::abs(refined[0].x + refined[1].x) < 1e-8);
  }
  CHECK(checked > 50);
}

TEST_CASE("phase diagram for an in-plane rod along x") {
  const PhaseDiagram pd = phase_diagram(Orientation(kPi / 2, 0.0), {0.0, 0.95},
                                        {0.0, 1.0}, {40, 40});
  REQUIRE(pd.beta_critical.has_value());
  CHECK(*pd.beta_critical == Approx(0.375).epsilon(1e-3 / 0.375));
  CHECK(pd.betas.size() == 40);
  CHECK(pd.betas.back() == 1.0);
  CHECK(pd.r_bars.back() == Approx(0.95));
  CHECK(pd.multi_crossing_columns.empty());

  for (std::size_t ib = 0; ib < pd.betas.size(); ++ib) {
    if (pd.betas[ib] > *pd.beta_critical) {
      for (std::size_t ir = 0; ir < pd.r_bars.size(); ++ir) {
        CHECK(pd.at(ib, ir) == AxisExtremum::minimum);
      }
    }
  }
  for (const BoundaryPoint& b : pd.boundary) {
    CHECK(b.beta <= *pd.beta_critical);
    const Orientation o(kPi / 2, 0.0);
    const double below = axis_curvature(b.beta, b.r_bar - 1e-8, o);
    const double above = axis_curvature(b.beta, b.r_bar + 1e-8, o);
    CHECK(below * above <= 0.0);
  }
  CHECK(!pd.boundary.empty());

  CHECK_THROWS_AS(phase_diagram(Orientation(kPi / 2, 0.0), {0.0, 1.2}, {0.0, 1.0}, {4, 4}),
                  DomainError);
  CHECK_THROWS_AS(phase_diagram(Orientation(kPi / 2, 0.0), {0.0, 0.9}, {0.0, 1.5}, {4, 4}),
                  DomainError);
}

TEST_CASE("apex curvature sign is stable as the boss shrinks") {
  const Orientation o(kPi / 2, 0.0);
  for (double beta : {0.05, 0.15, 0.25, 0.32, 0.43, 0.6, 0.9}) {
    const double a = axis_curvature(beta, 1e-3, o);
    const double b = axis_curvature(beta, 1e-2, o);
    CHECK((a > 0) == (b > 0));
  }
}

TEST_CASE("results do not depend on the thread count") {
  const auto run = [] {
    const LandscapeGrid g = landscape(ParticleAnisotropy(0.3), Orientation(0.9, 0.4),
                                      GeometryConfig(0.3), {-1, 1}, {-1, 1}, 31, 29);
    const PhaseDiagram pd = phase_diagram(Orientation(kPi / 2, kPi / 6), {0.0, 0.9},
                                          {0.0, 1.0}, {12, 12});
    return std::make_tuple(g.values, pd.curvature_xx, pd.boundary.size(), pd.beta_critical);
  };
  setenv("VDW_THREADS", "1", 1);
  const auto serial = run();
  setenv("VDW_THREADS", "4", 1);
  const auto parallel = run();
  unsetenv("VDW_THREADS");
  CHECK(std::get<0>(serial) == std::get<0>(parallel));
  CHECK(std::get<1>(serial) == std::get<1>(parallel));
  CHECK(std::get<2>(serial) == std::get<2>(parallel));
  CHECK(std::get<3>(serial) == std::get<3>(parallel));
}
