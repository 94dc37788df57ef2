#include "vdw/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "vdw/dipole.hpp"
#include "vdw/energy.hpp"
#include "vdw/errors.hpp"
#include "vdw/geometry.hpp"
#include "vdw/oracle.hpp"

namespace vdw {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::array<double, 3> kBoundaryRadii{0.1, 0.5, 0.9};

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

CheckResult make_check(std::string name, std::size_t trials, double worst,
                       double tol) {
  return {std::move(name), trials, worst, tol, worst <= tol};
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  // Exterior point with at least `margin` clearance from the conductor.
  CylPoint exterior(const GeometryConfig& geo, double margin) {
    for (;;) {
      const CylPoint p(uniform(0.0, 3.0), uniform(0.0, 2 * kPi),
                       uniform(margin, 3.0));
      if (geo.clearance(p.to_cartesian()) > margin) return p;
    }
  }

 private:
  std::mt19937_64 rng_;
};

CheckResult oracle_equivalence(const VerifyOptions& opt, Sampler& s,
                               double& mean_dev) {
  double worst = 0.0;
  double sum = 0.0;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const ParticleAnisotropy aniso(s.uniform(0.01, 1.0));
    const Orientation orient(s.uniform(0.0, kPi / 2), s.uniform(0.0, 2 * kPi));
    const GeometryConfig geo(s.uniform(0.05, 0.9));
    const double rho0 = s.uniform(0.0, 3.0);
    const double phi0 = s.uniform(0.0, 2 * kPi);
    const PlanePosition pos{rho0 * std::cos(phi0), rho0 * std::sin(phi0)};

    const EnergyBreakdown closed = energy_total(aniso, orient, pos, geo);
    const double p = opt.perturb_green;
    const HomogeneousGreen exact = exact_homogeneous_green(geo);
    const HomogeneousGreen green = [&](const CylPoint& r, const CylPoint& rp) {
      return (1.0 + p) * exact(r, rp);
    };
    const double ref =
        ez_energy(closed.projection, CylPoint(pos.rho(), pos.phi(), 1.0), geo,
                  StencilConfig{}, green);
    const double dev = std::abs(closed.total - ref) / std::abs(ref);
    worst = std::max(worst, dev);
    sum += dev;
  }
  mean_dev = opt.samples ? sum / static_cast<double>(opt.samples) : 0.0;
  return make_check("oracle_equivalence", opt.samples, worst, opt.energy_tol);
}

// Residual |G(r, r')| * |r - r'| on the conductor, i.e. relative to the
// free-space term. Points lie exactly on the closure of the domain, so the
// image system is evaluated directly.
double boundary_residual(const ImageSystem& sys, const CylPoint& on_surface,
                         double perturb) {
  const double free =
      sys.source.charge / distance(on_surface, sys.source.position);
  const double g =
      sys.potential(on_surface) + perturb * sys.image_potential(on_surface);
  return std::abs(g) / free;
}

CheckResult boundary_plane(const VerifyOptions& opt, Sampler& s) {
  double worst = 0.0;
  std::size_t n = 0;
  for (double r_bar : kBoundaryRadii) {
    const GeometryConfig geo(r_bar);
    for (std::size_t k = 0; k < opt.boundary_samples; ++k, ++n) {
      const ImageSystem sys = build_image_system(s.exterior(geo, 1e-3), geo);
      const CylPoint q(s.uniform(r_bar, r_bar + 5.0), s.uniform(0.0, 2 * kPi),
                       0.0);
      worst = std::max(worst, boundary_residual(sys, q, opt.perturb_green));
    }
  }
  return make_check("boundary_plane", n, worst, opt.boundary_tol);
}

CheckResult boundary_hemisphere(const VerifyOptions& opt, Sampler& s) {
  double worst = 0.0;
  std::size_t n = 0;
  for (double r_bar : kBoundaryRadii) {
    const GeometryConfig geo(r_bar);
    for (std::size_t k = 0; k < opt.boundary_samples; ++k, ++n) {
      const ImageSystem sys = build_image_system(s.exterior(geo, 1e-3), geo);
      const double polar = s.uniform(0.0, kPi / 2);
      const CylPoint q(r_bar * std::sin(polar), s.uniform(0.0, 2 * kPi),
                       r_bar * std::cos(polar));
      worst = std::max(worst, boundary_residual(sys, q, opt.perturb_green));
    }
  }
  return make_check("boundary_hemisphere", n, worst, opt.boundary_tol);
}

CheckResult reciprocity(const VerifyOptions& opt, Sampler& s) {
  double worst = 0.0;
  for (std::size_t k = 0; k < opt.symmetry_trials; ++k) {
    const GeometryConfig geo(s.uniform(0.05, 0.95));
    const CylPoint a = s.exterior(geo, 1e-3);
    const CylPoint b = s.exterior(geo, 1e-3);
    const double p = opt.perturb_green;
    auto g = [&](const CylPoint& r, const CylPoint& rp) {
      return green_function(r, rp, geo) + p * green_homogeneous(r, rp, geo);
    };
    worst = std::max(worst, rel_diff(g(a, b), g(b, a)));
  }
  return make_check("green_reciprocity", opt.symmetry_trials, worst,
                    opt.symmetry_tol);
}

CheckResult dipole_trace(const VerifyOptions& opt, Sampler& s) {
  double worst = 0.0;
  for (std::size_t k = 0; k < opt.symmetry_trials; ++k) {
    const ParticleAnisotropy aniso(s.uniform(1e-3, 1.0), s.uniform(0.1, 10.0));
    const Orientation orient(s.uniform(0.0, kPi), s.uniform(0.0, 2 * kPi));
    const DipoleProjection p = project(aniso, orient, s.uniform(0.0, 2 * kPi));
    const double expected = aniso.d_p_sq() * (1.0 + 2.0 * aniso.beta());
    worst = std::max(worst, rel_diff(p.trace(), expected));
  }
  return make_check("dipole_trace", opt.symmetry_trials, worst,
                    opt.symmetry_tol);
}

CheckResult rotation_oracle(const VerifyOptions& opt, Sampler& s) {
  double worst = 0.0;
  for (std::size_t k = 0; k < opt.symmetry_trials; ++k) {
    const ParticleAnisotropy aniso(s.uniform(1e-3, 1.0));
    const Orientation orient(s.uniform(0.0, kPi / 2), s.uniform(0.0, 2 * kPi));
    const double phi0 = s.uniform(0.0, 2 * kPi);
    const DipoleProjection p = project(aniso, orient, phi0);
    const Eigen::Matrix3d t = cylindrical_tensor(aniso, orient, phi0);
    // absolute deviation against the d_p^2 scale: d_rho_z may vanish
    const double dev = std::max({std::abs(p.d_rho_sq - t(0, 0)),
                                 std::abs(p.d_phi_sq - t(1, 1)),
                                 std::abs(p.d_z_sq - t(2, 2)),
                                 std::abs(p.d_rho_z - t(0, 2))}) /
                       aniso.d_p_sq();
    worst = std::max(worst, dev);
  }
  return make_check("dipole_rotation_oracle", opt.symmetry_trials, worst,
                    opt.symmetry_tol);
}

CheckResult mirror_symmetry(const VerifyOptions& opt, Sampler& s) {
  double worst = 0.0;
  for (std::size_t k = 0; k < opt.symmetry_trials; ++k) {
    const ParticleAnisotropy aniso(s.uniform(0.01, 1.0));
    const Orientation orient(k % 2 ? kPi / 2 : 0.0, 0.0);
    const GeometryConfig geo(s.uniform(0.05, 0.95));
    const double x = s.uniform(0.0, 3.0);
    const double y = s.uniform(-3.0, 3.0);
    const double a = energy_total(aniso, orient, {x, y}, geo).total;
    const double b = energy_total(aniso, orient, {-x, y}, geo).total;
    worst = std::max(worst, rel_diff(a, b));
  }
  return make_check("mirror_symmetry", opt.symmetry_trials, worst,
                    opt.symmetry_tol);
}

CheckResult azimuthal_covariance(const VerifyOptions& opt, Sampler& s) {
  double worst = 0.0;
  for (std::size_t k = 0; k < opt.symmetry_trials; ++k) {
    const ParticleAnisotropy aniso(s.uniform(0.01, 1.0));
    const double theta = s.uniform(0.0, kPi / 2);
    const double gamma = s.uniform(0.0, 2 * kPi);
    const double delta = s.uniform(-kPi, kPi);
    const GeometryConfig geo(s.uniform(0.05, 0.95));
    const double rho = s.uniform(0.0, 3.0);
    const double phi = s.uniform(0.0, 2 * kPi);
    const EnergyBreakdown a =
        energy_total(aniso, Orientation(theta, gamma),
                     {rho * std::cos(phi), rho * std::sin(phi)}, geo);
    const EnergyBreakdown b = energy_total(
        aniso, Orientation(theta, gamma + delta),
        {rho * std::cos(phi + delta), rho * std::sin(phi + delta)}, geo);
    worst = std::max({worst, rel_diff(a.u0, b.u0), rel_diff(a.total, b.total),
                      std::abs(a.u_h - b.u_h) /
                          std::max(std::abs(a.total), 1e-300)});
  }
  return make_check("azimuthal_covariance", opt.symmetry_trials, worst,
                    opt.symmetry_tol);
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json j;
  j["config"] = {{"seed", options.seed},
                 {"samples", options.samples},
                 {"boundary_samples", options.boundary_samples},
                 {"symmetry_trials", options.symmetry_trials},
                 {"perturb_green", options.perturb_green}};
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    list.push_back({{"name", c.name},
                    {"trials", c.trials},
                    {"worst", c.worst},
                    {"tolerance", c.tolerance},
                    {"passed", c.passed}});
  }
  j["checks"] = std::move(list);
  if (const CheckResult* oracle = find("oracle_equivalence")) {
    j["oracle"] = {{"max_relative_deviation", oracle->worst},
                   {"mean_relative_deviation", mean_energy_deviation}};
  }
  j["passed"] = passed();
  return j;
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.samples == 0) {
    throw DomainError("verification needs at least one oracle sample");
  }
  VerifyReport report;
  report.options = options;
  // one independent stream per check keeps each check reproducible on its own
  std::uint64_t stream = options.seed;
  auto next = [&] { return Sampler(stream++); };

  Sampler s0 = next();
  report.checks.push_back(
      oracle_equivalence(options, s0, report.mean_energy_deviation));
  Sampler s1 = next();
  report.checks.push_back(boundary_plane(options, s1));
  Sampler s2 = next();
  report.checks.push_back(boundary_hemisphere(options, s2));
  Sampler s3 = next();
  report.checks.push_back(reciprocity(options, s3));
  Sampler s4 = next();
  report.checks.push_back(dipole_trace(options, s4));
  Sampler s5 = next();
  report.checks.push_back(rotation_oracle(options, s5));
  Sampler s6 = next();
  report.checks.push_back(mirror_symmetry(options, s6));
  Sampler s7 = next();
  report.checks.push_back(azimuthal_covariance(options, s7));
  return report;
}

}  // namespace vdw
