#include "vdw/energy.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "vdw/errors.hpp"

namespace vdw {

double PlanePosition::rho() const { return std::hypot(x, y); }

double PlanePosition::phi() const {
  if (x == 0.0 && y == 0.0) return 0.0;
  return std::atan2(y, x);
}

RCoefficients r_coefficients(double rho0_bar, const GeometryConfig& geo) {
  const double r = geo.r_bar();
  const double r2 = r * r;
  const double p2 = rho0_bar * rho0_bar;
  if (!(rho0_bar >= 0.0) || !(r2 < 1.0 + p2)) {
    std::ostringstream os;
    os.precision(17);
    os << "particle at rho0 = " << rho0_bar
       << " is not outside the hemisphere of radius " << r;
    throw DomainError(os.str());
  }

  // near = (R^2 - rho^2 - 1)^3 comes from the sphere image of the source,
  // far = R^4 + 2R^2(1 - rho^2) + (1 + rho^2)^2 from the mirrored one.
  const double near = std::pow(r2 - p2 - 1.0, 3);
  const double far = r2 * r2 + 2.0 * r2 * (1.0 - p2) + (1.0 + p2) * (1.0 + p2);
  const double far32 = far * std::sqrt(far);
  const double far52 = far * far32;
  const double one_p2 = 1.0 + p2;

  RCoefficients c;
  c.rho_rho = -8.0 * r *
              ((r2 + p2) / near +
               (r2 * ((r2 + 1.0) * (r2 + 1.0) - p2 * (r2 + p2 + 8.0)) +
                p2 * one_p2 * one_p2) /
                   far52);
  c.phi_phi = -8.0 * r * r2 * (1.0 / near + 1.0 / far32);
  c.zz = -8.0 * r *
         ((r2 + 1.0) / near -
          (r2 * ((r2 - p2) * (r2 - p2) + (r2 - 1.0 - 8.0 * p2)) -
           one_p2 * one_p2) /
              far52);
  c.rho_z = -16.0 * r * rho0_bar *
            (1.0 / near -
             (5.0 * r2 * r2 + 4.0 * r2 * (1.0 - p2) - one_p2 * one_p2) / far52);
  return c;
}

double energy_plane(const DipoleProjection& proj) {
  return -(proj.d_rho_sq + proj.d_phi_sq + 2.0 * proj.d_z_sq) / proj.d_p_sq;
}

double energy_hemisphere(const DipoleProjection& proj, const RCoefficients& r) {
  return -(proj.d_rho_sq * r.rho_rho + proj.d_phi_sq * r.phi_phi +
           proj.d_z_sq * r.zz + proj.d_rho_z * r.rho_z) /
         proj.d_p_sq;
}

double energy_hemisphere(const DipoleProjection& proj, double rho0_bar,
                         const GeometryConfig& geo) {
  return energy_hemisphere(proj, r_coefficients(rho0_bar, geo));
}

EnergyBreakdown energy_total(const ParticleAnisotropy& aniso,
                             const Orientation& orient,
                             const PlanePosition& pos,
                             const GeometryConfig& geo) {
  EnergyBreakdown e;
  e.r = r_coefficients(pos.rho(), geo);
  e.projection = project(aniso, orient, pos.phi());
  e.u0 = energy_plane(e.projection);
  e.u_h = energy_hemisphere(e.projection, e.r);
  e.total = e.u0 + e.u_h;
  return e;
}

double hemisphere_energy_at(const ParticleAnisotropy& aniso,
                            const Orientation& orient, const PlanePosition& pos,
                            const GeometryConfig& geo) {
  return energy_hemisphere(project(aniso, orient, pos.phi()), pos.rho(), geo);
}

LateralForce lateral_force(const ParticleAnisotropy& aniso,
                           const Orientation& orient, const PlanePosition& pos,
                           const GeometryConfig& geo, ForceMode mode,
                           double step) {
  if (!(step > 0.0)) throw DomainError("force step must be positive");

  const double r2 = geo.r_bar() * geo.r_bar();
  if (!(r2 < 1.0 + pos.rho() * pos.rho())) {
    throw DomainError("particle is not outside the hemisphere");
  }
  // the outermost stencil nodes sit at distance `step` along each axis
  for (const auto [dx, dy] : std::array<std::array<double, 2>, 4>{
           {{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}}}) {
    const double rho = std::hypot(pos.x + dx, pos.y + dy);
    if (!(r2 < 1.0 + rho * rho)) {
      throw DomainError("force stencil leaves the exterior domain");
    }
  }

  auto energy = [&](double x, double y) {
    const PlanePosition p{x, y};
    const EnergyBreakdown e = energy_total(aniso, orient, p, geo);
    return mode == ForceMode::total ? e.total : e.u_h;
  };
  auto central = [&](double h, double ex, double ey) {
    return (energy(pos.x + h * ex, pos.y + h * ey) -
            energy(pos.x - h * ex, pos.y - h * ey)) /
           (2.0 * h);
  };
  auto derivative = [&](double ex, double ey) {
    const double coarse = central(step, ex, ey);
    const double fine = central(0.5 * step, ex, ey);
    return (4.0 * fine - coarse) / 3.0;
  };

  return {-derivative(1.0, 0.0), -derivative(0.0, 1.0)};
}

}  // namespace vdw
