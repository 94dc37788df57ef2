#pragma once

// Closed-form van der Waals energy of a polarizable particle held at height
// z0 above the plane with a hemispherical boss. Energies are in units of
// U_ref = <d_p^2> / (64 pi eps0 z0^3), forces in U_ref / z0.

#include "vdw/dipole.hpp"
#include "vdw/geometry.hpp"

namespace vdw {

// Particle position in the plane z = z0, in units of z0.
struct PlanePosition {
  double x = 0.0;
  double y = 0.0;

  double rho() const;
  // atan2(y, x); the origin maps to phi0 = 0.
  double phi() const;
};

// Dimensionless weights of the hemisphere correction.
struct RCoefficients {
  double rho_rho;
  double phi_phi;
  double zz;
  double rho_z;
};

struct EnergyBreakdown {
  double u0;
  double u_h;
  RCoefficients r;
  DipoleProjection projection;
  double total;
};

struct LateralForce {
  double f_x;
  double f_y;
};

enum class ForceMode {
  // -grad(U0 + U_h); U0 carries the phi0 dependence of the projections.
  total,
  // -grad(U_h) alone, the quantity shown in landscape plots.
  hemisphere_only,
};

// Throws DomainError if the particle does not sit strictly outside the
// hemisphere, i.e. unless r_bar^2 < 1 + rho0_bar^2.
RCoefficients r_coefficients(double rho0_bar, const GeometryConfig& geo);

// Flat-plane energy -(d_rho^2 + d_phi^2 + 2 d_z^2) / d_p^2.
double energy_plane(const DipoleProjection& proj);

double energy_hemisphere(const DipoleProjection& proj, double rho0_bar,
                         const GeometryConfig& geo);

// Same as energy_hemisphere() with precomputed coefficients.
double energy_hemisphere(const DipoleProjection& proj, const RCoefficients& r);

EnergyBreakdown energy_total(const ParticleAnisotropy& aniso,
                             const Orientation& orient,
                             const PlanePosition& pos,
                             const GeometryConfig& geo);

// U_h only; the hot path of grid sweeps.
double hemisphere_energy_at(const ParticleAnisotropy& aniso,
                            const Orientation& orient, const PlanePosition& pos,
                            const GeometryConfig& geo);

inline constexpr double kForceStep = 1e-5;

// Central differences at steps h and h/2 combined by Richardson
// extrapolation. The orientation is held fixed in the lab frame while the
// azimuth phi0 follows the position.
LateralForce lateral_force(const ParticleAnisotropy& aniso,
                           const Orientation& orient, const PlanePosition& pos,
                           const GeometryConfig& geo,
                           ForceMode mode = ForceMode::total,
                           double step = kForceStep);

}  // namespace vdw
