#pragma once

// Reference evaluation of the van der Waals energy straight from the
// Eberlein-Zietal contraction
//
//   U(r0) = 1/(8 pi eps0) sum_ij <d_i d_j> d/dr_i d/dr'_j G_H(r, r') |r=r'=r0
//
// with the mixed derivatives taken numerically from the image-charge
// Green's function. Slow by construction; used only for cross-checking the
// closed-form energy.

#include <functional>

#include <Eigen/Core>

#include "vdw/dipole.hpp"
#include "vdw/geometry.hpp"

namespace vdw {

struct StencilConfig {
  // Round-off in G_H, amplified by 1/step^2, dominates below ~3e-4.
  double step = 1e-3;
  int order = 4;  // 2 or 4
  int richardson_levels = 2;
  // Relative disagreement between the last two levels that raises
  // ConvergenceError.
  double max_level_disagreement = 1e-5;
};

// G_H(r, r'); lets callers substitute a perturbed kernel.
using HomogeneousGreen =
    std::function<double(const CylPoint&, const CylPoint&)>;

HomogeneousGreen exact_homogeneous_green(const GeometryConfig& geo);

// Cartesian matrix H_ij = d/dr_i d/dr'_j G_H at r = r' = r0, from a single
// stencil of the given step and order.
Eigen::Matrix3d mixed_hessian(const HomogeneousGreen& green, const Vec3& r0,
                              double step, int order);

// Richardson-extrapolated mixed_hessian() following cfg. Throws DomainError
// if the stencil does not clear the conductor, ConvergenceError if the
// extrapolation levels disagree.
Eigen::Matrix3d mixed_hessian(const HomogeneousGreen& green,
                              const GeometryConfig& geo, const Vec3& r0,
                              const StencilConfig& cfg);

// Total energy U0 + U_h in units of <d_p^2> / (64 pi eps0 z0^3).
double ez_energy(const DipoleProjection& proj, const CylPoint& r0,
                 const GeometryConfig& geo, const StencilConfig& cfg = {});

double ez_energy(const DipoleProjection& proj, const CylPoint& r0,
                 const GeometryConfig& geo, const StencilConfig& cfg,
                 const HomogeneousGreen& green);

// Contraction with a full Cartesian tensor; d_p_sq sets the energy unit.
double ez_energy(const Eigen::Matrix3d& lab_tensor, double d_p_sq,
                 const Vec3& r0, const GeometryConfig& geo,
                 const StencilConfig& cfg = {});

}  // namespace vdw
