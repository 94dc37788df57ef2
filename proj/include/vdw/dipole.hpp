#pragma once

// Second moments <d_i d_j> of a cylindrically symmetric particle: <d_p^2>
// along the symmetry axis and beta * <d_p^2> in the two normal directions.

#include <Eigen/Core>

namespace vdw {

class ParticleAnisotropy {
 public:
  // Throws DomainError unless 0 < beta <= 1 and d_p_sq > 0.
  explicit ParticleAnisotropy(double beta, double d_p_sq = 1.0);

  double beta() const { return beta_; }
  double d_p_sq() const { return d_p_sq_; }
  bool is_isotropic() const { return beta_ == 1.0; }

 private:
  double beta_;
  double d_p_sq_;
};

// Symmetry-axis direction: polar angle theta from +z, azimuth gamma from +x.
// The axis is headless, so theta is folded into [0, pi/2] (flipping gamma by
// pi when needed).
class Orientation {
 public:
  Orientation(double theta, double gamma);

  double theta() const { return theta_; }
  double gamma() const { return gamma_; }

 private:
  double theta_;
  double gamma_;
};

// The entries of the tensor in the local (rho, phi, z) frame that enter the
// energy. d_p_sq carries the scale so energies can be reported in reduced
// units.
struct DipoleProjection {
  double d_rho_sq;
  double d_phi_sq;
  double d_z_sq;
  double d_rho_z;
  double d_p_sq;

  double trace() const { return d_rho_sq + d_phi_sq + d_z_sq; }
};

DipoleProjection project(const ParticleAnisotropy& aniso,
                         const Orientation& orient, double phi0);

// Full symmetric tensor in the lab Cartesian frame, built by rotating
// diag(beta, beta, 1) * d_p_sq.
Eigen::Matrix3d lab_tensor(const ParticleAnisotropy& aniso,
                           const Orientation& orient);

// Full tensor in the local cylindrical frame (rho, phi, z) at azimuth phi0.
// Independent of project(): it goes through explicit rotation matrices.
Eigen::Matrix3d cylindrical_tensor(const ParticleAnisotropy& aniso,
                                   const Orientation& orient, double phi0);

// Rows are the unit vectors rho-hat, phi-hat, z-hat at azimuth phi0, so
// frame * v maps Cartesian components to cylindrical ones.
Eigen::Matrix3d cylindrical_frame(double phi0);

}  // namespace vdw
