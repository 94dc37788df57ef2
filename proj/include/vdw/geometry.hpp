#pragma once

// Grounded conducting plane z = 0 carrying a hemispherical boss of radius R
// centred at the origin. All lengths are in units of the particle height z0,
// all charges in units of the source charge.

#include <array>

#include <Eigen/Core>

namespace vdw {

using Vec3 = Eigen::Vector3d;

class CylPoint {
 public:
  CylPoint() = default;
  // A negative rho is folded onto the opposite azimuth; phi is wrapped to
  // [0, 2*pi).
  CylPoint(double rho, double phi, double z);

  static CylPoint from_cartesian(const Vec3& p);

  double rho() const { return rho_; }
  double phi() const { return phi_; }
  double z() const { return z_; }

  Vec3 to_cartesian() const;

 private:
  double rho_ = 0.0;
  double phi_ = 0.0;
  double z_ = 0.0;
};

class GeometryConfig {
 public:
  // Throws DomainError unless r_bar > 0 and finite.
  explicit GeometryConfig(double r_bar);

  double r_bar() const { return r_bar_; }

  // Strictly above the plane and strictly outside the hemisphere.
  bool is_exterior(const CylPoint& p) const;
  bool is_exterior(const Vec3& p) const;

  // Euclidean distance from p to the conductor (plane or hemisphere);
  // negative inside.
  double clearance(const Vec3& p) const;

 private:
  double r_bar_;
};

struct PointCharge {
  CylPoint position;
  double charge;
};

struct ImageSystem {
  double r_bar;
  PointCharge source;
  PointCharge image_plane;         // mirror of the source in z = 0
  PointCharge image_sphere;        // Kelvin inversion of the source
  PointCharge image_sphere_plane;  // mirror of the inverted charge

  std::array<PointCharge, 3> images() const {
    return {image_plane, image_sphere, image_sphere_plane};
  }

  // Potential of all four charges at r. No domain checks, so it may be used
  // on the closure of the exterior (points exactly on the conductor).
  double potential(const CylPoint& r) const;

  // Potential of the three images only.
  double image_potential(const CylPoint& r) const;
};

ImageSystem build_image_system(const CylPoint& src, const GeometryConfig& geo);

// Law-of-cosines separation in cylindrical coordinates.
double distance(const CylPoint& a, const CylPoint& b);

// Dirichlet Green's function, 1/|r - r'| normalisation.
double green_function(const CylPoint& r, const CylPoint& r_src,
                      const GeometryConfig& geo);

// G minus the free-space term; regular at r == r_src.
double green_homogeneous(const CylPoint& r, const CylPoint& r_src,
                         const GeometryConfig& geo);

}  // namespace vdw
