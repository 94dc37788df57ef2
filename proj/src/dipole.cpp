#include "vdw/dipole.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Geometry>

#include "vdw/errors.hpp"

namespace vdw {

ParticleAnisotropy::ParticleAnisotropy(double beta, double d_p_sq)
    : beta_(beta), d_p_sq_(d_p_sq) {
  if (!(beta > 0.0 && beta <= 1.0)) {
    std::ostringstream os;
    os << "anisotropy beta must lie in (0, 1], got " << beta;
    throw DomainError(os.str());
  }
  if (!(d_p_sq > 0.0) || !std::isfinite(d_p_sq)) {
    std::ostringstream os;
    os << "dipole scale <d_p^2> must be positive and finite, got " << d_p_sq;
    throw DomainError(os.str());
  }
}

Orientation::Orientation(double theta, double gamma) {
  constexpr double pi = std::numbers::pi;
  if (!std::isfinite(theta) || !std::isfinite(gamma)) {
    throw DomainError("orientation angles must be finite");
  }
  double t = std::fmod(theta, 2.0 * pi);
  if (t < 0.0) t += 2.0 * pi;
  if (t > pi) {
    t = 2.0 * pi - t;
    gamma += pi;
  }
  if (t > pi / 2) {
    t = pi - t;
    gamma += pi;
  }
  theta_ = t;
  gamma_ = gamma;
}

DipoleProjection project(const ParticleAnisotropy& aniso,
                         const Orientation& orient, double phi0) {
  const double b = aniso.beta();
  const double dp = aniso.d_p_sq();
  const double st = std::sin(orient.theta());
  const double ct = std::cos(orient.theta());
  const double rel = orient.gamma() - phi0;
  const double cr = std::cos(rel);
  const double sr = std::sin(rel);

  DipoleProjection p;
  p.d_rho_sq = dp * (b + (1.0 - b) * st * st * cr * cr);
  p.d_phi_sq = dp * (b + (1.0 - b) * st * st * sr * sr);
  p.d_z_sq = dp * (b + (1.0 - b) * ct * ct);
  p.d_rho_z = dp * (0.5 * (1.0 - b) * std::sin(2.0 * orient.theta()) * cr);
  p.d_p_sq = dp;
  return p;
}

namespace {

// Rotation taking the body z-axis onto the direction (theta, azimuth).
Eigen::Matrix3d axis_rotation(double theta, double azimuth) {
  return (Eigen::AngleAxisd(azimuth, Eigen::Vector3d::UnitZ()) *
          Eigen::AngleAxisd(theta, Eigen::Vector3d::UnitY()))
      .toRotationMatrix();
}

Eigen::Matrix3d body_tensor(const ParticleAnisotropy& aniso) {
  const double dp = aniso.d_p_sq();
  return Eigen::Vector3d(aniso.beta() * dp, aniso.beta() * dp, dp).asDiagonal();
}

}  // namespace

Eigen::Matrix3d lab_tensor(const ParticleAnisotropy& aniso,
                           const Orientation& orient) {
  const Eigen::Matrix3d rot = axis_rotation(orient.theta(), orient.gamma());
  return rot * body_tensor(aniso) * rot.transpose();
}

Eigen::Matrix3d cylindrical_tensor(const ParticleAnisotropy& aniso,
                                   const Orientation& orient, double phi0) {
  const Eigen::Matrix3d frame = cylindrical_frame(phi0);
  return frame * lab_tensor(aniso, orient) * frame.transpose();
}

Eigen::Matrix3d cylindrical_frame(double phi0) {
  const double c = std::cos(phi0);
  const double s = std::sin(phi0);
  Eigen::Matrix3d f;
  f << c, s, 0.0,
      -s, c, 0.0,
      0.0, 0.0, 1.0;
  return f;
}

}  // namespace vdw
