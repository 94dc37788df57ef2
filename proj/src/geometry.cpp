#include "vdw/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "vdw/errors.hpp"

namespace vdw {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double phi) {
  double w = std::fmod(phi, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  // fmod of a value just below zero can round up to exactly 2*pi
  if (w >= kTwoPi) w = 0.0;
  return w;
}

std::string describe(const CylPoint& p) {
  std::ostringstream os;
  os.precision(17);
  os << "(rho=" << p.rho() << ", phi=" << p.phi() << ", z=" << p.z() << ")";
  return os.str();
}

void require_exterior(const CylPoint& p, const GeometryConfig& geo,
                      const char* what) {
  if (!geo.is_exterior(p)) {
    throw DomainError(std::string(what) + " " + describe(p) +
                      " is not strictly outside the conductor");
  }
}

}  // namespace

CylPoint::CylPoint(double rho, double phi, double z) : z_(z) {
  if (rho < 0.0) {
    rho = -rho;
    phi += std::numbers::pi;
  }
  rho_ = rho;
  phi_ = wrap_angle(phi);
}

CylPoint CylPoint::from_cartesian(const Vec3& p) {
  const double rho = std::hypot(p.x(), p.y());
  const double phi = rho > 0.0 ? std::atan2(p.y(), p.x()) : 0.0;
  return CylPoint(rho, phi, p.z());
}

Vec3 CylPoint::to_cartesian() const {
  return {rho_ * std::cos(phi_), rho_ * std::sin(phi_), z_};
}

GeometryConfig::GeometryConfig(double r_bar) : r_bar_(r_bar) {
  if (!(r_bar > 0.0) || !std::isfinite(r_bar)) {
    std::ostringstream os;
    os << "hemisphere radius must be positive and finite, got " << r_bar;
    throw DomainError(os.str());
  }
}

bool GeometryConfig::is_exterior(const CylPoint& p) const {
  return p.z() > 0.0 && p.rho() * p.rho() + p.z() * p.z() > r_bar_ * r_bar_;
}

bool GeometryConfig::is_exterior(const Vec3& p) const {
  return p.z() > 0.0 && p.squaredNorm() > r_bar_ * r_bar_;
}

double GeometryConfig::clearance(const Vec3& p) const {
  const double to_sphere = p.norm() - r_bar_;
  return std::min(p.z(), to_sphere);
}

namespace {

// Potential at r of charge q at `upper` plus -q at its mirror in z = 0.
// Uses 1/d - 1/d' = (d'^2 - d^2) / (d d' (d + d')) with d'^2 - d^2 = 4 z z_q,
// which stays accurate (and exactly zero on the plane) where the two terms
// nearly cancel.
double mirror_pair(const PointCharge& upper, const CylPoint& r) {
  const CylPoint& p = upper.position;
  const double d = distance(r, p);
  const double dm = distance(r, CylPoint(p.rho(), p.phi(), -p.z()));
  return upper.charge * 4.0 * r.z() * p.z() / (d * dm * (d + dm));
}

// Potential at r of charge q at p plus its Kelvin image -q R/|p| at
// p R^2/|p|^2. Uses s^2 dk^2 - R^2 d^2 = (|r|^2 - R^2)(s^2 - R^2), s = |p|,
// so the sum stays accurate where it vanishes on the sphere.
double kelvin_pair(double q, const CylPoint& p, const CylPoint& kelvin,
                   double r_bar, const CylPoint& r) {
  const double s = std::hypot(p.rho(), p.z());
  const double rn = std::hypot(r.rho(), r.z());
  const double d = distance(r, p);
  const double dk = distance(r, kelvin);
  const double num = (rn - r_bar) * (rn + r_bar) * (s - r_bar) * (s + r_bar);
  return q * num / (s * d * dk * (s * dk + r_bar * d));
}

}  // namespace

double ImageSystem::image_potential(const CylPoint& r) const {
  return image_plane.charge / distance(r, image_plane.position) +
         mirror_pair(image_sphere, r);
}

double ImageSystem::potential(const CylPoint& r) const {
  // Both groupings are exact; pick the one that is well conditioned near
  // the closer conductor surface.
  const double to_plane = std::abs(r.z());
  const double to_sphere = std::abs(std::hypot(r.rho(), r.z()) - r_bar);
  if (to_plane <= to_sphere) {
    return mirror_pair(source, r) + mirror_pair(image_sphere, r);
  }
  return kelvin_pair(source.charge, source.position, image_sphere.position,
                     r_bar, r) +
         kelvin_pair(image_plane.charge, image_plane.position,
                     image_sphere_plane.position, r_bar, r);
}

ImageSystem build_image_system(const CylPoint& src, const GeometryConfig& geo) {
  require_exterior(src, geo, "source");
  const double r = geo.r_bar();
  const double s2 = src.rho() * src.rho() + src.z() * src.z();
  const double k = r / std::sqrt(s2);
  const double shrink = r * r / s2;

  ImageSystem sys;
  sys.r_bar = r;
  sys.source = {src, 1.0};
  sys.image_plane = {CylPoint(src.rho(), src.phi(), -src.z()), -1.0};
  sys.image_sphere = {
      CylPoint(src.rho() * shrink, src.phi(), src.z() * shrink), -k};
  sys.image_sphere_plane = {
      CylPoint(src.rho() * shrink, src.phi(), -src.z() * shrink), k};
  return sys;
}

double distance(const CylPoint& a, const CylPoint& b) {
  // rho^2 + rho'^2 - 2 rho rho' cos(dphi) rewritten without the cancellation
  // of the cosine law
  const double dz = a.z() - b.z();
  const double drho = a.rho() - b.rho();
  const double s = std::sin(0.5 * (a.phi() - b.phi()));
  return std::sqrt(drho * drho + 4.0 * a.rho() * b.rho() * s * s + dz * dz);
}

double green_function(const CylPoint& r, const CylPoint& r_src,
                      const GeometryConfig& geo) {
  require_exterior(r, geo, "field point");
  const ImageSystem sys = build_image_system(r_src, geo);
  const double d = distance(r, r_src);
  if (d == 0.0) {
    throw SingularityError("Green's function evaluated at coincident points " +
                           describe(r));
  }
  return sys.potential(r);
}

double green_homogeneous(const CylPoint& r, const CylPoint& r_src,
                         const GeometryConfig& geo) {
  require_exterior(r, geo, "field point");
  return build_image_system(r_src, geo).image_potential(r);
}

}  // namespace vdw
