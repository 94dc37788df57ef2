#include "vdw/oracle.hpp"

#include <array>
#include <cmath>
#include <span>
#include <sstream>
#include <utility>

#include "vdw/errors.hpp"

namespace vdw {

namespace {

// Reduced-unit prefactor: 1/(8 pi eps0) over <d_p^2>/(64 pi eps0 z0^3).
constexpr double kEzPrefactor = 8.0;

struct Tap {
  int offset;
  double weight;
};

constexpr std::array<Tap, 2> kFirstDerivative2{{{-1, -0.5}, {1, 0.5}}};
constexpr std::array<Tap, 4> kFirstDerivative4{
    {{-2, 1.0 / 12.0}, {-1, -8.0 / 12.0}, {1, 8.0 / 12.0}, {2, -1.0 / 12.0}}};

std::span<const Tap> taps_for(int order) {
  if (order == 2) return kFirstDerivative2;
  if (order == 4) return kFirstDerivative4;
  throw DomainError("stencil order must be 2 or 4");
}

void check_config(const StencilConfig& cfg) {
  if (!(cfg.step > 0.0)) throw DomainError("stencil step must be positive");
  if (cfg.richardson_levels < 1) {
    throw DomainError("at least one Richardson level is required");
  }
  taps_for(cfg.order);
}

double contract(const Eigen::Matrix3d& tensor, const Eigen::Matrix3d& h) {
  return (tensor.array() * h.array()).sum();
}

}  // namespace

HomogeneousGreen exact_homogeneous_green(const GeometryConfig& geo) {
  return [geo](const CylPoint& r, const CylPoint& r_src) {
    return green_homogeneous(r, r_src, geo);
  };
}

Eigen::Matrix3d mixed_hessian(const HomogeneousGreen& green, const Vec3& r0,
                              double step, int order) {
  const auto taps = taps_for(order);
  Eigen::Matrix3d h;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double acc = 0.0;
      for (const Tap& a : taps) {
        Vec3 r = r0;
        r[i] += a.offset * step;
        const CylPoint field = CylPoint::from_cartesian(r);
        for (const Tap& b : taps) {
          Vec3 rp = r0;
          rp[j] += b.offset * step;
          acc += a.weight * b.weight * green(field, CylPoint::from_cartesian(rp));
        }
      }
      h(i, j) = acc / (step * step);
    }
  }
  return h;
}

Eigen::Matrix3d mixed_hessian(const HomogeneousGreen& green,
                              const GeometryConfig& geo, const Vec3& r0,
                              const StencilConfig& cfg) {
  check_config(cfg);
  const double needed = 4.0 * cfg.step;
  if (!(geo.clearance(r0) > needed)) {
    std::ostringstream os;
    os << "stencil of step " << cfg.step << " does not clear the conductor";
    throw DomainError(os.str());
  }

  // Richardson tableau on step, step/2, step/4, ...; error ~ h^order.
  std::vector<Eigen::Matrix3d> level;
  double h = cfg.step;
  for (int k = 0; k < cfg.richardson_levels; ++k, h *= 0.5) {
    level.push_back(mixed_hessian(green, r0, h, cfg.order));
  }
  Eigen::Matrix3d previous = level.front();
  for (int col = 1; col < cfg.richardson_levels; ++col) {
    const double factor = std::pow(2.0, cfg.order + 2 * (col - 1));
    for (std::size_t k = level.size() - 1; k >= static_cast<std::size_t>(col);
         --k) {
      level[k] = (factor * level[k] - level[k - 1]) / (factor - 1.0);
    }
    previous = level[col - 1];
  }
  const Eigen::Matrix3d& best = level.back();
  if (cfg.richardson_levels > 1) {
    const double scale = best.cwiseAbs().maxCoeff();
    const double gap = (best - previous).cwiseAbs().maxCoeff();
    if (gap > cfg.max_level_disagreement * scale) {
      std::ostringstream os;
      os << "mixed derivatives did not converge: relative level gap "
         << gap / scale;
      throw ConvergenceError(os.str());
    }
  }
  return best;
}

double ez_energy(const DipoleProjection& proj, const CylPoint& r0,
                 const GeometryConfig& geo, const StencilConfig& cfg,
                 const HomogeneousGreen& green) {
  const Eigen::Matrix3d h_lab =
      mixed_hessian(green, geo, r0.to_cartesian(), cfg);
  const Eigen::Matrix3d frame = cylindrical_frame(r0.phi());
  const Eigen::Matrix3d h_cyl = frame * h_lab * frame.transpose();

  Eigen::Matrix3d d = Eigen::Matrix3d::Zero();
  d(0, 0) = proj.d_rho_sq;
  d(1, 1) = proj.d_phi_sq;
  d(2, 2) = proj.d_z_sq;
  d(0, 2) = proj.d_rho_z;
  d(2, 0) = proj.d_rho_z;
  return kEzPrefactor * contract(d, h_cyl) / proj.d_p_sq;
}

double ez_energy(const DipoleProjection& proj, const CylPoint& r0,
                 const GeometryConfig& geo, const StencilConfig& cfg) {
  return ez_energy(proj, r0, geo, cfg, exact_homogeneous_green(geo));
}

double ez_energy(const Eigen::Matrix3d& lab_tensor, double d_p_sq,
                 const Vec3& r0, const GeometryConfig& geo,
                 const StencilConfig& cfg) {
  const Eigen::Matrix3d h =
      mixed_hessian(exact_homogeneous_green(geo), geo, r0, cfg);
  return kEzPrefactor * contract(lab_tensor, h) / d_p_sq;
}

}  // namespace vdw
