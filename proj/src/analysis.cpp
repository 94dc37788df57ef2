#include "vdw/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "vdw/errors.hpp"
#include "vdw/parallel.hpp"
#include "vdw/search.hpp"

namespace vdw {

namespace {

void require_range(const Interval& r, const char* what) {
  if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.hi < r.lo) {
    throw DomainError(std::string(what) + " range is empty or not finite");
  }
}

// lo + (i + 1) * (hi - lo) / n, i = 0 .. n-1
std::vector<double> open_left_samples(const Interval& r, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = r.lo + static_cast<double>(i + 1) * (r.hi - r.lo) /
                        static_cast<double>(n);
  }
  return out;
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

std::vector<double> linspace(const Interval& range, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = range.lo;
    return out;
  }
  const double step = (range.hi - range.lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = range.lo + static_cast<double>(i) * step;
  }
  if (n > 1) out.back() = range.hi;
  return out;
}

std::pair<std::size_t, std::size_t> LandscapeGrid::argmin() const {
  const auto it = std::min_element(values.begin(), values.end());
  const auto k = static_cast<std::size_t>(it - values.begin());
  return {k / ny, k % ny};
}

LandscapeGrid landscape(const ParticleAnisotropy& aniso,
                        const Orientation& orient, const GeometryConfig& geo,
                        const Interval& x_range, const Interval& y_range,
                        std::size_t nx, std::size_t ny) {
  require_range(x_range, "x");
  require_range(y_range, "y");
  if (nx == 0 || ny == 0) throw DomainError("landscape needs nx, ny >= 1");

  LandscapeGrid grid{x_range, y_range, nx, ny, linspace(x_range, nx),
                     linspace(y_range, ny), std::vector<double>(nx * ny),
                     aniso, orient, geo};
  parallel_for(nx, [&](std::size_t ix) {
    for (std::size_t iy = 0; iy < ny; ++iy) {
      grid.values[ix * ny + iy] =
          hemisphere_energy_at(aniso, orient, {grid.xs[ix], grid.ys[iy]}, geo);
    }
  });
  return grid;
}

const char* to_string(OriginKind kind) {
  switch (kind) {
    case OriginKind::minimum: return "minimum";
    case OriginKind::maximum: return "maximum";
    case OriginKind::saddle: return "saddle";
    case OriginKind::degenerate: return "degenerate";
  }
  return "unknown";
}

const char* to_string(AxisExtremum kind) {
  switch (kind) {
    case AxisExtremum::minimum: return "minimum";
    case AxisExtremum::maximum: return "maximum";
    case AxisExtremum::degenerate: return "degenerate";
  }
  return "unknown";
}

double origin_curvature(const ParticleAnisotropy& aniso,
                        const Orientation& orient, const GeometryConfig& geo,
                        double direction, double step) {
  const double ux = std::cos(direction);
  const double uy = std::sin(direction);
  auto u = [&](double s) {
    return hemisphere_energy_at(aniso, orient, {s * ux, s * uy}, geo);
  };
  const double centre = u(0.0);
  auto second = [&](double h) {
    return (-u(2 * h) + 16.0 * u(h) - 30.0 * centre + 16.0 * u(-h) -
            u(-2 * h)) /
           (12.0 * h * h);
  };
  return (16.0 * second(0.5 * step) - second(step)) / 15.0;
}

AxisExtremum classify_axis(double curvature_xx, double tol) {
  if (curvature_xx > tol) return AxisExtremum::minimum;
  if (curvature_xx < -tol) return AxisExtremum::maximum;
  return AxisExtremum::degenerate;
}

OriginClassification classify_origin(const ParticleAnisotropy& aniso,
                                     const Orientation& orient,
                                     const GeometryConfig& geo, double tol) {
  if (!(geo.r_bar() < 1.0)) {
    throw DomainError("the apex point (0, 0, z0) lies inside the hemisphere");
  }
  OriginClassification c;
  c.curvature_xx = origin_curvature(aniso, orient, geo, 0.0);
  c.curvature_yy = origin_curvature(aniso, orient, geo, std::numbers::pi / 2);
  c.axis_kind = classify_axis(c.curvature_xx, tol);

  const bool xx_flat = std::abs(c.curvature_xx) <= tol;
  const bool yy_flat = std::abs(c.curvature_yy) <= tol;
  if (xx_flat) {
    c.kind = OriginKind::degenerate;
  } else if (c.curvature_xx < 0.0) {
    c.kind = OriginKind::maximum;
  } else if (yy_flat) {
    c.kind = OriginKind::degenerate;
  } else {
    c.kind = c.curvature_yy > 0.0 ? OriginKind::minimum : OriginKind::saddle;
  }
  return c;
}

double axis_curvature(double beta, double r_bar, const Orientation& orient) {
  return origin_curvature(ParticleAnisotropy(beta), orient,
                          GeometryConfig(r_bar), 0.0);
}

bool has_sign_inversion(double beta, const Orientation& orient,
                        const Interval& r_bar_range,
                        const PhaseOptions& options) {
  const double lo = std::max(options.r_bar_floor, r_bar_range.lo);
  const double hi = r_bar_range.hi;
  const std::size_t n = std::max<std::size_t>(options.probe_points, 2);
  const double ratio = std::pow(hi / lo, 1.0 / static_cast<double>(n - 1));
  int first = 0;
  double r = lo;
  for (std::size_t i = 0; i < n; ++i, r *= ratio) {
    const int s = sign_of(axis_curvature(beta, std::min(r, hi), orient));
    if (s == 0) continue;
    if (first == 0) {
      first = s;
    } else if (s != first) {
      return true;
    }
  }
  return false;
}

PhaseDiagram phase_diagram(const Orientation& orient,
                           const Interval& r_bar_range,
                           const Interval& beta_range,
                           const PhaseResolution& resolution,
                           const PhaseOptions& options) {
  require_range(r_bar_range, "R/z0");
  require_range(beta_range, "beta");
  if (!(r_bar_range.lo >= 0.0 && r_bar_range.hi < 1.0 &&
        r_bar_range.hi > r_bar_range.lo)) {
    throw DomainError("R/z0 range must be a non-empty subset of (0, 1)");
  }
  if (!(beta_range.lo >= 0.0 && beta_range.hi <= 1.0 &&
        beta_range.hi > beta_range.lo)) {
    throw DomainError("beta range must be a non-empty subset of (0, 1]");
  }
  if (resolution.n_beta == 0 || resolution.n_r_bar == 0) {
    throw DomainError("phase diagram resolution must be positive");
  }

  PhaseDiagram pd{beta_range, r_bar_range, orient,
                  open_left_samples(beta_range, resolution.n_beta),
                  open_left_samples(r_bar_range, resolution.n_r_bar),
                  {}, {}, {}, {}, std::nullopt};
  const std::size_t nb = pd.betas.size();
  const std::size_t nr = pd.r_bars.size();
  pd.grid.resize(nb * nr);
  pd.curvature_xx.resize(nb * nr);

  std::vector<std::vector<BoundaryPoint>> column_boundary(nb);
  std::vector<int> column_crossings(nb, 0);

  parallel_for(nb, [&](std::size_t ib) {
    const double beta = pd.betas[ib];
    auto curvature = [&](double r_bar) {
      return axis_curvature(beta, r_bar, orient);
    };
    for (std::size_t ir = 0; ir < nr; ++ir) {
      const double c = curvature(pd.r_bars[ir]);
      pd.curvature_xx[ib * nr + ir] = c;
      pd.grid[ib * nr + ir] = classify_axis(c, options.curvature_tol);
    }
    for (std::size_t ir = 0; ir + 1 < nr; ++ir) {
      const double c0 = pd.curvature_xx[ib * nr + ir];
      const double c1 = pd.curvature_xx[ib * nr + ir + 1];
      if (sign_of(c0) == sign_of(c1) || sign_of(c0) == 0) continue;
      ++column_crossings[ib];
      const auto root = bisect_root(curvature, pd.r_bars[ir],
                                    pd.r_bars[ir + 1], options.r_bar_tol);
      if (!root) {
        std::ostringstream os;
        os << "could not bracket the boundary at beta = " << beta
           << " between R/z0 = " << pd.r_bars[ir] << " and "
           << pd.r_bars[ir + 1];
        throw ResolutionError(os.str());
      }
      column_boundary[ib].push_back({beta, *root});
    }
  });

  for (std::size_t ib = 0; ib < nb; ++ib) {
    pd.boundary.insert(pd.boundary.end(), column_boundary[ib].begin(),
                       column_boundary[ib].end());
    if (column_crossings[ib] > 1) pd.multi_crossing_columns.push_back(ib);
  }

  auto inverts = [&](double beta) {
    return has_sign_inversion(beta, orient, r_bar_range, options);
  };
  double lo = pd.betas.front();
  double hi = beta_range.hi;
  if (!inverts(lo)) return pd;
  if (inverts(hi)) {
    pd.beta_critical = hi;
    return pd;
  }
  while (hi - lo > options.beta_tol) {
    const double mid = 0.5 * (lo + hi);
    (inverts(mid) ? lo : hi) = mid;
  }
  pd.beta_critical = 0.5 * (lo + hi);
  return pd;
}

std::vector<AxisMinimum> find_minima_on_axis(const ParticleAnisotropy& aniso,
                                             const Orientation& orient,
                                             const GeometryConfig& geo,
                                             const Interval& search_interval,
                                             std::size_t scan_points) {
  require_range(search_interval, "search");
  if (scan_points < 3) throw DomainError("axis scan needs at least 3 points");

  auto u = [&](double x) {
    return hemisphere_energy_at(aniso, orient, {x, 0.0}, geo);
  };
  const std::vector<double> xs = linspace(search_interval, scan_points);
  std::vector<double> us(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) us[i] = u(xs[i]);

  // Golden-section search stalls once U differences reach round-off
  // (|dx| ~ 1e-8); the final digits come from the sign change of a central
  // difference slope.
  constexpr double kSlopeStep = 1e-6;
  auto slope = [&](double x) {
    return (u(x + kSlopeStep) - u(x - kSlopeStep)) / (2.0 * kSlopeStep);
  };

  std::vector<AxisMinimum> minima;
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    if (!(us[i] < us[i - 1] && us[i] <= us[i + 1])) continue;
    const double lo = xs[i - 1];
    const double hi = xs[i + 1];
    ScalarMinimum m = golden_section_minimize(u, lo, hi, 1e-7 * (hi - lo));
    const double reach = 1e-4 * (hi - lo);
    const double a = std::max(lo, m.x - reach);
    const double b = std::min(hi, m.x + reach);
    if (const auto root = bisect_root(slope, a, b, 1e-13)) {
      if (const double v = u(*root); v <= m.value + 1e-14 * std::abs(v)) {
        m = {*root, v};
      }
    }
    if (us[i] <= m.value) m = {xs[i], us[i]};
    minima.push_back({m.x, m.value});
  }
  return minima;
}

}  // namespace vdw
