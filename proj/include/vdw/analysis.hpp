#pragma once

// Studies of the hemisphere energy U_h: landscapes over the
// plane z = z0, the nature of the stationary point above the apex, the
// (beta, R/z0) phase diagram of that point and the minima along the x-axis.

#include <cstddef>
#include <optional>
#include <vector>

#include "vdw/dipole.hpp"
#include "vdw/energy.hpp"
#include "vdw/geometry.hpp"

namespace vdw {

struct Interval {
  double lo;
  double hi;
};

// n equally spaced samples from lo to hi inclusive; n == 1 gives {lo}.
std::vector<double> linspace(const Interval& range, std::size_t n);

struct LandscapeGrid {
  Interval x_range;
  Interval y_range;
  std::size_t nx;
  std::size_t ny;
  std::vector<double> xs;
  std::vector<double> ys;
  // x-major: values[ix * ny + iy]
  std::vector<double> values;
  ParticleAnisotropy aniso;
  Orientation orient;
  GeometryConfig geo;

  double at(std::size_t ix, std::size_t iy) const { return values[ix * ny + iy]; }
  // Index pair of the smallest value (first one in x-major order on ties).
  std::pair<std::size_t, std::size_t> argmin() const;
};

LandscapeGrid landscape(const ParticleAnisotropy& aniso,
                        const Orientation& orient, const GeometryConfig& geo,
                        const Interval& x_range, const Interval& y_range,
                        std::size_t nx, std::size_t ny);

enum class OriginKind { minimum, maximum, saddle, degenerate };

// Dark (minimum) / light (maximum) classification along the x-axis.
enum class AxisExtremum { minimum, maximum, degenerate };

const char* to_string(OriginKind kind);
const char* to_string(AxisExtremum kind);

inline constexpr double kCurvatureTol = 1e-10;
inline constexpr double kCurvatureStep = 1e-3;

struct OriginClassification {
  OriginKind kind;
  // Along x only; this is what the phase diagram records.
  AxisExtremum axis_kind;
  double curvature_xx;
  double curvature_yy;
};

// Second derivative of U_h at the apex along the unit direction
// (cos a, sin a): 5-point stencil at h and h/2, Richardson-combined.
double origin_curvature(const ParticleAnisotropy& aniso,
                        const Orientation& orient, const GeometryConfig& geo,
                        double direction, double step = kCurvatureStep);

AxisExtremum classify_axis(double curvature_xx, double tol = kCurvatureTol);

OriginClassification classify_origin(const ParticleAnisotropy& aniso,
                                     const Orientation& orient,
                                     const GeometryConfig& geo,
                                     double tol = kCurvatureTol);

struct PhaseResolution {
  std::size_t n_beta = 200;
  std::size_t n_r_bar = 200;
};

struct PhaseOptions {
  double curvature_tol = kCurvatureTol;
  // bisection widths for boundary points (in R/z0) and beta_critical
  double r_bar_tol = 1e-8;
  double beta_tol = 1e-6;
  // The critical-beta predicate probes R/z0 on a geometric ladder from
  // max(r_bar_floor, r_bar_range.lo) up to r_bar_range.hi.
  double r_bar_floor = 1e-3;
  std::size_t probe_points = 256;
};

struct BoundaryPoint {
  double beta;
  double r_bar;
};

struct PhaseDiagram {
  Interval beta_range;
  Interval r_bar_range;
  Orientation orient;
  // Samples exclude the lower end point: lo + (i + 1) * (hi - lo) / n.
  std::vector<double> betas;
  std::vector<double> r_bars;
  // beta-major: grid[ib * r_bars.size() + ir]
  std::vector<AxisExtremum> grid;
  std::vector<double> curvature_xx;
  std::vector<BoundaryPoint> boundary;
  // beta columns whose classification changes sign more than once
  std::vector<std::size_t> multi_crossing_columns;
  // Supremum of beta for which some R/z0 turns the apex into a maximum;
  // empty if no beta in range admits one, beta_range.hi if all do.
  std::optional<double> beta_critical;

  AxisExtremum at(std::size_t ib, std::size_t ir) const {
    return grid[ib * r_bars.size() + ir];
  }
};

// x-curvature of U_h at the apex, as a function of (beta, R/z0).
double axis_curvature(double beta, double r_bar, const Orientation& orient);

// True if the x-curvature at the apex changes sign somewhere on the probe
// ladder for this beta.
bool has_sign_inversion(double beta, const Orientation& orient,
                        const Interval& r_bar_range,
                        const PhaseOptions& options = {});

PhaseDiagram phase_diagram(const Orientation& orient,
                           const Interval& r_bar_range,
                           const Interval& beta_range,
                           const PhaseResolution& resolution = {},
                           const PhaseOptions& options = {});

struct AxisMinimum {
  double x;
  double u_h;
};

inline constexpr std::size_t kAxisScanPoints = 4001;

// Interior local minima of U_h(x, 0) on the interval, located by a dense
// scan and refined by golden-section search. End points are never
// reported.
std::vector<AxisMinimum> find_minima_on_axis(
    const ParticleAnisotropy& aniso, const Orientation& orient,
    const GeometryConfig& geo, const Interval& search_interval,
    std::size_t scan_points = kAxisScanPoints);

}  // namespace vdw
