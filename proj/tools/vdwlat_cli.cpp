// vdwlat: lateral van der Waals force between an anisotropic particle and a
// conducting plane with a hemispherical boss.
//
//   vdwlat energy    --beta B --theta T --gamma G --rbar R --x X --y Y
//   vdwlat landscape --beta B --theta T --gamma G --rbar R --out STEM ...
//   vdwlat phase     --theta T --gamma G --out STEM ...
//   vdwlat minima    --beta B --theta T --gamma G --rbar R ...
//   vdwlat verify    [--seed N] [--samples N]
//
// Exit codes: 0 success, 2 domain error, 3 configuration error,
// 4 verification failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "vdw/analysis.hpp"
#include "vdw/energy.hpp"
#include "vdw/errors.hpp"
#include "vdw/io.hpp"
#include "vdw/verify.hpp"

using nlohmann::json;

namespace {

constexpr int kExitDomain = 2;
constexpr int kExitConfig = 3;
constexpr int kExitVerify = 4;

constexpr double kEpsilon0 = 8.8541878128e-12;  // F/m

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void report_error(const char* kind, const std::string& message) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

struct ParticleArgs {
  double beta = 1.0;
  double theta = 0.0;
  double gamma = 0.0;
  double r_bar = 0.5;
};

// Angles as typed; converted to radians once parsing succeeds.
struct AngleArgs {
  std::optional<double> theta;
  double gamma = 0.0;
};

struct UnitArgs {
  std::optional<double> d_p_sq;
  std::optional<double> z0;
};

struct Settings {
  bool degrees = false;
  AngleArgs angles;
  UnitArgs units;
  ParticleArgs particle;

  // energy
  double x = 0.0;
  double y = 0.0;
  std::string force_mode = "total";

  // landscape / minima
  double x_min = -2.0, x_max = 2.0, y_min = -2.0, y_max = 2.0;
  std::size_t nx = 201, ny = 201;
  std::size_t scan_points = vdw::kAxisScanPoints;

  // phase
  double beta_min = 0.0, beta_max = 1.0;
  double r_bar_min = 0.0, r_bar_max = 0.95;
  std::size_t n_beta = 200, n_r_bar = 200;

  std::string out;

  // verify
  std::uint64_t seed = vdw::VerifyOptions{}.seed;
  std::size_t samples = vdw::VerifyOptions{}.samples;
  double perturb_green = 0.0;
};

double to_radians(double angle, bool degrees) {
  return degrees ? angle * std::numbers::pi / 180.0 : angle;
}

// Energy unit <d_p^2>/(64 pi eps0 z0^3) in joules, when SI output is on.
std::optional<double> energy_unit_joule(const UnitArgs& u) {
  if (u.d_p_sq.has_value() != u.z0.has_value()) {
    throw ConfigError("SI output needs both --dpsq and --z0");
  }
  if (!u.d_p_sq) return std::nullopt;
  if (!(*u.d_p_sq > 0.0) || !(*u.z0 > 0.0)) {
    throw ConfigError("--dpsq and --z0 must be positive");
  }
  return *u.d_p_sq /
         (64.0 * std::numbers::pi * kEpsilon0 * std::pow(*u.z0, 3));
}

json units_json(const Settings& s, std::optional<double> unit_j) {
  if (!unit_j) return {{"mode", "reduced"}};
  return {{"mode", "si"},
          {"d_p_sq", *s.units.d_p_sq},
          {"z0", *s.units.z0},
          {"energy_unit_joule", *unit_j},
          {"force_unit_newton", *unit_j / *s.units.z0}};
}

json particle_json(const ParticleArgs& p) {
  return {{"beta", p.beta},
          {"theta", p.theta},
          {"gamma", p.gamma},
          {"r_bar", p.r_bar}};
}

void add_particle_options(CLI::App* cmd, Settings& s, bool with_beta = true,
                          bool with_rbar = true) {
  if (with_beta) {
    cmd->add_option("--beta", s.particle.beta,
                    "anisotropy <d_n^2>/<d_p^2>, in (0, 1]")
        ->required();
  }
  cmd->add_option("--theta", s.angles.theta,
                  "polar angle of the symmetry axis");
  cmd->add_option("--gamma", s.angles.gamma,
                  "azimuth of the symmetry axis");
  if (with_rbar) {
    cmd->add_option("--rbar", s.particle.r_bar,
                    "hemisphere radius over particle height, R/z0")
        ->required();
  }
}

void add_unit_options(CLI::App* cmd, Settings& s) {
  cmd->add_option("--dpsq", s.units.d_p_sq,
                  "<d_p^2> in C^2 m^2 (SI output, needs --z0)");
  cmd->add_option("--z0", s.units.z0, "particle height in m (SI output)");
}

void open_output(std::ofstream& f, const std::string& path) {
  f.open(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file " + path);
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream f;
  open_output(f, path);
  f << j.dump(2) << '\n';
}

int cmd_energy(const Settings& s) {
  const auto unit_j = energy_unit_joule(s.units);
  const vdw::ParticleAnisotropy aniso(s.particle.beta);
  const vdw::Orientation orient(s.particle.theta, s.particle.gamma);
  const vdw::GeometryConfig geo(s.particle.r_bar);
  const vdw::PlanePosition pos{s.x, s.y};
  const vdw::ForceMode mode = s.force_mode == "hemisphere"
                                  ? vdw::ForceMode::hemisphere_only
                                  : vdw::ForceMode::total;

  const vdw::EnergyBreakdown e = vdw::energy_total(aniso, orient, pos, geo);
  const vdw::LateralForce f = vdw::lateral_force(aniso, orient, pos, geo, mode);

  json out;
  json cfg = particle_json(s.particle);
  cfg["command"] = "energy";
  cfg["x0_bar"] = s.x;
  cfg["y0_bar"] = s.y;
  cfg["force_mode"] = s.force_mode;
  out["config"] = cfg;
  out["units"] = units_json(s, unit_j);
  out["projection"] = {{"d_rho_sq", e.projection.d_rho_sq},
                       {"d_phi_sq", e.projection.d_phi_sq},
                       {"d_z_sq", e.projection.d_z_sq},
                       {"d_rho_z", e.projection.d_rho_z}};
  out["r_coefficients"] = {{"rho_rho", e.r.rho_rho},
                           {"phi_phi", e.r.phi_phi},
                           {"zz", e.r.zz},
                           {"rho_z", e.r.rho_z}};
  out["u0"] = e.u0;
  out["u_h"] = e.u_h;
  out["total"] = e.total;
  out["force"] = {{"f_x", f.f_x}, {"f_y", f.f_y}};
  if (unit_j) {
    const double fn = *unit_j / *s.units.z0;
    out["si"] = {{"u0_joule", e.u0 * *unit_j},
                 {"u_h_joule", e.u_h * *unit_j},
                 {"total_joule", e.total * *unit_j},
                 {"f_x_newton", f.f_x * fn},
                 {"f_y_newton", f.f_y * fn}};
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_landscape(const Settings& s) {
  const auto unit_j = energy_unit_joule(s.units);
  if (s.out.empty()) throw ConfigError("landscape needs --out STEM");
  if (s.nx == 0 || s.ny == 0) throw ConfigError("--nx and --ny must be >= 1");
  if (s.x_max < s.x_min || s.y_max < s.y_min) {
    throw ConfigError("grid ranges must satisfy min <= max");
  }
  const vdw::LandscapeGrid grid = vdw::landscape(
      vdw::ParticleAnisotropy(s.particle.beta),
      vdw::Orientation(s.particle.theta, s.particle.gamma),
      vdw::GeometryConfig(s.particle.r_bar), {s.x_min, s.x_max},
      {s.y_min, s.y_max}, s.nx, s.ny);

  std::ofstream csv;
  open_output(csv, s.out + ".csv");
  vdw::write_landscape_csv(csv, grid);

  json cfg = particle_json(s.particle);
  cfg["command"] = "landscape";
  cfg["x_range"] = {s.x_min, s.x_max};
  cfg["y_range"] = {s.y_min, s.y_max};
  cfg["nx"] = s.nx;
  cfg["ny"] = s.ny;
  const auto [ix, iy] = grid.argmin();
  json side{{"config", cfg},
            {"units", units_json(s, unit_j)},
            {"csv", s.out + ".csv"},
            {"row_order", "x-major"},
            {"grid_minimum",
             {{"x0_bar", grid.xs[ix]},
              {"y0_bar", grid.ys[iy]},
              {"u_h", grid.at(ix, iy)}}}};
  write_json_file(s.out + ".json", side);
  std::cout << side.dump(2) << '\n';
  return 0;
}

int cmd_phase(const Settings& s) {
  if (s.out.empty()) throw ConfigError("phase needs --out STEM");
  if (s.n_beta == 0 || s.n_r_bar == 0) {
    throw ConfigError("--nbeta and --nrbar must be >= 1");
  }
  const vdw::Orientation orient(s.particle.theta, s.particle.gamma);
  const vdw::PhaseDiagram pd =
      vdw::phase_diagram(orient, {s.r_bar_min, s.r_bar_max},
                         {s.beta_min, s.beta_max}, {s.n_beta, s.n_r_bar});

  std::ofstream grid_csv;
  open_output(grid_csv, s.out + "_grid.csv");
  vdw::write_phase_grid_csv(grid_csv, pd);
  std::ofstream boundary_csv;
  open_output(boundary_csv, s.out + "_boundary.csv");
  vdw::write_boundary_csv(boundary_csv, pd);

  json cfg{{"command", "phase"},
           {"theta", s.particle.theta},
           {"gamma", s.particle.gamma},
           {"beta_range", {s.beta_min, s.beta_max}},
           {"r_bar_range", {s.r_bar_min, s.r_bar_max}},
           {"n_beta", s.n_beta},
           {"n_r_bar", s.n_r_bar}};
  json side{{"config", cfg},
            {"grid_csv", s.out + "_grid.csv"},
            {"boundary_csv", s.out + "_boundary.csv"},
            {"boundary_points", pd.boundary.size()},
            {"multi_crossing_columns", pd.multi_crossing_columns}};
  side["beta_critical"] =
      pd.beta_critical ? json(*pd.beta_critical) : json(nullptr);
  write_json_file(s.out + ".json", side);
  std::cout << side.dump(2) << '\n';
  return 0;
}

int cmd_minima(const Settings& s) {
  const auto unit_j = energy_unit_joule(s.units);
  if (s.x_max < s.x_min) throw ConfigError("--xmin must not exceed --xmax");
  if (s.scan_points < 3) throw ConfigError("--points must be >= 3");
  const auto minima = vdw::find_minima_on_axis(
      vdw::ParticleAnisotropy(s.particle.beta),
      vdw::Orientation(s.particle.theta, s.particle.gamma),
      vdw::GeometryConfig(s.particle.r_bar), {s.x_min, s.x_max},
      s.scan_points);

  json cfg = particle_json(s.particle);
  cfg["command"] = "minima";
  cfg["x_range"] = {s.x_min, s.x_max};
  cfg["points"] = s.scan_points;
  json list = json::array();
  for (const auto& m : minima) {
    json item{{"x0_bar", m.x}, {"u_h", m.u_h}};
    if (unit_j) item["u_h_joule"] = m.u_h * *unit_j;
    list.push_back(item);
  }
  std::cout << json{{"config", cfg},
                    {"units", units_json(s, unit_j)},
                    {"minima", list}}
                   .dump(2)
            << '\n';
  return 0;
}

int cmd_verify(const Settings& s) {
  if (s.samples == 0) throw ConfigError("--samples must be >= 1");
  vdw::VerifyOptions opt;
  opt.seed = s.seed;
  opt.samples = s.samples;
  opt.perturb_green = s.perturb_green;
  const vdw::VerifyReport report = vdw::run_verification(opt);
  std::cout << report.to_json().dump(2) << '\n';
  return report.passed() ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lateral van der Waals force near a hemispherical protuberance"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_flag("--degrees", s.degrees,
               "read --theta and --gamma in degrees instead of radians");

  auto* energy = app.add_subcommand("energy", "energy breakdown and force at one position");
  add_particle_options(energy, s);
  add_unit_options(energy, s);
  energy->add_option("--x", s.x, "x0/z0");
  energy->add_option("--y", s.y, "y0/z0");
  energy->add_option("--force-mode", s.force_mode, "total | hemisphere")
      ->check(CLI::IsMember({"total", "hemisphere"}));

  auto* land = app.add_subcommand("landscape", "U_h over a grid of positions");
  add_particle_options(land, s);
  add_unit_options(land, s);
  land->add_option("--xmin", s.x_min);
  land->add_option("--xmax", s.x_max);
  land->add_option("--ymin", s.y_min);
  land->add_option("--ymax", s.y_max);
  land->add_option("--nx", s.nx);
  land->add_option("--ny", s.ny);
  land->add_option("--out", s.out, "output stem: STEM.csv and STEM.json")
      ->required();

  auto* phase = app.add_subcommand("phase", "apex minimum/maximum map over (beta, R/z0)");
  add_particle_options(phase, s, false, false);
  phase->add_option("--beta-min", s.beta_min);
  phase->add_option("--beta-max", s.beta_max);
  phase->add_option("--rbar-min", s.r_bar_min);
  phase->add_option("--rbar-max", s.r_bar_max);
  phase->add_option("--nbeta", s.n_beta);
  phase->add_option("--nrbar", s.n_r_bar);
  phase->add_option("--out", s.out,
                    "output stem: STEM_grid.csv, STEM_boundary.csv, STEM.json")
      ->required();

  auto* minima = app.add_subcommand("minima", "local minima of U_h along the x-axis");
  add_particle_options(minima, s);
  add_unit_options(minima, s);
  minima->add_option("--xmin", s.x_min);
  minima->add_option("--xmax", s.x_max);
  minima->add_option("--points", s.scan_points, "scan resolution");

  auto* verify = app.add_subcommand("verify", "cross-check closed form, oracle and symmetries");
  verify->add_option("--seed", s.seed);
  verify->add_option("--samples", s.samples, "oracle configurations");
  verify->add_option("--perturb-green", s.perturb_green,
                     "testing only: scale G_H by (1 + value) on the checked path")
      ->group("Testing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("config", e.what());
    return kExitConfig;
  }

  // phase defaults to an axis lying in the plane, everything else to an
  // axis along z
  if (s.angles.theta) {
    s.particle.theta = to_radians(*s.angles.theta, s.degrees);
  } else {
    s.particle.theta = *phase ? std::numbers::pi / 2 : 0.0;
  }
  s.particle.gamma = to_radians(s.angles.gamma, s.degrees);

  try {
    if (*energy) return cmd_energy(s);
    if (*land) return cmd_landscape(s);
    if (*phase) return cmd_phase(s);
    if (*minima) return cmd_minima(s);
    if (*verify) return cmd_verify(s);
  } catch (const ConfigError& e) {
    report_error("config", e.what());
    return kExitConfig;
  } catch (const vdw::Error& e) {
    report_error("domain", e.what());
    return kExitDomain;
  }
  return kExitConfig;
}
