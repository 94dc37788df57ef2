#include "vdw/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace vdw {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(),
                                       value, std::chars_format::general, 17);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), ptr);
}

void write_landscape_csv(std::ostream& out, const LandscapeGrid& grid) {
  out << "x0_bar,y0_bar,u_h\n";
  for (std::size_t ix = 0; ix < grid.nx; ++ix) {
    for (std::size_t iy = 0; iy < grid.ny; ++iy) {
      out << format_number(grid.xs[ix]) << ',' << format_number(grid.ys[iy])
          << ',' << format_number(grid.at(ix, iy)) << '\n';
    }
  }
}

void write_phase_grid_csv(std::ostream& out, const PhaseDiagram& pd) {
  out << "beta,r_bar,curvature_xx,classification\n";
  const std::size_t nr = pd.r_bars.size();
  for (std::size_t ib = 0; ib < pd.betas.size(); ++ib) {
    for (std::size_t ir = 0; ir < nr; ++ir) {
      out << format_number(pd.betas[ib]) << ',' << format_number(pd.r_bars[ir])
          << ',' << format_number(pd.curvature_xx[ib * nr + ir]) << ','
          << to_string(pd.at(ib, ir)) << '\n';
    }
  }
}

void write_boundary_csv(std::ostream& out, const PhaseDiagram& pd) {
  out << "beta,r_bar\n";
  for (const auto& p : pd.boundary) {
    out << format_number(p.beta) << ',' << format_number(p.r_bar) << '\n';
  }
}

}  // namespace vdw
