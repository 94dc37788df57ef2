#pragma once

// Locale-independent text output for grids.

#include <ostream>
#include <string>

#include "vdw/analysis.hpp"

namespace vdw {

// 17 significant digits, so every double survives a text round trip.
std::string format_number(double value);

// Header x0_bar,y0_bar,u_h; rows in x-major order.
void write_landscape_csv(std::ostream& out, const LandscapeGrid& grid);

// Header beta,r_bar,curvature_xx,classification; rows in beta-major order.
void write_phase_grid_csv(std::ostream& out, const PhaseDiagram& pd);

// Header beta,r_bar.
void write_boundary_csv(std::ostream& out, const PhaseDiagram& pd);

}  // namespace vdw
