#pragma once

#include <string>

#include "tbk/ford.hpp"

namespace tbk {

/// SVG 1.1 drawing of one fundamental cell (10% margin) with the pattern's
/// circles: fully visible circles solid, otherwise a dashed circle with the
/// visible arcs drawn solid on top, each labelled by its word. Complex plane
/// with y up, 100 px per unit, coordinates rounded to 4 decimals.
std::string render_svg(const FordPattern& pattern, const CuspLattice& lattice);

}  // namespace tbk
