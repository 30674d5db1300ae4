#ifndef TRAPEZO_SVG_HPP
#define TRAPEZO_SVG_HPP

#include <string>
#include <vector>

#include "trapezo/geometry.hpp"

// Static SVG renderings. World coordinates are y-up with unit p_1; the
// emitter flips y so the generated documents display correctly.

namespace trapezo {

/// The planar companion figure: rectangle, the four circles, the points
/// O, P_i, Q_i, R_i, S_i with labels, cone edges P_i Q_i, and the lateral
/// contacts Q_i P_{i+1} (dashed when holed).
std::string projection_svg(const Trapezohedron& trap);

/// n x n heatmap of classification kinds over a 2D slice. cells is
/// row-major, cell (ix, iy) at index iy*n + ix, both axes increasing with
/// the sampled coordinate.
std::string slice_svg(int n, const std::vector<RegionKind>& cells,
                      const std::string& xlabel, const std::string& ylabel,
                      const std::string& title);

}  // namespace trapezo

#endif  // TRAPEZO_SVG_HPP
