#pragma once

#include <string>
#include <vector>

#include "muint/coloring.hpp"
#include "muint/graph.hpp"

namespace muint {

// Renders the edge coloring as a vertex-by-vertex matrix: one header row and
// one header column of vertex names, the color of edge {u,v} in cells (u,v)
// and (v,u), and blank cells on the diagonal and wherever there is no edge.
// Cells are right-aligned in fixed-width columns separated by single spaces.
// When `names` is empty the vertices are labeled 0..n-1.
std::string render_color_table(const Graph& g, const EdgeColoring& c,
                               const std::vector<std::string>& names = {});

} // namespace muint
