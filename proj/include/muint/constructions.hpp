#pragma once

#include <optional>
#include <string>

#include "muint/coloring.hpp"
#include "muint/exact.hpp"
#include "muint/families.hpp"
#include "muint/graph.hpp"

namespace muint {

struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- shifted sequential blocks -------------------------------------------

// Colors a complete bipartite block row-by-row: cell (i, j), 1-based, gets
// shift + i + j - 1, so row i covers [shift+i, shift+i+cols-1] and column j
// covers [shift+j, shift+j+rows-1].
struct ShiftBlock {
  int rows = 0;
  int cols = 0;
  int shift = 0;
  int color(int i, int j) const { return shift + i + j - 1; }
};

// Validating factory; errors on nonpositive dimensions.
ShiftBlock sequential_block(int rows, int cols, int shift);

std::vector<std::vector<int>> block_colors(const ShiftBlock& b);

// ---- proper interval colorings --------------------------------------------

// Forests: root edges 1..d, then every child edge extends its parent color
// upward, so each vertex sees one consecutive run with no repeats.
EdgeColoring color_forest(const Graph& g);

// Squares of paths P_n^2, n >= 4: a fixed coloring of P_4^2 extended one
// vertex at a time; the two new edge colors are a lookup on the interval
// shapes at the two attachment vertices. Proper (impropriety 1).
struct SquareOfPathColoring {
  Graph graph;
  EdgeColoring coloring;
};
SquareOfPathColoring color_square_of_path(int n);

// Complete multipartite K_{s,t,s,t,...} with 2^ell parts: every inter-part
// block is a ShiftBlock; the pairing scheme doubles a half-size plan, so the
// block shift depends only on the xor of the two pair indices. Colors run
// 1..(parts/2)(s+t)-1 and the result is proper.
struct PartBlock {
  int part_u = 0; // lower part index
  int part_v = 0;
  ShiftBlock block; // rows = size(part_u), cols = size(part_v)
};
struct BlockPlan {
  int s = 0, t = 0, ell = 0, parts = 0;
  int max_color = 0;
  std::vector<PartBlock> blocks;
};
struct MultipartiteColoring {
  Graph graph;
  MultipartiteLabels labels;
  BlockPlan plan;
  EdgeColoring coloring;
};
MultipartiteColoring color_multipartite_stst(int s, int t, int ell);

// ---- bounded-impropriety constructions -------------------------------------

// 2-trees with max degree >= 3: impropriety at most ceil(delta/3). Replays
// the construction trace; each added vertex picks its two edge colors near
// the color of the attachment edge. `fallbacks` counts steps that had to be
// finished by the exact solver (expected 0).
struct TwoTreeColoring {
  Graph graph;
  EdgeColoring coloring;
  int budget = 0; // ceil(delta/3)
  int fallbacks = 0;
};
TwoTreeColoring color_two_tree(const TwoTreeTrace& trace);

// 2-paths: edge e_i of the defining sequence gets color i and the remaining
// edge of triangle t_i gets i as well; impropriety at most 2.
struct TwoPathColoring {
  Graph graph;
  EdgeColoring coloring;
};
TwoPathColoring color_two_path(const TwoPathSequence& seq);

// Iterated triangulations Tr(levels), levels >= 1: the outer triangle gets
// 1,2,3 and every inserted vertex copies, toward each face corner, the color
// of the opposite face edge. Colors stay in {1,2,3}; impropriety at most
// ceil(delta/3). Tr(0) is rejected: the bare rainbow triangle has gaps.
struct TriangulationColoring {
  Graph graph;
  TriangulationTrace trace;
  EdgeColoring coloring;
  int budget = 0; // ceil(delta/3)
};
TriangulationColoring color_iterated_triangulation(int levels);

// Outerplanar graphs with max degree >= 6: impropriety at most ceil(delta/5).
// Recursive: split at cut vertices (child blocks are shifted to stack their
// colors above the parent's at the shared vertex), peel degree-2 vertices in
// 2-connected pieces, and solve small or low-degree pieces exactly within the
// budget. `fallbacks` counts irreducible pieces handed to the exact solver
// outside the base case (expected 0 on outerplanar inputs).
struct OuterplanarColoring {
  EdgeColoring coloring;
  int budget = 0; // ceil(delta/5)
  int base_solves = 0;
  int fallbacks = 0;
};
OuterplanarColoring color_outerplanar(const Graph& g);

// ---- corona colorings ------------------------------------------------------

// G (.) H built on top of an interval coloring of the base. Structure-aware
// strategies (copy must match the shape) keep the impropriety at
// max(base, 2); the general and three-set strategies accept any copy at a
// weaker bound.
enum class CoronaStrategy { Path, Cycle, Star, Spider, Caterpillar, General, ThreeSet };

std::string strategy_name(CoronaStrategy s);
std::optional<CoronaStrategy> strategy_from_name(const std::string& name);

struct CoronaColoring {
  Graph graph;
  CoronaLayout layout;
  EdgeColoring coloring;
  int bound = 0; // guaranteed impropriety bound for the strategy used
};

// base_coloring must pass the interval check; it is normalized internally so
// copy colors can stack above the attachment vertex's maximum.
CoronaColoring color_corona(const Graph& base, const EdgeColoring& base_coloring,
                            const Graph& copy, CoronaStrategy strategy);

} // namespace muint
