#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>

#include "muint/graph.hpp"

namespace muint {

struct RecipeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct TraceError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Family {
  Path,
  Cycle,
  Star,
  Spider,
  Caterpillar,
  Wheel,
  Complete,
  CompleteMultipartite,
  SquareOfPath,
  TwoPath,
  TwoTree,
  IteratedTriangulation,
  Corona,
  StrongProduct,
};

struct FamilyRecipe {
  Family kind = Family::Path;
  long long n = 0;                 // size parameter (meaning per family)
  long long s = 0, t = 0, ell = 0; // multipartite s,t,...,s,t with 2^ell parts
  std::vector<int> part_sizes;     // general complete multipartite
  std::vector<int> legs;           // spider leg lengths
  std::vector<int> leaf_counts;    // caterpillar: leaves per spine vertex
  std::uint64_t seed = 0;          // randomized families (two_path, two_tree)
  std::vector<FamilyRecipe> sub;   // corona / strong product operands [base, copy]
};

// Compact operand syntax: "path:3", "cycle:4", "star:3", "complete:4",
// "wheel:7", "spider:2,1,1", "caterpillar:1,0,2", "multipartite:4,3,2"
// (s,t,ell), "parts:3,2,2", "square_of_path:9", "triangulation:2".
FamilyRecipe parse_family_spec(const std::string& spec);
std::string family_name(Family k);

// ---- generator metadata -----------------------------------------------

struct MultipartiteLabels {
  std::vector<std::vector<int>> parts; // vertex ids per part, in vertex order
  bool stst = false;                   // alternating A_1,B_1,A_2,B_2,... sizes s,t
  int part_of(int v) const;
  std::string name(int v) const; // "x1,2"/"y1,2" for stst, else "p1,2"
};

// Alternating edges e_0..e_n and triangles t_1..t_n; triangle i consists of
// e_{i-1}, e_i and one remaining edge. All 2n+1 edges must be distinct.
struct TwoPathSequence {
  std::vector<std::pair<int, int>> seq_edges;
  std::vector<std::array<int, 3>> triangles;
};

struct TwoTreeTrace {
  std::array<int, 3> base{0, 1, 2};
  struct Step {
    int vertex; // the added simplicial vertex
    int u, w;   // the existing edge it is attached to
  };
  std::vector<Step> steps;
};

struct TriangulationTrace {
  struct Step {
    int vertex;
    std::array<int, 3> face; // enclosing face, ccw
  };
  std::vector<Step> steps;
  int levels = 0;
};

struct CoronaLayout {
  int base_n = 0;
  int copy_n = 0;     // |V(H)|
  int base_edges = 0; // base edges occupy EdgeIds [0, base_edges)
  int copy_edges = 0; // |E(H)|; each copy stores internal edges then attachments
  int copy_start(int i) const { return base_n + i * copy_n; }
  int copy_edge_start(int i) const { return base_edges + i * (copy_edges + copy_n); }
  int attach_edge_start(int i) const { return copy_edge_start(i) + copy_edges; }
};

using FamilyMeta = std::variant<std::monostate, MultipartiteLabels,
                                TwoPathSequence, TwoTreeTrace,
                                TriangulationTrace, CoronaLayout>;

struct Generated {
  Graph graph;
  FamilyMeta meta;
};

// ---- direct constructors ----------------------------------------------

Graph make_path(int n);                               // n >= 1 vertices
Graph make_cycle(int n);                              // n >= 3
Graph make_star(int leaves);                          // center 0, leaves >= 1
Graph make_spider(const std::vector<int>& legs);      // center 0, >= 3 legs
Graph make_caterpillar(const std::vector<int>& leaf_counts); // spine first
Graph make_wheel(int n);                              // n >= 4 total, hub 0
Graph make_complete(int n);                           // n >= 1
std::pair<Graph, MultipartiteLabels>
make_complete_multipartite(const std::vector<int>& sizes);
// K_{s,t,s,t,...} with 2^ell parts (vertex order A_1,B_1,A_2,B_2,...)
std::pair<Graph, MultipartiteLabels> make_multipartite_stst(int s, int t, int ell);
Graph make_square_of_path(int n); // n >= 1; edges (i,i+1) then (i,i+2)

// ---- trace-driven families --------------------------------------------

// Validates the sequence (triangle i = endpoints of e_{i-1} and e_i, all
// 2n+1 edges distinct) and builds the graph: EdgeIds 0..n are e_0..e_n,
// then the remaining edge of t_1, t_2, ...
Graph two_path_graph(const TwoPathSequence& seq);
TwoPathSequence random_two_path(int triangles, std::uint64_t seed);

// Replays a trace: base triangle edges (v0,v1),(v1,v2),(v2,v0), then per
// step the edges (vertex,u),(vertex,w). Step edges must already exist.
Graph two_tree_from_trace(const TwoTreeTrace& trace);
TwoTreeTrace random_two_tree(int n, std::uint64_t seed); // n >= 3 vertices

// Tr(levels): outer triangle 0,1,2 ccw with edges (0,1),(1,2),(2,0); each
// level adds one vertex inside every inner face, with edges to the face
// corners in face order.
std::pair<Graph, TriangulationTrace> iterated_triangulation(int levels);

// ---- products -----------------------------------------------------------

// G (.) H: base vertices keep their ids, copy i occupies a contiguous block;
// edge order is base edges, then per copy its internal edges followed by the
// attachment edges (base vertex to each copy vertex in copy order).
std::pair<Graph, CoronaLayout> corona(const Graph& g, const Graph& h);

// Strong product: vertex (i,j) -> i*|V(b)|+j; adjacent when coordinates agree
// or are adjacent in both factors (and the pairs differ).
Graph strong_product(const Graph& a, const Graph& b);

// ---- enumeration and sampling ------------------------------------------

struct TwoTreeInstance {
  Graph graph;
  TwoTreeTrace trace;
};
// All non-isomorphic 2-trees on exactly n vertices, 3 <= n <= 10.
std::vector<TwoTreeInstance> enumerate_two_trees(int n);

// All non-isomorphic maximal outerplanar graphs on n vertices (3 <= n <= 12),
// as triangulated polygons: vertices 0..n-1 form the outer cycle.
std::vector<Graph> enumerate_maximal_outerplanar(int n);

// Seeded random triangulation of the n-gon (outer cycle 0..n-1).
Graph random_maximal_outerplanar(int n, std::uint64_t seed);

// Seeded random connected spanning-connected subgraph obtained by deleting a
// few edges of g (g must be connected); used for scan sampling.
Graph random_connected_edge_subgraph(const Graph& g, std::uint64_t seed);

// Recipe-driven entry point used by the CLI.
Generated generate(const FamilyRecipe& recipe);

} // namespace muint
