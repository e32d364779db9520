#pragma once

#include <optional>

#include "muint/graph.hpp"

namespace muint {

struct ColoringError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Edge colors indexed by EdgeId. Colors are arbitrary signed integers; only
// differences matter (shifting every color is a symmetry).
struct EdgeColoring {
  std::vector<int> colors;
};

struct VertexProfile {
  int vertex = 0;
  int degree = 0;
  int min_color = 0; // isolated vertices: min/max both 0, vacuously interval
  int max_color = 0;
  int distinct = 0;
  int max_multiplicity = 0; // 0 at isolated vertices
  bool is_interval = true;
};

struct VerificationReport {
  bool all_intervals = true;
  int max_multiplicity = 0; // over all vertices; the impropriety when interval
  std::vector<VertexProfile> vertices;
  std::vector<int> offending; // vertices whose incident colors have gaps
};

// Checks that the incident colors at every vertex form a consecutive block
// and measures the largest per-vertex color multiplicity. Throws when the
// coloring is missing edges (size mismatch with g).
VerificationReport verify(const Graph& g, const EdgeColoring& c);

// Impropriety of a verified coloring: the max multiplicity when every vertex
// passed the interval check, nullopt otherwise. 0 for edgeless graphs.
std::optional<int> impropriety_of(const VerificationReport& r);

// Shift all colors so the minimum becomes 1. Error on an empty edge set.
EdgeColoring normalize(const EdgeColoring& c);

} // namespace muint
