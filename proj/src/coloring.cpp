#include "muint/coloring.hpp"

#include <algorithm>
#include <limits>

namespace muint {

VerificationReport verify(const Graph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.edge_count())
    throw ColoringError("coloring has " + std::to_string(c.colors.size()) +
                        " colors for " + std::to_string(g.edge_count()) +
                        " edges");
  VerificationReport rep;
  rep.vertices.reserve(g.n);
  std::vector<int> at; // colors incident to the current vertex
  for (int v = 0; v < g.n; ++v) {
    VertexProfile p;
    p.vertex = v;
    p.degree = g.degree(v);
    if (p.degree > 0) {
      at.clear();
      for (EdgeId e : g.incident[v]) at.push_back(c.colors[e]);
      std::sort(at.begin(), at.end());
      p.min_color = at.front();
      p.max_color = at.back();
      p.distinct = 1;
      p.max_multiplicity = 1;
      int run = 1;
      for (size_t i = 1; i < at.size(); ++i) {
        if (at[i] == at[i - 1]) {
          run++;
        } else {
          p.distinct++;
          run = 1;
        }
        p.max_multiplicity = std::max(p.max_multiplicity, run);
      }
      // consecutive block <=> every value in [min,max] occurs
      p.is_interval = (p.distinct == p.max_color - p.min_color + 1);
    }
    rep.all_intervals = rep.all_intervals && p.is_interval;
    rep.max_multiplicity = std::max(rep.max_multiplicity, p.max_multiplicity);
    if (!p.is_interval) rep.offending.push_back(v);
    rep.vertices.push_back(p);
  }
  return rep;
}

std::optional<int> impropriety_of(const VerificationReport& r) {
  if (!r.all_intervals) return std::nullopt;
  return r.max_multiplicity;
}

EdgeColoring normalize(const EdgeColoring& c) {
  if (c.colors.empty()) throw ColoringError("cannot normalize an empty coloring");
  int lo = *std::min_element(c.colors.begin(), c.colors.end());
  EdgeColoring out;
  out.colors.reserve(c.colors.size());
  for (int x : c.colors) out.colors.push_back(x - lo + 1);
  return out;
}

} // namespace muint
