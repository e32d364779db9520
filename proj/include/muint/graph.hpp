#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace muint {

// Edges are identified by their position in Graph::edges (insertion order).
// Colorings and traces index edges by EdgeId, so the order is part of the API.
using EdgeId = int;

struct GraphError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct EndpointRangeError : GraphError {
  using GraphError::GraphError;
};
struct LoopEdgeError : GraphError {
  using GraphError::GraphError;
};
struct DuplicateEdgeError : GraphError {
  using GraphError::GraphError;
};
struct CertificateSizeError : GraphError {
  using GraphError::GraphError;
};

// Simple undirected graph, vertices 0..n-1. Immutable after make_graph.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;         // neighbor ids, incidence order
  std::vector<std::vector<EdgeId>> incident; // edge ids, same order as adj

  int vertex_count() const { return n; }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool has_edge(int u, int v) const;
  EdgeId edge_id(int u, int v) const; // -1 when the edge is absent
};

// Validates endpoints (range, no loops, no duplicate pairs) and builds the
// incidence structure. Edge order is preserved exactly.
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

int max_degree(const Graph& g);

// perm[old_vertex] = new_vertex. Edge order and endpoint order follow the
// original edge list, so colorings indexed by EdgeId carry over unchanged.
Graph apply_permutation(const Graph& g, const std::vector<int>& perm);

std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);

// Subgraph induced by verts (kept in the given order; new vertex i = verts[i]).
// If edge_map is non-null it receives, per new edge, the EdgeId in g.
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts,
                       std::vector<EdgeId>* edge_map = nullptr);

// Canonical form: two graphs have equal certificates iff they are isomorphic.
// Exact (search-based), supported for n <= 12.
struct Certificate {
  std::string bytes;
  bool operator==(const Certificate&) const = default;
  auto operator<=>(const Certificate&) const = default;
};

Certificate certificate(const Graph& g);

} // namespace muint
