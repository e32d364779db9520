#include "muint/graph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>

namespace muint {

bool Graph::has_edge(int u, int v) const {
  for (int w : adj[u])
    if (w == v) return true;
  return false;
}

EdgeId Graph::edge_id(int u, int v) const {
  for (size_t i = 0; i < adj[u].size(); ++i)
    if (adj[u][i] == v) return incident[u][i];
  return -1;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw EndpointRangeError("vertex count must be nonnegative");
  Graph g;
  g.n = n;
  g.adj.resize(n);
  g.incident.resize(n);
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw EndpointRangeError("edge endpoint out of range: (" +
                               std::to_string(u) + "," + std::to_string(v) +
                               ") with n=" + std::to_string(n));
    if (u == v)
      throw LoopEdgeError("loop edge at vertex " + std::to_string(u));
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      throw DuplicateEdgeError("duplicate edge (" + std::to_string(u) + "," +
                               std::to_string(v) + ")");
    EdgeId id = static_cast<EdgeId>(g.edges.size());
    g.edges.emplace_back(u, v);
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
    g.incident[u].push_back(id);
    g.incident[v].push_back(id);
  }
  return g;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.n; ++v) d = std::max(d, g.degree(v));
  return d;
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n)
    throw EndpointRangeError("permutation size does not match vertex count");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges.size());
  for (const auto& [u, v] : g.edges) edges.emplace_back(perm[u], perm[v]);
  return make_graph(g.n, edges);
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    comps.emplace_back();
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comps.back().push_back(v);
      for (int w : g.adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comps.back().begin(), comps.back().end());
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.n <= 1 || components(g).size() == 1;
}

bool is_forest(const Graph& g) {
  return g.edge_count() == g.n - static_cast<int>(components(g).size());
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts,
                       std::vector<EdgeId>* edge_map) {
  std::vector<int> local(g.n, -1);
  for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  if (edge_map) edge_map->clear();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    if (local[u] >= 0 && local[v] >= 0) {
      edges.emplace_back(local[u], local[v]);
      if (edge_map) edge_map->push_back(e);
    }
  }
  return make_graph(static_cast<int>(verts.size()), edges);
}

namespace {

// Canonical-form search: minimize, over vertex orderings, the bit string of
// upper-triangle adjacency read column by column (placing position p appends
// the p bits adj(perm[0..p-1], perm[p])). Branch and bound with eager bound
// tightening: an improving segment overwrites best[pos] immediately and resets
// deeper levels to the worst value, so the first full descent is greedy and
// every branch compares against the tightest prefix seen so far. Candidates
// are sorted by segment value (improvements before ties before prunable), and
// unused mutual twins are interchangeable by an automorphism, so only the
// smallest id of each twin class is tried per level.
struct CanonSearch {
  int n;
  std::array<uint16_t, 12> adjm{};
  std::array<int, 12> twin{};
  std::array<int, 12> perm{};
  std::array<uint32_t, 12> best{};
  std::array<bool, 12> used{};

  explicit CanonSearch(const Graph& g) : n(g.n) {
    best.fill(0xFFFFFFFFu);
    for (const auto& [u, v] : g.edges) {
      adjm[u] |= static_cast<uint16_t>(1u << v);
      adjm[v] |= static_cast<uint16_t>(1u << u);
    }
    for (int v = 0; v < n; ++v) {
      twin[v] = v;
      for (int u = 0; u < v; ++u) {
        uint16_t clear = static_cast<uint16_t>(~((1u << u) | (1u << v)));
        if ((adjm[u] & clear) == (adjm[v] & clear)) {
          twin[v] = twin[u];
          break;
        }
      }
    }
  }

  void dfs(int pos) {
    if (pos == n) return; // best[] now holds this completed ordering
    // (segment, candidate) pairs, ascending; one candidate per twin class
    std::array<std::pair<uint32_t, int>, 12> cand;
    int nc = 0;
    uint16_t class_seen = 0;
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      if (class_seen & (1u << twin[c])) continue;
      class_seen |= static_cast<uint16_t>(1u << twin[c]);
      uint32_t seg = 0;
      for (int i = 0; i < pos; ++i)
        seg |= static_cast<uint32_t>((adjm[perm[i]] >> c) & 1u) << (pos - 1 - i);
      cand[nc++] = {seg, c};
    }
    std::sort(cand.begin(), cand.begin() + nc);
    for (int ci = 0; ci < nc; ++ci) {
      auto [seg, c] = cand[ci];
      if (seg > best[pos]) break; // sorted: the rest are no better
      if (seg < best[pos]) {
        best[pos] = seg;
        for (int p = pos + 1; p < n; ++p) best[p] = 0xFFFFFFFFu;
      }
      perm[pos] = c;
      used[c] = true;
      dfs(pos + 1);
      used[c] = false;
    }
  }
};

} // namespace

Certificate certificate(const Graph& g) {
  if (g.n > 12)
    throw CertificateSizeError("certificate supports at most 12 vertices, got " +
                               std::to_string(g.n));
  Certificate cert;
  cert.bytes.push_back(static_cast<char>(g.n));
  if (g.n == 0) return cert;
  CanonSearch s(g);
  s.dfs(0);
  // pack segment bits (level order, most significant bit first) into bytes
  std::string bits;
  int acc = 0, nbits = 0;
  for (int p = 1; p < g.n; ++p) {
    for (int b = p - 1; b >= 0; --b) {
      acc = (acc << 1) | ((s.best[p] >> b) & 1u);
      if (++nbits == 8) {
        bits.push_back(static_cast<char>(acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) bits.push_back(static_cast<char>(acc << (8 - nbits)));
  cert.bytes += bits;
  return cert;
}

} // namespace muint
