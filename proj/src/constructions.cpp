#include "muint/constructions.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <queue>
#include <unordered_map>

namespace muint {

namespace {

void check_result(const Graph& g, const EdgeColoring& c, int bound,
                  const char* what) {
  auto rep = verify(g, c);
  auto mu = impropriety_of(rep);
  if (!mu || (bound > 0 && *mu > bound))
    throw std::logic_error(std::string(what) +
                           " produced a coloring that fails its own guarantee");
}

std::vector<std::pair<int, EdgeId>> sorted_incidence(const Graph& g, int v) {
  std::vector<std::pair<int, EdgeId>> nbr;
  nbr.reserve(g.adj[v].size());
  for (size_t i = 0; i < g.adj[v].size(); ++i)
    nbr.emplace_back(g.adj[v][i], g.incident[v][i]);
  std::sort(nbr.begin(), nbr.end());
  return nbr;
}

} // namespace

ShiftBlock sequential_block(int rows, int cols, int shift) {
  if (rows < 1 || cols < 1)
    throw ConstructionError("sequential_block: dimensions must be positive");
  return ShiftBlock{rows, cols, shift};
}

std::vector<std::vector<int>> block_colors(const ShiftBlock& b) {
  std::vector<std::vector<int>> m(b.rows, std::vector<int>(b.cols, 0));
  for (int i = 1; i <= b.rows; ++i)
    for (int j = 1; j <= b.cols; ++j) m[i - 1][j - 1] = b.color(i, j);
  return m;
}

// ---- forests ----------------------------------------------------------------

EdgeColoring color_forest(const Graph& g) {
  if (!is_forest(g)) throw ConstructionError("color_forest: the graph has a cycle");
  EdgeColoring c;
  c.colors.assign(g.edge_count(), 0);
  std::vector<char> seen(g.n, 0);
  for (int r = 0; r < g.n; ++r) {
    if (seen[r]) continue;
    seen[r] = 1;
    if (g.degree(r) == 0) continue;
    std::queue<std::pair<int, int>> q; // vertex, color of its parent edge
    int col = 1;
    for (auto [v, e] : sorted_incidence(g, r)) {
      c.colors[e] = col;
      seen[v] = 1;
      q.emplace(v, col);
      ++col;
    }
    while (!q.empty()) {
      auto [u, pc] = q.front();
      q.pop();
      int next = pc + 1;
      for (auto [v, e] : sorted_incidence(g, u)) {
        if (seen[v]) continue;
        c.colors[e] = next;
        seen[v] = 1;
        q.emplace(v, next);
        ++next;
      }
    }
  }
  if (g.edge_count() > 0) check_result(g, c, 1, "color_forest");
  return c;
}

// ---- squares of paths --------------------------------------------------------

SquareOfPathColoring color_square_of_path(int n) {
  if (n < 4)
    throw ConstructionError("square-of-path coloring needs at least 4 vertices");
  Graph g = make_square_of_path(n);
  auto d1 = [&](int i) { return i; };          // edge (i, i+1)
  auto d2 = [&](int i) { return n - 1 + i; };  // edge (i, i+2)
  std::vector<int> c(g.edge_count(), 0);
  c[d1(0)] = 2;
  c[d1(1)] = 3;
  c[d1(2)] = 2;
  c[d2(0)] = 1;
  c[d2(1)] = 1;
  for (int m = 4; m < n; ++m) {
    int a = c[d1(m - 2)];               // color between the two attachment vertices
    int o1 = c[d1(m - 3)];              // the other two colors at vertex m-2
    int o2 = c[d2(m - 4)];
    int bx = c[d2(m - 3)];              // the other color at vertex m-1
    int lo = std::min(o1, o2), hi = std::max(o1, o2);
    int ytype;
    if (lo == a + 1 && hi == a + 2)
      ytype = 0;
    else if (lo == a - 1 && hi == a + 1)
      ytype = 1;
    else if (lo == a - 2 && hi == a - 1)
      ytype = 2;
    else
      throw std::logic_error("square-of-path invariant broken at the tail");
    if (bx != a - 1 && bx != a + 1)
      throw std::logic_error("square-of-path invariant broken at the tip");
    static const int table[3][2][2] = {
        {{-1, -2}, {+3, +2}}, // tail colors a+1, a+2
        {{+2, +1}, {-2, -1}}, // tail colors a-1, a+1
        {{-3, -2}, {+1, +2}}, // tail colors a-2, a-1
    };
    const int* pick = table[ytype][bx == a + 1 ? 1 : 0];
    c[d2(m - 2)] = a + pick[0]; // new edge to vertex m-2
    c[d1(m - 1)] = a + pick[1]; // new edge to vertex m-1
  }
  EdgeColoring col;
  col.colors = std::move(c);
  col = normalize(col);
  check_result(g, col, 1, "color_square_of_path");
  return {std::move(g), std::move(col)};
}

// ---- complete multipartite K_{s,t,s,t,...} ----------------------------------

MultipartiteColoring color_multipartite_stst(int s, int t, int ell) {
  if (s < 1 || t < 1)
    throw ConstructionError("multipartite coloring needs part sizes >= 1");
  if (ell < 1 || ell > 5)
    throw ConstructionError("multipartite coloring needs 1 <= ell <= 5 (size guard)");
  auto [g, labels] = make_multipartite_stst(s, t, ell);
  int parts = 1 << ell, npairs = parts / 2;

  // Block indices over part pairs, built by doubling: each doubling keeps the
  // current plan on both diagonal quadrants and shifts it by K off-diagonal.
  std::vector<std::vector<int>> bidx(npairs, std::vector<int>(npairs, 0));
  for (int K = 1; K < npairs; K *= 2)
    for (int i = 0; i < K; ++i)
      for (int j = 0; j < K; ++j) {
        bidx[i][j + K] = bidx[i][j] + K;
        bidx[i + K][j] = bidx[i][j] + K;
        bidx[i + K][j + K] = bidx[i][j];
      }

  auto part_size = [&](int a) { return a % 2 == 0 ? s : t; };
  auto shift_of = [&](int a, int b) { // a < b, part indices
    int p = a / 2, q = b / 2;
    if (p == q) return 0;
    int k = bidx[p][q];
    int sa = a % 2, sb = b % 2;
    if (sa == 0 && sb == 0) return (k - 1) * s + k * t;
    if (sa == 1 && sb == 1) return k * s + (k - 1) * t;
    return k * (s + t);
  };

  BlockPlan plan;
  plan.s = s;
  plan.t = t;
  plan.ell = ell;
  plan.parts = parts;
  plan.max_color = npairs * (s + t) - 1;
  for (int a = 0; a < parts; ++a)
    for (int b = a + 1; b < parts; ++b)
      plan.blocks.push_back(
          {a, b, ShiftBlock{part_size(a), part_size(b), shift_of(a, b)}});

  std::vector<int> part_of(g.n, 0), pos_of(g.n, 0);
  for (int a = 0; a < parts; ++a)
    for (size_t i = 0; i < labels.parts[a].size(); ++i) {
      part_of[labels.parts[a][i]] = a;
      pos_of[labels.parts[a][i]] = static_cast<int>(i); // 0-based
    }

  EdgeColoring c;
  c.colors.assign(g.edge_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    int a = part_of[u], b = part_of[v], i = pos_of[u], j = pos_of[v];
    if (a > b) {
      std::swap(a, b);
      std::swap(i, j);
    }
    c.colors[e] = shift_of(a, b) + i + j + 1;
  }
  check_result(g, c, 1, "color_multipartite_stst");
  return {std::move(g), std::move(labels), std::move(plan), std::move(c)};
}

// ---- 2-trees -----------------------------------------------------------------

TwoTreeColoring color_two_tree(const TwoTreeTrace& trace) {
  Graph g = two_tree_from_trace(trace);
  int delta = max_degree(g);
  if (delta < 3)
    throw ConstructionError("two-tree coloring needs max degree at least 3");

  TwoTreeColoring out;
  if (delta == 3) {
    // Only one 2-tree has max degree exactly 3: a triangle with one extra
    // vertex on an edge. Its fixed coloring is proper.
    if (g.n != 4 || trace.steps.size() != 1)
      throw std::logic_error("unexpected two-tree with max degree 3");
    auto st = trace.steps[0];
    int tv = -1;
    for (int b : trace.base)
      if (b != st.u && b != st.w) tv = b;
    EdgeColoring c;
    c.colors.assign(g.edge_count(), 0);
    c.colors[g.edge_id(st.u, st.w)] = 3;
    c.colors[g.edge_id(st.w, tv)] = 1;
    c.colors[g.edge_id(st.u, tv)] = 2;
    c.colors[g.edge_id(st.w, st.vertex)] = 2;
    c.colors[g.edge_id(st.u, st.vertex)] = 1;
    out.budget = 1;
    check_result(g, c, 1, "color_two_tree");
    out.graph = std::move(g);
    out.coloring = std::move(c);
    return out;
  }

  int k = (delta + 2) / 3;
  out.budget = k;
  std::vector<int> colors(g.edge_count(), INT_MIN);
  std::vector<std::unordered_map<int, int>> cnt(g.n);
  std::vector<int> mn(g.n, 0), mx(g.n, 0);
  std::vector<char> has(g.n, 0);
  auto put = [&](int p, int c) {
    ++cnt[p][c];
    if (!has[p]) {
      mn[p] = mx[p] = c;
      has[p] = 1;
    } else {
      mn[p] = std::min(mn[p], c);
      mx[p] = std::max(mx[p], c);
    }
  };
  auto assign = [&](EdgeId e, int c) {
    colors[e] = c;
    put(g.edges[e].first, c);
    put(g.edges[e].second, c);
  };
  auto qual = [&](int p, int c) {
    auto it = cnt[p].find(c);
    if (it != cnt[p].end() && it->second >= k) return false;
    return c >= mn[p] - 1 && c <= mx[p] + 1;
  };

  assign(g.edge_id(trace.base[0], trace.base[1]), 0);
  assign(g.edge_id(trace.base[1], trace.base[2]), 0);
  assign(g.edge_id(trace.base[2], trace.base[0]), 0);

  bool bailed = false;
  for (const auto& st : trace.steps) {
    int u = st.u, w = st.w, x = colors[g.edge_id(u, w)];
    EdgeId eu = g.edge_id(st.vertex, u), ew = g.edge_id(st.vertex, w);
    bool done = false;
    if (qual(u, x)) {
      for (int d : {x, x - 1, x + 1})
        if (qual(w, d)) {
          assign(eu, x);
          assign(ew, d);
          done = true;
          break;
        }
    }
    if (!done && qual(w, x)) {
      for (int d : {x, x - 1, x + 1})
        if (qual(u, d)) {
          assign(ew, x);
          assign(eu, d);
          done = true;
          break;
        }
    }
    if (!done) {
      int xu = qual(u, x - 1) ? x - 1 : (qual(u, x + 1) ? x + 1 : INT_MIN);
      int xw = qual(w, x - 1) ? x - 1 : (qual(w, x + 1) ? x + 1 : INT_MIN);
      if (xu != INT_MIN && xw != INT_MIN) {
        if (xu == xw) {
          assign(eu, xu);
          assign(ew, xw);
          done = true;
        } else if (xu == x + 1 && qual(u, x - 2)) {
          // u is saturated at both x-1 and x, so x-2 has headroom there
          assign(eu, x - 2);
          assign(ew, x - 1);
          done = true;
        } else if (xw == x + 1 && qual(w, x - 2)) {
          assign(ew, x - 2);
          assign(eu, x - 1);
          done = true;
        }
      }
    }
    if (!done) {
      bailed = true;
      break;
    }
  }

  if (bailed) {
    ++out.fallbacks;
    SearchBudget b;
    b.max_nodes = 50'000'000;
    b.threads = 1;
    auto r = exists_k_improper(g, k, b);
    if (r.status != SearchStatus::Witness)
      throw ConstructionError("two-tree fallback search failed within budget");
    out.coloring = normalize(r.witness);
  } else {
    EdgeColoring c;
    c.colors = std::move(colors);
    out.coloring = normalize(c);
  }
  check_result(g, out.coloring, k, "color_two_tree");
  out.graph = std::move(g);
  return out;
}

// ---- 2-paths -----------------------------------------------------------------

TwoPathColoring color_two_path(const TwoPathSequence& seq) {
  Graph g = two_path_graph(seq);
  int n = static_cast<int>(seq.triangles.size());
  EdgeColoring c;
  c.colors.assign(g.edge_count(), 0);
  for (int i = 0; i <= n; ++i) c.colors[i] = i;      // sequence edge e_i
  for (int i = 1; i <= n; ++i) c.colors[n + i] = i;  // remaining edge of t_i
  check_result(g, c, 2, "color_two_path");
  return {std::move(g), std::move(c)};
}

// ---- iterated triangulations ---------------------------------------------------

TriangulationColoring color_iterated_triangulation(int levels) {
  if (levels < 1)
    throw ConstructionError(
        "triangulation coloring needs at least one level: the bare rainbow "
        "triangle has a color gap at two corners");
  auto [g, trace] = iterated_triangulation(levels);
  EdgeColoring c;
  c.colors.assign(g.edge_count(), 0);
  c.colors[g.edge_id(0, 1)] = 1;
  c.colors[g.edge_id(1, 2)] = 2;
  c.colors[g.edge_id(2, 0)] = 3;
  for (const auto& st : trace.steps) {
    int a = st.face[0], b = st.face[1], f = st.face[2], v = st.vertex;
    c.colors[g.edge_id(v, a)] = c.colors[g.edge_id(b, f)];
    c.colors[g.edge_id(v, b)] = c.colors[g.edge_id(a, f)];
    c.colors[g.edge_id(v, f)] = c.colors[g.edge_id(a, b)];
  }
  int budget = (max_degree(g) + 2) / 3;
  check_result(g, c, budget, "color_iterated_triangulation");
  return {std::move(g), std::move(trace), std::move(c), budget};
}

// ---- outerplanar graphs ---------------------------------------------------------

namespace {

struct OuterStats {
  int base_solves = 0;
  int fallbacks = 0;
};

std::vector<std::vector<EdgeId>> biconnected_blocks(const Graph& g) {
  std::vector<int> disc(g.n, -1), low(g.n, 0);
  std::vector<EdgeId> estack;
  std::vector<std::vector<EdgeId>> blocks;
  int timer = 0;
  std::function<void(int, EdgeId)> dfs = [&](int u, EdgeId pe) {
    disc[u] = low[u] = timer++;
    for (size_t i = 0; i < g.adj[u].size(); ++i) {
      int v = g.adj[u][i];
      EdgeId e = g.incident[u][i];
      if (e == pe) continue;
      if (disc[v] == -1) {
        estack.push_back(e);
        dfs(v, e);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          std::vector<EdgeId> blk;
          while (true) {
            EdgeId f = estack.back();
            estack.pop_back();
            blk.push_back(f);
            if (f == e) break;
          }
          blocks.push_back(std::move(blk));
        }
      } else if (disc[v] < disc[u]) {
        estack.push_back(e);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  for (int v = 0; v < g.n; ++v)
    if (disc[v] == -1) dfs(v, -1);
  return blocks;
}

EdgeColoring outer_exact(const Graph& g, int k) {
  SearchBudget b;
  b.max_nodes = 50'000'000;
  b.threads = 1;
  auto r = exists_k_improper(g, k, b);
  if (r.status != SearchStatus::Witness)
    throw ConstructionError(
        "outerplanar base search found no coloring within budget (is the "
        "input outerplanar?)");
  return r.witness;
}

// g connected with at least one edge; k is the global budget.
EdgeColoring outer_rec(const Graph& g, int k, OuterStats& st) {
  if (g.edge_count() <= 12 || max_degree(g) <= 5) {
    ++st.base_solves;
    return outer_exact(g, k);
  }

  auto blocks = biconnected_blocks(g);
  if (blocks.size() > 1) {
    int nb = static_cast<int>(blocks.size());
    std::vector<std::vector<int>> bverts(nb);
    std::vector<std::vector<EdgeId>> bemap(nb);
    std::vector<EdgeColoring> bcol(nb);
    for (int i = 0; i < nb; ++i) {
      std::vector<int> vs;
      for (EdgeId e : blocks[i]) {
        vs.push_back(g.edges[e].first);
        vs.push_back(g.edges[e].second);
      }
      std::sort(vs.begin(), vs.end());
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
      bverts[i] = vs;
      Graph sub = induced_subgraph(g, vs, &bemap[i]);
      bcol[i] = outer_rec(sub, k, st);
    }
    std::vector<std::vector<int>> vblocks(g.n);
    for (int i = 0; i < nb; ++i)
      for (int v : bverts[i]) vblocks[v].push_back(i);

    // root at the block holding the smallest vertex; stack children so their
    // colors at the shared vertex sit directly above what is already there
    int root = 0;
    for (int i = 1; i < nb; ++i)
      if (bverts[i].front() < bverts[root].front()) root = i;
    EdgeColoring out;
    out.colors.assign(g.edge_count(), 0);
    std::vector<char> eset(g.edge_count(), 0), bdone(nb, 0);
    auto place = [&](int blk, int shift) {
      for (size_t j = 0; j < bemap[blk].size(); ++j) {
        out.colors[bemap[blk][j]] = bcol[blk].colors[j] + shift;
        eset[bemap[blk][j]] = 1;
      }
      bdone[blk] = 1;
    };
    place(root, 0);
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int b = q.front();
      q.pop();
      for (int a : bverts[b]) {
        for (int child : vblocks[a]) {
          if (bdone[child]) continue;
          int cur_max = INT_MIN;
          for (size_t i = 0; i < g.adj[a].size(); ++i)
            if (eset[g.incident[a][i]])
              cur_max = std::max(cur_max, out.colors[g.incident[a][i]]);
          int child_min = INT_MAX;
          for (size_t j = 0; j < bemap[child].size(); ++j) {
            auto [p, r] = g.edges[bemap[child][j]];
            if (p == a || r == a)
              child_min = std::min(child_min, bcol[child].colors[j]);
          }
          place(child, cur_max + 1 - child_min);
          q.push(child);
        }
      }
    }
    return out;
  }

  // 2-connected: peel a degree-2 vertex
  struct Pick {
    int v = -1, u = -1, w = -1;
    bool triangle = false;
  };
  Pick pick;
  for (int v = 0; v < g.n && pick.v == -1; ++v) {
    if (g.degree(v) != 2) continue;
    int u = g.adj[v][0], w = g.adj[v][1];
    if (!g.has_edge(u, w)) {
      pick = {v, u, w, false};
    } else if (std::min(g.degree(u), g.degree(w)) <= 4) {
      if (g.degree(w) < g.degree(u) || (g.degree(w) == g.degree(u) && w < u))
        std::swap(u, w);
      pick = {v, u, w, true};
    }
  }
  if (pick.v == -1) {
    ++st.fallbacks;
    return outer_exact(g, k);
  }

  std::vector<int> keep;
  keep.reserve(g.n - 1);
  for (int x = 0; x < g.n; ++x)
    if (x != pick.v) keep.push_back(x);
  auto lower = [&](int x) { return x > pick.v ? x - 1 : x; };
  std::vector<EdgeId> emap;
  Graph ind = induced_subgraph(g, keep, &emap);

  EdgeColoring out;
  out.colors.assign(g.edge_count(), 0);
  std::vector<char> eset(g.edge_count(), 0);

  if (!pick.triangle) {
    auto edges2 = ind.edges;
    edges2.emplace_back(lower(pick.u), lower(pick.w));
    Graph gp = make_graph(ind.n, edges2);
    EdgeColoring cp = outer_rec(gp, k, st);
    for (size_t i = 0; i < emap.size(); ++i) out.colors[emap[i]] = cp.colors[i];
    int x = cp.colors.back(); // the helper edge u-w carries both new colors
    out.colors[g.edge_id(pick.v, pick.u)] = x;
    out.colors[g.edge_id(pick.v, pick.w)] = x;
    return out;
  }

  EdgeColoring cp = outer_rec(ind, k, st);
  for (size_t i = 0; i < emap.size(); ++i) {
    out.colors[emap[i]] = cp.colors[i];
    eset[emap[i]] = 1;
  }
  int x = out.colors[g.edge_id(pick.u, pick.w)];
  auto ok = [&](int p, int c) {
    int mnc = INT_MAX, mxc = INT_MIN, count = 0;
    for (size_t i = 0; i < g.adj[p].size(); ++i) {
      EdgeId e = g.incident[p][i];
      if (!eset[e]) continue;
      mnc = std::min(mnc, out.colors[e]);
      mxc = std::max(mxc, out.colors[e]);
      if (out.colors[e] == c) ++count;
    }
    return count <= k - 1 && c >= mnc - 1 && c <= mxc + 1;
  };
  static const int pairs[8][2] = {{0, 0},   {+1, 0},  {+1, +2}, {+2, +2},
                                  {0, -1},  {-1, -1}, {-1, -2}, {-2, -2}};
  for (const auto& pr : pairs) {
    int cu = x + pr[0], cw = x + pr[1];
    if (ok(pick.u, cu) && ok(pick.w, cw)) {
      out.colors[g.edge_id(pick.v, pick.u)] = cu;
      out.colors[g.edge_id(pick.v, pick.w)] = cw;
      return out;
    }
  }
  ++st.fallbacks;
  return outer_exact(g, k);
}

} // namespace

OuterplanarColoring color_outerplanar(const Graph& g) {
  if (g.n < 1) throw ConstructionError("empty graph");
  int delta = max_degree(g);
  if (delta < 6)
    throw ConstructionError("outerplanar coloring needs max degree at least 6");
  int k = (delta + 4) / 5;
  OuterStats st;
  EdgeColoring result;
  result.colors.assign(g.edge_count(), 0);
  for (const auto& comp : components(g)) {
    std::vector<EdgeId> emap;
    Graph sub = induced_subgraph(g, comp, &emap);
    if (sub.edge_count() == 0) continue;
    EdgeColoring cc = outer_rec(sub, k, st);
    for (size_t i = 0; i < emap.size(); ++i)
      result.colors[emap[i]] = cc.colors[i];
  }
  if (g.edge_count() > 0) result = normalize(result);
  check_result(g, result, k, "color_outerplanar");
  return {std::move(result), k, st.base_solves, st.fallbacks};
}

// ---- corona strategies -----------------------------------------------------------

std::string strategy_name(CoronaStrategy s) {
  switch (s) {
    case CoronaStrategy::Path: return "path";
    case CoronaStrategy::Cycle: return "cycle";
    case CoronaStrategy::Star: return "star";
    case CoronaStrategy::Spider: return "spider";
    case CoronaStrategy::Caterpillar: return "caterpillar";
    case CoronaStrategy::General: return "general";
    case CoronaStrategy::ThreeSet: return "three-set";
  }
  return "?";
}

std::optional<CoronaStrategy> strategy_from_name(const std::string& name) {
  for (CoronaStrategy s :
       {CoronaStrategy::Path, CoronaStrategy::Cycle, CoronaStrategy::Star,
        CoronaStrategy::Spider, CoronaStrategy::Caterpillar,
        CoronaStrategy::General, CoronaStrategy::ThreeSet})
    if (strategy_name(s) == name) return s;
  return std::nullopt;
}

namespace {

std::vector<int> copy_path_order(const Graph& h) {
  if (h.n == 1) return {0};
  if (!is_connected(h) || !is_forest(h) || max_degree(h) > 2)
    throw ConstructionError("path strategy: the copy is not a path");
  int start = -1;
  for (int v = 0; v < h.n; ++v)
    if (h.degree(v) == 1) {
      start = v;
      break;
    }
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (static_cast<int>(order.size()) < h.n) {
    int nxt = -1;
    for (int nb : h.adj[cur])
      if (nb != prev) nxt = nb;
    prev = cur;
    cur = nxt;
    order.push_back(cur);
  }
  return order;
}

std::vector<int> copy_cycle_order(const Graph& h) {
  if (h.n < 3 || !is_connected(h) || h.edge_count() != h.n)
    throw ConstructionError("cycle strategy: the copy is not a cycle");
  for (int v = 0; v < h.n; ++v)
    if (h.degree(v) != 2)
      throw ConstructionError("cycle strategy: the copy is not a cycle");
  std::vector<int> order{0};
  int prev = -1, cur = 0;
  int first = std::min(h.adj[0][0], h.adj[0][1]);
  prev = cur;
  cur = first;
  order.push_back(cur);
  while (static_cast<int>(order.size()) < h.n) {
    int nxt = h.adj[cur][0] == prev ? h.adj[cur][1] : h.adj[cur][0];
    prev = cur;
    cur = nxt;
    order.push_back(cur);
  }
  return order;
}

int copy_star_center(const Graph& h) {
  if (h.n < 2 || !is_connected(h) || h.edge_count() != h.n - 1)
    throw ConstructionError("star strategy: the copy is not a star");
  if (h.n == 2) return 0;
  int center = -1;
  for (int v = 0; v < h.n; ++v) {
    if (h.degree(v) == h.n - 1)
      center = v;
    else if (h.degree(v) != 1)
      throw ConstructionError("star strategy: the copy is not a star");
  }
  if (center == -1)
    throw ConstructionError("star strategy: the copy is not a star");
  return center;
}

struct SpiderShape {
  int center = 0;
  std::vector<std::vector<int>> legs; // vertex lists walking outward
};

SpiderShape copy_spider_shape(const Graph& h) {
  if (!is_connected(h) || !is_forest(h))
    throw ConstructionError("spider strategy: the copy is not a spider");
  SpiderShape sh;
  sh.center = -1;
  for (int v = 0; v < h.n; ++v) {
    if (h.degree(v) >= 3) {
      if (sh.center != -1)
        throw ConstructionError("spider strategy: more than one branch vertex");
      sh.center = v;
    }
  }
  if (sh.center == -1)
    throw ConstructionError("spider strategy: the copy has no branch vertex");
  if (h.degree(sh.center) > 4)
    throw ConstructionError("spider strategy: supports at most 4 legs");
  for (int first : h.adj[sh.center]) {
    std::vector<int> leg{first};
    int prev = sh.center, cur = first;
    while (h.degree(cur) == 2) {
      int nxt = h.adj[cur][0] == prev ? h.adj[cur][1] : h.adj[cur][0];
      prev = cur;
      cur = nxt;
      leg.push_back(cur);
    }
    sh.legs.push_back(std::move(leg));
  }
  // deterministic: order legs by their first vertex
  std::sort(sh.legs.begin(), sh.legs.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return sh;
}

struct CaterpillarShape {
  std::vector<int> spine;
  std::vector<std::vector<int>> leaves; // per spine vertex, ascending
};

CaterpillarShape copy_caterpillar_shape(const Graph& h) {
  if (!is_connected(h) || !is_forest(h))
    throw ConstructionError("caterpillar strategy: the copy is not a tree");
  std::vector<int> spine;
  for (int v = 0; v < h.n; ++v)
    if (h.degree(v) >= 2) spine.push_back(v);
  CaterpillarShape sh;
  if (spine.empty()) {
    sh.spine = {0}; // single vertex or single edge
  } else {
    std::vector<char> in_spine(h.n, 0);
    for (int v : spine) in_spine[v] = 1;
    int ends = 0, start = -1;
    for (int v : spine) {
      int snb = 0;
      for (int nb : h.adj[v]) snb += in_spine[nb];
      if (snb > 2)
        throw ConstructionError(
            "caterpillar strategy: the copy is not a caterpillar");
      if (snb <= 1 && start == -1) start = v;
      ends += snb <= 1;
    }
    if (spine.size() == 1) {
      sh.spine = spine;
    } else {
      if (ends != 2)
        throw ConstructionError(
            "caterpillar strategy: the copy is not a caterpillar");
      int prev = -1, cur = start;
      sh.spine.push_back(cur);
      while (true) {
        int nxt = -1;
        for (int nb : h.adj[cur])
          if (in_spine[nb] && nb != prev) nxt = nb;
        if (nxt == -1) break;
        prev = cur;
        cur = nxt;
        sh.spine.push_back(cur);
      }
      if (sh.spine.size() != spine.size())
        throw ConstructionError(
            "caterpillar strategy: the copy is not a caterpillar");
    }
  }
  std::vector<char> in_spine(h.n, 0);
  for (int v : sh.spine) in_spine[v] = 1;
  sh.leaves.resize(sh.spine.size());
  for (size_t i = 0; i < sh.spine.size(); ++i) {
    for (int nb : h.adj[sh.spine[i]])
      if (!in_spine[nb]) sh.leaves[i].push_back(nb);
    std::sort(sh.leaves[i].begin(), sh.leaves[i].end());
  }
  return sh;
}

} // namespace

CoronaColoring color_corona(const Graph& base, const EdgeColoring& base_coloring,
                            const Graph& copy, CoronaStrategy strategy) {
  auto rep = verify(base, base_coloring);
  if (!rep.all_intervals)
    throw ConstructionError("corona: the base coloring fails the interval check");
  int imp_base = rep.max_multiplicity;
  EdgeColoring bc =
      base.edge_count() > 0 ? normalize(base_coloring) : base_coloring;

  auto [g, layout] = corona(base, copy);
  EdgeColoring c;
  c.colors.assign(g.edge_count(), 0);
  for (EdgeId e = 0; e < base.edge_count(); ++e) c.colors[e] = bc.colors[e];
  std::vector<int> sigma(base.n, 0);
  for (int v = 0; v < base.n; ++v)
    for (EdgeId e : base.incident[v])
      sigma[v] = std::max(sigma[v], bc.colors[e]);

  int cand = 2;
  switch (strategy) {
    case CoronaStrategy::Path: {
      auto order = copy_path_order(copy);
      std::vector<int> pos(copy.n, 0);
      for (size_t i = 0; i < order.size(); ++i)
        pos[order[i]] = static_cast<int>(i) + 1;
      for (int i = 0; i < base.n; ++i) {
        int m0 = sigma[i];
        for (int w = 0; w < copy.n; ++w)
          c.colors[layout.attach_edge_start(i) + w] = m0 + pos[w];
        for (EdgeId le = 0; le < copy.edge_count(); ++le) {
          auto [a, b] = copy.edges[le];
          c.colors[layout.copy_edge_start(i) + le] = m0 + std::min(pos[a], pos[b]);
        }
      }
      cand = copy.n >= 2 ? 2 : 1;
      break;
    }
    case CoronaStrategy::Cycle: {
      auto order = copy_cycle_order(copy);
      int kk = copy.n;
      std::vector<int> pos(copy.n, 0);
      for (size_t i = 0; i < order.size(); ++i)
        pos[order[i]] = static_cast<int>(i) + 1;
      auto spoke = [&](int i) { // tent profile over the rim
        return kk % 2 == 0 ? std::min(i, kk + 1 - i) : std::min(i, kk + 2 - i);
      };
      for (int i = 0; i < base.n; ++i) {
        int m0 = sigma[i];
        for (int w = 0; w < copy.n; ++w)
          c.colors[layout.attach_edge_start(i) + w] = m0 + spoke(pos[w]);
        for (EdgeId le = 0; le < copy.edge_count(); ++le) {
          auto [a, b] = copy.edges[le];
          c.colors[layout.copy_edge_start(i) + le] =
              m0 + std::min(spoke(pos[a]), spoke(pos[b])) + 1;
        }
      }
      break;
    }
    case CoronaStrategy::Star: {
      int ctr = copy_star_center(copy);
      std::vector<int> idx(copy.n, 0);
      int next = 1;
      for (int w = 0; w < copy.n; ++w)
        if (w != ctr) idx[w] = next++;
      int kk = copy.n - 1;
      for (int i = 0; i < base.n; ++i) {
        int m0 = sigma[i];
        for (int w = 0; w < copy.n; ++w)
          c.colors[layout.attach_edge_start(i) + w] =
              w == ctr ? m0 + kk + 1 : m0 + idx[w];
        for (EdgeId le = 0; le < copy.edge_count(); ++le) {
          auto [a, b] = copy.edges[le];
          int leaf = a == ctr ? b : a;
          c.colors[layout.copy_edge_start(i) + le] = m0 + idx[leaf];
        }
      }
      break;
    }
    case CoronaStrategy::Spider: {
      auto sh = copy_spider_shape(copy);
      // raw colors: legs 1,2 run positive, legs 3,4 mirror them below zero
      std::vector<int> raw_attach(copy.n, 0);
      std::vector<int> leg_of(copy.n, -1), pos_in_leg(copy.n, 0);
      int neg_depth = 0;
      for (size_t l = 0; l < sh.legs.size(); ++l) {
        int sign = l < 2 ? 1 : -1;
        if (sign < 0)
          neg_depth = std::max(neg_depth, static_cast<int>(sh.legs[l].size()));
        for (size_t p = 0; p < sh.legs[l].size(); ++p) {
          int w = sh.legs[l][p];
          raw_attach[w] = sign * static_cast<int>(p + 1);
          leg_of[w] = static_cast<int>(l);
          pos_in_leg[w] = static_cast<int>(p + 1);
        }
      }
      for (int i = 0; i < base.n; ++i) {
        int shift = sigma[i] + 1 + neg_depth;
        for (int w = 0; w < copy.n; ++w)
          c.colors[layout.attach_edge_start(i) + w] = raw_attach[w] + shift;
        for (EdgeId le = 0; le < copy.edge_count(); ++le) {
          auto [a, b] = copy.edges[le];
          int inner = a == sh.center ? b : (b == sh.center ? a : -1);
          int raw;
          if (inner != -1) {
            raw = leg_of[inner] < 2 ? 1 : -1; // first edge of the leg
          } else {
            int sign = leg_of[a] < 2 ? 1 : -1;
            raw = sign * std::max(pos_in_leg[a], pos_in_leg[b]);
          }
          c.colors[layout.copy_edge_start(i) + le] = raw + shift;
        }
      }
      break;
    }
    case CoronaStrategy::Caterpillar: {
      auto sh = copy_caterpillar_shape(copy);
      int sn = static_cast<int>(sh.spine.size());
      std::vector<int> cum(sn + 1, 0); // cum[i] = c_i, 1-based
      for (int i = 1; i <= sn; ++i)
        cum[i] = cum[i - 1] + static_cast<int>(sh.leaves[i - 1].size()) +
                 (i >= 2 ? 1 : 0);
      std::vector<int> spine_pos(copy.n, 0), leaf_color(copy.n, 0),
          attach(copy.n, 0);
      for (int i = 1; i <= sn; ++i) {
        spine_pos[sh.spine[i - 1]] = i;
        attach[sh.spine[i - 1]] = i == 1 ? 1 : cum[i - 1] + 1;
        int start = i == 1 ? 1 : cum[i - 1] + 2;
        for (size_t j = 0; j < sh.leaves[i - 1].size(); ++j) {
          leaf_color[sh.leaves[i - 1][j]] = start + static_cast<int>(j);
          attach[sh.leaves[i - 1][j]] = start + static_cast<int>(j);
        }
      }
      for (int i = 0; i < base.n; ++i) {
        int m0 = sigma[i];
        for (int w = 0; w < copy.n; ++w)
          c.colors[layout.attach_edge_start(i) + w] = m0 + attach[w];
        for (EdgeId le = 0; le < copy.edge_count(); ++le) {
          auto [a, b] = copy.edges[le];
          int col;
          if (spine_pos[a] > 0 && spine_pos[b] > 0)
            col = cum[std::min(spine_pos[a], spine_pos[b])] + 1;
          else
            col = leaf_color[spine_pos[a] > 0 ? b : a];
          c.colors[layout.copy_edge_start(i) + le] = m0 + col;
        }
      }
      break;
    }
    case CoronaStrategy::General: {
      for (int i = 0; i < base.n; ++i) {
        int m0 = sigma[i];
        for (int w = 0; w < copy.n; ++w)
          c.colors[layout.attach_edge_start(i) + w] = m0 + 1;
        for (EdgeId le = 0; le < copy.edge_count(); ++le)
          c.colors[layout.copy_edge_start(i) + le] = m0 + 2;
      }
      cand = std::max(copy.n, 1);
      break;
    }
    case CoronaStrategy::ThreeSet: {
      for (int i = 0; i < base.n; ++i) {
        int m0 = sigma[i];
        for (int w = 0; w < copy.n; ++w)
          c.colors[layout.attach_edge_start(i) + w] = m0 + 1 + w % 3;
        for (EdgeId le = 0; le < copy.edge_count(); ++le)
          c.colors[layout.copy_edge_start(i) + le] = m0 + 2;
      }
      cand = std::max((copy.n + 2) / 3,
                      copy.edge_count() > 0 ? max_degree(copy) + 1 : 1);
      break;
    }
  }

  int bound = std::max(imp_base, cand);
  check_result(g, c, bound, "color_corona");
  return {std::move(g), layout, std::move(c), bound};
}

} // namespace muint
