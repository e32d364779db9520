#include "muint/families.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace muint {

namespace {

long long parse_ll(const std::string& s) {
  size_t pos = 0;
  long long v = std::stoll(s, &pos);
  if (pos != s.size()) throw RecipeError("bad integer '" + s + "'");
  return v;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(static_cast<int>(parse_ll(item)));
  return out;
}

} // namespace

std::string family_name(Family k) {
  switch (k) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Star: return "star";
    case Family::Spider: return "spider";
    case Family::Caterpillar: return "caterpillar";
    case Family::Wheel: return "wheel";
    case Family::Complete: return "complete";
    case Family::CompleteMultipartite: return "multipartite";
    case Family::SquareOfPath: return "square_of_path";
    case Family::TwoPath: return "two_path";
    case Family::TwoTree: return "two_tree";
    case Family::IteratedTriangulation: return "triangulation";
    case Family::Corona: return "corona";
    case Family::StrongProduct: return "strong_product";
  }
  return "?";
}

FamilyRecipe parse_family_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  std::vector<int> args;
  if (colon != std::string::npos) args = parse_int_list(spec.substr(colon + 1));
  FamilyRecipe r;
  auto need = [&](size_t k) {
    if (args.size() != k)
      throw RecipeError("family '" + kind + "' takes " + std::to_string(k) +
                        " parameter(s)");
  };
  if (kind == "path") { r.kind = Family::Path; need(1); r.n = args[0]; }
  else if (kind == "cycle") { r.kind = Family::Cycle; need(1); r.n = args[0]; }
  else if (kind == "star") { r.kind = Family::Star; need(1); r.n = args[0]; }
  else if (kind == "spider") { r.kind = Family::Spider; r.legs = args; }
  else if (kind == "caterpillar") { r.kind = Family::Caterpillar; r.leaf_counts = args; }
  else if (kind == "wheel") { r.kind = Family::Wheel; need(1); r.n = args[0]; }
  else if (kind == "complete") { r.kind = Family::Complete; need(1); r.n = args[0]; }
  else if (kind == "multipartite") {
    r.kind = Family::CompleteMultipartite;
    need(3);
    r.s = args[0]; r.t = args[1]; r.ell = args[2];
  } else if (kind == "parts") {
    r.kind = Family::CompleteMultipartite;
    r.part_sizes = args;
  } else if (kind == "square_of_path") {
    r.kind = Family::SquareOfPath; need(1); r.n = args[0];
  } else if (kind == "two_path") {
    r.kind = Family::TwoPath;
    if (args.size() < 1 || args.size() > 2) throw RecipeError("two_path:N[,seed]");
    r.n = args[0];
    if (args.size() == 2) r.seed = static_cast<std::uint64_t>(args[1]);
  } else if (kind == "two_tree") {
    r.kind = Family::TwoTree;
    if (args.size() < 1 || args.size() > 2) throw RecipeError("two_tree:N[,seed]");
    r.n = args[0];
    if (args.size() == 2) r.seed = static_cast<std::uint64_t>(args[1]);
  } else if (kind == "triangulation") {
    r.kind = Family::IteratedTriangulation; need(1); r.n = args[0];
  } else {
    throw RecipeError("unknown family '" + kind + "'");
  }
  return r;
}

// ---- labels --------------------------------------------------------------

int MultipartiteLabels::part_of(int v) const {
  for (size_t p = 0; p < parts.size(); ++p)
    for (int u : parts[p])
      if (u == v) return static_cast<int>(p);
  return -1;
}

std::string MultipartiteLabels::name(int v) const {
  int p = part_of(v);
  if (p < 0) return "v" + std::to_string(v);
  int idx = 0;
  for (int u : parts[p]) {
    ++idx;
    if (u == v) break;
  }
  if (stst) {
    int pair = p / 2 + 1;
    char c = (p % 2 == 0) ? 'x' : 'y';
    return std::string(1, c) + std::to_string(pair) + "," + std::to_string(idx);
  }
  return "p" + std::to_string(p + 1) + "," + std::to_string(idx);
}

// ---- basic constructors ---------------------------------------------------

Graph make_path(int n) {
  if (n < 1) throw RecipeError("path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, e);
}

Graph make_cycle(int n) {
  if (n < 3) throw RecipeError("cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n - 1, 0);
  return make_graph(n, e);
}

Graph make_star(int leaves) {
  if (leaves < 1) throw RecipeError("star needs >= 1 leaves");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return make_graph(leaves + 1, e);
}

Graph make_spider(const std::vector<int>& legs) {
  if (legs.size() < 3) throw RecipeError("spider needs >= 3 legs");
  for (int l : legs)
    if (l < 1) throw RecipeError("spider legs must have length >= 1");
  std::vector<std::pair<int, int>> e;
  int next = 1;
  for (int l : legs) {
    e.emplace_back(0, next);
    for (int i = 1; i < l; ++i) {
      e.emplace_back(next, next + 1);
      ++next;
    }
    ++next;
  }
  return make_graph(next, e);
}

Graph make_caterpillar(const std::vector<int>& leaf_counts) {
  if (leaf_counts.empty()) throw RecipeError("caterpillar needs >= 1 spine vertex");
  int k = static_cast<int>(leaf_counts.size());
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  int next = k;
  for (int i = 0; i < k; ++i) {
    if (leaf_counts[i] < 0) throw RecipeError("leaf counts must be >= 0");
    for (int j = 0; j < leaf_counts[i]; ++j) e.emplace_back(i, next++);
  }
  return make_graph(next, e);
}

Graph make_wheel(int n) {
  if (n < 4) throw RecipeError("wheel needs n >= 4 vertices");
  // hub 0, rim 1..n-1; identical to corona(K_1, C_{n-1})
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n - 1, 1);
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return make_graph(n, e);
}

Graph make_complete(int n) {
  if (n < 1) throw RecipeError("complete needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return make_graph(n, e);
}

std::pair<Graph, MultipartiteLabels>
make_complete_multipartite(const std::vector<int>& sizes) {
  if (sizes.empty()) throw RecipeError("multipartite needs >= 1 part");
  MultipartiteLabels labels;
  int n = 0;
  std::vector<int> part_of;
  for (int s : sizes) {
    if (s < 1) throw RecipeError("part sizes must be >= 1");
    labels.parts.emplace_back();
    for (int i = 0; i < s; ++i) {
      labels.parts.back().push_back(n);
      part_of.push_back(static_cast<int>(labels.parts.size()) - 1);
      ++n;
    }
  }
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) e.emplace_back(u, v);
  return {make_graph(n, e), labels};
}

std::pair<Graph, MultipartiteLabels> make_multipartite_stst(int s, int t, int ell) {
  if (s < 1 || t < 1) throw RecipeError("part sizes must be >= 1");
  if (ell < 1 || ell > 5) throw RecipeError("ell must be in 1..5");
  std::vector<int> sizes;
  for (int i = 0; i < (1 << (ell - 1)); ++i) {
    sizes.push_back(s);
    sizes.push_back(t);
  }
  auto [g, labels] = make_complete_multipartite(sizes);
  labels.stst = true;
  return {g, labels};
}

Graph make_square_of_path(int n) {
  if (n < 1) throw RecipeError("square_of_path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  for (int i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 2);
  return make_graph(n, e);
}

// ---- two-paths ------------------------------------------------------------

Graph two_path_graph(const TwoPathSequence& seq) {
  if (seq.seq_edges.empty())
    throw TraceError("two-path sequence needs at least one edge");
  if (seq.triangles.size() + 1 != seq.seq_edges.size())
    throw TraceError("two-path sequence must alternate edges and triangles");
  std::set<std::pair<int, int>> seen;
  auto add = [&](std::pair<int, int> uv) {
    if (uv.first == uv.second) throw TraceError("degenerate edge in sequence");
    auto key = std::minmax(uv.first, uv.second);
    if (!seen.insert(key).second)
      throw TraceError("repeated edge in two-path sequence");
  };
  std::vector<std::pair<int, int>> edges = seq.seq_edges;
  for (auto& uv : edges) add(uv);
  for (size_t i = 0; i < seq.triangles.size(); ++i) {
    auto [a1, b1] = seq.seq_edges[i];
    auto [a2, b2] = seq.seq_edges[i + 1];
    std::set<int> tri{a1, b1, a2, b2};
    if (tri.size() != 3)
      throw TraceError("consecutive sequence edges must share one vertex");
    std::set<int> declared(seq.triangles[i].begin(), seq.triangles[i].end());
    if (declared != tri)
      throw TraceError("triangle " + std::to_string(i + 1) +
                       " does not match its sequence edges");
    // remaining edge: the two non-shared endpoints
    int shared = -1;
    for (int v : {a1, b1})
      if (v == a2 || v == b2) shared = v;
    int p = (a1 == shared) ? b1 : a1;
    int q = (a2 == shared) ? b2 : a2;
    add({p, q});
    edges.emplace_back(p, q);
  }
  int n = 0;
  for (auto& [u, v] : edges) n = std::max({n, u + 1, v + 1});
  for (auto& [u, v] : edges)
    if (u < 0 || v < 0) throw TraceError("negative vertex id");
  return make_graph(n, edges);
}

TwoPathSequence random_two_path(int triangles, std::uint64_t seed) {
  if (triangles < 1) throw RecipeError("two_path needs >= 1 triangle");
  std::mt19937_64 rng(seed);
  TwoPathSequence seq;
  seq.seq_edges.emplace_back(0, 1);
  for (int i = 1; i <= triangles; ++i) {
    auto [u, v] = seq.seq_edges.back();
    int w = i + 1; // one new vertex per triangle
    seq.triangles.push_back({u, v, w});
    int keep = (rng() % 2 == 0) ? u : v;
    seq.seq_edges.emplace_back(keep, w);
  }
  return seq;
}

// ---- two-trees ------------------------------------------------------------

Graph two_tree_from_trace(const TwoTreeTrace& trace) {
  auto [b0, b1, b2] = trace.base;
  if (b0 == b1 || b1 == b2 || b0 == b2)
    throw TraceError("degenerate base triangle");
  std::set<int> present{b0, b1, b2};
  std::set<std::pair<int, int>> have;
  auto key = [](int u, int v) {
    return std::pair<int, int>(std::min(u, v), std::max(u, v));
  };
  std::vector<std::pair<int, int>> edges{{b0, b1}, {b1, b2}, {b2, b0}};
  for (auto& [u, v] : edges) have.insert(key(u, v));
  for (const auto& st : trace.steps) {
    if (present.count(st.vertex))
      throw TraceError("trace re-adds vertex " + std::to_string(st.vertex));
    if (!have.count(key(st.u, st.w)))
      throw TraceError("trace attaches to missing edge (" +
                       std::to_string(st.u) + "," + std::to_string(st.w) + ")");
    present.insert(st.vertex);
    edges.emplace_back(st.vertex, st.u);
    edges.emplace_back(st.vertex, st.w);
    have.insert(key(st.vertex, st.u));
    have.insert(key(st.vertex, st.w));
  }
  int n = 0;
  for (int v : present) {
    if (v < 0) throw TraceError("negative vertex id");
    n = std::max(n, v + 1);
  }
  if (n != static_cast<int>(present.size()))
    throw TraceError("trace vertex ids must cover 0..n-1");
  return make_graph(n, edges);
}

TwoTreeTrace random_two_tree(int n, std::uint64_t seed) {
  if (n < 3) throw RecipeError("two_tree needs n >= 3");
  std::mt19937_64 rng(seed);
  TwoTreeTrace trace;
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 0}};
  for (int v = 3; v < n; ++v) {
    auto [u, w] = edges[rng() % edges.size()];
    trace.steps.push_back({v, u, w});
    edges.emplace_back(v, u);
    edges.emplace_back(v, w);
  }
  return trace;
}

// ---- iterated triangulation -------------------------------------------------

std::pair<Graph, TriangulationTrace> iterated_triangulation(int levels) {
  if (levels < 0) throw RecipeError("triangulation needs levels >= 0");
  TriangulationTrace trace;
  trace.levels = levels;
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 0}};
  std::vector<std::array<int, 3>> faces{{0, 1, 2}}; // inner faces, ccw
  int next = 3;
  for (int lev = 1; lev <= levels; ++lev) {
    std::vector<std::array<int, 3>> nf;
    nf.reserve(faces.size() * 3);
    for (const auto& f : faces) {
      int v = next++;
      trace.steps.push_back({v, f});
      auto [a, b, c] = f;
      edges.emplace_back(v, a);
      edges.emplace_back(v, b);
      edges.emplace_back(v, c);
      nf.push_back({a, b, v});
      nf.push_back({b, c, v});
      nf.push_back({c, a, v});
    }
    faces = std::move(nf);
  }
  return {make_graph(next, edges), trace};
}

// ---- products ---------------------------------------------------------------

std::pair<Graph, CoronaLayout> corona(const Graph& g, const Graph& h) {
  if (g.n < 1 || h.n < 1) throw RecipeError("corona operands must be nonempty");
  CoronaLayout lay;
  lay.base_n = g.n;
  lay.copy_n = h.n;
  lay.base_edges = g.edge_count();
  lay.copy_edges = h.edge_count();
  std::vector<std::pair<int, int>> edges = g.edges;
  for (int i = 0; i < g.n; ++i) {
    int start = lay.copy_start(i);
    for (auto [u, v] : h.edges) edges.emplace_back(start + u, start + v);
    for (int j = 0; j < h.n; ++j) edges.emplace_back(i, start + j);
  }
  return {make_graph(g.n + g.n * h.n, edges), lay};
}

Graph strong_product(const Graph& a, const Graph& b) {
  if (a.n < 1 || b.n < 1) throw RecipeError("product operands must be nonempty");
  int n = a.n * b.n;
  auto id = [&](int i, int j) { return i * b.n + j; };
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < n; ++x) {
    int i1 = x / b.n, j1 = x % b.n;
    for (int y = x + 1; y < n; ++y) {
      int i2 = y / b.n, j2 = y % b.n;
      bool adj = (i1 == i2 && b.has_edge(j1, j2)) ||
                 (j1 == j2 && a.has_edge(i1, i2)) ||
                 (a.has_edge(i1, i2) && b.has_edge(j1, j2));
      if (adj) edges.emplace_back(id(i1, j1), id(i2, j2));
    }
  }
  return make_graph(n, edges);
}

// ---- enumeration ------------------------------------------------------------

std::vector<TwoTreeInstance> enumerate_two_trees(int n) {
  if (n < 3 || n > 10) throw RecipeError("enumerate_two_trees supports 3 <= n <= 10");
  std::vector<TwoTreeInstance> cur;
  cur.push_back({two_tree_from_trace(TwoTreeTrace{}), TwoTreeTrace{}});
  for (int k = 4; k <= n; ++k) {
    std::vector<TwoTreeInstance> next;
    std::set<std::string> seen;
    for (const auto& inst : cur) {
      for (auto [u, w] : inst.graph.edges) {
        TwoTreeTrace tr = inst.trace;
        tr.steps.push_back({k - 1, u, w});
        Graph g = two_tree_from_trace(tr);
        auto cert = certificate(g);
        if (seen.insert(cert.bytes).second) next.push_back({std::move(g), std::move(tr)});
      }
    }
    cur = std::move(next);
  }
  return cur;
}

namespace {

// all triangulations of the polygon i..j as diagonal lists
std::vector<std::vector<std::pair<int, int>>> polygon_triangulations(int i, int j) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (j - i <= 1) {
    out.emplace_back();
    return out;
  }
  for (int k = i + 1; k < j; ++k) {
    auto left = polygon_triangulations(i, k);
    auto right = polygon_triangulations(k, j);
    for (const auto& l : left)
      for (const auto& r : right) {
        std::vector<std::pair<int, int>> d = l;
        d.insert(d.end(), r.begin(), r.end());
        if (k > i + 1) d.emplace_back(i, k);
        if (j > k + 1) d.emplace_back(k, j);
        out.push_back(std::move(d));
      }
  }
  return out;
}

} // namespace

std::vector<Graph> enumerate_maximal_outerplanar(int n) {
  if (n < 3 || n > 12)
    throw RecipeError("enumerate_maximal_outerplanar supports 3 <= n <= 12");
  std::vector<Graph> out;
  std::set<std::string> seen;
  for (const auto& diag : polygon_triangulations(0, n - 1)) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    edges.insert(edges.end(), diag.begin(), diag.end());
    Graph g = make_graph(n, edges);
    auto cert = certificate(g);
    if (seen.insert(cert.bytes).second) out.push_back(std::move(g));
  }
  return out;
}

namespace {

void random_polygon_split(int i, int j, std::mt19937_64& rng,
                          std::vector<std::pair<int, int>>& diag) {
  if (j - i <= 1) return;
  int k = i + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(j - i - 1));
  if (k > i + 1) diag.emplace_back(i, k);
  if (j > k + 1) diag.emplace_back(k, j);
  random_polygon_split(i, k, rng, diag);
  random_polygon_split(k, j, rng, diag);
}

} // namespace

Graph random_maximal_outerplanar(int n, std::uint64_t seed) {
  if (n < 3) throw RecipeError("needs n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 0);
  std::vector<std::pair<int, int>> diag;
  random_polygon_split(0, n - 1, rng, diag);
  edges.insert(edges.end(), diag.begin(), diag.end());
  return make_graph(n, edges);
}

Graph random_connected_edge_subgraph(const Graph& g, std::uint64_t seed) {
  if (!is_connected(g)) throw RecipeError("input must be connected");
  std::mt19937_64 rng(seed);
  std::vector<char> keep(g.edge_count(), 1);
  std::vector<EdgeId> order(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) order[i] = i;
  for (int i = g.edge_count() - 1; i > 0; --i)
    std::swap(order[i], order[rng() % static_cast<std::uint64_t>(i + 1)]);
  auto connected_without = [&](EdgeId drop) {
    std::vector<std::pair<int, int>> e;
    for (EdgeId id = 0; id < g.edge_count(); ++id)
      if (keep[id] && id != drop) e.push_back(g.edges[id]);
    return is_connected(make_graph(g.n, e));
  };
  for (EdgeId id : order)
    if (rng() % 3 == 0 && connected_without(id)) keep[id] = 0;
  std::vector<std::pair<int, int>> e;
  for (EdgeId id = 0; id < g.edge_count(); ++id)
    if (keep[id]) e.push_back(g.edges[id]);
  return make_graph(g.n, e);
}

// ---- recipe dispatch ----------------------------------------------------------

Generated generate(const FamilyRecipe& r) {
  auto ni = static_cast<int>(r.n);
  switch (r.kind) {
    case Family::Path: return {make_path(ni), {}};
    case Family::Cycle: return {make_cycle(ni), {}};
    case Family::Star: return {make_star(ni), {}};
    case Family::Spider: return {make_spider(r.legs), {}};
    case Family::Caterpillar: return {make_caterpillar(r.leaf_counts), {}};
    case Family::Wheel: return {make_wheel(ni), {}};
    case Family::Complete: return {make_complete(ni), {}};
    case Family::CompleteMultipartite: {
      if (!r.part_sizes.empty()) {
        auto [g, lab] = make_complete_multipartite(r.part_sizes);
        return {std::move(g), std::move(lab)};
      }
      auto [g, lab] = make_multipartite_stst(static_cast<int>(r.s),
                                             static_cast<int>(r.t),
                                             static_cast<int>(r.ell));
      return {std::move(g), std::move(lab)};
    }
    case Family::SquareOfPath: return {make_square_of_path(ni), {}};
    case Family::TwoPath: {
      auto seq = random_two_path(ni, r.seed);
      return {two_path_graph(seq), std::move(seq)};
    }
    case Family::TwoTree: {
      auto tr = random_two_tree(ni, r.seed);
      return {two_tree_from_trace(tr), std::move(tr)};
    }
    case Family::IteratedTriangulation: {
      auto [g, tr] = iterated_triangulation(ni);
      return {std::move(g), std::move(tr)};
    }
    case Family::Corona: {
      if (r.sub.size() != 2) throw RecipeError("corona needs base and copy operands");
      Graph base = generate(r.sub[0]).graph;
      Graph copy = generate(r.sub[1]).graph;
      auto [g, lay] = corona(base, copy);
      return {std::move(g), lay};
    }
    case Family::StrongProduct: {
      if (r.sub.size() != 2)
        throw RecipeError("strong_product needs two operands");
      Graph a = generate(r.sub[0]).graph;
      Graph b = generate(r.sub[1]).graph;
      return {strong_product(a, b), {}};
    }
  }
  throw RecipeError("unhandled family");
}

} // namespace muint
