#include "muint/exact.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <queue>
#include <sstream>
#include <thread>

namespace muint {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int env_threads() {
  const char* s = std::getenv("IMPROPRIETY_THREADS");
  if (!s) return 1;
  int v = std::atoi(s);
  return v > 0 ? v : 1;
}

// Edges ordered breadth-first from a maximum-degree root (ties to the lower
// index): all edges of the dequeued vertex are emitted together, so the
// partially colored region stays contiguous and window pruning bites early.
std::vector<EdgeId> bfs_edge_order(const Graph& g) {
  int root = 0;
  for (int v = 1; v < g.n; ++v)
    if (g.degree(v) > g.degree(root)) root = v;
  std::vector<EdgeId> order;
  order.reserve(g.edge_count());
  std::vector<char> etaken(g.edge_count(), 0), vseen(g.n, 0);
  std::queue<int> q;
  q.push(root);
  vseen[root] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    std::vector<std::pair<int, EdgeId>> nbr;
    for (size_t i = 0; i < g.adj[u].size(); ++i)
      nbr.emplace_back(g.adj[u][i], g.incident[u][i]);
    std::sort(nbr.begin(), nbr.end());
    for (auto [v, e] : nbr) {
      if (!etaken[e]) {
        etaken[e] = 1;
        order.push_back(e);
      }
      if (!vseen[v]) {
        vseen[v] = 1;
        q.push(v);
      }
    }
  }
  return order;
}

enum class Step { Witness, Exhausted, Budget, Aborted };

struct Searcher {
  const Graph& g;
  int k, W;
  std::uint64_t max_nodes;
  double max_seconds;
  Clock::time_point t0;
  std::atomic<bool>* stop; // set by a sibling worker that found a witness

  std::vector<EdgeId> order;
  std::vector<std::pair<int, int>> ends; // endpoints per position
  std::vector<int> color;                // per position

  // per-vertex incremental profile
  std::vector<int> colored, minc, maxc, distinct;
  std::vector<std::vector<int>> cnt; // cnt[v][c + W]

  std::uint64_t nodes = 0;

  // worker partition at split_pos: candidate i goes to worker (i % nworkers)
  int split_pos = -1, nworkers = 1, worker = 0;

  Searcher(const Graph& graph, int kk, int window, const SearchBudget& b,
           const std::vector<EdgeId>& edge_order, std::atomic<bool>* stop_flag)
      : g(graph), k(kk), W(window), max_nodes(b.max_nodes),
        max_seconds(b.max_seconds), t0(Clock::now()), stop(stop_flag),
        order(edge_order) {
    ends.reserve(order.size());
    for (EdgeId e : order) ends.push_back(g.edges[e]);
    color.assign(order.size(), 0);
    colored.assign(g.n, 0);
    minc.assign(g.n, 0);
    maxc.assign(g.n, 0);
    distinct.assign(g.n, 0);
    cnt.assign(g.n, std::vector<int>(2 * W + 1, 0));
  }

  void place(int v, int c) {
    if (++cnt[v][c + W] == 1) distinct[v]++;
    if (colored[v]++ == 0) {
      minc[v] = maxc[v] = c;
    } else {
      minc[v] = std::min(minc[v], c);
      maxc[v] = std::max(maxc[v], c);
    }
  }

  void unplace(int v, int c, int sm, int sx, int sd) {
    --cnt[v][c + W];
    --colored[v];
    minc[v] = sm;
    maxc[v] = sx;
    distinct[v] = sd;
  }

  bool profile_ok(int v) const {
    // every color missing inside [min,max] must come from a future edge
    int gaps = (maxc[v] - minc[v] + 1) - distinct[v];
    return gaps <= g.degree(v) - colored[v];
  }

  Step dfs(size_t pos, bool pin_first) {
    if (pos == order.size()) return Step::Witness;
    auto [u, v] = ends[pos];
    int lo = -W, hi = W;
    // colors at a vertex all lie within a span of d(v); clamp to the span
    // reachable from what is already placed there
    if (colored[u] > 0) {
      lo = std::max(lo, maxc[u] - (g.degree(u) - 1));
      hi = std::min(hi, minc[u] + g.degree(u) - 1);
    }
    if (colored[v] > 0) {
      lo = std::max(lo, maxc[v] - (g.degree(v) - 1));
      hi = std::min(hi, minc[v] + g.degree(v) - 1);
    }
    if (pos == 0 && pin_first) lo = hi = 0;
    int cand_idx = 0;
    for (int c = lo; c <= hi; ++c) {
      if (static_cast<int>(pos) == split_pos && (cand_idx++ % nworkers) != worker)
        continue;
      if (cnt[u][c + W] == k || cnt[v][c + W] == k) continue;
      ++nodes;
      if ((nodes & 1023) == 0) {
        if (stop && stop->load(std::memory_order_relaxed)) return Step::Aborted;
        if (max_seconds > 0 && ms_since(t0) > max_seconds * 1000.0)
          return Step::Budget;
      }
      if (max_nodes > 0 && nodes > max_nodes) return Step::Budget;
      int smu = minc[u], sxu = maxc[u], sdu = distinct[u];
      int smv = minc[v], sxv = maxc[v], sdv = distinct[v];
      place(u, c);
      place(v, c);
      color[pos] = c;
      if (profile_ok(u) && profile_ok(v)) {
        Step r = dfs(pos + 1, pin_first);
        if (r != Step::Exhausted) {
          if (r != Step::Witness) { // keep state clean on aborts too
            unplace(v, c, smv, sxv, sdv);
            unplace(u, c, smu, sxu, sdu);
          }
          return r;
        }
      }
      unplace(v, c, smv, sxv, sdv);
      unplace(u, c, smu, sxu, sdu);
    }
    return Step::Exhausted;
  }

  EdgeColoring witness() const {
    EdgeColoring w;
    w.colors.assign(order.size(), 0);
    for (size_t i = 0; i < order.size(); ++i) w.colors[order[i]] = color[i];
    return w;
  }
};

int auto_window(const Graph& g) {
  int w = 1;
  for (int v = 0; v < g.n; ++v) w += std::max(0, g.degree(v) - 1);
  return w;
}

} // namespace

SearchResult exists_k_improper(const Graph& g, int k, const SearchBudget& budget) {
  if (k < 1) throw SolverError("k must be >= 1");
  if (!is_connected(g)) throw SolverError("exists_k_improper needs a connected graph");
  auto t0 = Clock::now();
  SearchResult res;
  if (g.edge_count() == 0) {
    res.status = SearchStatus::Witness;
    res.ms = ms_since(t0);
    return res;
  }
  int W = budget.window_override > 0 ? budget.window_override : auto_window(g);
  auto order = bfs_edge_order(g);
  int threads = budget.threads > 0 ? budget.threads : env_threads();
  int split_pos = budget.break_shift_symmetry ? 1 : 0;
  Step step = Step::Exhausted;
  EdgeColoring wit;

  if (threads <= 1 || g.edge_count() <= split_pos) {
    Searcher s(g, k, W, budget, order, nullptr);
    step = s.dfs(0, budget.break_shift_symmetry);
    res.nodes = s.nodes;
    if (step == Step::Witness) wit = s.witness();
  } else {
    std::atomic<bool> found{false};
    std::atomic<std::uint64_t> total_nodes{0};
    std::vector<Step> steps(threads, Step::Exhausted);
    std::vector<EdgeColoring> wits(threads);
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        Searcher s(g, k, W, budget, order, &found);
        s.split_pos = split_pos;
        s.nworkers = threads;
        s.worker = w;
        Step r = s.dfs(0, budget.break_shift_symmetry);
        steps[w] = r;
        total_nodes.fetch_add(s.nodes);
        if (r == Step::Witness) {
          wits[w] = s.witness();
          found.store(true);
        }
      });
    }
    for (auto& th : pool) th.join();
    res.nodes = total_nodes.load();
    step = Step::Exhausted;
    for (int w = 0; w < threads; ++w) {
      if (steps[w] == Step::Witness) {
        step = Step::Witness;
        wit = wits[w];
        break;
      }
      if (steps[w] == Step::Budget) step = Step::Budget;
    }
  }

  res.ms = ms_since(t0);
  switch (step) {
    case Step::Witness: {
      auto rep = verify(g, wit);
      auto mu = impropriety_of(rep);
      if (!mu || *mu > k)
        throw std::logic_error("solver produced an invalid witness");
      res.status = SearchStatus::Witness;
      res.witness = std::move(wit);
      break;
    }
    case Step::Budget:
      res.status = SearchStatus::BudgetExceeded;
      break;
    default:
      res.status = SearchStatus::Exhausted;
      break;
  }
  return res;
}

SolveOutcome exact_impropriety(const Graph& g, const SearchBudget& budget) {
  if (g.n < 1) throw SolverError("graph must have at least one vertex");
  auto t0 = Clock::now();
  SolveOutcome out;
  out.witness.colors.assign(g.edge_count(), 0);
  for (const auto& comp : components(g)) {
    std::vector<EdgeId> emap;
    Graph sub = induced_subgraph(g, comp, &emap);
    if (sub.edge_count() == 0) continue;
    int delta = max_degree(sub);
    bool solved = false;
    for (int k = 1; k <= delta; ++k) {
      SearchResult r = exists_k_improper(sub, k, budget);
      out.nodes += r.nodes;
      out.ladder.emplace_back(k, r.status);
      if (r.status == SearchStatus::Witness) {
        out.impropriety = std::max(out.impropriety, k);
        for (size_t i = 0; i < emap.size(); ++i)
          out.witness.colors[emap[i]] = r.witness.colors[i];
        solved = true;
        break;
      }
      if (r.status == SearchStatus::BudgetExceeded) {
        out.budget_exceeded = true;
        out.ms = ms_since(t0);
        return out;
      }
    }
    if (!solved) // cannot happen: k = Delta admits the monochromatic coloring
      throw std::logic_error("search exhausted every k up to the max degree");
  }
  out.ms = ms_since(t0);
  return out;
}

// ---- scanning --------------------------------------------------------------

int bound_value(BoundKind k, int delta) {
  switch (k) {
    case BoundKind::Two: return 2;
    case BoundKind::CeilDelta3: return (delta + 2) / 3;
    case BoundKind::CeilDelta4Plus1: return (delta + 3) / 4 + 1;
    case BoundKind::CeilDelta5: return (delta + 4) / 5;
    case BoundKind::Delta: return delta;
  }
  return 0;
}

std::string bound_name(BoundKind k) {
  switch (k) {
    case BoundKind::Two: return "2";
    case BoundKind::CeilDelta3: return "ceil(delta/3)";
    case BoundKind::CeilDelta4Plus1: return "ceil(delta/4)+1";
    case BoundKind::CeilDelta5: return "ceil(delta/5)";
    case BoundKind::Delta: return "delta";
  }
  return "?";
}

std::optional<BoundKind> bound_from_name(const std::string& name) {
  for (BoundKind k : {BoundKind::Two, BoundKind::CeilDelta3,
                      BoundKind::CeilDelta4Plus1, BoundKind::CeilDelta5,
                      BoundKind::Delta})
    if (bound_name(k) == name) return k;
  return std::nullopt;
}

std::vector<ScanRow> conjecture_scan(const std::vector<ScanInstance>& instances,
                                     BoundKind bound, const SearchBudget& budget) {
  std::vector<ScanRow> rows;
  rows.reserve(instances.size());
  for (const auto& inst : instances) {
    ScanRow row;
    row.family = inst.family;
    row.instance_id = inst.instance_id;
    row.n = inst.graph.n;
    row.m = inst.graph.edge_count();
    row.delta = max_degree(inst.graph);
    row.bound = bound_value(bound, row.delta);
    SolveOutcome o = exact_impropriety(inst.graph, budget);
    row.nodes = o.nodes;
    row.ms = o.ms;
    if (o.budget_exceeded) {
      row.budget_exceeded = true;
    } else {
      row.mu = o.impropriety;
      row.ok = row.mu <= row.bound;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "family,instance_id,n,m,delta,mu,bound,ok,nodes,ms\n";
  for (const auto& r : rows) {
    os << r.family << ',' << r.instance_id << ',' << r.n << ',' << r.m << ','
       << r.delta << ',';
    if (r.budget_exceeded)
      os << ",";
    else
      os << r.mu << ',';
    os << r.bound << ',';
    if (r.budget_exceeded)
      os << "budget";
    else
      os << (r.ok ? "true" : "false");
    os << ',' << r.nodes << ',' << static_cast<long long>(r.ms + 0.5) << "\n";
  }
  return os.str();
}

} // namespace muint
