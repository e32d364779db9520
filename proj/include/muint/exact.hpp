#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "muint/coloring.hpp"
#include "muint/graph.hpp"

namespace muint {

struct SolverError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SearchBudget {
  std::uint64_t max_nodes = 0; // 0 = unlimited
  double max_seconds = 0.0;    // 0 = unlimited
  int window_override = 0;     // 0 = automatic: sum_v(d(v)-1) + 1
  bool break_shift_symmetry = true; // pin the first edge to color 0
  int threads = 0; // 0 = IMPROPRIETY_THREADS env var, else 1
};

enum class SearchStatus { Witness, Exhausted, BudgetExceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  EdgeColoring witness; // verified when status == Witness
  std::uint64_t nodes = 0;
  double ms = 0.0;
};

// Decides whether the connected graph g admits an interval coloring in which
// at most k incident edges per vertex share a color. Exhaustive over the
// color window, so Exhausted is a proof of impossibility.
SearchResult exists_k_improper(const Graph& g, int k, const SearchBudget& budget = {});

struct SolveOutcome {
  int impropriety = 0;  // meaningful when !budget_exceeded
  EdgeColoring witness; // verified witness achieving the impropriety
  bool budget_exceeded = false;
  std::uint64_t nodes = 0;
  double ms = 0.0;
  // per-k decision ladder in the order searched (component runs concatenated)
  std::vector<std::pair<int, SearchStatus>> ladder;
};

// Smallest k admitting a k-improper interval coloring, found by ascending k
// (k = max degree always succeeds via the monochromatic coloring).
// Disconnected graphs are solved per component; the result is the maximum.
SolveOutcome exact_impropriety(const Graph& g, const SearchBudget& budget = {});

// ---- conjecture scanning -------------------------------------------------

enum class BoundKind { Two, CeilDelta3, CeilDelta4Plus1, CeilDelta5, Delta };

int bound_value(BoundKind k, int delta);
std::string bound_name(BoundKind k);
std::optional<BoundKind> bound_from_name(const std::string& name);

struct ScanInstance {
  std::string family;
  std::string instance_id;
  Graph graph;
};

struct ScanRow {
  std::string family;
  std::string instance_id;
  int n = 0, m = 0, delta = 0;
  int mu = -1; // -1 when the budget ran out
  int bound = 0;
  bool ok = false; // mu <= bound; false for budget rows
  bool budget_exceeded = false;
  std::uint64_t nodes = 0;
  double ms = 0.0;
};

std::vector<ScanRow> conjecture_scan(const std::vector<ScanInstance>& instances,
                                     BoundKind bound,
                                     const SearchBudget& budget = {});

// CSV with header family,instance_id,n,m,delta,mu,bound,ok,nodes,ms.
// Budget-exceeded rows carry an empty mu and ok=budget.
std::string scan_csv(const std::vector<ScanRow>& rows);

} // namespace muint
