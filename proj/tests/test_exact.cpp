#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "muint/exact.hpp"
#include "muint/families.hpp"
#include "muint/graph.hpp"
#include "support/naive_solver.hpp"

using namespace muint;

namespace {

Graph random_connected(int max_n, int max_m, int max_delta, std::mt19937_64& rng) {
  for (;;) {
    int n = 4 + static_cast<int>(rng() % (max_n - 3));
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    int m = n - 1 + static_cast<int>(rng() % 4);
    m = std::min({m, max_m, static_cast<int>(all.size())});
    Graph g = make_graph(n, {all.begin(), all.begin() + m});
    if (is_connected(g) && max_degree(g) <= max_delta) return g;
  }
}

} // namespace

TEST_CASE("ground truths on small graphs") {
  CHECK(exact_impropriety(make_complete(3)).impropriety == 2);
  CHECK(exact_impropriety(make_complete(4)).impropriety == 1);
  CHECK(exact_impropriety(make_complete(5)).impropriety == 2);
  CHECK(exact_impropriety(make_cycle(4)).impropriety == 1);
  CHECK(exact_impropriety(make_cycle(5)).impropriety == 2);
  CHECK(exact_impropriety(make_cycle(6)).impropriety == 1);
  CHECK(exact_impropriety(make_path(9)).impropriety == 1);
  CHECK(exact_impropriety(make_star(6)).impropriety == 1);
  CHECK(exact_impropriety(make_square_of_path(4)).impropriety == 1); // diamond
}

TEST_CASE("wheel classification") {
  std::map<int, int> expected{{4, 1}, {5, 2}, {6, 2}, {7, 1},
                              {8, 2}, {9, 2}, {10, 1}};
  for (auto [n, mu] : expected)
    CHECK(exact_impropriety(make_wheel(n)).impropriety == mu);
}

TEST_CASE("trees are properly interval colorable") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
      edges.emplace_back(static_cast<int>(rng() % v), v);
    Graph t = make_graph(n, edges);
    SolveOutcome res = exact_impropriety(t);
    CHECK(res.impropriety == 1);
    auto rep = verify(t, res.witness);
    CHECK(impropriety_of(rep) == 1);
  }
}

TEST_CASE("solver outcomes carry verified witnesses and ladders") {
  SolveOutcome res = exact_impropriety(make_cycle(5));
  CHECK(res.impropriety == 2);
  REQUIRE(res.ladder.size() == 2);
  CHECK(res.ladder[0] == std::pair<int, SearchStatus>{1, SearchStatus::Exhausted});
  CHECK(res.ladder[1] == std::pair<int, SearchStatus>{2, SearchStatus::Witness});
  auto rep = verify(make_cycle(5), res.witness);
  CHECK(rep.all_intervals);
  CHECK(rep.max_multiplicity == 2);
  CHECK(res.nodes > 0);
}

TEST_CASE("exists_k_improper input validation") {
  CHECK_THROWS_AS(exists_k_improper(make_path(3), 0), SolverError);
  Graph disconnected = make_graph(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(exists_k_improper(disconnected, 1), SolverError);
  // edgeless connected graph: trivially colorable
  CHECK(exists_k_improper(make_graph(1, {}), 1).status == SearchStatus::Witness);
}

TEST_CASE("disconnected graphs solve per component") {
  Graph two_tri =
      make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  SolveOutcome res = exact_impropriety(two_tri);
  CHECK(res.impropriety == 2);
  auto rep = verify(two_tri, res.witness);
  CHECK(rep.all_intervals);
  CHECK(rep.max_multiplicity == 2);

  Graph mixed = make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
  CHECK(exact_impropriety(mixed).impropriety == 2);
  CHECK(exact_impropriety(make_graph(3, {})).impropriety == 0);
}

TEST_CASE("budgets cut the search off cleanly") {
  SearchBudget tiny;
  tiny.max_nodes = 5;
  SearchResult res = exists_k_improper(make_wheel(9), 1, tiny);
  CHECK(res.status == SearchStatus::BudgetExceeded);
  CHECK(res.nodes <= 6);

  SolveOutcome solve = exact_impropriety(make_wheel(9), tiny);
  CHECK(solve.budget_exceeded);

  SearchBudget timed;
  timed.max_seconds = 1e-9;
  SearchResult tres = exists_k_improper(make_wheel(8), 1, timed);
  CHECK(tres.status == SearchStatus::BudgetExceeded);
}

TEST_CASE("symmetry breaking does not change answers") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_connected(7, 10, 5, rng);
    SearchBudget plain, unbroken;
    unbroken.break_shift_symmetry = false;
    CHECK(exact_impropriety(g, plain).impropriety ==
          exact_impropriety(g, unbroken).impropriety);
  }
}

TEST_CASE("parallel search agrees with the single-threaded one") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 8; ++trial) {
    Graph g = random_connected(7, 11, 6, rng);
    SearchBudget par;
    par.threads = 4;
    CHECK(exact_impropriety(g).impropriety == exact_impropriety(g, par).impropriety);
  }
}

TEST_CASE("window overrides stay sound when wide enough") {
  SearchBudget wide;
  wide.window_override = 12;
  CHECK(exists_k_improper(make_cycle(4), 1, wide).status == SearchStatus::Witness);
  CHECK(exists_k_improper(make_cycle(5), 1, wide).status == SearchStatus::Exhausted);
}

TEST_CASE("agreement with the naive oracle on exhaustive small graphs") {
  // all connected graphs with at most 5 edges, up to isomorphism
  std::set<Certificate> seen;
  int classes = 0;
  for (int m = 1; m <= 5; ++m) {
    for (int n = 2; n <= m + 1; ++n) {
      std::vector<std::pair<int, int>> all;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
      int bits = static_cast<int>(all.size());
      for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
        if (__builtin_popcount(mask) != m) continue;
        std::vector<std::pair<int, int>> edges;
        for (int b = 0; b < bits; ++b)
          if (mask & (1u << b)) edges.push_back(all[b]);
        Graph g = make_graph(n, edges);
        if (!is_connected(g)) continue;
        bool spanning = true;
        for (int v = 0; v < n; ++v) spanning &= g.degree(v) > 0;
        if (!spanning) continue;
        if (!seen.insert(certificate(g)).second) continue;
        ++classes;
        CHECK(exact_impropriety(g).impropriety == naive::impropriety(g));
      }
    }
  }
  // connected graphs with 1..5 edges: 1 + 1 + 3 + 5 + 12
  CHECK(classes == 22);
}

TEST_CASE("agreement with the naive oracle on random graphs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_connected(8, 9, 5, rng);
    CHECK(exact_impropriety(g).impropriety == naive::impropriety(g));
  }
}

TEST_CASE("bound menu") {
  CHECK(bound_value(BoundKind::Two, 9) == 2);
  CHECK(bound_value(BoundKind::CeilDelta3, 7) == 3);
  CHECK(bound_value(BoundKind::CeilDelta3, 9) == 3);
  CHECK(bound_value(BoundKind::CeilDelta4Plus1, 9) == 4);
  CHECK(bound_value(BoundKind::CeilDelta5, 9) == 2);
  CHECK(bound_value(BoundKind::Delta, 9) == 9);
  for (BoundKind k : {BoundKind::Two, BoundKind::CeilDelta3,
                      BoundKind::CeilDelta4Plus1, BoundKind::CeilDelta5,
                      BoundKind::Delta})
    CHECK(bound_from_name(bound_name(k)) == k);
  CHECK_FALSE(bound_from_name("nonsense").has_value());
}

TEST_CASE("conjecture scans produce checked rows and CSV") {
  std::vector<ScanInstance> instances;
  instances.push_back({"demo", "c5", make_cycle(5)});
  instances.push_back({"demo", "k4", make_complete(4)});
  auto rows = conjecture_scan(instances, BoundKind::Two);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].mu == 2);
  CHECK(rows[0].ok);
  CHECK(rows[0].n == 5);
  CHECK(rows[0].m == 5);
  CHECK(rows[0].delta == 2);
  CHECK(rows[1].mu == 1);
  CHECK(rows[1].bound == 2);

  std::string csv = scan_csv(rows);
  CHECK(csv.find("family,instance_id,n,m,delta,mu,bound,ok,nodes,ms") == 0);
  CHECK(csv.find("demo,c5,5,5,2,2,2,true,") != std::string::npos);

  // budget rows have an empty mu and ok=budget
  SearchBudget tiny;
  tiny.max_nodes = 2;
  std::vector<ScanInstance> big;
  big.push_back({"demo", "w9", make_wheel(9)});
  auto brows = conjecture_scan(big, BoundKind::Two, tiny);
  REQUIRE(brows.size() == 1);
  CHECK(brows[0].budget_exceeded);
  CHECK(scan_csv(brows).find("demo,w9,9,16,8,,2,budget,") != std::string::npos);
}
