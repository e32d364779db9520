#include <doctest.h>

#include <cstdlib>
#include <set>

#include "muint/constructions.hpp"
#include "muint/exact.hpp"
#include "muint/families.hpp"
#include "support/reference_tables.hpp"

using namespace muint;

namespace {

int checked_impropriety(const Graph& g, const EdgeColoring& c) {
  auto rep = verify(g, c);
  REQUIRE(rep.all_intervals);
  auto imp = impropriety_of(rep);
  REQUIRE(imp.has_value());
  return *imp;
}

} // namespace

TEST_CASE("sequential blocks follow the shift law") {
  ShiftBlock b = sequential_block(4, 3, 0);
  CHECK(block_colors(b) == std::vector<std::vector<int>>{
                               {1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}});
  for (int rows = 1; rows <= 8; ++rows)
    for (int cols = 1; cols <= 8; ++cols)
      for (int shift = -20; shift <= 20; ++shift) {
        ShiftBlock s = sequential_block(rows, cols, shift);
        for (int i = 1; i <= rows; ++i) {
          // row i covers exactly [shift+i, shift+i+cols-1]
          CHECK(s.color(i, 1) == shift + i);
          CHECK(s.color(i, cols) == shift + i + cols - 1);
          for (int j = 1; j < cols; ++j)
            CHECK(s.color(i, j + 1) == s.color(i, j) + 1);
        }
        for (int j = 1; j <= cols; ++j)
          for (int i = 1; i < rows; ++i)
            CHECK(s.color(i + 1, j) == s.color(i, j) + 1);
      }
  CHECK_THROWS_AS(sequential_block(0, 3, 0), ConstructionError);
  CHECK_THROWS_AS(sequential_block(3, -1, 0), ConstructionError);
}

TEST_CASE("forest coloring is proper interval") {
  for (const Graph& g :
       {make_path(9), make_star(7), make_spider({3, 2, 2, 1}),
        make_caterpillar({2, 0, 1, 3}), make_graph(5, {{0, 1}, {2, 3}}),
        make_graph(2, {})}) {
    EdgeColoring c = color_forest(g);
    auto rep = verify(g, c);
    CHECK(rep.all_intervals);
    CHECK(rep.max_multiplicity <= 1);
    for (int x : c.colors) CHECK(x >= 1);
  }
  CHECK_THROWS_AS(color_forest(make_cycle(4)), ConstructionError);
}

TEST_CASE("square of path coloring extends the diamond seed") {
  CHECK_THROWS_AS(color_square_of_path(3), ConstructionError);
  SquareOfPathColoring d = color_square_of_path(4);
  // edges: (0,1),(1,2),(2,3) then (0,2),(1,3)
  CHECK(d.coloring.colors == std::vector<int>{2, 3, 2, 1, 1});
  for (int n = 4; n <= 50; ++n) {
    SquareOfPathColoring sc = color_square_of_path(n);
    CHECK(sc.graph.edge_count() == 2 * n - 3);
    CHECK(checked_impropriety(sc.graph, sc.coloring) == 1);
  }
}

TEST_CASE("multipartite block coloring reproduces the reference table") {
  MultipartiteColoring mc = color_multipartite_stst(4, 3, 2);
  auto expected = fixtures::k4343_expected();
  REQUIRE(mc.graph.n == 14);
  for (int u = 0; u < 14; ++u)
    for (int v = 0; v < 14; ++v) {
      EdgeId e = mc.graph.edge_id(u, v);
      if (expected[u][v] == 0) {
        CHECK(e == -1);
      } else {
        REQUIRE(e != -1);
        CHECK(mc.coloring.colors[e] == expected[u][v]);
      }
    }
  CHECK(mc.plan.max_color == 13);
  CHECK(checked_impropriety(mc.graph, mc.coloring) == 1);
}

TEST_CASE("multipartite plan shifts follow the xor pairing") {
  for (int ell = 1; ell <= 4; ++ell) {
    int s = 3, t = 2;
    MultipartiteColoring mc = color_multipartite_stst(s, t, ell);
    for (const PartBlock& pb : mc.plan.blocks) {
      int p = pb.part_u / 2, q = pb.part_v / 2;
      int expected;
      if (p == q) {
        expected = 0;
      } else {
        int k = p ^ q;
        bool a_side = pb.part_u % 2 == 0;
        bool b_side = pb.part_v % 2 == 0;
        if (a_side && b_side)
          expected = (k - 1) * s + k * t;
        else if (!a_side && !b_side)
          expected = k * s + (k - 1) * t;
        else
          expected = k * (s + t);
      }
      CHECK(pb.block.shift == expected);
    }
  }
}

TEST_CASE("multipartite colorings are proper across the parameter box") {
  for (int s = 1; s <= 3; ++s)
    for (int t = 1; t <= 3; ++t)
      for (int ell = 1; ell <= 2; ++ell) {
        MultipartiteColoring mc = color_multipartite_stst(s, t, ell);
        CHECK(checked_impropriety(mc.graph, mc.coloring) == 1);
        int pairs = (1 << ell) / 2;
        CHECK(mc.plan.max_color == pairs * (s + t) - 1);
        int mn = mc.coloring.colors[0], mx = mc.coloring.colors[0];
        for (int c : mc.coloring.colors) {
          mn = std::min(mn, c);
          mx = std::max(mx, c);
        }
        CHECK(mn == 1);
        CHECK(mx == mc.plan.max_color);
      }
  // K_{1,1,...} with 2^ell parts is the complete graph on 2^ell vertices
  MultipartiteColoring k8 = color_multipartite_stst(1, 1, 3);
  CHECK(k8.graph.edge_count() == 28);
  CHECK(checked_impropriety(k8.graph, k8.coloring) == 1);
  CHECK_THROWS_AS(color_multipartite_stst(0, 3, 1), ConstructionError);
  CHECK_THROWS_AS(color_multipartite_stst(2, 2, 6), ConstructionError);
  CHECK_THROWS_AS(color_multipartite_stst(2, 2, 0), ConstructionError);
}

TEST_CASE("two-tree coloring meets the ceil(delta/3) budget") {
  // the base triangle alone has max degree 2 and is rejected
  CHECK_THROWS_AS(color_two_tree(TwoTreeTrace{}), ConstructionError);

  TwoTreeTrace diamond;
  diamond.steps = {{3, 0, 1}};
  TwoTreeColoring dc = color_two_tree(diamond);
  CHECK(dc.budget == 1);
  CHECK(dc.fallbacks == 0);
  CHECK(checked_impropriety(dc.graph, dc.coloring) == 1);

  for (int n = 4; n <= 7; ++n)
    for (const TwoTreeInstance& inst : enumerate_two_trees(n)) {
      int delta = max_degree(inst.graph);
      if (delta < 3) continue;
      TwoTreeColoring tc = color_two_tree(inst.trace);
      CHECK(tc.fallbacks == 0);
      CHECK(tc.budget == (delta + 2) / 3);
      CHECK(checked_impropriety(tc.graph, tc.coloring) <= tc.budget);
    }

  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    int n = 15 + static_cast<int>(seed % 3) * 10;
    TwoTreeTrace trace = random_two_tree(n, seed);
    TwoTreeColoring tc = color_two_tree(trace);
    int delta = max_degree(tc.graph);
    CHECK(tc.fallbacks == 0);
    CHECK(checked_impropriety(tc.graph, tc.coloring) <= (delta + 2) / 3);
  }
}

TEST_CASE("two-path coloring stays 2-improper") {
  TwoPathSequence tri;
  tri.seq_edges = {{0, 1}, {1, 2}};
  tri.triangles = {{0, 1, 2}};
  TwoPathColoring tc = color_two_path(tri);
  CHECK(tc.coloring.colors == std::vector<int>{0, 1, 1});
  CHECK(checked_impropriety(tc.graph, tc.coloring) == 2);

  TwoPathColoring fig = color_two_path(fixtures::figure_two_path());
  CHECK(fig.graph.n == 14);
  CHECK(fig.graph.edge_count() == 25);
  CHECK(checked_impropriety(fig.graph, fig.coloring) <= 2);
  // sequence edge i carries color i; the remaining edge of t_i also carries i
  int nseq = static_cast<int>(fixtures::figure_two_path().seq_edges.size());
  for (int i = 0; i < nseq; ++i) CHECK(fig.coloring.colors[i] == i);
  for (int i = 1; i < nseq; ++i) CHECK(fig.coloring.colors[nseq + i - 1] == i);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    TwoPathSequence seq = random_two_path(1 + static_cast<int>(seed % 17), seed);
    TwoPathColoring rc = color_two_path(seq);
    CHECK(checked_impropriety(rc.graph, rc.coloring) <= 2);
  }
}

TEST_CASE("iterated triangulation coloring uses three colors") {
  CHECK_THROWS_AS(color_iterated_triangulation(0), ConstructionError);

  TriangulationColoring t1 = color_iterated_triangulation(1);
  CHECK(t1.budget == 1);
  CHECK(checked_impropriety(t1.graph, t1.coloring) == 1);
  std::set<int> palette(t1.coloring.colors.begin(), t1.coloring.colors.end());
  CHECK(palette == std::set<int>{1, 2, 3});

  for (int levels = 1; levels <= 4; ++levels) {
    TriangulationColoring tc = color_iterated_triangulation(levels);
    int delta = max_degree(tc.graph);
    CHECK(tc.budget == (delta + 2) / 3);
    CHECK(checked_impropriety(tc.graph, tc.coloring) <= tc.budget);
    for (int c : tc.coloring.colors) {
      CHECK(c >= 1);
      CHECK(c <= 3);
    }
    // the three colors appear near-evenly around every vertex
    std::vector<std::array<int, 4>> counts(tc.graph.n, {0, 0, 0, 0});
    for (EdgeId e = 0; e < tc.graph.edge_count(); ++e) {
      auto [u, v] = tc.graph.edges[e];
      ++counts[u][tc.coloring.colors[e]];
      ++counts[v][tc.coloring.colors[e]];
    }
    for (int v = 0; v < tc.graph.n; ++v)
      for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
          CHECK(std::abs(counts[v][a] - counts[v][b]) <= 1);
  }
}

TEST_CASE("outerplanar coloring meets the ceil(delta/5) budget") {
  // a fan: hub 0 joined to a path 1..8
  std::vector<std::pair<int, int>> fedges;
  for (int v = 1; v <= 8; ++v) fedges.emplace_back(0, v);
  for (int v = 1; v < 8; ++v) fedges.emplace_back(v, v + 1);
  Graph fan = make_graph(9, fedges);
  OuterplanarColoring fc = color_outerplanar(fan);
  CHECK(fc.budget == 2);
  CHECK(fc.fallbacks == 0);
  CHECK(checked_impropriety(fan, fc.coloring) <= 2);

  CHECK_THROWS_AS(color_outerplanar(make_cycle(6)), ConstructionError);

  // two fans sharing a cut vertex
  std::vector<std::pair<int, int>> glued = fedges;
  for (int v = 9; v <= 15; ++v) glued.emplace_back(8, v);
  for (int v = 9; v < 15; ++v) glued.emplace_back(v, v + 1);
  Graph doubled = make_graph(16, glued);
  OuterplanarColoring gc = color_outerplanar(doubled);
  CHECK(gc.fallbacks == 0);
  CHECK(checked_impropriety(doubled, gc.coloring) <= gc.budget);

  // disconnected: two independent fans
  std::vector<std::pair<int, int>> pair_edges = fedges;
  for (int v = 10; v <= 16; ++v) pair_edges.emplace_back(9, v);
  for (int v = 10; v < 16; ++v) pair_edges.emplace_back(v, v + 1);
  Graph two_fans = make_graph(17, pair_edges);
  OuterplanarColoring pc = color_outerplanar(two_fans);
  CHECK(checked_impropriety(two_fans, pc.coloring) <= pc.budget);

  int tried = 0;
  for (std::uint64_t seed = 0; tried < 15; ++seed) {
    int n = 10 + static_cast<int>(seed % 7);
    Graph g = random_maximal_outerplanar(n, seed);
    if (max_degree(g) < 6) continue;
    ++tried;
    OuterplanarColoring oc = color_outerplanar(g);
    CHECK(oc.fallbacks == 0);
    CHECK(oc.budget == (max_degree(g) + 4) / 5);
    CHECK(checked_impropriety(g, oc.coloring) <= oc.budget);
  }
}
