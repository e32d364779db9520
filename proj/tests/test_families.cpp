#include <doctest.h>

#include <set>

#include "muint/families.hpp"
#include "muint/graph.hpp"
#include "support/iso_util.hpp"

using namespace muint;

TEST_CASE("basic family shapes") {
  CHECK(make_path(1).edge_count() == 0);
  CHECK(make_path(6).edge_count() == 5);
  CHECK_THROWS_AS(make_path(0), RecipeError);

  Graph c5 = make_cycle(5);
  CHECK(c5.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
  CHECK_THROWS_AS(make_cycle(2), RecipeError);

  Graph s4 = make_star(4);
  CHECK(s4.n == 5);
  CHECK(s4.degree(0) == 4);
  CHECK_THROWS_AS(make_star(0), RecipeError);

  Graph k5 = make_complete(5);
  CHECK(k5.edge_count() == 10);

  Graph w6 = make_wheel(6);
  CHECK(w6.n == 6);
  CHECK(w6.edge_count() == 10);
  CHECK(w6.degree(0) == 5); // hub
  for (int v = 1; v < 6; ++v) CHECK(w6.degree(v) == 3);
  CHECK(certificate(make_wheel(4)) == certificate(make_complete(4)));
  CHECK_THROWS_AS(make_wheel(3), RecipeError);
}

TEST_CASE("spiders and caterpillars") {
  Graph sp = make_spider({2, 1, 1});
  CHECK(sp.n == 5);
  CHECK(sp.degree(0) == 3);
  CHECK(is_forest(sp));
  CHECK_THROWS_AS(make_spider({1, 1}), RecipeError);

  Graph cat = make_caterpillar({1, 0, 2});
  CHECK(cat.n == 6); // 3 spine + 3 leaves
  CHECK(is_forest(cat));
  CHECK(is_connected(cat));
  // spine vertices come first
  CHECK(cat.has_edge(0, 1));
  CHECK(cat.has_edge(1, 2));
}

TEST_CASE("complete multipartite graphs and labels") {
  auto [g, lab] = make_complete_multipartite({3, 2, 2});
  CHECK(g.n == 7);
  CHECK(g.edge_count() == 3 * 2 + 3 * 2 + 2 * 2);
  CHECK(lab.part_of(0) == 0);
  CHECK(lab.part_of(3) == 1);
  CHECK(lab.part_of(5) == 2);
  for (int u : lab.parts[0])
    for (int v : lab.parts[0])
      if (u != v) CHECK_FALSE(g.has_edge(u, v));
  CHECK(make_complete_multipartite({3}).first.edge_count() == 0); // one part
  CHECK_THROWS_AS(make_complete_multipartite({}), RecipeError);
  CHECK_THROWS_AS(make_complete_multipartite({3, 0}), RecipeError);
}

TEST_CASE("alternating multipartite K_{s,t,s,t,...}") {
  auto [g, lab] = make_multipartite_stst(4, 3, 2);
  CHECK(g.n == 14);
  CHECK(g.edge_count() == (14 * 13 / 2) - 2 * 6 - 2 * 3);
  REQUIRE(lab.parts.size() == 4);
  CHECK(lab.stst);
  CHECK(lab.parts[0].size() == 4);
  CHECK(lab.parts[1].size() == 3);
  CHECK(lab.parts[2].size() == 4);
  CHECK(lab.parts[3].size() == 3);
  CHECK(lab.name(0) == "x1,1");
  CHECK(lab.name(4) == "y1,1");
  CHECK(lab.name(7) == "x2,1");
  CHECK(lab.name(13) == "y2,3");
  // K_{s,t} for ell = 1
  auto [kst, lab1] = make_multipartite_stst(2, 5, 1);
  CHECK(kst.n == 7);
  CHECK(kst.edge_count() == 10);
}

TEST_CASE("squares of paths") {
  CHECK(certificate(make_square_of_path(4)) ==
        certificate(make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}})));
  Graph sq = make_square_of_path(8);
  CHECK(sq.edge_count() == 2 * 8 - 3);
  // edge order: path edges first, then the distance-2 edges
  CHECK(sq.edges[0] == std::pair<int, int>{0, 1});
  CHECK(sq.edges[7] == std::pair<int, int>{0, 2});
  CHECK(sq.degree(0) == 2);
  CHECK(sq.degree(3) == 4);
}

TEST_CASE("two-path sequences validate and build") {
  TwoPathSequence tri;
  tri.seq_edges = {{0, 1}, {1, 2}};
  tri.triangles = {{0, 1, 2}};
  Graph g = two_path_graph(tri);
  CHECK(g.n == 3);
  CHECK(g.edge_count() == 3);

  TwoPathSequence bad = tri;
  bad.triangles = {{0, 1, 3}};
  CHECK_THROWS_AS(two_path_graph(bad), TraceError);

  TwoPathSequence disjoint;
  disjoint.seq_edges = {{0, 1}, {2, 3}};
  disjoint.triangles = {{0, 1, 2}};
  CHECK_THROWS_AS(two_path_graph(disjoint), TraceError);

  for (int seed : {0, 1, 2, 3}) {
    TwoPathSequence r = random_two_path(6, seed);
    Graph rg = two_path_graph(r);
    CHECK(rg.edge_count() == 13);
    TwoPathSequence again = random_two_path(6, seed);
    CHECK(again.seq_edges == r.seq_edges);
  }
}

TEST_CASE("two-tree traces replay") {
  TwoTreeTrace diamond;
  diamond.steps = {{3, 0, 1}};
  Graph g = two_tree_from_trace(diamond);
  CHECK(g.n == 4);
  CHECK(g.edge_count() == 5);
  CHECK(certificate(g) == certificate(make_square_of_path(4)));

  TwoTreeTrace bad;
  bad.steps = {{3, 0, 3}};
  CHECK_THROWS_AS(two_tree_from_trace(bad), TraceError);
  TwoTreeTrace missing;
  missing.steps = {{3, 0, 1}, {4, 2, 3}}; // edge (2,3) does not exist
  CHECK_THROWS_AS(two_tree_from_trace(missing), TraceError);

  for (int n : {3, 6, 12}) {
    TwoTreeTrace t = random_two_tree(n, 42);
    Graph r = two_tree_from_trace(t);
    CHECK(r.n == n);
    CHECK(r.edge_count() == 2 * n - 3);
    TwoTreeTrace again = random_two_tree(n, 42);
    CHECK(again.steps.size() == t.steps.size());
  }
}

TEST_CASE("iterated triangulations") {
  auto [tr0, trace0] = iterated_triangulation(0);
  CHECK(tr0.n == 3);
  CHECK(tr0.edge_count() == 3);
  CHECK(trace0.steps.empty());

  auto [tr1, trace1] = iterated_triangulation(1);
  CHECK(certificate(tr1) == certificate(make_complete(4)));
  CHECK(trace1.steps.size() == 1);

  auto [tr2, trace2] = iterated_triangulation(2);
  CHECK(tr2.n == 7);
  CHECK(tr2.edge_count() == 15);
  CHECK(max_degree(tr2) == 6);

  for (int levels : {1, 2, 3, 4}) {
    auto [g, tr] = iterated_triangulation(levels);
    int expected_added = 0, pow3 = 1;
    for (int i = 0; i < levels; ++i) {
      expected_added += pow3;
      pow3 *= 3;
    }
    CHECK(g.n == 3 + expected_added);
    CHECK(static_cast<int>(tr.steps.size()) == expected_added);
    CHECK(tr.levels == levels);
  }
}

TEST_CASE("corona layout") {
  auto [g, lay] = corona(make_cycle(4), make_path(3));
  CHECK(g.n == 16);
  CHECK(g.edge_count() == 4 + 4 * (2 + 3));
  CHECK(lay.base_n == 4);
  CHECK(lay.copy_n == 3);
  CHECK(lay.base_edges == 4);
  CHECK(lay.copy_edges == 2);
  for (int i = 0; i < 4; ++i) {
    // attachments connect base vertex i to every copy vertex
    for (int j = 0; j < 3; ++j) {
      auto [u, v] = g.edges[lay.attach_edge_start(i) + j];
      CHECK(u == i);
      CHECK(v == lay.copy_start(i) + j);
    }
    // internal copy edges are the path edges shifted
    auto [a, b] = g.edges[lay.copy_edge_start(i)];
    CHECK(a == lay.copy_start(i));
    CHECK(b == lay.copy_start(i) + 1);
  }
  // wheels are K_1 corona C_{n-1}, including the edge order
  auto [wg, wlay] = corona(make_complete(1), make_cycle(5));
  Graph w = make_wheel(6);
  CHECK(wg.n == w.n);
  CHECK(wg.edges == w.edges);

  auto [cp, clay] = corona(make_cycle(3), make_path(2));
  CHECK(cp.n == 9);
  CHECK(cp.edge_count() == 12);
}

TEST_CASE("strong products") {
  Graph p2p3 = strong_product(make_path(2), make_path(3));
  CHECK(p2p3.n == 6);
  CHECK(p2p3.edge_count() == 11);
  CHECK(certificate(strong_product(make_path(2), make_path(2))) ==
        certificate(make_complete(4)));
  Graph k1h = strong_product(make_complete(1), make_wheel(5));
  CHECK(k1h.n == 5);
  CHECK(k1h.edge_count() == make_wheel(5).edge_count());
  // C_3 x P_2 is K_6
  CHECK(certificate(strong_product(make_cycle(3), make_path(2))) ==
        certificate(make_complete(6)));
}

TEST_CASE("two-tree enumeration counts") {
  CHECK(enumerate_two_trees(3).size() == 1);
  CHECK(enumerate_two_trees(4).size() == 1);
  CHECK(enumerate_two_trees(5).size() == 2);
  CHECK(enumerate_two_trees(6).size() == 5);
  CHECK(enumerate_two_trees(7).size() == 12);
  CHECK(enumerate_two_trees(8).size() == 39);
  for (int n : {5, 6, 7}) {
    auto all = enumerate_two_trees(n);
    std::set<Certificate> certs;
    for (const auto& inst : all) {
      CHECK(inst.graph.n == n);
      CHECK(inst.graph.edge_count() == 2 * n - 3);
      CHECK(two_tree_from_trace(inst.trace).edges == inst.graph.edges);
      certs.insert(certificate(inst.graph));
    }
    CHECK(certs.size() == all.size()); // pairwise non-isomorphic
  }
  // independent recount with the permutation-complete test
  for (int n : {5, 6}) {
    auto all = enumerate_two_trees(n);
    std::vector<Graph> gs;
    for (const auto& inst : all) gs.push_back(inst.graph);
    CHECK(iso::count_classes(gs) == static_cast<int>(gs.size()));
  }
  CHECK_THROWS_AS(enumerate_two_trees(2), RecipeError);
  CHECK_THROWS_AS(enumerate_two_trees(11), RecipeError);
}

TEST_CASE("maximal outerplanar enumeration and sampling") {
  CHECK(enumerate_maximal_outerplanar(4).size() == 1);
  CHECK(enumerate_maximal_outerplanar(5).size() == 1);
  CHECK(enumerate_maximal_outerplanar(6).size() == 3);
  for (int n : {4, 5, 6, 7}) {
    for (const Graph& g : enumerate_maximal_outerplanar(n)) {
      CHECK(g.n == n);
      CHECK(g.edge_count() == 2 * n - 3);
      for (int v = 0; v < n; ++v) CHECK(g.has_edge(v, (v + 1) % n));
    }
  }
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    Graph g = random_maximal_outerplanar(12, seed);
    CHECK(g.edge_count() == 21);
    CHECK(g.edges == random_maximal_outerplanar(12, seed).edges);
    Graph sub = random_connected_edge_subgraph(g, seed);
    CHECK(is_connected(sub));
    CHECK(sub.edge_count() <= g.edge_count());
    for (auto [u, v] : sub.edges) CHECK(g.has_edge(u, v));
  }
}

TEST_CASE("family specs parse") {
  FamilyRecipe r = parse_family_spec("wheel:7");
  CHECK(r.kind == Family::Wheel);
  CHECK(r.n == 7);
  CHECK(parse_family_spec("spider:2,1,1").legs == std::vector<int>{2, 1, 1});
  CHECK(parse_family_spec("multipartite:4,3,2").ell == 2);
  CHECK(parse_family_spec("parts:3,2,2").part_sizes == std::vector<int>{3, 2, 2});
  CHECK(parse_family_spec("two_tree:9,5").seed == 5);
  CHECK_THROWS_AS(parse_family_spec("nonsense:3"), RecipeError);
  CHECK_THROWS_AS(parse_family_spec("wheel:1,2"), RecipeError);
  CHECK(family_name(Family::SquareOfPath) == "square_of_path");

  Generated gen = generate(parse_family_spec("triangulation:2"));
  CHECK(gen.graph.n == 7);
  CHECK(std::holds_alternative<TriangulationTrace>(gen.meta));
}
