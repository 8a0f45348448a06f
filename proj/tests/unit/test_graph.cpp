#include <doctest.h>

#include "copsrobber/generators.hpp"
#include "copsrobber/graph.hpp"
#include "copsrobber/metrics.hpp"
#include "oracles.hpp"

using namespace copsrobber;

TEST_CASE("edge-list parsing") {
  Graph p3 = parse_graph("3 2\n0 1\n1 2\n");
  CHECK(p3.order() == 3);
  CHECK(p3.size() == 2);
  CHECK(p3 == gen::path(3));
  CHECK(parse_graph("1 0").order() == 1);
  CHECK(parse_graph("# comment\n\n2 1\n# another\n1 0\n") == gen::path(2));

  CHECK_THROWS_AS(parse_graph("2 1\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3 1\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("x y\n"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("render then parse is the identity") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = oracle::random_graph(1 + seed % 12, 0.35, seed);
    CHECK(parse_graph(render_graph(g)) == g);
    CHECK(graph_hash(parse_graph(render_graph(g))) == graph_hash(g));
  }
  CHECK(render_graph(gen::cycle(3)) == "3 3\n0 1\n0 2\n1 2\n");
}

TEST_CASE("dot export lists every vertex and edge") {
  std::string dot = render_dot(gen::path(3));
  CHECK(dot.find("graph G {") == 0);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(dot.find("1 -- 2;") != std::string::npos);
  CHECK(dot.find("2 [label=\"2\"];") != std::string::npos);
}

TEST_CASE("generators") {
  CHECK(gen::path(5).size() == 4);
  CHECK(girth(gen::path(5)).is_infinite());

  Graph p = gen::petersen();
  CHECK(p.order() == 10);
  CHECK(p.size() == 15);
  for (Vertex v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
  CHECK(girth(p).value() == 5);

  Graph u = gen::disjoint_union(gen::petersen(), gen::complete(6));
  CHECK(u.order() == 16);
  CHECK(u.size() == 30);
  auto comps = components(u);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 10);
  CHECK(comps[1].size() == 6);

  CHECK(gen::complete_bipartite(3, 3).size() == 9);
  CHECK(gen::star(5).degree(0) == 5);
  Graph s = gen::spider({1, 2, 3});
  CHECK(s.order() == 7);
  CHECK(s.degree(0) == 3);
  CHECK(gen::generate("spider", {{"legs", "2,2,2"}}) == gen::spider({2, 2, 2}));
  CHECK(gen::generate("cycle", {{"n", "5"}}) == gen::cycle(5));
  CHECK_THROWS_AS(gen::generate("nonsense", {}), std::invalid_argument);
}

TEST_CASE("gnp is a pure function of its arguments") {
  CHECK(gen::gnp(12, 0.3, 7) == gen::gnp(12, 0.3, 7));
  CHECK_FALSE(gen::gnp(12, 0.3, 7) == gen::gnp(12, 0.3, 8));
  CHECK(gen::gnp(9, 0.0, 1).size() == 0);
  CHECK(gen::gnp(9, 1.0, 1).size() == 36);
}

TEST_CASE("distances and components") {
  CHECK(distance(gen::path(5), 0, 4) == 4);
  Graph two = gen::disjoint_union(gen::path(2), gen::path(2));
  CHECK(distance(two, 0, 3) == kUnreachable);
  CHECK_FALSE(is_connected(two));
  CHECK(shortest_path(gen::cycle(6), 0, 3) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(is_bipartite(gen::cycle(6)));
  CHECK_FALSE(is_bipartite(gen::cycle(5)));
  CHECK(is_forest(gen::spider({2, 2})));
}

TEST_CASE("metrics on small graphs") {
  GraphMetrics t = metrics(gen::spider({1, 2}));
  CHECK(t.girth.is_infinite());
  CHECK(t.circumference.is_infinite());

  GraphMetrics c5 = metrics(gen::cycle(5));
  CHECK(c5.girth.value() == 5);
  CHECK(c5.circumference.value() == 5);
  CHECK(c5.longest_induced_path == 4);
  CHECK(metrics(gen::cycle(6)).longest_induced_path == 5);

  CHECK(is_p_free(gen::complete(5), 3));
  CHECK(is_p_free(gen::cycle(4), 4));
  CHECK_FALSE(is_p_free(gen::path(6), 6));
  CHECK(has_induced_cycle_at_least(gen::cycle(7), 5));
  CHECK_FALSE(has_induced_cycle_at_least(gen::spider({2, 2, 2}), 3));
  // Petersen's induced cycles have lengths 5 and 6 (oracle below); none of 7 or more.
  CHECK(oracle::longest_induced_cycle(gen::petersen()) == 6);
  CHECK(has_induced_cycle_at_least(gen::petersen(), 6));
  CHECK_FALSE(has_induced_cycle_at_least(gen::petersen(), 7));
  CHECK(is_claw_free(gen::cycle(5)));
  CHECK_FALSE(is_claw_free(gen::star(3)));
}

TEST_CASE("metrics agree with exhaustive oracles on random graphs") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int n = 3 + seed % 7;
    Graph g = oracle::random_graph(n, 0.2 + 0.1 * (seed % 5), seed);
    CAPTURE(render_graph(g));
    auto [gi, ci] = oracle::girth_and_circumference(g);
    CHECK(girth(g).is_infinite() == (gi == 0));
    if (gi) {
      CHECK(girth(g).value() == gi);
      CHECK(circumference(g).value() == ci);
    }
    const int lip = oracle::longest_induced_path(g);
    CHECK(longest_induced_path(g) == lip);
    for (int l = 1; l <= n + 1; ++l) CHECK(is_p_free(g, l) == (lip < l));
    if (auto path = find_induced_path(g, lip)) CHECK(static_cast<int>(path->size()) == lip);
    const int lic = oracle::longest_induced_cycle(g);
    CHECK(longest_induced_cycle(g).is_infinite() == (lic == 0));
    for (int l = 3; l <= n + 1; ++l) CHECK(has_induced_cycle_at_least(g, l) == (lic >= l));
  }
}

TEST_CASE("desk-scale searches refuse oversized inputs") {
  CHECK_THROWS_AS(longest_induced_path(gen::cycle(40)), CapExceeded);
  CHECK_NOTHROW(girth(gen::cycle(40)));
}
