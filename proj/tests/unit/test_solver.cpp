#include <doctest.h>

#include "copsrobber/generators.hpp"
#include "copsrobber/solver.hpp"
#include "copsrobber/transforms.hpp"
#include "copsrobber/verify.hpp"
#include "oracles.hpp"

using namespace copsrobber;

TEST_CASE("cop-win verdicts on named graphs") {
  CHECK(cop_win(gen::spider({2, 3, 1}), 1));
  CHECK_FALSE(cop_win(gen::cycle(4), 1));
  CHECK(cop_win(gen::cycle(4), 2));
  CHECK_FALSE(cop_win(gen::petersen(), 2));
  CHECK(cop_win(gen::petersen(), 3));
  CHECK(cop_number(gen::path(7)) == 1);
  CHECK(cop_number(gen::cycle(5)) == 2);
  CHECK(cop_number(gen::petersen()) == 3);
  CHECK(cop_number(gen::disjoint_union(gen::petersen(), gen::complete(6))) == 3);
  CHECK(cop_number(gen::complete(6)) == 1);
  CHECK(cop_number(gen::complete_bipartite(3, 3)) == 2);
}

TEST_CASE("solver agrees with the labeled fixpoint oracle") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : connected_graphs(n))
      for (int k = 1; k <= 2; ++k) {
        CAPTURE(render_graph(g));
        CHECK(SolveTable::solve(g, k).cop_win() == oracle::cop_win(g, k));
      }
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Graph g = oracle::random_connected(6 + seed % 2, 0.15, seed);
    CAPTURE(render_graph(g));
    CHECK(SolveTable::solve(g, 1).cop_win() == oracle::cop_win(g, 1));
    CHECK(SolveTable::solve(g, 2).cop_win() == oracle::cop_win(g, 2));
  }
}

TEST_CASE("dismantlability") {
  CHECK(is_cop_win_dismantlable(gen::spider({1, 2, 3})));
  CHECK_FALSE(is_cop_win_dismantlable(gen::cycle(4)));
  CHECK(is_cop_win_dismantlable(gen::complete(5)));
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : connected_graphs(n)) CHECK(is_cop_win_dismantlable(g) == cop_win(g, 1));
}

TEST_CASE("ranks on P_3 with one cop") {
  auto t = SolveTable::solve(gen::path(3), 1);
  CHECK(t.best_placement() == std::vector<Vertex>{1});
  CHECK(t.placement_value({1}) == 1);
  CHECK(t.rank({1}, 1, true) == 0);
  CHECK(t.rank({0}, 2, true) == 3);
  CHECK(t.rank({1}, 0, false) == 2);
  auto cop = make_optimal_cop(std::make_shared<SolveTable>(t));
  auto robber = make_optimal_robber(std::make_shared<SolveTable>(t));
  Trace tr = play(gen::path(3), 1, *cop, *robber, 10);
  CHECK(tr.captured());
  CHECK(tr.capture_round <= 2);
}

TEST_CASE("extracted cop strategy beats every robber within the rank bound") {
  Graph c4 = gen::cycle(4);
  auto table = std::make_shared<SolveTable>(SolveTable::solve(c4, 2));
  REQUIRE(table->cop_win());
  std::vector<std::unique_ptr<RobberStrategy>> robbers;
  robbers.push_back(make_optimal_robber(table));
  robbers.push_back(make_lazy_robber());
  robbers.push_back(make_evasive_robber());
  for (unsigned long long s = 0; s < 20; ++s) robbers.push_back(make_random_robber(s));
  for (auto& robber : robbers) {
    auto cop = make_optimal_cop(table);
    Trace t = play(c4, 2, *cop, *robber, 2 * table->state_count());
    CHECK(t.captured());
    CHECK(replay(c4, t).ok);
  }
}

TEST_CASE("ranks decrease along optimal play") {
  for (const Graph& g : {gen::petersen(), gen::cycle(7), gen::complete_bipartite(2, 4)}) {
    const int k = cop_number(g);
    auto table = std::make_shared<SolveTable>(SolveTable::solve(g, k));
    std::vector<Vertex> cops = table->best_placement();
    Vertex robber = table->best_robber_placement(cops);
    int last = table->rank(cops, robber, true);
    REQUIRE(last >= 0);
    while (last > 0) {
      cops = table->best_cop_move(cops, robber);
      int after_cops = table->rank(cops, robber, false);
      CHECK(after_cops == last - 1);
      if (after_cops == 0) break;
      robber = table->best_robber_move(cops, robber);
      int after_robber = table->rank(cops, robber, true);
      CHECK(after_robber == after_cops - 1);
      last = after_robber;
    }
  }
}

TEST_CASE("extracted robber survives when the cops cannot win") {
  for (auto [g, k] : std::vector<std::pair<Graph, int>>{{gen::cycle(4), 1}, {gen::petersen(), 2}, {gen::cycle(8), 1}}) {
    auto table = std::make_shared<SolveTable>(SolveTable::solve(g, k));
    REQUIRE_FALSE(table->cop_win());
    std::vector<std::unique_ptr<CopStrategy>> cops;
    cops.push_back(make_greedy_cop());
    auto winner = std::make_shared<SolveTable>(SolveTable::solve(g, k));
    for (auto& cop : cops) {
      auto robber = make_optimal_robber(table);
      Trace t = play(g, k, *cop, *robber, default_horizon(g, k));
      CHECK(t.outcome == Trace::Outcome::kRobberSurvives);
    }
    CHECK_THROWS_AS(make_optimal_cop(winner)->place(g, k), StrategyRefusal);
  }
}

TEST_CASE("state cap") {
  CHECK_THROWS_AS(SolveTable::solve(gen::petersen(), 3, 100), CapExceeded);
  try {
    cop_number(gen::disjoint_union(gen::path(2), gen::petersen()), 300);
    FAIL("expected a cap");
  } catch (const CapExceeded& e) {
    CHECK(std::string(e.what()).find("component of vertex 2") != std::string::npos);
  }
  CHECK_THROWS_AS(SolveTable::solve(gen::disjoint_union(gen::path(2), gen::path(2)), 1), std::invalid_argument);
  CHECK_THROWS_AS(SolveTable::solve(gen::path(2), 0), std::invalid_argument);
}

TEST_CASE("subdivided complete graphs need at most two cops") {
  for (int n = 3; n <= 5; ++n) CHECK(cop_number(subdivide(gen::complete(n), n).output) <= 2);
}

TEST_CASE("small transformed instances") {
  CHECK(cop_number(clique_substitution(gen::cycle(4)).output) == 2);
  CHECK(cop_number(subdivide(gen::cycle(4), 2).output) == 2);
  CHECK(cop_number(hat_construction(gen::cycle(4)).output) == 2);
}
