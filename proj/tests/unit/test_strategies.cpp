#include <doctest.h>

#include "copsrobber/generators.hpp"
#include "copsrobber/metrics.hpp"
#include "copsrobber/strategies.hpp"
#include "copsrobber/transforms.hpp"
#include "copsrobber/treewidth.hpp"
#include "copsrobber/verify.hpp"
#include "oracles.hpp"
#include "pursuit.hpp"

using namespace copsrobber;

namespace {

struct Outcome {
  Trace trace;
  StrategyReport report;
};

Outcome vs_optimal(const Graph& g, int k, InstrumentedCopStrategy& cop) {
  auto table = std::make_shared<SolveTable>(SolveTable::solve(g, k));
  auto robber = make_optimal_robber(table);
  Trace t = play(g, k, cop, *robber, default_horizon(g, k));
  return {t, cop.report()};
}

void expect_capture(const Graph& g, int k, InstrumentedCopStrategy& cop) {
  CAPTURE(render_graph(g));
  CAPTURE(k);
  auto o = vs_optimal(g, k, cop);
  CHECK(o.trace.captured());
  CHECK(replay(g, o.trace).ok);
  CHECK(o.report.clean());
  for (const auto& f : o.report.falsifications) MESSAGE(f);
}

// Guards the path 0-1-2 of C_6 with one cop, driving guard_step directly.
class PathGuard : public CopStrategy {
 public:
  explicit PathGuard(const Graph& g) : g_(g), dist_(all_distances(g)), arena_(detail::Arena::whole(g)) {
    job_.kind = detail::Job::Kind::kGuard;
    job_.path = arena_.path(0, 2);
  }
  std::string name() const override { return "guard"; }
  std::vector<Vertex> place(const Graph&, int) override { return {0}; }
  std::vector<Vertex> move(const GameView& view) override {
    auto cops = view.cops();
    detail::Context ctx{g_, dist_, cops, view.robber(), report_};
    Vertex next = detail::guard_step(ctx, arena_, job_, cops[0]);
    if (job_.established && established_at_ < 0) established_at_ = moves_;
    ++moves_;
    return {next};
  }
  // Index of the first move after which the guard held, or -1.
  int established_at() const { return established_at_; }

 private:
  Graph g_;
  std::vector<std::vector<int>> dist_;
  detail::Arena arena_;
  detail::Job job_;
  StrategyReport report_;
  int moves_ = 0;
  int established_at_ = -1;
};

}  // namespace

TEST_CASE("guarded shortest path confines the robber") {
  Graph c6 = gen::cycle(6);
  auto dist = all_distances(c6);
  auto table = std::make_shared<SolveTable>(SolveTable::solve(c6, 1));
  std::vector<std::unique_ptr<RobberStrategy>> robbers;
  robbers.push_back(make_optimal_robber(table));
  robbers.push_back(make_lazy_robber());
  robbers.push_back(make_evasive_robber());
  for (unsigned long long seed = 0; seed < 10; ++seed) robbers.push_back(make_random_robber(seed));
  for (auto& robber : robbers) {
    PathGuard guard(c6);
    Trace t = play(c6, 1, guard, *robber, 40);
    REQUIRE(replay(c6, t).ok);
    CHECK(guard.established_at() >= 0);
    const std::vector<Vertex> path{0, 1, 2};
    Vertex before = t.robber_placement;
    for (std::size_t i = 0; i < t.rounds.size(); ++i) {
      const auto& round = t.rounds[i];
      if (guard.established_at() >= 0 && static_cast<int>(i) > guard.established_at()) {
        // The cop shadows the robber's projection onto the path.
        CHECK(round.cops[0] == path[std::min(dist[before][0], 2)]);
        // Stepping onto the path is answered by a capture.
        if (round.robber != kNoVertex && round.robber <= 2 && round.robber != round.cops[0]) {
          REQUIRE(i + 1 < t.rounds.size());
          CHECK(t.rounds[i + 1].cops[0] == round.robber);
        }
      }
      if (round.robber == kNoVertex) break;
      before = round.robber;
    }
  }
}

TEST_CASE("guard targets the anchor when the robber stands on it") {
  Graph p3 = gen::path(3);
  auto dist = all_distances(p3);
  auto arena = detail::Arena::whole(p3);
  detail::Job job;
  job.kind = detail::Job::Kind::kGuard;
  job.path = {0, 1, 2};
  StrategyReport report;
  std::vector<Vertex> cops{1};
  detail::Context ctx{p3, dist, cops, 0, report};
  CHECK(detail::guard_step(ctx, arena, job, 1) == 0);
  CHECK(job.established);
}

TEST_CASE("lead-cop pursuit") {
  for (int n = 2; n <= 6; ++n) {
    auto s = lead_cop_strategy(3);
    expect_capture(gen::complete(n), 1, *s);
  }
  auto c4 = lead_cop_strategy(4);
  expect_capture(gen::cycle(4), 2, *c4);
  for (const Graph& g : {gen::complete_bipartite(2, 3), gen::complete_bipartite(3, 3)}) {
    auto s = lead_cop_strategy(4);
    expect_capture(g, 2, *s);
  }
  auto s = lead_cop_strategy(4);
  CHECK(s->budget(gen::cycle(4)) == 2);
}

TEST_CASE("lead-cop pursuit on every P_4-free connected graph up to six vertices") {
  int played = 0;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : connected_graphs(n)) {
      if (!is_p_free(g, 4)) continue;
      auto s = lead_cop_strategy(4);
      expect_capture(g, 2, *s);
      ++played;
    }
  CHECK(played > 20);
}

TEST_CASE("strategies refuse outside their hypothesis") {
  auto s = lead_cop_strategy(4);
  auto robber = make_lazy_robber();
  CHECK_THROWS_AS(play(gen::path(5), 2, *s, *robber, 10), StrategyRefusal);
  auto few = lead_cop_strategy(5);
  CHECK_THROWS_AS(play(gen::cycle(4), 2, *few, *robber, 10), StrategyRefusal);
  auto ic = induced_cycle_strategy(5);
  CHECK_THROWS_AS(play(gen::cycle(5), 3, *ic, *robber, 10), StrategyRefusal);
  auto bip = bipartite_lead_cop(2);
  CHECK_THROWS_AS(play(gen::cycle(5), 2, *bip, *robber, 10), StrategyRefusal);
  auto h = theorem2_strategy(claw_pattern());
  CHECK_THROWS_AS(play(gen::star(3), 2, *h, *robber, 10), StrategyRefusal);
  CHECK_THROWS_AS(theorem2_strategy(ForestPattern(gen::star(4))), std::invalid_argument);
  TreeDecomposition bad{Graph(1, {}), {{0, 1}}};
  auto td = tree_decomposition_strategy(bad);
  CHECK_THROWS_AS(play(gen::cycle(4), 2, *td, *robber, 10), StrategyRefusal);
}

TEST_CASE("induced-cycle pursuit") {
  auto tree = induced_cycle_strategy(3);
  expect_capture(gen::spider({2, 2, 1}), 1, *tree);
  auto c5 = induced_cycle_strategy(6);
  expect_capture(gen::cycle(5), 4, *c5);
  // Chordal: a fan (path 1-2-3-4-5 plus apex 0).
  Graph fan(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  auto chordal = induced_cycle_strategy(4);
  expect_capture(fan, 2, *chordal);
}

TEST_CASE("bipartite spacing-two pursuit") {
  auto k33 = bipartite_lead_cop(2);
  expect_capture(gen::complete_bipartite(3, 3), 2, *k33);
  auto star = bipartite_lead_cop(2);
  expect_capture(gen::star(5), 2, *star);
  auto c6 = bipartite_lead_cop(3);
  expect_capture(gen::cycle(6), 3, *c6);
  auto c8 = bipartite_lead_cop(4);
  expect_capture(gen::cycle(8), 4, *c8);
}

TEST_CASE("tree-decomposition sweep") {
  auto tree = tree_decomposition_strategy(exact_treewidth(gen::spider({2, 2, 2})).decomposition);
  expect_capture(gen::spider({2, 2, 2}), 1, *tree);
  auto c6 = tree_decomposition_strategy(exact_treewidth(gen::cycle(6)).decomposition);
  expect_capture(gen::cycle(6), 2, *c6);
  auto pet = tree_decomposition_strategy(exact_treewidth(gen::petersen()).decomposition);
  CHECK(pet->budget(gen::petersen()) == 3);
  expect_capture(gen::petersen(), 3, *pet);
  auto k7 = tree_decomposition_strategy(exact_treewidth(gen::complete(7)).decomposition);
  expect_capture(gen::complete(7), 4, *k7);
}

TEST_CASE("tree-decomposition sweep with non-optimal decompositions") {
  // Any valid decomposition works at its own width.
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Graph g = oracle::random_connected(7, 0.2, seed);
    std::vector<Vertex> order(7);
    std::iota(order.begin(), order.end(), 0);
    auto d = decomposition_from_elimination_order(g, order);
    auto s = tree_decomposition_strategy(d);
    expect_capture(g, d.width() / 2 + 1, *s);
  }
}

TEST_CASE("subdivision plus one") {
  auto tree = subdivision_plus_one(gen::spider({1, 2}), 2);
  Graph sub_tree = subdivide(gen::spider({1, 2}), 2).output;
  CHECK(tree->budget(sub_tree) == 2);
  expect_capture(sub_tree, 2, *tree);

  auto c4 = subdivision_plus_one(gen::cycle(4), 2);
  expect_capture(subdivide(gen::cycle(4), 2).output, 3, *c4);

  auto pet = subdivision_plus_one(gen::petersen(), 1);
  Graph sub_pet = subdivide(gen::petersen(), 1).output;
  CHECK(pet->budget(sub_pet) == 4);
  expect_capture(sub_pet, 4, *pet);

  auto k4 = subdivision_plus_one(gen::complete(4), 3);
  expect_capture(subdivide(gen::complete(4), 3).output, 2, *k4);
}

TEST_CASE("forbidden-forest strategy") {
  auto claw = theorem2_strategy(claw_pattern());
  CHECK(theorem2_budget(claw_pattern()) == 2);
  expect_capture(gen::cycle(10), 2, *claw);
  auto path = theorem2_strategy(claw_pattern());
  expect_capture(gen::path(7), 2, *path);

  ForestPattern spider = parse_pattern("spider-2-2-2");
  CHECK(theorem2_budget(spider) == 4);
  for (const Graph& g : {gen::cycle(9), gen::spider({1, 1, 1}), gen::complete(5), gen::complete_bipartite(2, 3)}) {
    if (contains_forest_subgraph(g, spider)) continue;
    auto s = theorem2_strategy(spider);
    expect_capture(g, 4, *s);
  }

  ForestPattern p2claw = parse_pattern("p2+claw");
  CHECK(theorem2_budget(p2claw) == 4);
  for (const Graph& g : {gen::star(5), gen::cycle(7), gen::spider({2, 2, 2})}) {
    REQUIRE_FALSE(contains_forest_subgraph(g, p2claw));
    auto s = theorem2_strategy(p2claw);
    expect_capture(g, 4, *s);
  }
  CHECK(theorem2_budget(parse_pattern("p5")) == 3);
  CHECK(theorem2_budget(parse_pattern("p2")) == 1);
}

TEST_CASE("strategies hold up against random robbers") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = oracle::random_connected(5 + seed % 5, 0.25, seed);
    CAPTURE(render_graph(g));
    std::vector<std::pair<std::unique_ptr<InstrumentedCopStrategy>, int>> cops;
    auto tw = exact_treewidth(g);
    cops.emplace_back(tree_decomposition_strategy(tw.decomposition), tw.width / 2 + 1);
    const int lip = longest_induced_path(g);
    cops.emplace_back(lead_cop_strategy(lip + 1), std::max(lip - 1, 1));
    if (!contains_forest_subgraph(g, claw_pattern())) cops.emplace_back(theorem2_strategy(claw_pattern()), 2);
    for (auto& [cop, k] : cops) {
      auto robber = make_random_robber(seed);
      Trace t = play(g, k, *cop, *robber, default_horizon(g, k));
      CHECK(t.captured());
      CHECK(cop->report().clean());
    }
  }
}

TEST_CASE("strategy registry") {
  Graph c4 = gen::cycle(4);
  for (auto [spec, k] : std::vector<std::pair<std::string, int>>{{"optimal", 2},
                                                                  {"lead-cop:l=4", 2},
                                                                  {"induced-cycle:l=5", 3},
                                                                  {"bipartite:l=2", 2},
                                                                  {"treedec", 2},
                                                                  {"thm2", 2},
                                                                  {"thm2:h=claw", 2}}) {
    CAPTURE(spec);
    auto cop = make_cop_strategy(spec, c4, k);
    auto robber = make_robber_strategy("optimal", c4, k);
    CHECK(play(c4, k, *cop, *robber, default_horizon(c4, k)).captured());
  }
  CHECK(make_cop_strategy("greedy", c4, 1)->name() == "greedy");
  auto sub = make_cop_strategy("subdiv+1:r=1", c4, 3);
  CHECK(sub->name().find("subdiv+1") == 0);
  for (std::string spec : {"lazy", "evasive", "random:seed=4"}) CHECK_NOTHROW(make_robber_strategy(spec, c4, 1));
  CHECK_THROWS_AS(make_cop_strategy("teleport", c4, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_cop_strategy("lead-cop", c4, 1), std::invalid_argument);
  auto [name, params] = parse_strategy_spec("lead-cop:l=4,x=y");
  CHECK(name == "lead-cop");
  CHECK(params.at("l") == "4");
  CHECK(params.at("x") == "y");
}
