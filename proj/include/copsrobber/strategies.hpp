#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "copsrobber/game.hpp"
#include "copsrobber/solver.hpp"
#include "copsrobber/subgraph.hpp"
#include "copsrobber/treewidth.hpp"

namespace copsrobber {

/// Counters a strategy keeps while it plays, plus any event that contradicts
/// the argument the strategy is built on (a falsification).
struct StrategyReport {
  std::map<std::string, long long> counters;
  std::vector<std::string> falsifications;

  void bump(const std::string& key, long long by = 1) { counters[key] += by; }
  void falsified(std::string what);
  bool clean() const { return falsifications.empty(); }
};

/// A cop strategy that exposes its report and its cop budget.
class InstrumentedCopStrategy : public CopStrategy {
 public:
  virtual const StrategyReport& report() const = 0;
  /// Cops the strategy needs on graph g (the budget it promises to win with).
  virtual int budget(const Graph& g) const = 0;
};

/// Single-file pursuit for P_l-free graphs with l-2 cops: a fixed lead cop
/// walks a shortest path to the robber and then replays the robber's route;
/// follower i stands where the lead stood i moves ago. Refuses at placement
/// when g has an induced P_l or k is below the budget.
std::unique_ptr<InstrumentedCopStrategy> lead_cop_strategy(int l);
/// Same pursuit, hypothesis: no induced cycle of length >= l.
std::unique_ptr<InstrumentedCopStrategy> induced_cycle_strategy(int l);
/// Bipartite P_{2l}-free graphs, l cops spaced two apart along the lead's walk.
std::unique_ptr<InstrumentedCopStrategy> bipartite_lead_cop(int l);
/// Bag-sweeping strategy with floor(width/2)+1 cops. Refuses at placement if
/// `d` is not a valid decomposition of the game graph.
std::unique_ptr<InstrumentedCopStrategy> tree_decomposition_strategy(TreeDecomposition d);
/// Strategy on subdivide(base, r) with cop(base)+1 cops: one pursuing cop pins
/// the robber's direction, the rest replay the solver's strategy for `base`.
std::unique_ptr<InstrumentedCopStrategy> subdivision_plus_one(const Graph& base, int r,
                                                              long long state_cap = kDefaultStateCap);
/// Strategy for graphs without H as a subgraph, every component of H a tree
/// with at most three leaves. Throws std::invalid_argument otherwise.
std::unique_ptr<InstrumentedCopStrategy> theorem2_strategy(const ForestPattern& h);

/// Cop budget of the strategy for graphs avoiding H: components are stripped in
/// the order that minimizes max_j(sum_{i<j} |T_i| + base(T_j)), where base is
/// max(|T|-2, 1) for a path and 2r for a component with a degree-3 vertex.
int theorem2_budget(const ForestPattern& h);

/// Pattern from a '+'-joined list of "claw", "p<N>" and "spider-a-b-c".
ForestPattern parse_pattern(const std::string& text);

/// Cop strategies by name: greedy, optimal, lead-cop:l=N, induced-cycle:l=N,
/// bipartite:l=N, treedec, thm2:h=PATTERN, subdiv+1:r=N. For subdiv+1 `g` is
/// the base graph; for every other name it is the game graph.
std::unique_ptr<CopStrategy> make_cop_strategy(const std::string& spec, const Graph& g, int k,
                                               long long state_cap = kDefaultStateCap);
/// Robber strategies by name: optimal, lazy, evasive, random:seed=N.
std::unique_ptr<RobberStrategy> make_robber_strategy(const std::string& spec, const Graph& g, int k,
                                                     long long state_cap = kDefaultStateCap);

/// "name:key=value,key=value" split into name and parameters.
std::pair<std::string, std::map<std::string, std::string>> parse_strategy_spec(const std::string& spec);

}  // namespace copsrobber
