#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "copsrobber/game.hpp"
#include "copsrobber/graph.hpp"

namespace copsrobber {

constexpr long long kDefaultStateCap = 5'000'000;

/// Retrograde solution of the k-cop game on a connected graph.
///
/// States are (sorted cop multiset, robber, side to move). A state where the
/// robber shares a vertex with a cop is terminal with rank 0; every other
/// cop-win state carries the number of half-moves to capture under optimal
/// play. States never reached by the backward sweep are robber wins.
class SolveTable {
 public:
  /// Throws CapExceeded("state", ...) when C(n+k-1,k)*n*2 exceeds `state_cap`,
  /// std::invalid_argument for a disconnected graph or k < 1.
  static SolveTable solve(const Graph& g, int k, long long state_cap = kDefaultStateCap);

  const Graph& graph() const { return graph_; }
  int k() const { return k_; }
  long long state_count() const { return static_cast<long long>(rank_.size()); }

  /// Some placement beats every robber placement.
  bool cop_win() const { return cop_win_; }

  /// Rank of a state, or -1 if it is a robber win. `cops` in any order.
  int rank(std::vector<Vertex> cops, Vertex robber, bool cops_to_move) const;

  /// Lexicographically least multiset minimizing the worst robber reply
  /// (robber wins count as worse than any rank).
  std::vector<Vertex> best_placement() const;
  /// Worst-case rank of a placement; -1 if the robber can escape forever.
  int placement_value(const std::vector<Vertex>& cops) const;
  /// Labeled joint move minimizing the resulting rank; lexicographically least
  /// among equals. From a robber-win state every move is equally bad and the
  /// first joint move (all cops stepping to their least option) is returned.
  std::vector<Vertex> best_cop_move(const std::vector<Vertex>& cops, Vertex robber) const;
  /// Free vertex the robber should start on: a robber-win start if any,
  /// otherwise the one maximizing rank; lowest vertex on ties.
  Vertex best_robber_placement(const std::vector<Vertex>& cops) const;
  /// Robber reply: stay in robber-win states if possible, otherwise maximize rank.
  Vertex best_robber_move(const std::vector<Vertex>& cops, Vertex robber) const;

 private:
  SolveTable() = default;
  std::int64_t multiset_rank(std::vector<Vertex> cops) const;
  std::int64_t index(std::int64_t mrank, Vertex robber, int side) const {
    return (mrank * graph_.order() + robber) * 2 + side;
  }

  Graph graph_;
  int k_ = 0;
  bool cop_win_ = false;
  std::vector<std::vector<std::int64_t>> binom_;  // binom_[i][j] = C(i, j)
  std::vector<std::int32_t> rank_;                // -1 = robber win
};

/// Least k such that k cops win on a connected graph.
int connected_cop_number(const Graph& g, long long state_cap = kDefaultStateCap);
/// Maximum over components. A CapExceeded raised for a component names it.
int cop_number(const Graph& g, long long state_cap = kDefaultStateCap);
/// cop_win(g, k) per component, all must hold.
bool cop_win(const Graph& g, int k, long long state_cap = kDefaultStateCap);

/// Repeatedly deletes dominated vertices (N[v] inside N[u] for some u != v);
/// true iff at most one vertex remains.
bool is_cop_win_dismantlable(const Graph& g);

/// Strategies read off a shared solved table.
/// The cop strategy refuses at placement when the table is a robber win.
std::unique_ptr<CopStrategy> make_optimal_cop(std::shared_ptr<const SolveTable> table);
std::unique_ptr<RobberStrategy> make_optimal_robber(std::shared_ptr<const SolveTable> table);

}  // namespace copsrobber
