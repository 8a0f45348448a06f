#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "copsrobber/graph.hpp"

namespace copsrobber {

constexpr Vertex kNoVertex = -1;

/// Canonical game position: cop multiset plus robber plus side to move.
struct GameState {
  enum class Side { kCopPlacement, kRobberPlacement, kCops, kRobber };
  std::vector<Vertex> cops;  // sorted ascending (cops may share vertices)
  Vertex robber = kNoVertex;
  Side side_to_move = Side::kCopPlacement;
  int round = 0;

  bool captured() const;
  static GameState from_positions(std::vector<Vertex> cops, Vertex robber, Side side, int round);
};

/// Thrown when a legal-move query is made for the wrong side.
class WrongSide : public std::logic_error {
  using std::logic_error::logic_error;
};

/// Every joint cop move (each cop stays or steps to a neighbor), cop i keeps
/// index i; listed in lexicographic order of the position vectors.
std::vector<std::vector<Vertex>> legal_cop_moves(const Graph& g, const GameState& state);
/// {robber} + N(robber), ascending.
std::vector<Vertex> legal_robber_moves(const Graph& g, const GameState& state);
/// Joint moves from labeled positions (no side check).
std::vector<std::vector<Vertex>> joint_moves(const Graph& g, std::span<const Vertex> cops);

struct RoundRecord {
  std::vector<Vertex> cops;    // positions after the cops' move
  Vertex robber = kNoVertex;   // position after the robber's move; kNoVertex if the round ended first
};

/// Complete record of one match.
struct Trace {
  enum class Outcome { kCapture, kRobberSurvives, kCopForfeit, kRobberForfeit };

  std::string graph_hash;
  int order = 0;
  int k = 0;
  std::string cop_strategy;
  std::string robber_strategy;
  long long horizon = 0;
  std::vector<Vertex> cop_placement;
  Vertex robber_placement = kNoVertex;  // kNoVertex when every vertex held a cop
  std::vector<RoundRecord> rounds;
  Outcome outcome = Outcome::kRobberSurvives;
  int capture_round = -1;  // 0 = at placement
  std::string violation;   // rule violation text for forfeits
  std::string config;      // caller-provided provenance echo (JSON text)

  bool captured() const { return outcome == Outcome::kCapture; }
  /// Labeled cop positions after the last recorded half-move.
  std::vector<Vertex> current_cops() const;
  /// Robber position after the last recorded half-move.
  Vertex current_robber() const;
};

std::string outcome_name(Trace::Outcome outcome);

/// What a strategy sees when asked to decide: the graph, the match so far, and k.
struct GameView {
  const Graph& graph;
  int k;
  const Trace& trace;

  std::vector<Vertex> cops() const { return trace.current_cops(); }
  Vertex robber() const { return trace.current_robber(); }
  int round() const { return static_cast<int>(trace.rounds.size()); }
};

/// Raised by a strategy that will not play (hypothesis not met, no winning strategy).
class StrategyRefusal : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Cop side decision procedure. Handles are single-match and stateful.
class CopStrategy {
 public:
  virtual ~CopStrategy() = default;
  virtual std::string name() const = 0;
  /// k positions, cop i at index i.
  virtual std::vector<Vertex> place(const Graph& g, int k) = 0;
  /// New labeled positions for the cops (robber has been placed / just moved).
  virtual std::vector<Vertex> move(const GameView& view) = 0;
};

/// Robber side decision procedure.
class RobberStrategy {
 public:
  virtual ~RobberStrategy() = default;
  virtual std::string name() const = 0;
  virtual Vertex place(const GameView& view) = 0;
  virtual Vertex move(const GameView& view) = 0;
};

/// Number of distinct game states for k cops on n vertices, saturating at
/// LLONG_MAX / 2 so that horizons derived from it cannot overflow.
long long state_space_size(int n, int k);
/// state_space_size + 1: surviving that many rounds certifies a positional robber win.
long long default_horizon(const Graph& g, int k);

/// Referee. Cops place, robber places, then rounds of cops-then-robber until
/// capture or `horizon` rounds. Illegal decisions forfeit the offending side.
/// Throws std::invalid_argument if g is disconnected or k < 1; strategy
/// refusals propagate.
Trace play(const Graph& g, int k, CopStrategy& cop, RobberStrategy& robber, long long horizon,
           const std::string& config = "{}");

struct ReplayCheck {
  bool ok = true;
  std::string problem;
};

/// Re-checks a recorded trace against the rules: legality of every move and
/// agreement of the recorded outcome with the replayed positions.
ReplayCheck replay(const Graph& g, const Trace& trace);

/// Cop strategy that steps every cop along a shortest path toward the robber.
std::unique_ptr<CopStrategy> make_greedy_cop();
/// Robber that stays put at its placement (the lowest free vertex).
std::unique_ptr<RobberStrategy> make_lazy_robber();
/// Robber that maximizes its distance to the nearest cop (ties: lowest vertex).
std::unique_ptr<RobberStrategy> make_evasive_robber();
/// Seeded random walk robber; avoids stepping onto cops when it can.
std::unique_ptr<RobberStrategy> make_random_robber(unsigned long long seed);

}  // namespace copsrobber
