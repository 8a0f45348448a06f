#pragma once

// Building blocks shared by the cop strategies. A controller owns a subset of
// the cops (by index) and writes their next positions; strategies compose
// controllers and add the universal capture rule on top.

#include <functional>
#include <memory>
#include <vector>

#include "copsrobber/graph.hpp"
#include "copsrobber/strategies.hpp"
#include "copsrobber/treewidth.hpp"

namespace copsrobber::detail {

using Distances = std::vector<std::vector<int>>;

/// Induced subgraph the robber is confined to, addressed by global vertex ids.
class Arena {
 public:
  Arena(const Graph& g, std::vector<Vertex> vertices);
  static Arena whole(const Graph& g);

  bool has(Vertex v) const { return v >= 0 && v < static_cast<int>(local_.size()) && local_[v] >= 0; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Graph& local() const { return local_graph_; }
  Vertex local(Vertex v) const { return local_[v]; }
  Vertex global(Vertex v) const { return vertices_[v]; }
  int dist(Vertex u, Vertex v) const { return dist_[local_[u]][local_[v]]; }
  /// Lexicographically least shortest path inside the arena.
  std::vector<Vertex> path(Vertex u, Vertex v) const;
  /// Component of arena - removed that contains `start` (global ids, ascending).
  std::vector<Vertex> component_without(Vertex start, const std::vector<Vertex>& removed) const;
  std::vector<Vertex> to_global(const std::vector<Vertex>& local_ids) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<int> local_;
  Graph local_graph_;
  Distances dist_;
};

struct Context {
  const Graph& g;
  const Distances& dist;
  const std::vector<Vertex>& cops;
  Vertex robber;
  StrategyReport& report;
};

/// First step of the lexicographically least shortest path from `from` to `to`.
Vertex step_toward(const Context& ctx, Vertex from, Vertex to);
/// Some cop stands on or next to the robber, so this move captures.
bool capturable(const Context& ctx);

class Controller {
 public:
  virtual ~Controller() = default;
  virtual void decide(const Context& ctx, std::vector<Vertex>& next) = 0;
};

/// Cops walk to fixed targets and stay there.
class Stationary : public Controller {
 public:
  Stationary(std::vector<int> cops, std::vector<Vertex> targets) : cops_(std::move(cops)), targets_(std::move(targets)) {}
  void decide(const Context& ctx, std::vector<Vertex>& next) override;
  bool arrived(const Context& ctx) const;
  const std::vector<Vertex>& targets() const { return targets_; }

 private:
  std::vector<int> cops_;
  std::vector<Vertex> targets_;
};

/// Parks some cops, then hands the rest to a controller built once every parked
/// cop is in place. The factory may return nullptr to be asked again next move.
class ParkThen : public Controller {
 public:
  using Factory = std::function<std::unique_ptr<Controller>(const Context&)>;
  ParkThen(std::vector<int> cops, std::vector<Vertex> targets, Factory factory)
      : park_(std::move(cops), std::move(targets)), factory_(std::move(factory)) {}
  void decide(const Context& ctx, std::vector<Vertex>& next) override;

 private:
  Stationary park_;
  Factory factory_;
  std::unique_ptr<Controller> child_;
};

/// Single-file pursuit inside an arena. All cops first gather on one vertex;
/// then cops[0] leads for the rest of the game: each stage it walks a shortest
/// path to the robber and replays the robber's moves, and the follower at file
/// position j stands where the lead stood spacing*j moves earlier.
///
/// A stage ends when the lead's distance to the robber (measured after the
/// robber's move) drops; the lead then re-plans its walk. Separately, with
/// `stage_bound` = l > 0, the nearest cop of the file staying at distance
/// d >= 2 for l-d-1 lead moves is a falsification.
class LeadPursuit : public Controller {
 public:
  LeadPursuit(Arena arena, std::vector<int> cops, int spacing, int stage_bound, bool flag_stage_cap = true);
  void decide(const Context& ctx, std::vector<Vertex>& next) override;

 private:
  Arena arena_;
  std::vector<int> cops_;
  int spacing_;
  int stage_bound_;
  bool flag_stage_cap_;
  bool started_ = false;
  std::vector<Vertex> trail_;  // lead positions, most recent last
  std::vector<Vertex> walk_;
  std::size_t index_ = 0;
  int stage_distance_ = 0;
  long long stage_moves_ = 0;
  int near_distance_ = -1;
  long long near_moves_ = 0;
  bool near_flagged_ = false;
  Vertex last_robber_ = -1;
};

/// One cop's assignment in the bag sweep.
struct Job {
  enum class Kind { kIdle, kSit, kGuard };
  Kind kind = Kind::kIdle;
  Vertex sit = -1;
  std::vector<Vertex> path;      // guarded shortest path, anchor path[0]
  std::vector<Vertex> approach;  // walk along the previous path still to take
  bool established = false;

  std::vector<Vertex> endpoints() const;
  std::vector<Vertex> covered() const;
};

/// Keeps a shortest path guarded: after the robber moves the cop stands at
/// path index min(dist(robber, anchor), |P|-1) once established.
Vertex guard_step(const Context& ctx, const Arena& arena, Job& job, Vertex cop);

/// Tree-decomposition sweep inside an arena; bags use global ids.
class TreeSweep : public Controller {
 public:
  TreeSweep(Arena arena, std::vector<int> cops, TreeDecomposition d);
  void decide(const Context& ctx, std::vector<Vertex>& next) override;

 private:
  void assign_initial(const Context& ctx);
  void advance(const Context& ctx, int target_node);
  void check_invariants(const Context& ctx);

  Arena arena_;
  std::vector<int> cops_;
  TreeDecomposition d_;
  int node_ = 0;
  bool started_ = false;
  bool in_transition_ = false;
  std::vector<Vertex> kept_;  // B cap B' during a transition
  std::vector<Job> jobs_;
};

}  // namespace copsrobber::detail
