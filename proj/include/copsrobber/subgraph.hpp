#pragma once

#include <optional>
#include <vector>

#include "copsrobber/graph.hpp"
#include "copsrobber/metrics.hpp"

namespace copsrobber {

/// One tree of a forest pattern.
struct PatternComponent {
  std::vector<Vertex> vertices;  // ascending, ids in the pattern graph
  int leaf_count = 0;            // vertices of degree <= 1
  std::optional<Vertex> center;  // the unique degree-3 vertex, if any
  int radius = 0;                // eccentricity of the center (0 without one)
  bool is_path() const { return !center.has_value(); }
  int size() const { return static_cast<int>(vertices.size()); }
};

/// A forest H to be searched for as a (not necessarily induced) subgraph.
class ForestPattern {
 public:
  /// Throws std::invalid_argument if `forest` has a cycle.
  explicit ForestPattern(Graph forest);

  const Graph& underlying() const { return graph_; }
  const std::vector<PatternComponent>& components() const { return components_; }
  /// Every component a tree with at most three leaves.
  bool has_few_leaves() const;
  /// The pattern restricted to the listed components (indices into components()).
  ForestPattern restricted(const std::vector<int>& keep) const;

 private:
  Graph graph_;
  std::vector<PatternComponent> components_;
};

ForestPattern claw_pattern();

/// Lexicographically least injective map pattern-vertex -> G-vertex realizing
/// every pattern edge, or nullopt. Throws CapExceeded above the desk cap.
std::optional<std::vector<Vertex>> contains_forest_subgraph(const Graph& g, const ForestPattern& h,
                                                            int cap = kDefaultDeskCap);

}  // namespace copsrobber
