#pragma once

#include <string>
#include <vector>

#include "copsrobber/graph.hpp"

namespace copsrobber {

/// A tree plus one bag of graph vertices per tree node.
struct TreeDecomposition {
  Graph tree;
  std::vector<std::vector<Vertex>> bags;  // ascending vertex lists, one per tree node

  /// max bag size - 1 (-1 when every bag is empty).
  int width() const;
};

struct DecompositionCheck {
  enum class Violation { kNone, kTreeShape, kVertexCoverage, kEdgeCoverage, kSubtree };
  Violation violation = Violation::kNone;
  std::vector<Vertex> witness;  // the uncovered vertex, the uncovered edge, or the split vertex
  std::string message;

  bool valid() const { return violation == Violation::kNone; }
};

/// Checks the three decomposition axioms (plus that the tree is a tree) and
/// reports the first violation with a witness. Never throws.
DecompositionCheck validate_decomposition(const Graph& g, const TreeDecomposition& d);

/// Bags {v} + later filled-graph neighbors; parent = earliest later neighbor.
/// Component roots are chained into one tree. Throws std::invalid_argument if
/// `order` is not a permutation of V(G).
TreeDecomposition decomposition_from_elimination_order(const Graph& g, const std::vector<Vertex>& order);

/// Width of the elimination order (largest later-neighbor set at elimination time).
int elimination_width(const Graph& g, const std::vector<Vertex>& order);

constexpr int kDefaultTreewidthCap = 20;

struct ExactTreewidth {
  int width = 0;
  std::vector<Vertex> order;  // lexicographically least optimal elimination order
  TreeDecomposition decomposition;
};

/// Exact treewidth by dynamic programming over sets of eliminated vertices,
/// component by component. Throws CapExceeded when a component is larger than `cap`.
ExactTreewidth exact_treewidth(const Graph& g, int cap = kDefaultTreewidthCap);

}  // namespace copsrobber
