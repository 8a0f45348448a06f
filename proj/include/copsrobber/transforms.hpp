#pragma once

#include <string>
#include <vector>

#include "copsrobber/graph.hpp"

namespace copsrobber {

/// Where an output vertex of a transform came from.
struct Origin {
  enum class Kind {
    kVertex,       // surviving input vertex `a`
    kCliqueSlot,   // clique substitution vertex (a, b): the slot of a facing neighbor b
    kSubdivision,  // internal vertex `position` (1-based from a) on input edge a-b
    kJoinPath,     // internal vertex `position` on the path joining non-adjacent a, b
  };
  Kind kind = Kind::kVertex;
  Vertex a = 0;
  Vertex b = -1;
  int position = 0;

  /// The input vertex this output vertex stands for, when there is one
  /// (vertices and clique slots); -1 for path-internal vertices.
  Vertex vertex() const { return kind == Kind::kVertex || kind == Kind::kCliqueSlot ? a : -1; }
  bool operator==(const Origin&) const = default;
};

struct TransformResult {
  Graph output;
  std::vector<Origin> origin_map;  // indexed by output vertex
};

/// G+: every vertex v becomes a clique on {v} x N(v); (v,u) ~ (u,v) across cliques.
/// Output vertices are ordered by (v, u). Throws std::invalid_argument if G has an
/// isolated vertex.
TransformResult clique_substitution(const Graph& g);

/// Replaces every edge by a path with r internal vertices. Input vertices keep
/// their ids; internal vertices follow in edge order, each run read from the
/// lower endpoint.
TransformResult subdivide(const Graph& g, int r);

/// Joins every non-adjacent pair {u, v} by a fresh path of length 2n (2n-1
/// internal vertices), n = |V(G)|.
TransformResult hat_construction(const Graph& g);

struct GirthLift {
  int r = 0;
  TransformResult result;
};

/// Least uniform subdivision reaching girth >= target. Throws std::invalid_argument
/// on acyclic input or target < 3.
GirthLift girth_lift(const Graph& g, int target_girth);

std::string origin_kind_name(Origin::Kind kind);

}  // namespace copsrobber
