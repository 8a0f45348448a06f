#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace copsrobber {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Raised for malformed graph documents; the message names the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  /// For documents without line structure (JSON); line() is 0.
  explicit ParseError(const std::string& what) : std::runtime_error(what), line_(0) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Raised when an exhaustive computation is asked to run past its size cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string cap_name, long long limit, long long requested)
      : std::runtime_error("instance too large: " + cap_name + " cap " + std::to_string(limit) +
                           ", requested " + std::to_string(requested)),
        cap_(std::move(cap_name)), limit_(limit), requested_(requested) {}
  const std::string& cap() const { return cap_; }
  long long limit() const { return limit_; }
  long long requested() const { return requested_; }

 private:
  std::string cap_;
  long long limit_;
  long long requested_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are sorted ascending and every search downstream walks them
/// in that order, which is what makes "some path / some embedding" answers
/// deterministic.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on loops, duplicates or out-of-range ids.
  Graph(int n, std::vector<Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;
  bool valid(Vertex v) const { return v >= 0 && v < order(); }

  /// Subgraph induced by `keep` (any order); vertex i of the result is keep[i].
  Graph induced(const std::vector<Vertex>& keep) const;

  bool operator==(const Graph& other) const { return edges_ == other.edges_ && order() == other.order(); }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;  // u < v, sorted
};

/// Parses the edge-list document: '#' comments, "n m", then m lines "u v".
Graph parse_graph(std::string_view text);
/// Canonical edge-list rendering; parse_graph(render_graph(g)) == g.
std::string render_graph(const Graph& g);
std::string render_dot(const Graph& g, std::string_view name = "G");
/// FNV-1a over the canonical rendering, hex encoded.
std::string graph_hash(const Graph& g);

constexpr int kUnreachable = -1;

/// Hop distance, or kUnreachable.
int distance(const Graph& g, Vertex u, Vertex v);
/// BFS distances from `source`; kUnreachable for other components.
std::vector<int> bfs_distances(const Graph& g, Vertex source);
/// All-pairs hop distances.
std::vector<std::vector<int>> all_distances(const Graph& g);
/// Lexicographically least shortest path from u to v (inclusive), empty if unreachable.
std::vector<Vertex> shortest_path(const Graph& g, Vertex u, Vertex v);
std::vector<Vertex> shortest_path(const std::vector<std::vector<int>>& dist, const Graph& g, Vertex u,
                                  Vertex v);
/// Components as ascending vertex lists, ordered by their least vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);
/// Component of `g - removed` containing `start` (empty if start is removed).
std::vector<Vertex> component_avoiding(const Graph& g, Vertex start, const std::vector<bool>& removed);
bool is_bipartite(const Graph& g);
bool is_forest(const Graph& g);

}  // namespace copsrobber
