#include "copsrobber/transforms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "copsrobber/metrics.hpp"

namespace copsrobber {

std::string origin_kind_name(Origin::Kind kind) {
  switch (kind) {
    case Origin::Kind::kVertex: return "vertex";
    case Origin::Kind::kCliqueSlot: return "clique-slot";
    case Origin::Kind::kSubdivision: return "subdivision";
    case Origin::Kind::kJoinPath: return "join-path";
  }
  return "unknown";
}

TransformResult clique_substitution(const Graph& g) {
  std::map<std::pair<Vertex, Vertex>, int> slot;
  TransformResult out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0)
      throw std::invalid_argument("clique substitution: vertex " + std::to_string(v) +
                                  " is isolated; strip isolated vertices first");
    for (Vertex u : g.neighbors(v)) {
      slot[{v, u}] = static_cast<int>(out.origin_map.size());
      out.origin_map.push_back({Origin::Kind::kCliqueSlot, v, u, 0});
    }
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) edges.emplace_back(slot[{v, nb[i]}], slot[{v, nb[j]}]);
  }
  for (auto [u, v] : g.edges()) edges.emplace_back(slot[{u, v}], slot[{v, u}]);
  out.output = Graph(static_cast<int>(out.origin_map.size()), std::move(edges));
  return out;
}

TransformResult subdivide(const Graph& g, int r) {
  if (r < 0) throw std::invalid_argument("subdivide: r must be >= 0");
  TransformResult out;
  for (Vertex v = 0; v < g.order(); ++v) out.origin_map.push_back({Origin::Kind::kVertex, v, -1, 0});
  std::vector<Edge> edges;
  int next = g.order();
  for (auto [u, v] : g.edges()) {
    Vertex prev = u;
    for (int i = 1; i <= r; ++i) {
      out.origin_map.push_back({Origin::Kind::kSubdivision, u, v, i});
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, v);
  }
  out.output = Graph(next, std::move(edges));
  return out;
}

TransformResult hat_construction(const Graph& g) {
  const int n = g.order();
  const int internal = 2 * n - 1;
  TransformResult out;
  for (Vertex v = 0; v < n; ++v) out.origin_map.push_back({Origin::Kind::kVertex, v, -1, 0});
  std::vector<Edge> edges = g.edges();
  int next = n;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      Vertex prev = u;
      for (int i = 1; i <= internal; ++i) {
        out.origin_map.push_back({Origin::Kind::kJoinPath, u, v, i});
        edges.emplace_back(prev, next);
        prev = next++;
      }
      edges.emplace_back(prev, v);
    }
  out.output = Graph(next, std::move(edges));
  return out;
}

GirthLift girth_lift(const Graph& g, int target_girth) {
  if (target_girth < 3) throw std::invalid_argument("girth_lift: target girth must be >= 3");
  CycleLength current = girth(g);
  if (current.is_infinite()) throw std::invalid_argument("girth_lift: graph is acyclic, nothing to lift");
  int gv = current.value();
  int r = gv >= target_girth ? 0 : (target_girth + gv - 1) / gv - 1;
  GirthLift lift{r, subdivide(g, r)};
  CycleLength measured = girth(lift.result.output);
  if (measured.is_infinite() || measured.value() < target_girth)
    throw std::logic_error("girth_lift: measured girth below target");
  return lift;
}

}  // namespace copsrobber
