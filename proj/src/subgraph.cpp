#include "copsrobber/subgraph.hpp"

#include <algorithm>
#include <functional>

#include "copsrobber/generators.hpp"

namespace copsrobber {

ForestPattern::ForestPattern(Graph forest) : graph_(std::move(forest)) {
  if (!is_forest(graph_)) throw std::invalid_argument("pattern is not a forest");
  for (auto& comp : copsrobber::components(graph_)) {
    PatternComponent pc;
    pc.vertices = comp;
    int deg3 = 0;
    for (Vertex v : comp) {
      if (graph_.degree(v) <= 1) ++pc.leaf_count;
      if (graph_.degree(v) >= 3) {
        ++deg3;
        if (!pc.center) pc.center = v;
      }
    }
    // Two branch vertices or a degree-4 vertex already force >= 4 leaves; no single center then.
    if (deg3 > 1 || (pc.center && graph_.degree(*pc.center) > 3)) pc.center.reset();
    if (pc.center) {
      auto d = bfs_distances(graph_, *pc.center);
      for (Vertex v : comp) pc.radius = std::max(pc.radius, d[v]);
    }
    components_.push_back(std::move(pc));
  }
}

bool ForestPattern::has_few_leaves() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const PatternComponent& c) { return c.leaf_count <= 3; });
}

ForestPattern ForestPattern::restricted(const std::vector<int>& keep) const {
  std::vector<Vertex> vertices;
  for (int i : keep) {
    const auto& c = components_.at(i).vertices;
    vertices.insert(vertices.end(), c.begin(), c.end());
  }
  std::sort(vertices.begin(), vertices.end());
  return ForestPattern(graph_.induced(vertices));
}

ForestPattern claw_pattern() { return ForestPattern(gen::star(3)); }

std::optional<std::vector<Vertex>> contains_forest_subgraph(const Graph& g, const ForestPattern& h, int cap) {
  if (g.order() > cap) throw CapExceeded("contains_forest_subgraph", cap, g.order());
  const Graph& pattern = h.underlying();
  const int k = pattern.order();
  if (k > g.order()) return std::nullopt;
  std::vector<Vertex> image(k, -1);
  std::vector<bool> used(g.order(), false);
  // Pattern vertices are assigned in id order, so the first success is lexicographically least.
  std::function<bool(int)> assign = [&](int i) -> bool {
    if (i == k) return true;
    std::vector<Vertex> anchors;
    for (Vertex w : pattern.neighbors(i))
      if (w < i) anchors.push_back(image[w]);
    auto try_candidate = [&](Vertex c) {
      if (used[c] || g.degree(c) < pattern.degree(i)) return false;
      for (Vertex a : anchors)
        if (!g.adjacent(a, c)) return false;
      image[i] = c;
      used[c] = true;
      if (assign(i + 1)) return true;
      used[c] = false;
      image[i] = -1;
      return false;
    };
    if (!anchors.empty()) {
      for (Vertex c : g.neighbors(anchors.front()))
        if (try_candidate(c)) return true;
    } else {
      for (Vertex c = 0; c < g.order(); ++c)
        if (try_candidate(c)) return true;
    }
    return false;
  };
  if (assign(0)) return image;
  return std::nullopt;
}

}  // namespace copsrobber
