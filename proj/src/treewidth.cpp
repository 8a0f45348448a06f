#include "copsrobber/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

namespace copsrobber {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

DecompositionCheck validate_decomposition(const Graph& g, const TreeDecomposition& d) {
  DecompositionCheck out;
  auto fail = [&](DecompositionCheck::Violation v, std::vector<Vertex> witness, std::string msg) {
    out.violation = v;
    out.witness = std::move(witness);
    out.message = std::move(msg);
    return out;
  };
  const int nodes = d.tree.order();
  if (nodes == 0 || static_cast<int>(d.bags.size()) != nodes)
    return fail(DecompositionCheck::Violation::kTreeShape, {}, "bag count does not match tree node count");
  if (!is_connected(d.tree) || d.tree.size() != nodes - 1)
    return fail(DecompositionCheck::Violation::kTreeShape, {}, "decomposition tree is not a tree");
  std::vector<std::vector<int>> holders(g.order());
  for (int x = 0; x < nodes; ++x)
    for (Vertex v : d.bags[x]) {
      if (!g.valid(v))
        return fail(DecompositionCheck::Violation::kVertexCoverage, {v},
                    "bag " + std::to_string(x) + " holds unknown vertex " + std::to_string(v));
      holders[v].push_back(x);
    }
  for (Vertex v = 0; v < g.order(); ++v)
    if (holders[v].empty())
      return fail(DecompositionCheck::Violation::kVertexCoverage, {v},
                  "vertex " + std::to_string(v) + " is in no bag");
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int x : holders[u])
      if (std::binary_search(d.bags[x].begin(), d.bags[x].end(), v) ||
          std::find(d.bags[x].begin(), d.bags[x].end(), v) != d.bags[x].end()) {
        covered = true;
        break;
      }
    if (!covered)
      return fail(DecompositionCheck::Violation::kEdgeCoverage, {u, v},
                  "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag");
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<bool> removed(nodes, true);
    for (int x : holders[v]) removed[x] = false;
    if (component_avoiding(d.tree, holders[v].front(), removed).size() !=
        std::set<int>(holders[v].begin(), holders[v].end()).size())
      return fail(DecompositionCheck::Violation::kSubtree, {v},
                  "bags holding vertex " + std::to_string(v) + " are not connected in the tree");
  }
  return out;
}

namespace {

void check_permutation(const Graph& g, const std::vector<Vertex>& order) {
  if (static_cast<int>(order.size()) != g.order())
    throw std::invalid_argument("elimination order is not a permutation");
  std::vector<bool> seen(g.order(), false);
  for (Vertex v : order) {
    if (!g.valid(v) || seen[v]) throw std::invalid_argument("elimination order is not a permutation");
    seen[v] = true;
  }
}

// Later filled-graph neighbors of every vertex when eliminating in `order`.
std::vector<std::set<Vertex>> fill_in(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.order();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<std::set<Vertex>> higher(n);
  for (auto [u, v] : g.edges()) {
    if (pos[u] < pos[v]) higher[u].insert(v);
    else higher[v].insert(u);
  }
  for (Vertex v : order) {
    // Eliminating v makes its later neighbors a clique; each edge lands on its earlier end.
    std::vector<Vertex> later(higher[v].begin(), higher[v].end());
    for (std::size_t i = 0; i < later.size(); ++i)
      for (std::size_t j = i + 1; j < later.size(); ++j) {
        Vertex a = later[i], b = later[j];
        if (pos[a] < pos[b]) higher[a].insert(b);
        else higher[b].insert(a);
      }
  }
  return higher;
}

}  // namespace

int elimination_width(const Graph& g, const std::vector<Vertex>& order) {
  check_permutation(g, order);
  int w = g.order() > 0 ? 0 : -1;
  for (const auto& later : fill_in(g, order)) w = std::max(w, static_cast<int>(later.size()));
  return w;
}

TreeDecomposition decomposition_from_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
  check_permutation(g, order);
  const int n = g.order();
  if (n == 0) return {Graph(1, {}), {{}}};
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  auto higher = fill_in(g, order);
  TreeDecomposition d;
  std::vector<Edge> tree_edges;
  int previous_root = -1;
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    std::vector<Vertex> bag(higher[v].begin(), higher[v].end());
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    d.bags.push_back(std::move(bag));
    if (higher[v].empty()) {
      if (previous_root >= 0) tree_edges.emplace_back(previous_root, i);
      previous_root = i;
    } else {
      int parent = n;
      for (Vertex w : higher[v]) parent = std::min(parent, pos[w]);
      tree_edges.emplace_back(i, parent);
    }
  }
  d.tree = Graph(n, std::move(tree_edges));
  return d;
}

namespace {

// Optimal elimination order of one connected component (vertex ids local to it).
std::vector<int> optimal_order(const Graph& comp) {
  const int n = comp.order();
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : comp.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  // q(S, v): vertices outside S + v reachable from v through S.
  auto q = [&](std::uint32_t s, int v) {
    std::uint32_t self = 1u << v;
    std::uint32_t reach = adj[v];
    std::uint32_t inner = reach & s;
    std::uint32_t frontier = inner;
    while (frontier) {
      int x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint32_t nb = adj[x];
      reach |= nb;
      std::uint32_t fresh = nb & s & ~inner & ~self;
      inner |= fresh;
      frontier |= fresh;
    }
    return std::popcount(reach & ~s & ~self);
  };
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  // best[S] = least achievable max q over eliminating everything outside S, S already gone.
  std::vector<std::uint8_t> best(std::size_t(full) + 1, 0);
  for (std::uint32_t s = full; s-- > 0;) {
    int value = 255;
    std::uint32_t rest = full & ~s;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      int cand = std::max<int>(best[s | (1u << v)], 0);
      if (cand >= value) continue;
      cand = std::max(cand, q(s, v));
      value = std::min(value, cand);
    }
    best[s] = static_cast<std::uint8_t>(value);
  }
  std::vector<int> order;
  std::uint32_t s = 0;
  while (s != full) {
    for (int v = 0; v < n; ++v) {
      if (s & (1u << v)) continue;
      if (std::max<int>(q(s, v), best[s | (1u << v)]) == best[s]) {
        order.push_back(v);
        s |= 1u << v;
        break;
      }
    }
  }
  return order;
}

}  // namespace

ExactTreewidth exact_treewidth(const Graph& g, int cap) {
  ExactTreewidth out;
  out.width = g.order() > 0 ? 0 : -1;
  for (const auto& comp : components(g)) {
    // The subset table has 2^|component| entries; 26 is a hard memory ceiling.
    const int limit = std::min(cap, 26);
    if (static_cast<int>(comp.size()) > limit)
      throw CapExceeded("treewidth", limit, static_cast<long long>(comp.size()));
    Graph sub = g.induced(comp);
    for (int local : optimal_order(sub)) out.order.push_back(comp[local]);
  }
  out.decomposition = decomposition_from_elimination_order(g, out.order);
  out.width = std::max(out.width, out.decomposition.width());
  return out;
}

}  // namespace copsrobber
