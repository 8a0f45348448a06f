#include "copsrobber/metrics.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>

namespace copsrobber {

int CycleLength::value() const {
  if (!value_) throw std::logic_error("cycle length is infinite");
  return *value_;
}

namespace {

void check_cap(const Graph& g, int cap, const char* what) {
  if (g.order() > cap) throw CapExceeded(what, cap, g.order());
}

}  // namespace

CycleLength girth(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(g.order()), parent(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      if (2 * dist[x] + 1 >= best) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? CycleLength::infinite() : CycleLength::finite(best);
}

CycleLength circumference(const Graph& g, int cap) {
  check_cap(g, cap, "circumference");
  const int n = g.order();
  int best = 0;
  std::vector<bool> on_path(n, false);
  for (const auto& comp : components(g)) {
    const int comp_size = static_cast<int>(comp.size());
    if (comp_size < 3) continue;
    // Cycles are enumerated from their least vertex s through vertices > s.
    for (Vertex s : comp) {
      int above = static_cast<int>(comp.end() - std::lower_bound(comp.begin(), comp.end(), s));
      if (above <= best || best == comp_size) break;
      std::function<void(Vertex, int)> dfs = [&](Vertex x, int len) {
        if (best == above) return;
        for (Vertex y : g.neighbors(x)) {
          if (y == s && len >= 3) best = std::max(best, len);
          if (y <= s || on_path[y]) continue;
          on_path[y] = true;
          dfs(y, len + 1);
          on_path[y] = false;
        }
      };
      on_path[s] = true;
      dfs(s, 1);
      on_path[s] = false;
    }
  }
  return best == 0 ? CycleLength::infinite() : CycleLength::finite(best);
}

namespace {

// Extends induced paths vertex by vertex; `visit` returns true to stop the search.
// A candidate extension may touch only the current endpoint among path vertices.
void for_each_induced_path(const Graph& g, const std::function<bool(const std::vector<Vertex>&)>& visit) {
  const int n = g.order();
  std::vector<int> touch(n, 0);  // number of path vertices adjacent to or equal to v
  std::vector<Vertex> path;
  bool stop = false;
  std::function<void()> extend = [&]() {
    if (stop) return;
    if (visit(path)) {
      stop = true;
      return;
    }
    Vertex last = path.back();
    for (Vertex y : g.neighbors(last)) {
      // y is adjacent to `last`; it must not be on the path or adjacent to any other path vertex.
      if (touch[y] != 1) continue;
      path.push_back(y);
      ++touch[y];
      for (Vertex z : g.neighbors(y)) ++touch[z];
      extend();
      for (Vertex z : g.neighbors(y)) --touch[z];
      --touch[y];
      path.pop_back();
      if (stop) return;
    }
  };
  for (Vertex s = 0; s < n && !stop; ++s) {
    path = {s};
    ++touch[s];
    for (Vertex z : g.neighbors(s)) ++touch[z];
    extend();
    for (Vertex z : g.neighbors(s)) --touch[z];
    --touch[s];
  }
}

}  // namespace

int longest_induced_path(const Graph& g, int cap) {
  check_cap(g, cap, "longest_induced_path");
  int best = 0;
  for_each_induced_path(g, [&](const std::vector<Vertex>& p) {
    best = std::max(best, static_cast<int>(p.size()));
    return best == g.order();
  });
  return best;
}

std::optional<std::vector<Vertex>> find_induced_path(const Graph& g, int vertices, int cap) {
  check_cap(g, cap, "find_induced_path");
  std::optional<std::vector<Vertex>> found;
  if (vertices <= 0) return std::vector<Vertex>{};
  for_each_induced_path(g, [&](const std::vector<Vertex>& p) {
    if (static_cast<int>(p.size()) == vertices) found = p;
    return found.has_value();
  });
  return found;
}

bool is_p_free(const Graph& g, int l, int cap) {
  if (l < 1) throw std::invalid_argument("is_p_free needs l >= 1");
  return !find_induced_path(g, l, cap).has_value();
}

namespace {

// Longest induced cycle, stopping early once one of length >= stop_at is seen.
int induced_cycle_search(const Graph& g, int stop_at) {
  const int n = g.order();
  int best = 0;
  std::vector<int> touch(n, 0);
  std::vector<Vertex> path;
  std::function<bool()> extend = [&]() -> bool {
    Vertex first = path.front(), last = path.back();
    for (Vertex y : g.neighbors(last)) {
      if (y <= first) continue;
      bool closes = path.size() >= 2 && g.adjacent(y, first);
      // y may touch `last`, and `first` when it closes the cycle; nothing else.
      int allowed = 1 + (closes && path.size() >= 2 ? 1 : 0);
      if (touch[y] != allowed) continue;
      if (closes) {
        if (path.size() + 1 >= 3) {
          best = std::max(best, static_cast<int>(path.size()) + 1);
          if (best >= stop_at) return true;
        }
        continue;
      }
      path.push_back(y);
      ++touch[y];
      for (Vertex z : g.neighbors(y)) ++touch[z];
      bool done = extend();
      for (Vertex z : g.neighbors(y)) --touch[z];
      --touch[y];
      path.pop_back();
      if (done) return true;
    }
    return false;
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    ++touch[s];
    for (Vertex z : g.neighbors(s)) ++touch[z];
    bool done = extend();
    for (Vertex z : g.neighbors(s)) --touch[z];
    --touch[s];
    if (done) break;
  }
  return best;
}

}  // namespace

bool has_induced_cycle_at_least(const Graph& g, int l, int cap) {
  if (l < 3) throw std::invalid_argument("has_induced_cycle_at_least needs l >= 3");
  check_cap(g, cap, "has_induced_cycle_at_least");
  return induced_cycle_search(g, l) >= l;
}

CycleLength longest_induced_cycle(const Graph& g, int cap) {
  check_cap(g, cap, "longest_induced_cycle");
  int best = induced_cycle_search(g, std::numeric_limits<int>::max());
  return best == 0 ? CycleLength::infinite() : CycleLength::finite(best);
}

bool is_claw_free(const Graph& g) {
  for (Vertex c = 0; c < g.order(); ++c) {
    const auto& nb = g.neighbors(c);
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (g.adjacent(nb[a], nb[b])) continue;
        for (std::size_t d = b + 1; d < nb.size(); ++d)
          if (!g.adjacent(nb[a], nb[d]) && !g.adjacent(nb[b], nb[d])) return false;
      }
  }
  return true;
}

GraphMetrics metrics(const Graph& g, int cap) {
  GraphMetrics m;
  m.girth = girth(g);
  m.circumference = circumference(g, cap);
  m.longest_induced_path = longest_induced_path(g, cap);
  m.component_count = static_cast<int>(components(g).size());
  return m;
}

}  // namespace copsrobber
