#include "copsrobber/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <sstream>

namespace copsrobber {

Graph::Graph(int n, std::vector<Edge> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.assign(n, {});
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) + "," +
                                std::to_string(dup->second) + ")");
  for (auto [u, v] : edges) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  edges_ = std::move(edges);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::induced(const std::vector<Vertex>& keep) const {
  std::vector<int> index(order(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) index.at(keep[i]) = i;
  std::vector<Edge> out;
  for (auto [u, v] : edges_)
    if (index[u] >= 0 && index[v] >= 0) out.emplace_back(index[u], index[v]);
  return Graph(static_cast<int>(keep.size()), std::move(out));
}

namespace {

std::vector<long long> read_ints(std::string_view line, int lineno) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    if (line[j] == '-' || line[j] == '+') ++j;
    std::size_t digits = j;
    while (j < line.size() && line[j] >= '0' && line[j] <= '9') ++j;
    if (j == digits || (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r'))
      throw ParseError(lineno, "expected integers, got '" + std::string(line) + "'");
    try {
      out.push_back(std::stoll(std::string(line.substr(i, j - i))));
    } catch (const std::out_of_range&) {
      throw ParseError(lineno, "integer out of range");
    }
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  int lineno = 0;
  std::optional<std::pair<long long, long long>> header;
  std::vector<Edge> edges;
  std::vector<std::pair<Edge, int>> seen;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    auto nums = read_ints(line, lineno);
    if (nums.size() != 2) throw ParseError(lineno, "expected exactly two integers");
    if (!header) {
      if (nums[0] < 0 || nums[1] < 0) throw ParseError(lineno, "negative header value");
      if (nums[0] > 1'000'000) throw ParseError(lineno, "vertex count too large");
      header = std::make_pair(nums[0], nums[1]);
    } else {
      long long n = header->first;
      auto [u, v] = std::make_pair(nums[0], nums[1]);
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw ParseError(lineno, "vertex out of range 0.." + std::to_string(n - 1));
      if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
      Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
      seen.emplace_back(e, lineno);
      edges.push_back(e);
      if (static_cast<long long>(edges.size()) > header->second)
        throw ParseError(lineno, "more edges than declared (" + std::to_string(header->second) + ")");
    }
    if (end == text.size()) break;
  }
  if (!header) throw ParseError(lineno, "missing header line \"n m\"");
  if (static_cast<long long>(edges.size()) != header->second)
    throw ParseError(lineno, "declared " + std::to_string(header->second) + " edges, found " +
                                 std::to_string(edges.size()));
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 1; i < seen.size(); ++i)
    if (seen[i].first == seen[i - 1].first)
      throw ParseError(seen[i].second, "duplicate edge " + std::to_string(seen[i].first.first) + " " +
                                           std::to_string(seen[i].first.second));
  return Graph(static_cast<int>(header->first), std::move(edges));
}

std::string render_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string render_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << " [label=\"" << v << "\"];\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string graph_hash(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : render_graph(g)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  if (!g.valid(source)) throw std::out_of_range("invalid vertex " + std::to_string(source));
  std::vector<int> dist(g.order(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x))
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
  }
  return dist;
}

int distance(const Graph& g, Vertex u, Vertex v) {
  if (!g.valid(v)) throw std::out_of_range("invalid vertex " + std::to_string(v));
  return bfs_distances(g, u)[v];
}

std::vector<std::vector<int>> all_distances(const Graph& g) {
  std::vector<std::vector<int>> out;
  out.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out.push_back(bfs_distances(g, v));
  return out;
}

std::vector<Vertex> shortest_path(const std::vector<std::vector<int>>& dist, const Graph& g, Vertex u,
                                  Vertex v) {
  if (dist[u][v] == kUnreachable) return {};
  std::vector<Vertex> path{u};
  Vertex x = u;
  while (x != v) {
    for (Vertex y : g.neighbors(x))
      if (dist[y][v] == dist[x][v] - 1) {
        x = y;
        break;
      }
    path.push_back(x);
  }
  return path;
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex u, Vertex v) {
  if (!g.valid(u) || !g.valid(v)) throw std::out_of_range("invalid vertex");
  auto to_v = bfs_distances(g, v);
  if (to_v[u] == kUnreachable) return {};
  std::vector<Vertex> path{u};
  Vertex x = u;
  while (x != v) {
    for (Vertex y : g.neighbors(x))
      if (to_v[y] == to_v[x] - 1) {
        x = y;
        break;
      }
    path.push_back(x);
  }
  return path;
}

std::vector<Vertex> component_avoiding(const Graph& g, Vertex start, const std::vector<bool>& removed) {
  if (removed[start]) return {};
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> out{start}, stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x))
      if (!seen[y] && !removed[y]) {
        seen[y] = true;
        out.push_back(y);
        stack.push_back(y);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> done(g.order(), false);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (done[v]) continue;
    auto comp = component_avoiding(g, v, std::vector<bool>(g.order(), false));
    for (Vertex x : comp) done[x] = true;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          stack.push_back(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_forest(const Graph& g) {
  return g.size() == g.order() - static_cast<int>(components(g).size());
}

}  // namespace copsrobber
