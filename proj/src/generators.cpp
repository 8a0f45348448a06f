#include "copsrobber/generators.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace copsrobber::gen {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete(int n) {
  require(n >= 1, "complete needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete_bipartite needs both sides >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, e);
}

Graph star(int k) {
  require(k >= 0, "star needs k >= 0");
  std::vector<Edge> e;
  for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
  return Graph(k + 1, e);
}

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, e);
}

Graph spider(const std::vector<int>& legs) {
  std::vector<Edge> e;
  int next = 1;
  for (int len : legs) {
    require(len >= 1, "spider leg lengths must be >= 1");
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(next, e);
}

Graph gnp(int n, double p, std::uint64_t seed) {
  require(n >= 1, "gnp needs n >= 1");
  require(p >= 0.0 && p <= 1.0, "gnp needs 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // 53-bit uniform in [0,1); independent of the library's distribution code.
      double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) e.emplace_back(i, j);
    }
  return Graph(n, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), e);
}

namespace {

int int_param(const std::map<std::string, std::string>& params, const std::string& key) {
  auto it = params.find(key);
  require(it != params.end(), "missing parameter '" + key + "'");
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(it->second, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == it->second.size() && used > 0, "parameter '" + key + "' must be an integer");
  return value;
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(used == item.size() && used > 0, "bad list entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<std::string> families() {
  return {"path", "cycle", "complete", "complete-bipartite", "star", "petersen", "spider", "gnp"};
}

Graph generate(const std::string& family, const std::map<std::string, std::string>& params) {
  if (family == "path") return path(int_param(params, "n"));
  if (family == "cycle") return cycle(int_param(params, "n"));
  if (family == "complete") return complete(int_param(params, "n"));
  if (family == "complete-bipartite") return complete_bipartite(int_param(params, "a"), int_param(params, "b"));
  if (family == "star") return star(int_param(params, "k"));
  if (family == "petersen") return petersen();
  if (family == "spider") {
    auto it = params.find("legs");
    require(it != params.end(), "missing parameter 'legs'");
    return spider(int_list(it->second));
  }
  if (family == "gnp") {
    auto it = params.find("p");
    require(it != params.end(), "missing parameter 'p'");
    double p = 0;
    std::size_t used = 0;
    try {
      p = std::stod(it->second, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(used == it->second.size() && used > 0, "parameter 'p' must be a number");
    auto seed = params.count("seed") ? static_cast<std::uint64_t>(std::stoull(params.at("seed"))) : 0;
    return gnp(int_param(params, "n"), p, seed);
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

}  // namespace copsrobber::gen
