#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "copsrobber/graph.hpp"

namespace copsrobber::gen {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
/// K_{1,k}, center 0.
Graph star(int k);
Graph petersen();
/// Tree with center 0 and one leg per entry, leg i having legs[i] edges.
Graph spider(const std::vector<int>& legs);
/// G(n, p) drawn from a 64-bit Mersenne twister; a pure function of (n, p, seed).
Graph gnp(int n, double p, std::uint64_t seed);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Named-family dispatch used by the CLI and corpus files, e.g.
/// generate("cycle", {{"n","5"}}) or generate("spider", {{"legs","2,2,2"}}).
/// Throws std::invalid_argument for unknown families or bad parameters.
Graph generate(const std::string& family, const std::map<std::string, std::string>& params);
std::vector<std::string> families();

}  // namespace copsrobber::gen
