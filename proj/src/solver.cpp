#include "copsrobber/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace copsrobber {

namespace {

// Calls f(cops) for every sorted k-multiset over 0..n-1 in lexicographic order.
template <class F>
void for_each_multiset(int n, int k, F&& f) {
  std::vector<Vertex> cur(k, 0);
  while (true) {
    f(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - 1) --i;
    if (i < 0) return;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[i];
  }
}

bool holds(const std::vector<Vertex>& cops, Vertex v) { return std::find(cops.begin(), cops.end(), v) != cops.end(); }

}  // namespace

std::int64_t SolveTable::multiset_rank(std::vector<Vertex> cops) const {
  std::sort(cops.begin(), cops.end());
  std::int64_t r = 0;
  for (int i = 0; i < k_; ++i) r += binom_[cops[i] + i][i + 1];
  return r;
}

SolveTable SolveTable::solve(const Graph& g, int k, long long state_cap) {
  if (k < 1) throw std::invalid_argument("solve: k must be >= 1");
  if (g.order() == 0 || !is_connected(g)) throw std::invalid_argument("solve: graph must be connected and non-empty");
  const int n = g.order();
  long long states = state_space_size(n, k);
  if (states > state_cap) throw CapExceeded("state", state_cap, states);

  SolveTable t;
  t.graph_ = g;
  t.k_ = k;
  t.binom_.assign(n + k + 1, std::vector<std::int64_t>(k + 2, 0));
  for (int i = 0; i <= n + k; ++i) {
    t.binom_[i][0] = 1;
    for (int j = 1; j <= std::min(i, k + 1); ++j) t.binom_[i][j] = t.binom_[i - 1][j - 1] + t.binom_[i - 1][j];
  }
  const std::int64_t multisets = t.binom_[n + k - 1][k];

  std::vector<Vertex> flat(multisets * k);
  for_each_multiset(n, k, [&](const std::vector<Vertex>& c) {
    std::copy(c.begin(), c.end(), flat.begin() + t.multiset_rank(c) * k);
  });
  auto cops_of = [&](std::int64_t m) {
    return std::vector<Vertex>(flat.begin() + m * k, flat.begin() + (m + 1) * k);
  };
  // Multisets reachable by one joint move; the relation is symmetric, so these
  // are also the predecessors.
  std::vector<std::vector<Vertex>> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = g.neighbors(v);
    closed[v].push_back(v);
  }
  std::vector<std::int64_t> moves;
  // Built one cop at a time with duplicates dropped per layer; distinct
  // successors are far fewer than the (deg+1)^k joint choices. Partial
  // multisets are packed one byte per cop, ascending from the low byte.
  const bool packable = n <= 255 && k <= 8;
  std::vector<std::uint64_t> packed, packed_next;
  // Per-layer stamps indexed by the rank of the partial multiset.
  std::vector<std::vector<std::uint32_t>> stamp(k + 1);
  std::uint32_t epoch = 0;
  if (packable)
    for (int i = 1; i <= k; ++i) stamp[i].assign(t.binom_[n + i - 1][i], 0);
  std::vector<std::vector<Vertex>> layer, grown;
  auto multiset_moves = [&](const std::vector<Vertex>& c) {
    moves.clear();
    if (packable) {
      ++epoch;
      packed.assign(1, 0);
      for (int i = 0; i < k; ++i) {
        packed_next.clear();
        auto& seen = stamp[i + 1];
        for (std::uint64_t p : packed)
          for (Vertex v : closed[c[i]]) {
            int pos = 0;
            while (pos < i && static_cast<Vertex>(p >> (8 * pos) & 0xff) <= v) ++pos;
            const std::uint64_t low = pos == 0 ? 0 : p & (~std::uint64_t{0} >> (64 - 8 * pos));
            const std::uint64_t high = pos >= 8 ? 0 : p >> (8 * pos) << (8 * pos + 8);
            const std::uint64_t q = low | std::uint64_t(v) << (8 * pos) | high;
            std::int64_t r = 0;
            for (int j = 0; j <= i; ++j) r += t.binom_[(q >> (8 * j) & 0xff) + j][j + 1];
            if (seen[r] == epoch) continue;
            seen[r] = epoch;
            if (i + 1 == k)
              moves.push_back(r);
            else
              packed_next.push_back(q);
          }
        std::swap(packed, packed_next);
      }
      return;
    }
    layer.assign(1, {});
    for (int i = 0; i < k; ++i) {
      grown.clear();
      for (const auto& p : layer)
        for (Vertex v : closed[c[i]]) {
          auto q = p;
          q.insert(std::upper_bound(q.begin(), q.end(), v), v);
          grown.push_back(std::move(q));
        }
      std::sort(grown.begin(), grown.end());
      grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
      std::swap(layer, grown);
    }
    for (const auto& p : layer) moves.push_back(t.multiset_rank(p));
  };
  // Each multiset is expanded once per robber vertex, so keep successor lists
  // while they fit in a fixed budget.
  constexpr std::size_t kMemoBudget = 16'000'000;
  std::size_t memo_used = 0;
  std::vector<std::vector<std::int32_t>> memo(multisets);
  std::vector<char> memoized(multisets, 0);
  auto successors = [&](std::int64_t m) -> const std::vector<std::int64_t>& {
    if (memoized[m]) {
      moves.assign(memo[m].begin(), memo[m].end());
      return moves;
    }
    multiset_moves(cops_of(m));
    if (memo_used + moves.size() <= kMemoBudget) {
      memo[m].assign(moves.begin(), moves.end());
      memo_used += moves.size();
      memoized[m] = 1;
    }
    return moves;
  };

  t.rank_.assign(multisets * n * 2, -1);
  std::vector<std::int32_t> pending(multisets * n);  // robber-to-move: options not yet known to lose
  std::vector<std::int64_t> queue;
  for (std::int64_t m = 0; m < multisets; ++m) {
    auto c = cops_of(m);
    for (Vertex r = 0; r < n; ++r) {
      pending[m * n + r] = g.degree(r) + 1;
      if (holds(c, r)) {
        for (int side = 0; side < 2; ++side) {
          t.rank_[t.index(m, r, side)] = 0;
          queue.push_back(t.index(m, r, side));
        }
      }
    }
  }

  // Level-synchronous so that robber-side states sharing a multiset are
  // expanded together; every state found in a level gets the same rank.
  std::vector<std::int64_t> level(queue.begin(), queue.end()), found;
  queue.clear();
  std::int32_t next = 1;
  while (!level.empty()) {
    found.clear();
    std::sort(level.begin(), level.end());
    for (std::size_t i = 0; i < level.size();) {
      const std::int64_t m = level[i] / 2 / n;
      std::size_t j = i;
      while (j < level.size() && level[j] / 2 / n == m) ++j;
      bool any_robber_side = false;
      for (std::size_t x = i; x < j; ++x) any_robber_side |= level[x] % 2 == 1;
      if (any_robber_side) {
        // Cops to move from (C', r) can reach these states.
        const auto& succ = successors(m);
        for (std::size_t x = i; x < j; ++x) {
          if (level[x] % 2 == 0) continue;
          const Vertex r = static_cast<Vertex>((level[x] / 2) % n);
          for (std::int64_t pm : succ) {
            std::int64_t p = t.index(pm, r, 0);
            if (t.rank_[p] == -1) {
              t.rank_[p] = next;
              found.push_back(p);
            }
          }
        }
      }
      for (std::size_t x = i; x < j; ++x) {
        if (level[x] % 2 == 1) continue;
        // Robber to move from (C, r') with r' in N[r].
        const Vertex r = static_cast<Vertex>((level[x] / 2) % n);
        for (Vertex rp : closed[r]) {
          std::int64_t p = t.index(m, rp, 1);
          if (t.rank_[p] == -1 && --pending[m * n + rp] == 0) {
            t.rank_[p] = next;
            found.push_back(p);
          }
        }
      }
      i = j;
    }
    std::swap(level, found);
    ++next;
  }

  t.cop_win_ = t.placement_value(t.best_placement()) >= 0;
  return t;
}

int SolveTable::rank(std::vector<Vertex> cops, Vertex robber, bool cops_to_move) const {
  if (static_cast<int>(cops.size()) != k_) throw std::invalid_argument("rank: wrong number of cops");
  return rank_[index(multiset_rank(std::move(cops)), robber, cops_to_move ? 0 : 1)];
}

int SolveTable::placement_value(const std::vector<Vertex>& cops) const {
  int worst = 0;
  for (Vertex r = 0; r < graph_.order(); ++r) {
    int v = rank(cops, r, true);
    if (v < 0) return -1;
    worst = std::max(worst, v);
  }
  return worst;
}

std::vector<Vertex> SolveTable::best_placement() const {
  std::vector<Vertex> best(k_, 0);
  int best_value = -1;
  for_each_multiset(graph_.order(), k_, [&](const std::vector<Vertex>& c) {
    int v = placement_value(c);
    if (v >= 0 && (best_value < 0 || v < best_value)) best = c, best_value = v;
  });
  return best;
}

std::vector<Vertex> SolveTable::best_cop_move(const std::vector<Vertex>& cops, Vertex robber) const {
  auto options = joint_moves(graph_, cops);
  std::size_t best = 0;
  int best_value = -1;
  for (std::size_t i = 0; i < options.size(); ++i) {
    int v = rank(options[i], robber, false);
    if (v >= 0 && (best_value < 0 || v < best_value)) best = i, best_value = v;
  }
  return options[best];
}

Vertex SolveTable::best_robber_placement(const std::vector<Vertex>& cops) const {
  Vertex best = kNoVertex;
  int best_value = -2;
  for (Vertex r = 0; r < graph_.order(); ++r) {
    if (holds(cops, r)) continue;
    int v = rank(cops, r, true);
    if (v < 0) return r;
    if (v > best_value) best = r, best_value = v;
  }
  return best == kNoVertex ? 0 : best;
}

Vertex SolveTable::best_robber_move(const std::vector<Vertex>& cops, Vertex robber) const {
  std::vector<Vertex> options = graph_.neighbors(robber);
  options.insert(std::lower_bound(options.begin(), options.end(), robber), robber);
  Vertex best = robber;
  int best_value = -2;
  for (Vertex r : options) {
    int v = rank(cops, r, true);
    if (v < 0) return r;
    if (v > best_value) best = r, best_value = v;
  }
  return best;
}

int connected_cop_number(const Graph& g, long long state_cap) {
  const int n = g.order();
  for (int k = 1;; ++k) {
    if (k >= n) return k;
    if (SolveTable::solve(g, k, state_cap).cop_win()) return k;
  }
}

namespace {

template <class F>
void per_component(const Graph& g, F&& f) {
  for (const auto& comp : components(g)) {
    try {
      f(g.induced(comp));
    } catch (const CapExceeded& e) {
      throw CapExceeded("state (component of vertex " + std::to_string(comp.front()) + ", " +
                            std::to_string(comp.size()) + " vertices)",
                        e.limit(), e.requested());
    }
  }
}

}  // namespace

int cop_number(const Graph& g, long long state_cap) {
  int best = g.order() == 0 ? 0 : 1;
  per_component(g, [&](const Graph& c) { best = std::max(best, connected_cop_number(c, state_cap)); });
  return best;
}

bool cop_win(const Graph& g, int k, long long state_cap) {
  bool all = true;
  per_component(g, [&](const Graph& c) {
    if (all && k < c.order()) all = SolveTable::solve(c, k, state_cap).cop_win();
  });
  return all;
}

bool is_cop_win_dismantlable(const Graph& g) {
  const int n = g.order();
  std::vector<bool> alive(n, true);
  int left = n;
  auto dominated = [&](Vertex v, Vertex u) {
    // N[v] inside N[u], restricted to live vertices.
    if (!g.adjacent(u, v)) return false;
    for (Vertex w : g.neighbors(v))
      if (alive[w] && w != u && !g.adjacent(u, w)) return false;
    return true;
  };
  bool progress = true;
  while (left > 1 && progress) {
    progress = false;
    for (Vertex v = 0; v < n && !progress; ++v) {
      if (!alive[v]) continue;
      for (Vertex u : g.neighbors(v))
        if (alive[u] && dominated(v, u)) {
          alive[v] = false;
          --left;
          progress = true;
          break;
        }
    }
  }
  return left <= 1;
}

namespace {

class OptimalCop : public CopStrategy {
 public:
  explicit OptimalCop(std::shared_ptr<const SolveTable> t) : table_(std::move(t)) {}
  std::string name() const override { return "optimal"; }
  std::vector<Vertex> place(const Graph& g, int k) override {
    if (k != table_->k() || !(g == table_->graph())) throw std::invalid_argument("optimal cop: table solved for another game");
    if (!table_->cop_win()) throw StrategyRefusal("no winning strategy for " + std::to_string(k) + " cops");
    return table_->best_placement();
  }
  std::vector<Vertex> move(const GameView& view) override { return table_->best_cop_move(view.cops(), view.robber()); }

 private:
  std::shared_ptr<const SolveTable> table_;
};

class OptimalRobber : public RobberStrategy {
 public:
  explicit OptimalRobber(std::shared_ptr<const SolveTable> t) : table_(std::move(t)) {}
  std::string name() const override { return "optimal"; }
  Vertex place(const GameView& view) override {
    if (view.k != table_->k() || !(view.graph == table_->graph()))
      throw std::invalid_argument("optimal robber: table solved for another game");
    return table_->best_robber_placement(view.cops());
  }
  Vertex move(const GameView& view) override { return table_->best_robber_move(view.cops(), view.robber()); }

 private:
  std::shared_ptr<const SolveTable> table_;
};

}  // namespace

std::unique_ptr<CopStrategy> make_optimal_cop(std::shared_ptr<const SolveTable> table) {
  return std::make_unique<OptimalCop>(std::move(table));
}
std::unique_ptr<RobberStrategy> make_optimal_robber(std::shared_ptr<const SolveTable> table) {
  return std::make_unique<OptimalRobber>(std::move(table));
}

}  // namespace copsrobber
