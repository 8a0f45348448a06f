#include "copsrobber/strategies.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "copsrobber/generators.hpp"
#include "copsrobber/metrics.hpp"
#include "copsrobber/transforms.hpp"
#include "pursuit.hpp"

namespace copsrobber {

using detail::Arena;
using detail::Context;
using detail::Controller;

namespace {

/// Shared shell: keeps the distance table and report, lets a subclass plan the
/// move, then lets any cop next to the robber take it.
class ComposedStrategy : public InstrumentedCopStrategy {
 public:
  const StrategyReport& report() const override { return report_; }

  std::vector<Vertex> place(const Graph& g, int k) override {
    graph_ = g;
    dist_ = all_distances(g);
    return initial(g, k);
  }

  std::vector<Vertex> move(const GameView& view) override {
    const std::vector<Vertex> cops = view.cops();
    std::vector<Vertex> next = cops;
    Context ctx{graph_, dist_, cops, view.robber(), report_};
    plan(ctx, next);
    for (std::size_t i = 0; i < cops.size(); ++i) {
      if (dist_[cops[i]][ctx.robber] <= 1) {
        next[i] = ctx.robber;
        break;
      }
    }
    return next;
  }

 protected:
  virtual std::vector<Vertex> initial(const Graph& g, int k) = 0;
  virtual void plan(const Context& ctx, std::vector<Vertex>& next) = 0;

  void require_budget(const Graph& g, int k) const {
    if (k < budget(g))
      throw StrategyRefusal(name() + " needs " + std::to_string(budget(g)) + " cops, got " + std::to_string(k));
  }

  Graph graph_;
  detail::Distances dist_;
  StrategyReport report_;
};

std::vector<int> iota_cops(int from, int to) {
  std::vector<int> out(std::max(0, to - from));
  std::iota(out.begin(), out.end(), from);
  return out;
}

class SingleFile : public ComposedStrategy {
 public:
  enum class Hypothesis { kNoInducedPath, kNoLongInducedCycle, kBipartite };
  SingleFile(int l, Hypothesis h) : l_(l), hypothesis_(h) {
    if (l < (h == Hypothesis::kBipartite ? 1 : 3)) throw std::invalid_argument("l out of range for " + name());
  }

  std::string name() const override {
    switch (hypothesis_) {
      case Hypothesis::kNoInducedPath: return "lead-cop:l=" + std::to_string(l_);
      case Hypothesis::kNoLongInducedCycle: return "induced-cycle:l=" + std::to_string(l_);
      case Hypothesis::kBipartite: return "bipartite:l=" + std::to_string(l_);
    }
    return "lead-cop";
  }
  int budget(const Graph&) const override { return hypothesis_ == Hypothesis::kBipartite ? l_ : l_ - 2; }

 protected:
  std::vector<Vertex> initial(const Graph& g, int k) override {
    switch (hypothesis_) {
      case Hypothesis::kNoInducedPath:
        if (!is_p_free(g, l_)) throw StrategyRefusal("graph has an induced path on " + std::to_string(l_) + " vertices");
        break;
      case Hypothesis::kNoLongInducedCycle:
        if (has_induced_cycle_at_least(g, l_))
          throw StrategyRefusal("graph has an induced cycle of length at least " + std::to_string(l_));
        break;
      case Hypothesis::kBipartite:
        if (!is_bipartite(g)) throw StrategyRefusal("graph is not bipartite");
        if (!is_p_free(g, 2 * l_))
          throw StrategyRefusal("graph has an induced path on " + std::to_string(2 * l_) + " vertices");
        break;
    }
    require_budget(g, k);
    const bool bip = hypothesis_ == Hypothesis::kBipartite;
    root_ = std::make_unique<detail::LeadPursuit>(Arena::whole(g), iota_cops(0, k), bip ? 2 : 1,
                                                  hypothesis_ == Hypothesis::kNoInducedPath ? l_ : 0);
    return std::vector<Vertex>(k, 0);
  }
  void plan(const Context& ctx, std::vector<Vertex>& next) override { root_->decide(ctx, next); }

 private:
  int l_;
  Hypothesis hypothesis_;
  std::unique_ptr<Controller> root_;
};

TreeDecomposition to_global(const Arena& arena, TreeDecomposition d) {
  for (auto& bag : d.bags) bag = arena.to_global(bag);
  return d;
}

class BagSweep : public ComposedStrategy {
 public:
  explicit BagSweep(TreeDecomposition d) : d_(std::move(d)) {}
  std::string name() const override { return "treedec"; }
  int budget(const Graph&) const override { return std::max(d_.width(), 0) / 2 + 1; }

 protected:
  std::vector<Vertex> initial(const Graph& g, int k) override {
    auto check = validate_decomposition(g, d_);
    if (!check.valid()) throw StrategyRefusal("invalid tree decomposition: " + check.message);
    require_budget(g, k);
    root_ = std::make_unique<detail::TreeSweep>(Arena::whole(g), iota_cops(0, k), d_);
    std::vector<Vertex> place(k, 0);
    const auto& bag = d_.bags.front();
    for (std::size_t i = 0; i < bag.size() && static_cast<int>(i / 2) < k; i += 2) place[i / 2] = bag[i];
    return place;
  }
  void plan(const Context& ctx, std::vector<Vertex>& next) override { root_->decide(ctx, next); }

 private:
  TreeDecomposition d_;
  std::unique_ptr<Controller> root_;
};

class SubdivisionPlusOne : public ComposedStrategy {
 public:
  SubdivisionPlusOne(const Graph& base, int r, long long state_cap) : base_(base), r_(r) {
    if (r < 0) throw std::invalid_argument("subdivision count must be >= 0");
    if (base.order() == 0 || !is_connected(base)) throw std::invalid_argument("base graph must be connected");
    sim_k_ = connected_cop_number(base, state_cap);
    table_ = SolveTable::solve(base, sim_k_, state_cap);
    auto t = subdivide(base, r);
    subdivided_ = t.output;
    for (Vertex v = base.order(); v < subdivided_.order(); ++v) {
      const Origin& o = t.origin_map[v];
      auto& run = edge_run_[{std::min(o.a, o.b), std::max(o.a, o.b)}];
      run.resize(r);
      run[o.a < o.b ? o.position - 1 : r - o.position] = v;
      origin_.emplace(v, o);
    }
  }
  std::string name() const override { return "subdiv+1:r=" + std::to_string(r_); }
  int budget(const Graph&) const override { return sim_k_ + 1; }

 protected:
  std::vector<Vertex> initial(const Graph& g, int k) override {
    if (!(g == subdivided_)) throw std::invalid_argument("subdiv+1 played on a graph other than the subdivision");
    require_budget(g, k);
    sim_ = table_.best_placement();
    walks_.assign(sim_k_, {});
    aux_ = std::make_unique<detail::LeadPursuit>(Arena::whole(g), iota_cops(sim_k_, k), 1, 0, false);
    std::vector<Vertex> place(k, 0);
    std::copy(sim_.begin(), sim_.end(), place.begin());
    return place;
  }

  void plan(const Context& ctx, std::vector<Vertex>& next) override {
    aux_->decide(ctx, next);
    const Vertex robber = ctx.robber;
    const Vertex previous = last_robber_ == kNoVertex ? robber : last_robber_;
    last_robber_ = robber;
    if (r_ == 0) {
      auto m = table_.best_cop_move(std::vector<Vertex>(ctx.cops.begin(), ctx.cops.begin() + sim_k_), robber);
      std::copy(m.begin(), m.end(), next.begin());
      return;
    }
    const bool idle = std::all_of(walks_.begin(), walks_.end(), [](const auto& w) { return w.empty(); });
    const int n = base_.order();
    if (idle && previous < n && robber >= n) {
      // The robber has just left branch vertex `previous`; it is headed for the
      // other end of this edge, which is where the simulated robber moves.
      const Origin& o = origin_.at(robber);
      const Vertex dest = o.a == previous ? o.b : o.a;
      auto m = table_.best_cop_move(sim_, dest);
      for (int i = 0; i < sim_k_; ++i) {
        auto& w = walks_[i];
        if (m[i] == sim_[i]) {
          w.assign(r_ + 1, sim_[i]);
        } else {
          w = edge_run_.at({std::min(sim_[i], m[i]), std::max(sim_[i], m[i])});
          if (sim_[i] > m[i]) std::reverse(w.begin(), w.end());
          w.push_back(m[i]);
        }
      }
      sim_ = m;
      ctx.report.bump("simulated rounds");
    }
    for (int i = 0; i < sim_k_; ++i) {
      if (walks_[i].empty()) continue;
      next[i] = walks_[i].front();
      walks_[i].erase(walks_[i].begin());
    }
  }

 private:
  Graph base_;
  int r_;
  int sim_k_ = 1;
  SolveTable table_ = SolveTable::solve(Graph(1, {}), 1);
  Graph subdivided_;
  std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> edge_run_;
  std::map<Vertex, Origin> origin_;
  std::vector<Vertex> sim_;
  std::vector<std::vector<Vertex>> walks_;
  std::unique_ptr<Controller> aux_;
  Vertex last_robber_ = kNoVertex;
};

int base_cost(const PatternComponent& t) {
  return t.is_path() ? std::max(t.size() - 2, 1) : 2 * t.radius;
}

std::vector<int> best_order(const ForestPattern& h, int* cost_out) {
  const auto& comps = h.components();
  std::vector<int> order(comps.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> best = order;
  int best_cost = -1;
  do {
    int used = 0, cost = 0;
    for (int i : order) {
      cost = std::max(cost, used + base_cost(comps[i]));
      used += comps[i].size();
    }
    if (best_cost < 0 || cost < best_cost) best_cost = cost, best = order;
  } while (std::next_permutation(order.begin(), order.end()));
  if (cost_out) *cost_out = std::max(best_cost, 0);
  return best;
}

/// One level of the forbidden-forest recursion: park cops on a copy of the first
/// remaining component if the arena has one, otherwise play the base strategy.
class PatternLevel : public Controller {
 public:
  PatternLevel(Arena arena, std::vector<ForestPattern> comps, std::vector<int> cops)
      : arena_(std::move(arena)), comps_(std::move(comps)), cops_(std::move(cops)) {}

  /// Parking spots known before the robber is placed.
  std::optional<std::vector<Vertex>> parking() const {
    if (comps_.size() < 2) return std::nullopt;
    auto emb = contains_forest_subgraph(arena_.local(), comps_.front());
    if (!emb) return std::nullopt;
    return arena_.to_global(*emb);
  }

  void decide(const Context& ctx, std::vector<Vertex>& next) override {
    if (!inner_ && arena_.has(ctx.robber)) build(ctx);
    if (inner_) inner_->decide(ctx, next);
  }

 private:
  std::vector<int> take(int count) const {
    return std::vector<int>(cops_.begin(), cops_.begin() + std::min<std::size_t>(count, cops_.size()));
  }

  void build(const Context& ctx) {
    const ForestPattern& first = comps_.front();
    const PatternComponent& t = first.components().front();
    if (auto spots = parking()) {
      std::vector<int> parked = take(t.size());
      std::vector<int> rest(cops_.begin() + parked.size(), cops_.end());
      std::vector<ForestPattern> later(comps_.begin() + 1, comps_.end());
      const Arena arena = arena_;
      const std::vector<Vertex> removed = *spots;
      ctx.report.bump("components parked");
      inner_ = std::make_unique<detail::ParkThen>(
          parked, removed, [arena, removed, later, rest](const Context& c) -> std::unique_ptr<Controller> {
            if (!arena.has(c.robber) || std::find(removed.begin(), removed.end(), c.robber) != removed.end())
              return nullptr;
            return std::make_unique<PatternLevel>(Arena(c.g, arena.component_without(c.robber, removed)), later, rest);
          });
      return;
    }
    if (contains_forest_subgraph(arena_.local(), first)) {
      ctx.report.falsified("arena contains the whole pattern");
      return;
    }
    if (t.is_path()) {
      const int l = t.size();
      inner_ = std::make_unique<detail::LeadPursuit>(arena_, take(std::max(l - 2, 1)), 1, l >= 3 ? l : 0);
      return;
    }
    const int r = t.radius;
    if (is_p_free(arena_.local(), 2 * r)) {
      inner_ = std::make_unique<detail::LeadPursuit>(arena_, take(std::max(2 * r - 2, 1)), 1, 2 * r);
      return;
    }
    // Sentinels on every other vertex of an induced path on 2r vertices; what
    // the robber is left with has no cycle longer than 2r.
    auto path = arena_.to_global(*find_induced_path(arena_.local(), 2 * r));
    std::vector<Vertex> sentinels;
    for (int i = 0; i < 2 * r; i += 2) sentinels.push_back(path[i]);
    std::vector<int> posted = take(r);
    std::vector<int> rest(cops_.begin() + posted.size(), cops_.end());
    const Arena arena = arena_;
    inner_ = std::make_unique<detail::ParkThen>(
        posted, sentinels, [arena, path, rest, r](const Context& c) -> std::unique_ptr<Controller> {
          if (!arena.has(c.robber) || std::find(path.begin(), path.end(), c.robber) != path.end()) return nullptr;
          Arena inner(c.g, arena.component_without(c.robber, path));
          auto tw = exact_treewidth(inner.local());
          if (tw.width > 2 * r - 1)
            c.report.falsified("component off the path has treewidth " + std::to_string(tw.width));
          const int need = std::max(tw.width, 0) / 2 + 1;
          std::vector<int> sweep(rest.begin(), rest.begin() + std::min<std::size_t>(need, rest.size()));
          return std::make_unique<detail::TreeSweep>(inner, sweep, to_global(inner, tw.decomposition));
        });
  }

  Arena arena_;
  std::vector<ForestPattern> comps_;
  std::vector<int> cops_;
  std::unique_ptr<Controller> inner_;
};

class PatternAvoiding : public ComposedStrategy {
 public:
  explicit PatternAvoiding(ForestPattern h) : h_(std::move(h)) {
    if (!h_.has_few_leaves()) throw std::invalid_argument("every component of H must be a tree with at most three leaves");
    for (int i : best_order(h_, &budget_)) comps_.push_back(h_.restricted({i}));
  }
  std::string name() const override { return "thm2"; }
  int budget(const Graph&) const override { return budget_; }

 protected:
  std::vector<Vertex> initial(const Graph& g, int k) override {
    if (contains_forest_subgraph(g, h_)) throw StrategyRefusal("graph contains the forbidden pattern");
    require_budget(g, k);
    auto level = std::make_unique<PatternLevel>(Arena::whole(g), comps_, iota_cops(0, k));
    std::vector<Vertex> place(k, 0);
    if (auto spots = level->parking())
      for (std::size_t i = 0; i < spots->size() && static_cast<int>(i) < k; ++i) place[i] = (*spots)[i];
    root_ = std::move(level);
    return place;
  }
  void plan(const Context& ctx, std::vector<Vertex>& next) override { root_->decide(ctx, next); }

 private:
  ForestPattern h_;
  std::vector<ForestPattern> comps_;
  int budget_ = 0;
  std::unique_ptr<Controller> root_;
};

int int_param(const std::map<std::string, std::string>& params, const std::string& key, const std::string& spec) {
  auto it = params.find(key);
  if (it == params.end()) throw std::invalid_argument("strategy " + spec + " needs " + key + "=...");
  try {
    std::size_t used = 0;
    int v = std::stoi(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("strategy " + spec + ": " + key + " must be an integer");
  }
}

}  // namespace

std::unique_ptr<InstrumentedCopStrategy> lead_cop_strategy(int l) {
  return std::make_unique<SingleFile>(l, SingleFile::Hypothesis::kNoInducedPath);
}
std::unique_ptr<InstrumentedCopStrategy> induced_cycle_strategy(int l) {
  return std::make_unique<SingleFile>(l, SingleFile::Hypothesis::kNoLongInducedCycle);
}
std::unique_ptr<InstrumentedCopStrategy> bipartite_lead_cop(int l) {
  return std::make_unique<SingleFile>(l, SingleFile::Hypothesis::kBipartite);
}
std::unique_ptr<InstrumentedCopStrategy> tree_decomposition_strategy(TreeDecomposition d) {
  return std::make_unique<BagSweep>(std::move(d));
}
std::unique_ptr<InstrumentedCopStrategy> subdivision_plus_one(const Graph& base, int r, long long state_cap) {
  return std::make_unique<SubdivisionPlusOne>(base, r, state_cap);
}
std::unique_ptr<InstrumentedCopStrategy> theorem2_strategy(const ForestPattern& h) {
  return std::make_unique<PatternAvoiding>(h);
}

int theorem2_budget(const ForestPattern& h) {
  int cost = 0;
  best_order(h, &cost);
  return cost;
}

ForestPattern parse_pattern(const std::string& text) {
  std::vector<Graph> parts;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, '+')) {
    if (token == "claw") {
      parts.push_back(gen::star(3));
    } else if (token.size() > 1 && token[0] == 'p' && std::all_of(token.begin() + 1, token.end(), ::isdigit)) {
      int n = std::stoi(token.substr(1));
      if (n < 1) throw std::invalid_argument("pattern path needs at least one vertex");
      parts.push_back(gen::path(n));
    } else if (token.rfind("spider-", 0) == 0) {
      std::vector<int> legs;
      std::stringstream ls(token.substr(7));
      std::string leg;
      while (std::getline(ls, leg, '-')) {
        if (leg.empty() || !std::all_of(leg.begin(), leg.end(), ::isdigit))
          throw std::invalid_argument("bad spider pattern: " + token);
        legs.push_back(std::stoi(leg));
      }
      parts.push_back(gen::spider(legs));
    } else {
      throw std::invalid_argument("unknown pattern component: " + token);
    }
  }
  if (parts.empty()) throw std::invalid_argument("empty pattern");
  Graph h = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) h = gen::disjoint_union(h, parts[i]);
  return ForestPattern(h);
}

std::pair<std::string, std::map<std::string, std::string>> parse_strategy_spec(const std::string& spec) {
  std::map<std::string, std::string> params;
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) throw std::invalid_argument("bad strategy parameter: " + item);
      params[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  return {name, params};
}

std::unique_ptr<CopStrategy> make_cop_strategy(const std::string& spec, const Graph& g, int k, long long state_cap) {
  auto [name, params] = parse_strategy_spec(spec);
  if (name == "greedy") return make_greedy_cop();
  if (name == "optimal") return make_optimal_cop(std::make_shared<SolveTable>(SolveTable::solve(g, k, state_cap)));
  if (name == "lead-cop") return lead_cop_strategy(int_param(params, "l", spec));
  if (name == "induced-cycle") return induced_cycle_strategy(int_param(params, "l", spec));
  if (name == "bipartite") return bipartite_lead_cop(int_param(params, "l", spec));
  if (name == "treedec") return tree_decomposition_strategy(exact_treewidth(g).decomposition);
  if (name == "subdiv+1") return subdivision_plus_one(g, int_param(params, "r", spec), state_cap);
  if (name == "thm2") {
    auto it = params.find("h");
    return theorem2_strategy(parse_pattern(it == params.end() ? "claw" : it->second));
  }
  throw std::invalid_argument("unknown cop strategy: " + name);
}

std::unique_ptr<RobberStrategy> make_robber_strategy(const std::string& spec, const Graph& g, int k,
                                                     long long state_cap) {
  auto [name, params] = parse_strategy_spec(spec);
  if (name == "optimal") return make_optimal_robber(std::make_shared<SolveTable>(SolveTable::solve(g, k, state_cap)));
  if (name == "lazy") return make_lazy_robber();
  if (name == "evasive") return make_evasive_robber();
  if (name == "random") return make_random_robber(static_cast<unsigned long long>(int_param(params, "seed", spec)));
  throw std::invalid_argument("unknown robber strategy: " + name);
}

}  // namespace copsrobber
