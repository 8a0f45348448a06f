#include "copsrobber/game.hpp"

#include <algorithm>
#include <climits>
#include <random>

namespace copsrobber {

bool GameState::captured() const {
  return robber != kNoVertex && std::find(cops.begin(), cops.end(), robber) != cops.end();
}

GameState GameState::from_positions(std::vector<Vertex> cops, Vertex robber, Side side, int round) {
  std::sort(cops.begin(), cops.end());
  return GameState{std::move(cops), robber, side, round};
}

std::vector<std::vector<Vertex>> joint_moves(const Graph& g, std::span<const Vertex> cops) {
  std::vector<std::vector<Vertex>> options;
  for (Vertex c : cops) {
    std::vector<Vertex> opt = g.neighbors(c);
    opt.insert(std::lower_bound(opt.begin(), opt.end(), c), c);
    options.push_back(std::move(opt));
  }
  std::vector<std::vector<Vertex>> out;
  std::vector<std::size_t> idx(cops.size(), 0);
  while (true) {
    std::vector<Vertex> move(cops.size());
    for (std::size_t i = 0; i < cops.size(); ++i) move[i] = options[i][idx[i]];
    out.push_back(std::move(move));
    std::size_t i = cops.size();
    while (i > 0) {
      --i;
      if (++idx[i] < options[i].size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (cops.empty()) return out;
  }
}

std::vector<std::vector<Vertex>> legal_cop_moves(const Graph& g, const GameState& state) {
  if (state.side_to_move != GameState::Side::kCops) throw WrongSide("not the cops' turn to move");
  return joint_moves(g, state.cops);
}

std::vector<Vertex> legal_robber_moves(const Graph& g, const GameState& state) {
  if (state.side_to_move != GameState::Side::kRobber) throw WrongSide("not the robber's turn to move");
  std::vector<Vertex> out = g.neighbors(state.robber);
  out.insert(std::lower_bound(out.begin(), out.end(), state.robber), state.robber);
  return out;
}

std::vector<Vertex> Trace::current_cops() const { return rounds.empty() ? cop_placement : rounds.back().cops; }

Vertex Trace::current_robber() const {
  for (auto it = rounds.rbegin(); it != rounds.rend(); ++it)
    if (it->robber != kNoVertex) return it->robber;
  return robber_placement;
}

std::string outcome_name(Trace::Outcome outcome) {
  switch (outcome) {
    case Trace::Outcome::kCapture: return "capture";
    case Trace::Outcome::kRobberSurvives: return "robber-survives";
    case Trace::Outcome::kCopForfeit: return "cop-forfeit";
    case Trace::Outcome::kRobberForfeit: return "robber-forfeit";
  }
  return "unknown";
}

long long state_space_size(int n, int k) {
  // C(n+k-1, k) * n * 2 with saturation.
  long double count = 1;
  for (int i = 1; i <= k; ++i) count = count * (n + k - i) / i;
  count *= 2.0L * n;
  if (count >= static_cast<long double>(LLONG_MAX) / 2) return LLONG_MAX / 2;
  return static_cast<long long>(count + 0.5L);
}

long long default_horizon(const Graph& g, int k) { return state_space_size(g.order(), k) + 1; }

namespace {

bool contains(const std::vector<Vertex>& v, Vertex x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::string check_cop_move(const Graph& g, const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
  if (to.size() != from.size())
    return "cop move has " + std::to_string(to.size()) + " entries, expected " + std::to_string(from.size());
  for (std::size_t i = 0; i < to.size(); ++i) {
    if (!g.valid(to[i])) return "cop " + std::to_string(i) + " moved to invalid vertex " + std::to_string(to[i]);
    if (to[i] != from[i] && !g.adjacent(from[i], to[i]))
      return "cop " + std::to_string(i) + " jumped " + std::to_string(from[i]) + "->" + std::to_string(to[i]);
  }
  return {};
}

std::string check_robber_move(const Graph& g, Vertex from, Vertex to) {
  if (!g.valid(to)) return "robber moved to invalid vertex " + std::to_string(to);
  if (to != from && !g.adjacent(from, to))
    return "robber jumped " + std::to_string(from) + "->" + std::to_string(to);
  return {};
}

}  // namespace

Trace play(const Graph& g, int k, CopStrategy& cop, RobberStrategy& robber, long long horizon,
           const std::string& config) {
  if (k < 1) throw std::invalid_argument("play: k must be >= 1");
  if (horizon < 0) throw std::invalid_argument("play: horizon must be >= 0");
  if (g.order() == 0 || !is_connected(g)) throw std::invalid_argument("play: graph must be connected and non-empty");
  Trace t;
  t.graph_hash = graph_hash(g);
  t.order = g.order();
  t.k = k;
  t.cop_strategy = cop.name();
  t.robber_strategy = robber.name();
  t.horizon = horizon;
  t.config = config;
  GameView view{g, k, t};

  auto forfeit = [&](Trace::Outcome who, std::string why) {
    t.outcome = who;
    t.violation = std::move(why);
    return t;
  };

  t.cop_placement = cop.place(g, k);
  if (static_cast<int>(t.cop_placement.size()) != k)
    return forfeit(Trace::Outcome::kCopForfeit, "placement has " + std::to_string(t.cop_placement.size()) +
                                                    " cops, expected " + std::to_string(k));
  for (Vertex c : t.cop_placement)
    if (!g.valid(c)) return forfeit(Trace::Outcome::kCopForfeit, "cop placed on invalid vertex " + std::to_string(c));

  std::vector<bool> occupied(g.order(), false);
  for (Vertex c : t.cop_placement) occupied[c] = true;
  if (std::all_of(occupied.begin(), occupied.end(), [](bool b) { return b; })) {
    t.outcome = Trace::Outcome::kCapture;
    t.capture_round = 0;
    return t;
  }
  Vertex r = robber.place(view);
  if (!g.valid(r)) return forfeit(Trace::Outcome::kRobberForfeit, "robber placed on invalid vertex " + std::to_string(r));
  t.robber_placement = r;
  if (occupied[r]) {
    t.outcome = Trace::Outcome::kCapture;
    t.capture_round = 0;
    return t;
  }

  for (long long round = 1; round <= horizon; ++round) {
    std::vector<Vertex> before = t.current_cops();
    std::vector<Vertex> after = cop.move(view);
    if (auto bad = check_cop_move(g, before, after); !bad.empty())
      return forfeit(Trace::Outcome::kCopForfeit, "round " + std::to_string(round) + ": " + bad);
    t.rounds.push_back({after, kNoVertex});
    if (contains(after, r)) {
      t.outcome = Trace::Outcome::kCapture;
      t.capture_round = static_cast<int>(round);
      return t;
    }
    Vertex next = robber.move(view);
    if (auto bad = check_robber_move(g, r, next); !bad.empty())
      return forfeit(Trace::Outcome::kRobberForfeit, "round " + std::to_string(round) + ": " + bad);
    r = next;
    t.rounds.back().robber = r;
    if (contains(after, r)) {
      t.outcome = Trace::Outcome::kCapture;
      t.capture_round = static_cast<int>(round);
      return t;
    }
  }
  t.outcome = Trace::Outcome::kRobberSurvives;
  return t;
}

ReplayCheck replay(const Graph& g, const Trace& t) {
  auto bad = [](std::string why) { return ReplayCheck{false, std::move(why)}; };
  if (t.order != g.order() || t.graph_hash != graph_hash(g)) return bad("trace recorded on a different graph");
  if (t.outcome == Trace::Outcome::kCopForfeit || t.outcome == Trace::Outcome::kRobberForfeit) {
    if (t.violation.empty()) return bad("forfeit without a recorded violation");
    return {};
  }
  if (static_cast<int>(t.cop_placement.size()) != t.k) return bad("placement arity differs from k");
  for (Vertex c : t.cop_placement)
    if (!g.valid(c)) return bad("invalid cop placement");
  std::vector<bool> occupied(g.order(), false);
  for (Vertex c : t.cop_placement) occupied[c] = true;
  bool full = std::all_of(occupied.begin(), occupied.end(), [](bool b) { return b; });
  int capture_at = -1;
  if (full) {
    if (t.robber_placement != kNoVertex) return bad("robber placed although every vertex held a cop");
    capture_at = 0;
  } else {
    if (!g.valid(t.robber_placement)) return bad("invalid robber placement");
    if (occupied[t.robber_placement]) capture_at = 0;
  }
  std::vector<Vertex> cops = t.cop_placement;
  Vertex r = t.robber_placement;
  for (std::size_t i = 0; i < t.rounds.size() && capture_at < 0; ++i) {
    const auto& rec = t.rounds[i];
    if (auto why = check_cop_move(g, cops, rec.cops); !why.empty()) return bad(why);
    cops = rec.cops;
    if (contains(cops, r)) {
      capture_at = static_cast<int>(i + 1);
      if (rec.robber != kNoVertex) return bad("robber moved after capture");
      break;
    }
    if (rec.robber == kNoVertex) return bad("round without robber move and without capture");
    if (auto why = check_robber_move(g, r, rec.robber); !why.empty()) return bad(why);
    r = rec.robber;
    if (contains(cops, r)) capture_at = static_cast<int>(i + 1);
  }
  if (capture_at >= 0 && static_cast<std::size_t>(capture_at) != t.rounds.size())
    return bad("moves recorded after the capture");
  if (t.outcome == Trace::Outcome::kCapture) {
    if (capture_at != t.capture_round) return bad("recorded capture round disagrees with replay");
  } else if (capture_at >= 0) {
    return bad("replay captures but the trace says the robber survived");
  } else if (static_cast<long long>(t.rounds.size()) != t.horizon) {
    return bad("survival recorded before the horizon");
  }
  return {};
}

namespace {

class GreedyCop : public CopStrategy {
 public:
  std::string name() const override { return "greedy"; }
  std::vector<Vertex> place(const Graph&, int k) override { return std::vector<Vertex>(k, 0); }
  std::vector<Vertex> move(const GameView& view) override {
    auto cops = view.cops();
    auto d = bfs_distances(view.graph, view.robber());
    for (Vertex& c : cops)
      for (Vertex y : view.graph.neighbors(c))
        if (d[y] < d[c]) {
          c = y;
          break;
        }
    return cops;
  }
};

Vertex lowest_free(const Graph& g, const std::vector<Vertex>& cops) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (!contains(cops, v)) return v;
  return 0;
}

class LazyRobber : public RobberStrategy {
 public:
  std::string name() const override { return "lazy"; }
  Vertex place(const GameView& view) override { return lowest_free(view.graph, view.cops()); }
  Vertex move(const GameView& view) override { return view.robber(); }
};

int nearest_cop(const std::vector<std::vector<int>>& dist, const std::vector<Vertex>& cops, Vertex v) {
  int best = INT_MAX;
  for (Vertex c : cops) best = std::min(best, dist[c][v]);
  return best;
}

class EvasiveRobber : public RobberStrategy {
 public:
  std::string name() const override { return "evasive"; }
  Vertex place(const GameView& view) override {
    ensure(view.graph);
    auto cops = view.cops();
    Vertex best = lowest_free(view.graph, cops);
    for (Vertex v = 0; v < view.graph.order(); ++v)
      if (nearest_cop(dist_, cops, v) > nearest_cop(dist_, cops, best)) best = v;
    return best;
  }
  Vertex move(const GameView& view) override {
    ensure(view.graph);
    auto cops = view.cops();
    Vertex r = view.robber();
    Vertex best = r;
    int best_score = score(view.graph, cops, r);
    for (Vertex y : view.graph.neighbors(r)) {
      int s = score(view.graph, cops, y);
      if (s > best_score) best = y, best_score = s;
    }
    return best;
  }

 private:
  // Distance to the nearest cop after the cops' best reply, then raw distance.
  int score(const Graph& g, const std::vector<Vertex>& cops, Vertex v) const {
    int d = nearest_cop(dist_, cops, v);
    if (d == 0) return -1000;
    (void)g;
    return d;
  }
  void ensure(const Graph& g) {
    if (dist_.empty()) dist_ = all_distances(g);
  }
  std::vector<std::vector<int>> dist_;
};

class RandomRobber : public RobberStrategy {
 public:
  explicit RandomRobber(unsigned long long seed) : rng_(seed), seed_(seed) {}
  std::string name() const override { return "random:seed=" + std::to_string(seed_); }
  Vertex place(const GameView& view) override {
    auto cops = view.cops();
    std::vector<Vertex> free;
    for (Vertex v = 0; v < view.graph.order(); ++v)
      if (!contains(cops, v)) free.push_back(v);
    return free[rng_() % free.size()];
  }
  Vertex move(const GameView& view) override {
    auto cops = view.cops();
    Vertex r = view.robber();
    std::vector<Vertex> options{r};
    for (Vertex y : view.graph.neighbors(r))
      if (!contains(cops, y)) options.push_back(y);
    return options[rng_() % options.size()];
  }

 private:
  std::mt19937_64 rng_;
  unsigned long long seed_;
};

}  // namespace

std::unique_ptr<CopStrategy> make_greedy_cop() { return std::make_unique<GreedyCop>(); }
std::unique_ptr<RobberStrategy> make_lazy_robber() { return std::make_unique<LazyRobber>(); }
std::unique_ptr<RobberStrategy> make_evasive_robber() { return std::make_unique<EvasiveRobber>(); }
std::unique_ptr<RobberStrategy> make_random_robber(unsigned long long seed) {
  return std::make_unique<RandomRobber>(seed);
}

}  // namespace copsrobber
