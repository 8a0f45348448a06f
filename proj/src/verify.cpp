#include "copsrobber/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "copsrobber/generators.hpp"
#include "copsrobber/metrics.hpp"
#include "copsrobber/strategies.hpp"
#include "copsrobber/subgraph.hpp"
#include "copsrobber/transforms.hpp"
#include "copsrobber/treewidth.hpp"

namespace copsrobber {

namespace {

using Json = nlohmann::ordered_json;

int pair_index(int n, int i, int j) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

std::uint64_t adjacency_mask(int n, const std::vector<Edge>& edges, const std::vector<int>& perm) {
  std::uint64_t mask = 0;
  for (auto [u, v] : edges) {
    int a = perm[u], b = perm[v];
    if (a > b) std::swap(a, b);
    mask |= std::uint64_t{1} << pair_index(n, a, b);
  }
  return mask;
}

Graph from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (mask >> pair_index(n, i, j) & 1) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

std::uint64_t canonical_mask(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do best = std::min(best, adjacency_mask(n, g.edges(), perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Work items are independent; results land in their own slot so assembly
// order never depends on scheduling.
template <class F>
void parallel_for(std::size_t count, int threads, F&& f) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) f(i);
    });
  for (auto& th : pool) th.join();
}

/// Per-instance results keyed by check name; merged in instance order.
class Tally {
 public:
  explicit Tally(const std::vector<std::string>& names) {
    for (const auto& n : names) slot(n);
  }
  CheckResult& slot(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return results_[it->second];
    index_[name] = results_.size();
    CheckResult r;
    r.name = name;
    results_.push_back(std::move(r));
    return results_.back();
  }
  void pass(const std::string& name) {
    auto& r = slot(name);
    ++r.applicable;
    ++r.passed;
  }
  void fail(const std::string& name, Failure f) {
    auto& r = slot(name);
    ++r.applicable;
    r.failures.push_back(std::move(f));
  }
  void check(const std::string& name, bool ok, const std::function<Failure()>& describe) {
    if (ok)
      pass(name);
    else
      fail(name, describe());
  }
  void skip(const std::string& name) { ++slot(name).skipped; }
  void note(const std::string& name, std::string text) { slot(name).notes.push_back(std::move(text)); }
  VerificationReport report() && {
    for (auto& r : results_)
      std::stable_sort(r.failures.begin(), r.failures.end(),
                       [](const Failure& a, const Failure& b) { return a.instance < b.instance; });
    return VerificationReport{std::move(results_)};
  }
  void absorb(VerificationReport part) {
    for (auto& c : part.checks) {
      auto& r = slot(c.name);
      r.applicable += c.applicable;
      r.passed += c.passed;
      r.skipped += c.skipped;
      for (auto& f : c.failures) r.failures.push_back(std::move(f));
      for (auto& n : c.notes) r.notes.push_back(std::move(n));
    }
  }

 private:
  std::vector<CheckResult> results_;
  std::map<std::string, std::size_t> index_;
};

Failure failure(const CorpusEntry& e, std::string params, std::string detail) {
  return Failure{e.id, render_graph(e.graph), std::move(params), std::move(detail), {}};
}

Failure failure(const std::string& id, const Graph& g, std::string params, std::string detail) {
  return Failure{id, render_graph(g), std::move(params), std::move(detail), {}};
}

std::string l_param(int l) { return "l=" + std::to_string(l); }

// Cop number that reports a cap instead of throwing.
std::optional<int> try_cop_number(const Graph& g, long long cap) {
  try {
    return cop_number(g, cap);
  } catch (const CapExceeded&) {
    return std::nullopt;
  }
}

void attach_witness(Failure& f, const Graph& g, const std::function<bool(const Graph&)>& still_fails) {
  f.witness = render_graph(minimize_witness(g, still_fails));
}

std::string seed_label(double p) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.2f", p);
  return buf;
}

}  // namespace

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.failures.empty(); });
}

long long VerificationReport::failures() const {
  long long total = 0;
  for (const auto& c : checks) total += static_cast<long long>(c.failures.size());
  return total;
}

void VerificationReport::merge(VerificationReport other) {
  for (auto& c : other.checks) checks.push_back(std::move(c));
}

Graph canonical_form(const Graph& g) {
  if (g.order() > 8) throw CapExceeded("canonical form vertex", 8, g.order());
  return from_mask(g.order(), canonical_mask(g));
}

std::vector<Graph> connected_graphs(int n) {
  if (n < 1) return {};
  if (n > 7) throw CapExceeded("exhaustive enumeration vertex", 7, n);
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  const int pairs = n * (n - 1) / 2;
  std::set<std::pair<int, std::uint64_t>> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Graph g = from_mask(n, mask);
    if (!is_connected(g)) continue;
    seen.emplace(g.size(), canonical_mask(g));
  }
  std::vector<Graph> out;
  for (auto [m, mask] : seen) out.push_back(from_mask(n, mask));
  cache[n] = out;
  return out;
}

std::vector<CorpusEntry> named_graphs() {
  std::vector<CorpusEntry> out;
  out.push_back({"named:petersen", gen::petersen()});
  out.push_back({"named:petersen+k6", gen::disjoint_union(gen::petersen(), gen::complete(6))});
  for (int n = 7; n <= 10; ++n) out.push_back({"named:cycle-" + std::to_string(n), gen::cycle(n)});
  out.push_back({"named:path-9", gen::path(9)});
  out.push_back({"named:complete-7", gen::complete(7)});
  out.push_back({"named:k33", gen::complete_bipartite(3, 3)});
  out.push_back({"named:k34", gen::complete_bipartite(3, 4)});
  out.push_back({"named:star-6", gen::star(6)});
  out.push_back({"named:spider-2-2-2", gen::spider({2, 2, 2})});
  out.push_back({"named:spider-1-2-3", gen::spider({1, 2, 3})});
  out.push_back({"named:spider-3-3-3", gen::spider({3, 3, 3})});
  return out;
}

std::vector<CorpusEntry> build_corpus(const CorpusSpec& spec) {
  std::vector<CorpusEntry> out;
  for (int n = 1; n <= spec.exhaustive_max; ++n) {
    auto graphs = connected_graphs(n);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      char id[32];
      std::snprintf(id, sizeof id, "exh:n%d-%03zu", n, i);
      out.push_back({id, graphs[i]});
    }
  }
  for (int n = spec.random_min; n <= spec.random_max; ++n) {
    for (std::size_t pi = 0; pi < spec.densities.size(); ++pi) {
      for (int s = 0; s < spec.samples_per_cell; ++s) {
        std::uint64_t seed = spec.seed * 1000003ULL + static_cast<std::uint64_t>(n) * 10007ULL + pi * 101ULL + s;
        out.push_back({"gnp:n" + std::to_string(n) + "-p" + seed_label(spec.densities[pi]) + "-s" + std::to_string(s),
                       gen::gnp(n, spec.densities[pi], seed)});
      }
    }
  }
  if (spec.named)
    for (auto& e : named_graphs()) out.push_back(std::move(e));
  return out;
}

Graph minimize_witness(const Graph& g, const std::function<bool(const Graph&)>& still_fails) {
  auto fails = [&](const Graph& h) {
    try {
      return still_fails(h);
    } catch (const std::exception&) {
      return false;
    }
  };
  Graph cur = g;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cur.edges().size() && !changed; ++i) {
      auto edges = cur.edges();
      edges.erase(edges.begin() + i);
      Graph h(cur.order(), edges);
      if (fails(h)) cur = h, changed = true;
    }
    for (Vertex v = 0; v < cur.order() && !changed && cur.order() > 1; ++v) {
      std::vector<Vertex> keep;
      for (Vertex u = 0; u < cur.order(); ++u)
        if (u != v) keep.push_back(u);
      Graph h = cur.induced(keep);
      if (fails(h)) cur = h, changed = true;
    }
  }
  return cur;
}

namespace {

const std::vector<std::string> kBoundChecks = {
    "decomposition valid and exact",
    "dismantlable iff one cop wins",
    "cop <= floor(tw/2)+1",
    "cop <= circumference/2",
    "tw <= circumference-1",
    "P_l-free => cop <= l-2",
    "no induced cycle >= l => cop <= l-2",
    "bipartite P_2l-free => cop <= l",
};

VerificationReport bounds_for(const CorpusEntry& e, const CorpusSpec& spec, std::map<int, std::string>& tight) {
  Tally t(kBoundChecks);
  const Graph& g = e.graph;
  auto cop = try_cop_number(g, spec.state_cap);
  std::optional<ExactTreewidth> tw;
  try {
    tw = exact_treewidth(g, spec.treewidth_cap);
  } catch (const CapExceeded&) {
  }
  if (tw) {
    auto check = validate_decomposition(g, tw->decomposition);
    t.check("decomposition valid and exact", check.valid() && tw->decomposition.width() == tw->width,
            [&] { return failure(e, "", "decomposition: " + check.message); });
  } else {
    t.skip("decomposition valid and exact");
  }

  for (const auto& comp : components(g)) {
    Graph c = g.induced(comp);
    try {
      bool solver = cop_win(c, 1, spec.state_cap);
      bool dism = is_cop_win_dismantlable(c);
      t.check("dismantlable iff one cop wins", solver == dism, [&] {
        return failure(e, "component of " + std::to_string(comp.front()),
                       "dismantlable=" + std::to_string(dism) + " cop_win(1)=" + std::to_string(solver));
      });
    } catch (const CapExceeded&) {
      t.skip("dismantlable iff one cop wins");
    }
  }

  if (!cop) {
    for (std::size_t i = 2; i < kBoundChecks.size(); ++i) t.skip(kBoundChecks[i]);
    return std::move(t).report();
  }
  const int k = *cop;
  if (tw) {
    const int bound = tw->width / 2 + 1;
    t.check("cop <= floor(tw/2)+1", k <= bound, [&] {
      Failure f = failure(e, "tw=" + std::to_string(tw->width),
                          "cop=" + std::to_string(k) + " > " + std::to_string(bound));
      attach_witness(f, g, [&](const Graph& h) {
        return cop_number(h, spec.state_cap) > exact_treewidth(h, spec.treewidth_cap).width / 2 + 1;
      });
      return f;
    });
    if (k == bound && !tight.count(tw->width)) tight[tw->width] = e.id;
  } else {
    t.skip("cop <= floor(tw/2)+1");
  }

  CycleLength circ = circumference(g);
  if (!circ.is_infinite()) {
    const int c = circ.value();
    t.check("cop <= circumference/2", 2 * k <= c, [&] {
      return failure(e, "circ=" + std::to_string(c), "cop=" + std::to_string(k) + " > circ/2");
    });
    if (tw) {
      t.check("tw <= circumference-1", tw->width <= c - 1, [&] {
        return failure(e, "circ=" + std::to_string(c), "tw=" + std::to_string(tw->width) + " > circ-1");
      });
    } else {
      t.skip("tw <= circumference-1");
    }
  }

  for (int l = 3; l <= 8; ++l) {
    if (is_p_free(g, l))
      t.check("P_l-free => cop <= l-2", k <= l - 2,
              [&] { return failure(e, l_param(l), "cop=" + std::to_string(k) + " > " + std::to_string(l - 2)); });
    if (!has_induced_cycle_at_least(g, l))
      t.check("no induced cycle >= l => cop <= l-2", k <= l - 2,
              [&] { return failure(e, l_param(l), "cop=" + std::to_string(k) + " > " + std::to_string(l - 2)); });
  }
  if (is_bipartite(g)) {
    for (int l = 1; l <= 5; ++l)
      if (is_p_free(g, 2 * l))
        t.check("bipartite P_2l-free => cop <= l", k <= l,
                [&] { return failure(e, l_param(l), "cop=" + std::to_string(k) + " > " + std::to_string(l)); });
  }
  return std::move(t).report();
}

}  // namespace

VerificationReport check_bounds(const CorpusSpec& spec) {
  auto corpus = build_corpus(spec);
  std::vector<VerificationReport> parts(corpus.size());
  std::vector<std::map<int, std::string>> tight(corpus.size());
  parallel_for(corpus.size(), spec.threads, [&](std::size_t i) { parts[i] = bounds_for(corpus[i], spec, tight[i]); });
  Tally t(kBoundChecks);
  std::map<int, std::string> first_tight;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    t.absorb(std::move(parts[i]));
    for (auto& [w, id] : tight[i]) first_tight.emplace(w, id);
  }
  for (auto& [w, id] : first_tight)
    t.note("cop <= floor(tw/2)+1", "tight at tw=" + std::to_string(w) + ": " + id);
  return std::move(t).report();
}

namespace {

const std::vector<std::string> kTransformChecks = {
    "cop(G+) >= cop(G)",
    "G+ is claw-free",
    "cop(subdivide(G,r)) >= cop(G)",
    "cop(subdivide(G,r)) <= cop(G)+1",
    "cop(hat G) = cop(G) when cop(G) >= 2",
};

VerificationReport transforms_for(const CorpusEntry& e, const CorpusSpec& spec) {
  Tally t(kTransformChecks);
  const Graph& g = e.graph;
  if (g.order() > spec.transform_max || !is_connected(g)) return std::move(t).report();
  auto cop = try_cop_number(g, spec.state_cap);
  if (!cop) {
    for (const auto& name : kTransformChecks) t.skip(name);
    return std::move(t).report();
  }
  const int k = *cop;
  if (g.order() >= 2) {
    Graph plus = clique_substitution(g).output;
    t.check("G+ is claw-free", is_claw_free(plus), [&] { return failure(e, "", "G+ has an induced claw"); });
    if (auto kp = try_cop_number(plus, spec.state_cap)) {
      t.check("cop(G+) >= cop(G)", *kp >= k, [&] {
        Failure f = failure(e, "", "cop(G+)=" + std::to_string(*kp) + " < cop(G)=" + std::to_string(k));
        attach_witness(f, g, [&](const Graph& h) {
          return is_connected(h) && h.order() >= 2 &&
                 cop_number(clique_substitution(h).output, spec.state_cap) < cop_number(h, spec.state_cap);
        });
        return f;
      });
    } else {
      t.skip("cop(G+) >= cop(G)");
    }
  }
  for (int r = 1; r <= 3; ++r) {
    auto ks = try_cop_number(subdivide(g, r).output, spec.state_cap);
    if (!ks) {
      t.skip("cop(subdivide(G,r)) >= cop(G)");
      t.skip("cop(subdivide(G,r)) <= cop(G)+1");
      continue;
    }
    const std::string rel = "cop(subdivided)=" + std::to_string(*ks) + ", cop(G)=" + std::to_string(k);
    t.check("cop(subdivide(G,r)) >= cop(G)", *ks >= k, [&] { return failure(e, "r=" + std::to_string(r), rel); });
    t.check("cop(subdivide(G,r)) <= cop(G)+1", *ks <= k + 1, [&] { return failure(e, "r=" + std::to_string(r), rel); });
  }
  if (k >= 2 && g.order() <= 5) {
    if (auto kh = try_cop_number(hat_construction(g).output, spec.state_cap)) {
      t.check("cop(hat G) = cop(G) when cop(G) >= 2", *kh == k, [&] {
        return failure(e, "", "cop(hat G)=" + std::to_string(*kh) + ", cop(G)=" + std::to_string(k));
      });
    } else {
      t.skip("cop(hat G) = cop(G) when cop(G) >= 2");
    }
  }
  return std::move(t).report();
}

}  // namespace

VerificationReport check_transform_monotonicity(const CorpusSpec& spec) {
  auto corpus = build_corpus(spec);
  std::vector<VerificationReport> parts(corpus.size());
  parallel_for(corpus.size(), spec.threads, [&](std::size_t i) { parts[i] = transforms_for(corpus[i], spec); });
  Tally t(kTransformChecks);
  for (auto& p : parts) t.absorb(std::move(p));
  return std::move(t).report();
}

namespace {

const std::vector<std::string> kStrategyChecks = {
    "lead-cop captures with l-2 cops",
    "induced-cycle captures with l-2 cops",
    "bipartite spacing-2 captures with l cops",
    "treedec captures with floor(tw/2)+1 cops",
    "subdiv+1 captures with cop(G)+1 cops",
    "thm2 captures within budget",
    "strategy invariants hold",
};

const std::vector<std::string> kPatterns = {"claw", "spider-2-2-2", "p2+claw"};

struct PlayOutcome {
  bool captured = false;
  bool clean = false;
  std::string detail;
};

using TableCache = std::map<std::pair<std::string, int>, std::shared_ptr<const SolveTable>>;

// Plays `cop` against the solver-optimal robber on connected `g` with k cops.
PlayOutcome play_optimal(const Graph& g, int k, InstrumentedCopStrategy& cop, long long cap,
                         TableCache* cache = nullptr) {
  std::shared_ptr<const SolveTable> table;
  const auto key = std::make_pair(render_graph(g), k);
  if (cache && cache->count(key)) {
    table = cache->at(key);
  } else {
    table = std::make_shared<SolveTable>(SolveTable::solve(g, k, cap));
    if (cache) (*cache)[key] = table;
  }
  auto robber = make_optimal_robber(table);
  Trace trace = play(g, k, cop, *robber, default_horizon(g, k));
  PlayOutcome out;
  auto check = replay(g, trace);
  out.captured = trace.captured() && check.ok;
  out.clean = cop.report().clean();
  out.detail = outcome_name(trace.outcome) + " after " + std::to_string(trace.rounds.size()) + " rounds";
  if (!trace.violation.empty()) out.detail += "; violation: " + trace.violation;
  if (!check.ok) out.detail += "; replay: " + check.problem;
  for (const auto& f : cop.report().falsifications) out.detail += "; " + f;
  return out;
}

VerificationReport strategies_for(const CorpusEntry& e, const CorpusSpec& spec) {
  Tally t(kStrategyChecks);
  TableCache tables;
  auto comps = components(e.graph);
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const Graph c = e.graph.induced(comps[ci]);
    const std::string where = comps.size() > 1 ? "component " + std::to_string(comps[ci].front()) + ", " : "";
    // Runs one strategy; `make` builds a fresh handle for c (or a minimized c).
    auto run = [&](const std::string& check, const std::string& params, int k,
                   const std::function<std::unique_ptr<InstrumentedCopStrategy>(const Graph&)>& make,
                   const std::function<bool(const Graph&)>& applies) {
      try {
        auto cop = make(c);
        PlayOutcome o = play_optimal(c, k, *cop, spec.state_cap, &tables);
        t.check(check, o.captured, [&] {
          Failure f = failure(e.id, c, where + params + ", k=" + std::to_string(k), o.detail);
          attach_witness(f, c, [&](const Graph& h) {
            if (!is_connected(h) || !applies(h)) return false;
            auto s = make(h);
            return !play_optimal(h, s->budget(h), *s, spec.state_cap).captured;
          });
          return f;
        });
        t.check("strategy invariants hold", o.clean,
                [&] { return failure(e.id, c, where + check + ", " + params, o.detail); });
      } catch (const CapExceeded&) {
        t.skip(check);
      }
    };

    for (int l = 3; l <= 8; ++l) {
      auto pfree = [l](const Graph& h) { return is_p_free(h, l); };
      if (pfree(c))
        run("lead-cop captures with l-2 cops", l_param(l), l - 2, [l](const Graph&) { return lead_cop_strategy(l); },
            pfree);
      auto cfree = [l](const Graph& h) { return !has_induced_cycle_at_least(h, l); };
      if (cfree(c))
        run("induced-cycle captures with l-2 cops", l_param(l), l - 2,
            [l](const Graph&) { return induced_cycle_strategy(l); }, cfree);
    }
    for (int l = 1; l <= 5; ++l) {
      auto applies = [l](const Graph& h) { return is_bipartite(h) && is_p_free(h, 2 * l); };
      if (applies(c))
        run("bipartite spacing-2 captures with l cops", l_param(l), l,
            [l](const Graph&) { return bipartite_lead_cop(l); }, applies);
    }
    try {
      auto tw = exact_treewidth(c, spec.treewidth_cap);
      run("treedec captures with floor(tw/2)+1 cops", "tw=" + std::to_string(tw.width), tw.width / 2 + 1,
          [&](const Graph& h) { return tree_decomposition_strategy(exact_treewidth(h, spec.treewidth_cap).decomposition); },
          [](const Graph&) { return true; });
    } catch (const CapExceeded&) {
      t.skip("treedec captures with floor(tw/2)+1 cops");
    }
    if (c.order() <= spec.transform_max) {
      for (int r = 1; r <= 2; ++r) {
        try {
          auto s = subdivision_plus_one(c, r, spec.state_cap);
          const Graph sub = subdivide(c, r).output;
          const int k = s->budget(sub);
          PlayOutcome o = play_optimal(sub, k, *s, spec.state_cap);
          const std::string params = where + "r=" + std::to_string(r) + ", k=" + std::to_string(k);
          t.check("subdiv+1 captures with cop(G)+1 cops", o.captured,
                  [&] { return failure(e.id, c, params, o.detail); });
          t.check("strategy invariants hold", o.clean,
                  [&] { return failure(e.id, c, "subdiv+1, " + params, o.detail); });
        } catch (const CapExceeded&) {
          t.skip("subdiv+1 captures with cop(G)+1 cops");
        }
      }
    }
    for (const auto& name : kPatterns) {
      ForestPattern h = parse_pattern(name);
      auto avoids = [h](const Graph& x) { return !contains_forest_subgraph(x, h).has_value(); };
      if (avoids(c))
        run("thm2 captures within budget", "H=" + name, theorem2_budget(h),
            [h](const Graph&) { return theorem2_strategy(h); }, avoids);
    }
  }
  return std::move(t).report();
}

}  // namespace

VerificationReport check_strategies(const CorpusSpec& spec) {
  auto corpus = build_corpus(spec);
  std::vector<VerificationReport> parts(corpus.size());
  parallel_for(corpus.size(), spec.threads, [&](std::size_t i) { parts[i] = strategies_for(corpus[i], spec); });
  Tally t(kStrategyChecks);
  for (auto& p : parts) t.absorb(std::move(p));
  return std::move(t).report();
}

VerificationReport verify_all(const CorpusSpec& spec) {
  VerificationReport r = check_bounds(spec);
  r.merge(check_transform_monotonicity(spec));
  r.merge(check_strategies(spec));
  return r;
}

std::string corpus_spec_json(const CorpusSpec& spec) {
  Json j;
  j["seed"] = spec.seed;
  j["exhaustive_max"] = spec.exhaustive_max;
  j["random_min"] = spec.random_min;
  j["random_max"] = spec.random_max;
  j["densities"] = spec.densities;
  j["samples_per_cell"] = spec.samples_per_cell;
  j["named"] = spec.named;
  j["transform_max"] = spec.transform_max;
  j["state_cap"] = spec.state_cap;
  j["treewidth_cap"] = spec.treewidth_cap;
  j["threads"] = spec.threads;
  return j.dump();
}

CorpusSpec corpus_spec_from_json(const std::string& text) try {
  Json j = Json::parse(text);
  if (!j.is_object()) throw ParseError("corpus spec must be a JSON object");
  CorpusSpec s;
  s.seed = j.value("seed", s.seed);
  s.exhaustive_max = j.value("exhaustive_max", s.exhaustive_max);
  s.random_min = j.value("random_min", s.random_min);
  s.random_max = j.value("random_max", s.random_max);
  s.densities = j.value("densities", s.densities);
  s.samples_per_cell = j.value("samples_per_cell", s.samples_per_cell);
  s.named = j.value("named", s.named);
  s.transform_max = j.value("transform_max", s.transform_max);
  s.state_cap = j.value("state_cap", s.state_cap);
  s.treewidth_cap = j.value("treewidth_cap", s.treewidth_cap);
  s.threads = j.value("threads", s.threads);
  return s;
} catch (const Json::exception& e) {
  throw ParseError(std::string("corpus spec: ") + e.what());
}

std::string report_json(const VerificationReport& report, const std::string& config_json) {
  Json j;
  j["config"] = Json::parse(config_json);
  j["ok"] = report.ok();
  j["failures"] = report.failures();
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["applicable"] = c.applicable;
    cj["passed"] = c.passed;
    cj["failed"] = c.failures.size();
    cj["skipped"] = c.skipped;
    Json fs = Json::array();
    for (const auto& f : c.failures)
      fs.push_back({{"instance", f.instance}, {"graph", f.graph}, {"params", f.params}, {"detail", f.detail},
                    {"witness", f.witness}});
    cj["failures"] = fs;
    cj["notes"] = c.notes;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

std::string report_table(const VerificationReport& report) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-44s %10s %8s %8s %8s\n", "check", "applicable", "passed", "failed", "skipped");
  out << line;
  for (const auto& c : report.checks) {
    std::snprintf(line, sizeof line, "%-44s %10lld %8lld %8zu %8lld\n", c.name.c_str(), c.applicable, c.passed,
                  c.failures.size(), c.skipped);
    out << line;
    for (const auto& n : c.notes) out << "    " << n << "\n";
    for (const auto& f : c.failures)
      out << "    FAIL " << f.instance << " [" << f.params << "] " << f.detail << "\n";
  }
  out << (report.ok() ? "all checks passed\n" : std::to_string(report.failures()) + " failure(s)\n");
  return out.str();
}

}  // namespace copsrobber
