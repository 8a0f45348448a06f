// One PASS/FAIL line per acceptance criterion. Exits nonzero if a gating criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "../unit/oracles.hpp"
#include "copsrobber/generators.hpp"
#include "copsrobber/io.hpp"
#include "copsrobber/solver.hpp"
#include "copsrobber/strategies.hpp"
#include "copsrobber/subgraph.hpp"
#include "copsrobber/transforms.hpp"
#include "copsrobber/treewidth.hpp"
#include "copsrobber/verify.hpp"

using namespace copsrobber;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Line {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void info(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

const CheckResult& find(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  throw std::logic_error("no check named " + name);
}

// Zero failures, zero skips, something applicable.
void require_clean(Line& line, const VerificationReport& r, const std::string& name) {
  const CheckResult& c = find(r, name);
  line.info(name + " " + std::to_string(c.passed) + "/" + std::to_string(c.applicable));
  line.require(c.applicable > 0, name + ": nothing applicable");
  line.require(c.failures.empty(), name + ": " + std::to_string(c.failures.size()) + " failed" +
                                       (c.failures.empty() ? "" : " (first " + c.failures[0].instance + ")"));
  line.require(c.skipped == 0, name + ": " + std::to_string(c.skipped) + " skipped");
  line.require(c.passed == c.applicable, name + ": passed != applicable");
}

bool has_note(const CheckResult& c, const std::string& prefix) {
  for (const auto& n : c.notes)
    if (n.rfind(prefix, 0) == 0) return true;
  return false;
}

Line exact_values() {
  Line line;
  struct Case {
    std::string name;
    Graph g;
    int cop, tw;
  };
  for (const Case& c : {Case{"petersen", gen::petersen(), 3, 4},
                        Case{"petersen+k6", gen::disjoint_union(gen::petersen(), gen::complete(6)), 3, 5}}) {
    auto start = Clock::now();
    const int cop = cop_number(c.g);
    const double cop_s = seconds_since(start);
    start = Clock::now();
    const int tw = exact_treewidth(c.g).width;
    const double tw_s = seconds_since(start);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s cop=%d (%.2fs) tw=%d (%.2fs)", c.name.c_str(), cop, cop_s, tw, tw_s);
    line.info(buf);
    line.require(cop == c.cop, c.name + " cop number");
    line.require(tw == c.tw, c.name + " treewidth");
    line.require(cop_s < 60 && tw_s < 60, c.name + " over a minute");
  }
  return line;
}

Line dismantlable_agreement() {
  Line line;
  int graphs = 0, disagreements = 0;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : connected_graphs(n)) {
      ++graphs;
      disagreements += is_cop_win_dismantlable(g) != cop_win(g, 1);
    }
  line.info(std::to_string(graphs) + " graphs, " + std::to_string(disagreements) + " disagreements");
  line.require(graphs == 143, "expected 143 connected graphs");
  line.require(disagreements == 0, "disagreement");
  return line;
}

Line treewidth_bound(const VerificationReport& r) {
  Line line;
  require_clean(line, r, "cop <= floor(tw/2)+1");
  const CheckResult& c = find(r, "cop <= floor(tw/2)+1");
  for (int tw = 1; tw <= 5; ++tw) line.require(has_note(c, "tight at tw=" + std::to_string(tw) + ":"), "no tight witness at tw=" + std::to_string(tw));
  line.require(has_note(c, "tight at tw=4: named:petersen"), "tw=4 witness is not Petersen");
  line.require(has_note(c, "tight at tw=5: named:petersen+k6"), "tw=5 witness is not Petersen+K6");
  for (const auto& n : c.notes)
    if (n.rfind("tight at tw=0", 0) != 0) line.info(n);
  return line;
}

Line circumference_bounds(const VerificationReport& r) {
  Line line;
  require_clean(line, r, "cop <= circumference/2");
  require_clean(line, r, "tw <= circumference-1");
  return line;
}

Line path_and_cycle_bounds(const VerificationReport& r) {
  Line line;
  require_clean(line, r, "P_l-free => cop <= l-2");
  require_clean(line, r, "no induced cycle >= l => cop <= l-2");
  require_clean(line, r, "lead-cop captures with l-2 cops");
  require_clean(line, r, "induced-cycle captures with l-2 cops");
  return line;
}

Line bipartite(const VerificationReport& r) {
  Line line;
  require_clean(line, r, "bipartite P_2l-free => cop <= l");
  require_clean(line, r, "bipartite spacing-2 captures with l cops");
  return line;
}

Line monotonicity(const VerificationReport& r) {
  Line line;
  require_clean(line, r, "cop(G+) >= cop(G)");
  require_clean(line, r, "cop(subdivide(G,r)) >= cop(G)");
  require_clean(line, r, "cop(subdivide(G,r)) <= cop(G)+1");
  require_clean(line, r, "subdiv+1 captures with cop(G)+1 cops");
  // Every connected graph up to six vertices, three values of r each.
  line.require(find(r, "cop(subdivide(G,r)) >= cop(G)").applicable >= 3 * 143, "fewer than 3 x 143 subdivision instances");
  line.require(find(r, "cop(G+) >= cop(G)").applicable >= 143, "fewer than 143 clique-substitution instances");
  return line;
}

Line hat_equality(const VerificationReport& r) {
  Line line;
  require_clean(line, r, "cop(hat G) = cop(G) when cop(G) >= 2");
  return line;
}

Line treedec(const VerificationReport& r) {
  Line line;
  require_clean(line, r, "treedec captures with floor(tw/2)+1 cops");
  auto g = gen::petersen();
  auto s = tree_decomposition_strategy(exact_treewidth(g).decomposition);
  auto table = std::make_shared<SolveTable>(SolveTable::solve(g, 3));
  auto robber = make_optimal_robber(table);
  Trace t = play(g, 3, *s, *robber, default_horizon(g, 3));
  line.info("petersen with 3 cops: " + std::string(t.captured() ? "captured in round " + std::to_string(t.capture_round) : "not captured"));
  line.require(t.captured() && replay(g, t).ok && s->report().clean(), "petersen with 3 cops");
  return line;
}

Line forbidden_forest(const VerificationReport& r) {
  Line line;
  require_clean(line, r, "thm2 captures within budget");
  require_clean(line, r, "strategy invariants hold");
  int compared = 0, mismatches = 0;
  for (const std::string name : {"claw", "spider-2-2-2", "p2+claw"}) {
    ForestPattern h = parse_pattern(name);
    for (int n = 1; n <= 6; ++n)
      for (const Graph& g : connected_graphs(n)) {
        ++compared;
        mismatches += contains_forest_subgraph(g, h).has_value() != oracle::contains_subgraph(g, h.underlying());
      }
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      Graph g = oracle::random_graph(7 + seed % 3, 0.15 + 0.05 * (seed % 4), seed);
      ++compared;
      mismatches += contains_forest_subgraph(g, h).has_value() != oracle::contains_subgraph(g, h.underlying());
    }
  }
  line.info("detector vs brute force: " + std::to_string(compared) + " graphs, " + std::to_string(mismatches) + " mismatches");
  line.require(mismatches == 0, "detector disagrees with brute force");
  return line;
}

Line subdivided_complete_probe() {
  Line line;
  for (int n = 3; n <= 5; ++n) {
    const int cop = cop_number(subdivide(gen::complete(n), n).output);
    line.info("n=" + std::to_string(n) + " cop=" + std::to_string(cop));
    line.require(cop <= 2, "cop > 2 at n=" + std::to_string(n));
  }
  return line;
}

Line reproducibility(const VerificationReport& r) {
  Line line;
  auto traces = [] {
    std::string out;
    Graph g = gen::gnp(9, 0.35, 7);
    const int k = std::max(cop_number(g), exact_treewidth(g).width / 2 + 1);
    for (const std::string cop : {"greedy", "optimal", "treedec"})
      for (const std::string robber : {"random:seed=11", "optimal", "evasive"}) {
        auto c = make_cop_strategy(cop, g, k);
        auto rb = make_robber_strategy(robber, g, k);
        out += trace_json(play(g, k, *c, *rb, default_horizon(g, k)));
      }
    return out;
  };
  line.require(traces() == traces(), "traces differ between runs");
  CorpusSpec threaded;
  threaded.threads = 4;
  const std::string config = corpus_spec_json(CorpusSpec{});
  const std::string first = report_json(r, config);
  line.require(report_json(verify_all(threaded), config) == first, "report differs at 4 threads");
  line.require(report_json(verify_all(CorpusSpec{}), config) == first, "report differs on rerun");
  line.info("9 traces and the default report compared byte for byte");
  return line;
}

}  // namespace

int main() {
  auto start = Clock::now();
  const VerificationReport report = verify_all(CorpusSpec{});
  std::printf("default corpus verified in %.1fs\n", seconds_since(start));

  struct Criterion {
    int id;
    const char* title;
    bool gating;
    std::function<Line()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "exact values on Petersen and Petersen+K6", true, exact_values},
      {2, "dismantlability agrees with the one-cop solver", true, dismantlable_agreement},
      {3, "cop <= floor(tw/2)+1 with tight witnesses", true, [&] { return treewidth_bound(report); }},
      {4, "circumference bounds", true, [&] { return circumference_bounds(report); }},
      {5, "induced path and cycle bounds with capture", true, [&] { return path_and_cycle_bounds(report); }},
      {6, "bipartite bound with spacing-2 capture", true, [&] { return bipartite(report); }},
      {7, "monotonicity under clique substitution and subdivision", true, [&] { return monotonicity(report); }},
      {8, "hat construction preserves cop number", true, [&] { return hat_equality(report); }},
      {9, "tree-decomposition strategy captures", true, [&] { return treedec(report); }},
      {10, "forbidden-forest strategy and detector", true, [&] { return forbidden_forest(report); }},
      {11, "subdivided K_n probe (informational)", false, subdivided_complete_probe},
      {12, "byte-identical reruns", true, [&] { return reproducibility(report); }},
  };
  bool ok = true;
  for (const auto& c : criteria) {
    Line line;
    try {
      line = c.run();
    } catch (const std::exception& e) {
      line.ok = false;
      line.detail = std::string("threw: ") + e.what();
    }
    std::printf("%s %2d %s: %s\n", line.ok ? "PASS" : "FAIL", c.id, c.title, line.detail.c_str());
    std::fflush(stdout);
    if (c.gating && !line.ok) ok = false;
  }
  return ok ? 0 : 1;
}
