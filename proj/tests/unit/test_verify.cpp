#include <doctest.h>

#include <random>

#include "copsrobber/generators.hpp"
#include "copsrobber/io.hpp"
#include "copsrobber/metrics.hpp"
#include "copsrobber/verify.hpp"
#include "oracles.hpp"

using namespace copsrobber;

namespace {

CorpusSpec small_spec() {
  CorpusSpec spec;
  spec.exhaustive_max = 4;
  spec.random_min = 6;
  spec.random_max = 6;
  spec.densities = {0.4};
  spec.samples_per_cell = 1;
  spec.named = false;
  spec.transform_max = 4;
  return spec;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) edges.push_back({perm[a], perm[b]});
  return Graph(g.order(), edges);
}

}  // namespace

TEST_CASE("connected graph counts up to isomorphism") {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    auto graphs = connected_graphs(n);
    CHECK(graphs.size() == expected[n - 1]);
    for (const Graph& g : graphs) {
      CHECK(g.order() == n);
      CHECK(is_connected(g));
      CHECK(canonical_form(g) == g);
    }
  }
  CHECK_THROWS_AS(connected_graphs(8), CapExceeded);
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937 rng(17);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = oracle::random_graph(2 + seed % 7, 0.4, seed);
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h = relabel(g, perm);
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(canonical_form(g).size() == g.size());
  }
  CHECK_FALSE(canonical_form(gen::path(4)) == canonical_form(gen::star(3)));
}

TEST_CASE("corpus is a pure function of its spec") {
  CorpusSpec spec;
  auto a = build_corpus(spec);
  auto b = build_corpus(spec);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].graph == b[i].graph);
  }
  // 143 exhaustive, 4 orders x 3 densities x 2 samples, plus named graphs.
  CHECK(a.size() == 143 + 24 + named_graphs().size());
  spec.seed = 2;
  auto c = build_corpus(spec);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs = differs || !(a[i].graph == c[i].graph);
  CHECK(differs);
}

TEST_CASE("witness minimization") {
  // Failing predicate: the graph still contains a triangle.
  auto has_triangle = [](const Graph& g) {
    for (Vertex a = 0; a < g.order(); ++a)
      for (Vertex b = a + 1; b < g.order(); ++b)
        for (Vertex c = b + 1; c < g.order(); ++c)
          if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) return true;
    return false;
  };
  Graph w = minimize_witness(gen::complete(5), has_triangle);
  CHECK(w.order() == 3);
  CHECK(w.size() == 3);
  Graph p = minimize_witness(gen::petersen(), [](const Graph& g) { return g.size() >= 2; });
  CHECK(p.size() == 2);
  CHECK(minimize_witness(gen::path(3), [](const Graph&) { return false; }) == gen::path(3));
}

TEST_CASE("small verification run passes without vacuous checks") {
  auto report = verify_all(small_spec());
  CHECK(report.ok());
  CHECK(report.failures() == 0);
  for (const auto& c : report.checks) {
    CAPTURE(c.name);
    CHECK(c.passed + static_cast<long long>(c.failures.size()) == c.applicable);
    CHECK(c.skipped == 0);
    if (c.name.find("hat") == std::string::npos) CHECK(c.applicable > 0);
  }
}

TEST_CASE("instances over the state cap are skipped, never passed") {
  CorpusSpec spec = small_spec();
  spec.state_cap = 40;
  auto report = verify_all(spec);
  long long skipped = 0;
  for (const auto& c : report.checks) {
    CAPTURE(c.name);
    CHECK(c.failures.empty());
    CHECK(c.passed == c.applicable);
    skipped += c.skipped;
  }
  CHECK(skipped > 0);
  // Checks run once per instance account for every instance either way.
  auto full = verify_all(small_spec());
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const auto& name = report.checks[i].name;
    if (name == "dismantlable iff one cop wins" || name == "decomposition valid and exact")
      CHECK(report.checks[i].applicable + report.checks[i].skipped == full.checks[i].applicable);
  }
}

TEST_CASE("reports are identical across thread counts") {
  CorpusSpec one = small_spec(), four = small_spec();
  four.threads = 4;
  auto a = verify_all(one), b = verify_all(four);
  CHECK(report_json(a, "{}") == report_json(b, "{}"));
  CHECK(report_table(a) == report_table(b));
}

TEST_CASE("reports and corpus specs survive a JSON round trip") {
  VerificationReport r;
  CheckResult c;
  c.name = "cop <= circumference/2";
  c.applicable = 3;
  c.passed = 2;
  c.skipped = 1;
  c.failures.push_back({"exh:n4-000", "4 3\n0 1\n1 2\n2 3\n", "k=1", "cop=2 > 1", "2 1\n0 1\n"});
  c.notes.push_back("tight at tw=2: exh:n4-003");
  r.checks.push_back(c);
  const std::string config = "{\"run\":\"verify\"}";
  std::string text = report_json(r, config);
  std::string config_back;
  auto back = report_from_json(text, &config_back);
  CHECK(report_json(back, config_back) == text);
  CHECK_FALSE(back.ok());
  CHECK(back.failures() == 1);
  CHECK_THROWS_AS(report_from_json("[1, 2]"), ParseError);

  CorpusSpec spec = small_spec();
  spec.seed = 99;
  spec.densities = {0.1, 0.75};
  auto spec_back = corpus_spec_from_json(corpus_spec_json(spec));
  CHECK(corpus_spec_json(spec_back) == corpus_spec_json(spec));
  CHECK(spec_back.seed == 99);
  CHECK(spec_back.densities == spec.densities);
  CHECK_THROWS_AS(corpus_spec_from_json("{\"seed\": \"x\"}"), ParseError);
  CHECK_THROWS_AS(corpus_spec_from_json("[]"), ParseError);
  CHECK_THROWS_AS(corpus_spec_from_json("{"), ParseError);
}
