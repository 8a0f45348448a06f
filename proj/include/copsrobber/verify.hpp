#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "copsrobber/graph.hpp"
#include "copsrobber/solver.hpp"

namespace copsrobber {

struct CorpusSpec {
  std::uint64_t seed = 1;
  int exhaustive_max = 6;  // every connected graph up to isomorphism on 1..exhaustive_max vertices
  int random_min = 7;
  int random_max = 10;
  std::vector<double> densities{0.2, 0.4, 0.6};
  int samples_per_cell = 2;
  bool named = true;
  int transform_max = 6;  // transform checks run on connected corpus graphs up to this order
  long long state_cap = kDefaultStateCap;
  int treewidth_cap = 20;
  int threads = 1;
};

struct CorpusEntry {
  std::string id;
  Graph graph;
};

/// Connected graphs on exactly n vertices, one per isomorphism class, in a
/// fixed order (by edge count, then canonical adjacency mask).
std::vector<Graph> connected_graphs(int n);
/// Canonical form: the relabeling with the least adjacency bitmask (n <= 8).
Graph canonical_form(const Graph& g);
/// The corpus described by the spec; a pure function of it.
std::vector<CorpusEntry> build_corpus(const CorpusSpec& spec);
/// The named fixed graphs of the default corpus.
std::vector<CorpusEntry> named_graphs();

struct Failure {
  std::string instance;
  std::string graph;  // edge list
  std::string params;
  std::string detail;  // both sides of the violated relation
  std::string witness;  // minimized edge list still failing
};

struct CheckResult {
  std::string name;
  long long applicable = 0;  // instances that met the hypothesis and were checked
  long long passed = 0;
  long long skipped = 0;  // over a resource cap
  std::vector<Failure> failures;
  std::vector<std::string> notes;  // e.g. tightness witnesses
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  long long failures() const;
  void merge(VerificationReport other);
};

VerificationReport check_bounds(const CorpusSpec& spec);
VerificationReport check_transform_monotonicity(const CorpusSpec& spec);
VerificationReport check_strategies(const CorpusSpec& spec);
VerificationReport verify_all(const CorpusSpec& spec);

/// Greedy edge then vertex deletion keeping `still_fails` true.
Graph minimize_witness(const Graph& g, const std::function<bool(const Graph&)>& still_fails);

std::string report_json(const VerificationReport& report, const std::string& config_json);
std::string report_table(const VerificationReport& report);
std::string corpus_spec_json(const CorpusSpec& spec);
CorpusSpec corpus_spec_from_json(const std::string& text);

}  // namespace copsrobber
