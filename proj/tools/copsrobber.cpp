// Command-line entry point. Exit codes: 0 ok, 1 verification failure,
// 2 usage or input error, 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "copsrobber/game.hpp"
#include "copsrobber/generators.hpp"
#include "copsrobber/io.hpp"
#include "copsrobber/metrics.hpp"
#include "copsrobber/solver.hpp"
#include "copsrobber/strategies.hpp"
#include "copsrobber/subgraph.hpp"
#include "copsrobber/transforms.hpp"
#include "copsrobber/treewidth.hpp"
#include "copsrobber/verify.hpp"

using namespace copsrobber;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  std::string input;
  std::string output;
  std::uint64_t seed = 1;
  long long state_cap = kDefaultStateCap;
  long long horizon = 0;  // 0: engine default
  int threads = 1;
  std::string format = "text";
  // play
  int k = 1;
  std::string cop = "optimal";
  std::string robber = "optimal";
  std::string replay;
  // gen
  std::string family;
  std::vector<std::string> params;
  // transform
  std::string transform;
  int r = 1;
  int girth = 3;
  // tw
  int treewidth_cap = kDefaultTreewidthCap;
  std::string check;
  // copnum
  bool verdicts = false;
  // verify
  std::string corpus;
  int exhaustive_max = -1;
  int random_max = -1;
  int samples = -1;
  // experiment
  int n_from = 3;
  int n_to = 5;

  // Everything that determines the result; the output path does not.
  Json echo() const {
    Json j;
    j["subcommand"] = subcommand;
    j["input"] = input;
    j["seed"] = seed;
    j["state_cap"] = state_cap;
    j["horizon"] = horizon;
    j["threads"] = threads;
    j["format"] = format;
    if (subcommand == "play") {
      j["k"] = k;
      j["cop"] = cop;
      j["robber"] = robber;
    }
    if (subcommand == "verify") j["corpus"] = corpus;
    return j;
  }
};

std::string read_text(const std::string& path) {
  if (path.empty()) throw UsageError("--input is required");
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Graph read_graph(const RunConfig& cfg) { return parse_graph(read_text(cfg.input)); }

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw UsageError("cannot write '" + cfg.output + "'");
  out << text;
}

std::string graph_out(const RunConfig& cfg, const Graph& g) {
  if (cfg.format == "dot") return render_dot(g);
  if (cfg.format == "json") return Json{{"graph", render_graph(g)}, {"hash", graph_hash(g)}}.dump(2) + "\n";
  return render_graph(g);
}

int run_gen(const RunConfig& cfg) {
  std::map<std::string, std::string> params;
  for (const auto& p : cfg.params) {
    auto eq = p.find('=');
    if (eq == std::string::npos) throw UsageError("--param expects key=value, got '" + p + "'");
    params[p.substr(0, eq)] = p.substr(eq + 1);
  }
  if (cfg.family == "gnp" && !params.count("seed")) params["seed"] = std::to_string(cfg.seed);
  emit(cfg, graph_out(cfg, gen::generate(cfg.family, params)));
  return kExitOk;
}

int run_metrics(const RunConfig& cfg) {
  Graph g = read_graph(cfg);
  GraphMetrics m = metrics(g);
  Json j;
  j["order"] = g.order();
  j["size"] = g.size();
  j["components"] = m.component_count;
  j["girth"] = m.girth.to_string();
  j["circumference"] = m.circumference.to_string();
  j["longest_induced_path"] = m.longest_induced_path;
  j["longest_induced_cycle"] = longest_induced_cycle(g).to_string();
  j["bipartite"] = is_bipartite(g);
  j["claw_free"] = is_claw_free(g);
  j["hash"] = graph_hash(g);
  if (cfg.format == "json") {
    j["config"] = cfg.echo();
    emit(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    for (auto& [key, value] : j.items()) out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    emit(cfg, out.str());
  }
  return kExitOk;
}

int run_transform(const RunConfig& cfg) {
  Graph g = read_graph(cfg);
  TransformResult t;
  if (cfg.transform == "plus")
    t = clique_substitution(g);
  else if (cfg.transform == "subdivide")
    t = subdivide(g, cfg.r);
  else if (cfg.transform == "hat")
    t = hat_construction(g);
  else if (cfg.transform == "girth-lift")
    t = girth_lift(g, cfg.girth).result;
  else
    throw UsageError("unknown transform '" + cfg.transform + "' (plus, subdivide, hat, girth-lift)");
  emit(cfg, cfg.format == "json" ? transform_json(t) : graph_out(cfg, t.output));
  return kExitOk;
}

int run_tw(const RunConfig& cfg) {
  Graph g = read_graph(cfg);
  if (!cfg.check.empty()) {
    auto d = decomposition_from_json(read_text(cfg.check));
    auto c = validate_decomposition(g, d);
    emit(cfg, c.valid() ? "valid, width " + std::to_string(d.width()) + "\n" : "invalid: " + c.message + "\n");
    return c.valid() ? kExitOk : kExitVerifyFailed;
  }
  auto tw = exact_treewidth(g, cfg.treewidth_cap);
  if (cfg.format == "json")
    emit(cfg, decomposition_json(tw.decomposition));
  else
    emit(cfg, std::to_string(tw.width) + "\n");
  return kExitOk;
}

int run_copnum(const RunConfig& cfg) {
  Graph g = read_graph(cfg);
  if (!cfg.verdicts) {
    emit(cfg, std::to_string(cop_number(g, cfg.state_cap)) + "\n");
    return kExitOk;
  }
  // Per-component, per-k verdicts up to the first winning k.
  std::ostringstream out;
  int overall = 0;
  for (const auto& comp : components(g)) {
    Graph c = g.induced(comp);
    for (int k = 1;; ++k) {
      bool win = k >= c.order() || cop_win(c, k, cfg.state_cap);
      out << "component " << comp.front() << " k=" << k << ": " << (win ? "cop-win" : "robber-win") << "\n";
      if (win) {
        overall = std::max(overall, k);
        break;
      }
    }
  }
  out << "cop number " << overall << "\n";
  emit(cfg, out.str());
  return kExitOk;
}

int run_play(const RunConfig& cfg) {
  Graph g = read_graph(cfg);
  if (!cfg.replay.empty()) {
    Trace t = trace_from_json(read_text(cfg.replay));
    auto name = parse_strategy_spec(t.cop_strategy).first;
    // Subdivision traces were played on the subdivided graph.
    if (name == "subdiv+1") g = subdivide(g, std::stoi(parse_strategy_spec(t.cop_strategy).second.at("r"))).output;
    if (graph_hash(g) != t.graph_hash) throw UsageError("trace was recorded on a different graph");
    auto check = replay(g, t);
    emit(cfg, check.ok ? "replay ok: " + outcome_name(t.outcome) + "\n" : "replay failed: " + check.problem + "\n");
    return check.ok ? kExitOk : kExitVerifyFailed;
  }
  auto [name, params] = parse_strategy_spec(cfg.cop);
  Graph arena = g;
  if (name == "subdiv+1") {
    if (!params.count("r")) throw UsageError("subdiv+1 needs r=N");
    arena = subdivide(g, std::stoi(params.at("r"))).output;
  }
  auto cop = make_cop_strategy(cfg.cop, g, cfg.k, cfg.state_cap);
  auto robber = make_robber_strategy(cfg.robber, arena, cfg.k, cfg.state_cap);
  const long long horizon = cfg.horizon > 0 ? cfg.horizon : default_horizon(arena, cfg.k);
  Trace t = play(arena, cfg.k, *cop, *robber, horizon, cfg.echo().dump());
  if (cfg.format == "json" || !cfg.output.empty()) {
    emit(cfg, trace_json(t));
  } else {
    std::ostringstream out;
    out << outcome_name(t.outcome) << " after " << t.rounds.size() << " rounds";
    if (t.captured()) out << " (capture round " << t.capture_round << ")";
    if (!t.violation.empty()) out << ": " << t.violation;
    out << "\n";
    if (auto* inst = dynamic_cast<InstrumentedCopStrategy*>(cop.get()))
      for (const auto& f : inst->report().falsifications) out << "falsification: " << f << "\n";
    emit(cfg, out.str());
  }
  return kExitOk;
}

CorpusSpec corpus_from(const RunConfig& cfg) {
  CorpusSpec spec = cfg.corpus.empty() ? CorpusSpec{} : corpus_spec_from_json(read_text(cfg.corpus));
  if (cfg.corpus.empty()) spec.seed = cfg.seed;
  spec.state_cap = cfg.state_cap;
  spec.threads = cfg.threads;
  if (cfg.exhaustive_max >= 0) spec.exhaustive_max = cfg.exhaustive_max;
  if (cfg.random_max >= 0) spec.random_max = cfg.random_max;
  if (cfg.samples >= 0) spec.samples_per_cell = cfg.samples;
  return spec;
}

int run_verify(const RunConfig& cfg) {
  CorpusSpec spec = corpus_from(cfg);
  VerificationReport r = verify_all(spec);
  // Thread count does not change the report, so it is left out of the echo.
  Json config{{"run", cfg.echo()}, {"corpus", Json::parse(corpus_spec_json(spec))}};
  config["run"].erase("threads");
  config["corpus"].erase("threads");
  emit(cfg, cfg.format == "json" ? report_json(r, config.dump()) : report_table(r));
  return r.ok() ? kExitOk : kExitVerifyFailed;
}

int run_experiment(const RunConfig& cfg) {
  std::ostringstream out;
  out << "n  vertices  cop(subdivide(K_n,n))\n";
  for (int n = cfg.n_from; n <= cfg.n_to; ++n) {
    Graph g = subdivide(gen::complete(n), n).output;
    out << n << "  " << g.order() << "  " << cop_number(g, cfg.state_cap) << "\n";
  }
  emit(cfg, out.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cops and robbers: solver, strategies, and verification harness"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("--input,-i", cfg.input, "graph file in edge-list format ('-' for stdin)");
    if (needs_input) in->required();
    sub->add_option("--output,-o", cfg.output, "output path (default stdout)");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--state-cap", cfg.state_cap, "solver state cap");
    sub->add_option("--horizon", cfg.horizon, "round limit for play (default: engine default)");
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
  };

  auto* gen_cmd = app.add_subcommand("gen", "generate a graph from a named family");
  common(gen_cmd, false);
  gen_cmd->add_option("family", cfg.family, "family name")->required();
  gen_cmd->add_option("--param,-p", cfg.params, "family parameter key=value");

  auto* metrics_cmd = app.add_subcommand("metrics", "girth, circumference, induced path and cycle lengths");
  common(metrics_cmd, true);

  auto* transform_cmd = app.add_subcommand("transform", "apply plus, subdivide, hat or girth-lift");
  common(transform_cmd, true);
  transform_cmd->add_option("kind", cfg.transform, "plus, subdivide, hat, girth-lift")->required();
  transform_cmd->add_option("--r", cfg.r, "internal vertices per subdivided edge");
  transform_cmd->add_option("--girth", cfg.girth, "target girth for girth-lift");

  auto* tw_cmd = app.add_subcommand("tw", "exact treewidth and an optimal decomposition");
  common(tw_cmd, true);
  tw_cmd->add_option("--tw-cap", cfg.treewidth_cap, "largest component handled exactly");
  tw_cmd->add_option("--check", cfg.check, "validate a decomposition JSON file instead");

  auto* copnum_cmd = app.add_subcommand("copnum", "exact cop number");
  common(copnum_cmd, true);
  copnum_cmd->add_flag("--verdicts", cfg.verdicts, "print the verdict for every k tried");

  auto* play_cmd = app.add_subcommand("play", "play one match and emit its trace");
  common(play_cmd, true);
  play_cmd->add_option("--k", cfg.k, "number of cops")->check(CLI::PositiveNumber);
  play_cmd->add_option("--cop", cfg.cop, "cop strategy, e.g. lead-cop:l=4");
  play_cmd->add_option("--robber", cfg.robber, "robber strategy, e.g. random:seed=3");
  play_cmd->add_option("--replay", cfg.replay, "re-check a trace file against the input graph");

  auto* verify_cmd = app.add_subcommand("verify", "run every check over the seeded corpus");
  common(verify_cmd, false);
  verify_cmd->add_option("--corpus", cfg.corpus, "corpus spec JSON (default built-in)");
  verify_cmd->add_option("--exhaustive-max", cfg.exhaustive_max, "largest exhaustive order");
  verify_cmd->add_option("--random-max", cfg.random_max, "largest G(n,p) order");
  verify_cmd->add_option("--samples", cfg.samples, "G(n,p) samples per (n, p) cell");

  auto* exp_cmd = app.add_subcommand("experiment-subdivided-kn", "cop numbers of K_n with every edge subdivided n times");
  common(exp_cmd, false);
  exp_cmd->add_option("--n", cfg.n_from, "single n (sets both ends of the range)")->each([&](const std::string&) {
    cfg.n_to = cfg.n_from;
  });
  exp_cmd->add_option("--from", cfg.n_from, "first n");
  exp_cmd->add_option("--to", cfg.n_to, "last n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    if (cfg.subcommand == "gen") return run_gen(cfg);
    if (cfg.subcommand == "metrics") return run_metrics(cfg);
    if (cfg.subcommand == "transform") return run_transform(cfg);
    if (cfg.subcommand == "tw") return run_tw(cfg);
    if (cfg.subcommand == "copnum") return run_copnum(cfg);
    if (cfg.subcommand == "play") return run_play(cfg);
    if (cfg.subcommand == "verify") return run_verify(cfg);
    return run_experiment(cfg);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const ParseError& e) {
    // Malformed input file; the flags were fine.
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n" << app.get_subcommands().front()->help();
    return kExitUsage;
  }
}
