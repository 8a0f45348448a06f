#include "copsrobber/io.hpp"

#include <json.hpp>

namespace copsrobber {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

// Wraps field access so malformed documents surface as ParseError.
template <class F>
auto reading(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

Origin::Kind origin_kind_from_name(const std::string& name) {
  for (auto k : {Origin::Kind::kVertex, Origin::Kind::kCliqueSlot, Origin::Kind::kSubdivision, Origin::Kind::kJoinPath})
    if (origin_kind_name(k) == name) return k;
  throw ParseError("unknown origin kind '" + name + "'");
}

Trace::Outcome outcome_from_name(const std::string& name) {
  for (auto o : {Trace::Outcome::kCapture, Trace::Outcome::kRobberSurvives, Trace::Outcome::kCopForfeit,
                 Trace::Outcome::kRobberForfeit})
    if (outcome_name(o) == name) return o;
  throw ParseError("unknown outcome '" + name + "'");
}

Json vertex_or_null(Vertex v) { return v == kNoVertex ? Json(nullptr) : Json(v); }
Vertex vertex_from(const Json& j) { return j.is_null() ? kNoVertex : j.get<Vertex>(); }

}  // namespace

std::string transform_json(const TransformResult& t) {
  Json j;
  j["graph"] = render_graph(t.output);
  Json origins = Json::array();
  for (const auto& o : t.origin_map)
    origins.push_back({{"kind", origin_kind_name(o.kind)}, {"a", o.a}, {"b", o.b}, {"position", o.position}});
  j["origin_map"] = origins;
  return j.dump(2) + "\n";
}

TransformResult transform_from_json(const std::string& text) {
  Json j = parse_json(text, "transform");
  return reading("transform", [&] {
    TransformResult t{parse_graph(j.at("graph").get<std::string>()), {}};
    for (const auto& o : j.at("origin_map"))
      t.origin_map.push_back(Origin{origin_kind_from_name(o.at("kind").get<std::string>()), o.at("a").get<Vertex>(),
                                    o.at("b").get<Vertex>(), o.at("position").get<int>()});
    if (static_cast<int>(t.origin_map.size()) != t.output.order())
      throw ParseError("transform: origin_map length differs from the vertex count");
    return t;
  });
}

std::string decomposition_json(const TreeDecomposition& d) {
  Json j;
  j["width"] = d.width();
  j["tree"] = render_graph(d.tree);
  j["bags"] = d.bags;
  return j.dump(2) + "\n";
}

TreeDecomposition decomposition_from_json(const std::string& text) {
  Json j = parse_json(text, "decomposition");
  return reading("decomposition", [&] {
    TreeDecomposition d{parse_graph(j.at("tree").get<std::string>()),
                        j.at("bags").get<std::vector<std::vector<Vertex>>>()};
    if (static_cast<int>(d.bags.size()) != d.tree.order())
      throw ParseError("decomposition: bag count differs from the tree order");
    return d;
  });
}

std::string trace_json(const Trace& t) {
  Json j;
  j["graph_hash"] = t.graph_hash;
  j["order"] = t.order;
  j["k"] = t.k;
  j["cop_strategy"] = t.cop_strategy;
  j["robber_strategy"] = t.robber_strategy;
  j["horizon"] = t.horizon;
  j["cop_placement"] = t.cop_placement;
  j["robber_placement"] = vertex_or_null(t.robber_placement);
  Json rounds = Json::array();
  for (const auto& r : t.rounds) rounds.push_back({{"cops", r.cops}, {"robber", vertex_or_null(r.robber)}});
  j["rounds"] = rounds;
  j["outcome"] = outcome_name(t.outcome);
  j["capture_round"] = t.capture_round;
  j["violation"] = t.violation;
  j["config"] = t.config.empty() ? Json(nullptr) : parse_json(t.config, "trace config");
  return j.dump(2) + "\n";
}

Trace trace_from_json(const std::string& text) {
  Json j = parse_json(text, "trace");
  return reading("trace", [&] {
    Trace t;
    t.graph_hash = j.at("graph_hash").get<std::string>();
    t.order = j.at("order").get<int>();
    t.k = j.at("k").get<int>();
    t.cop_strategy = j.at("cop_strategy").get<std::string>();
    t.robber_strategy = j.at("robber_strategy").get<std::string>();
    t.horizon = j.at("horizon").get<long long>();
    t.cop_placement = j.at("cop_placement").get<std::vector<Vertex>>();
    t.robber_placement = vertex_from(j.at("robber_placement"));
    for (const auto& r : j.at("rounds"))
      t.rounds.push_back(RoundRecord{r.at("cops").get<std::vector<Vertex>>(), vertex_from(r.at("robber"))});
    t.outcome = outcome_from_name(j.at("outcome").get<std::string>());
    t.capture_round = j.at("capture_round").get<int>();
    t.violation = j.at("violation").get<std::string>();
    if (!j.at("config").is_null()) t.config = j.at("config").dump();
    return t;
  });
}

VerificationReport report_from_json(const std::string& text, std::string* config_json) {
  Json j = parse_json(text, "report");
  return reading("report", [&] {
    VerificationReport r;
    if (config_json) *config_json = j.at("config").dump();
    for (const auto& c : j.at("checks")) {
      CheckResult cr;
      cr.name = c.at("name").get<std::string>();
      cr.applicable = c.at("applicable").get<long long>();
      cr.passed = c.at("passed").get<long long>();
      cr.skipped = c.at("skipped").get<long long>();
      for (const auto& f : c.at("failures"))
        cr.failures.push_back(Failure{f.at("instance").get<std::string>(), f.at("graph").get<std::string>(),
                                      f.at("params").get<std::string>(), f.at("detail").get<std::string>(),
                                      f.at("witness").get<std::string>()});
      cr.notes = c.at("notes").get<std::vector<std::string>>();
      r.checks.push_back(std::move(cr));
    }
    return r;
  });
}

}  // namespace copsrobber
