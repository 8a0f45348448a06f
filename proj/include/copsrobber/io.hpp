#pragma once

#include <string>

#include "copsrobber/game.hpp"
#include "copsrobber/transforms.hpp"
#include "copsrobber/treewidth.hpp"
#include "copsrobber/verify.hpp"

namespace copsrobber {

// JSON documents for every artifact the CLI emits. Each *_from_json accepts
// exactly what the matching writer produces and throws ParseError otherwise.

/// {"graph": edge-list text, "origin_map": [{"kind", "a", "b", "position"}, ...]}
std::string transform_json(const TransformResult& t);
TransformResult transform_from_json(const std::string& text);

/// {"width", "tree": edge-list text, "bags": [[...], ...]}
std::string decomposition_json(const TreeDecomposition& d);
TreeDecomposition decomposition_from_json(const std::string& text);

/// Trace schema: graph hash, order, k, strategies, horizon, placements, rounds,
/// outcome, capture round, violation, config echo.
std::string trace_json(const Trace& t);
Trace trace_from_json(const std::string& text);

/// Reads back what report_json writes. The config echo is returned through `config_json`.
VerificationReport report_from_json(const std::string& text, std::string* config_json = nullptr);

}  // namespace copsrobber
