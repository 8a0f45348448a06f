#pragma once

#include <optional>
#include <string>
#include <vector>

#include "copsrobber/graph.hpp"

namespace copsrobber {

/// A cycle length that may be infinite (forests have no cycles).
class CycleLength {
 public:
  static CycleLength infinite() { return CycleLength(); }
  static CycleLength finite(int value) { return CycleLength(value); }

  bool is_infinite() const { return !value_; }
  /// Throws std::logic_error when infinite.
  int value() const;
  std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }
  bool operator==(const CycleLength&) const = default;

 private:
  CycleLength() = default;
  explicit CycleLength(int v) : value_(v) {}
  std::optional<int> value_;
};

struct GraphMetrics {
  CycleLength girth = CycleLength::infinite();
  CycleLength circumference = CycleLength::infinite();
  int longest_induced_path = 0;  // vertex count
  int component_count = 0;
};

/// Vertex cap for the exhaustive searches below.
constexpr int kDefaultDeskCap = 30;

CycleLength girth(const Graph& g);
CycleLength circumference(const Graph& g, int cap = kDefaultDeskCap);
/// Vertex count of a longest induced path (0 for the empty graph).
int longest_induced_path(const Graph& g, int cap = kDefaultDeskCap);
GraphMetrics metrics(const Graph& g, int cap = kDefaultDeskCap);

/// First induced path on exactly `vertices` vertices in DFS order, if any.
std::optional<std::vector<Vertex>> find_induced_path(const Graph& g, int vertices, int cap = kDefaultDeskCap);
/// True iff g has no induced path on `l` vertices.
bool is_p_free(const Graph& g, int l, int cap = kDefaultDeskCap);
/// True iff g has an induced cycle of length >= l (l >= 3).
bool has_induced_cycle_at_least(const Graph& g, int l, int cap = kDefaultDeskCap);
/// Longest induced cycle length, infinite for forests.
CycleLength longest_induced_cycle(const Graph& g, int cap = kDefaultDeskCap);
/// No induced K_{1,3}.
bool is_claw_free(const Graph& g);

}  // namespace copsrobber
