// Copyright 2026 The dyntopo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DYNTOPO_CORE_HPP
#define DYNTOPO_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dyntopo {

/// Vertex identifier in [0, n).
using VertexId = std::uint32_t;

/// 1-based position of a vertex in a topological order.
using OrderIndex = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// A directed edge. Self-loops are representable so that they can be
/// rejected as cycles.
struct Edge {
  VertexId src = 0;
  VertexId dst = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// The edge was already consistent with the order (or was a duplicate).
struct NoChange {
  friend bool operator==(const NoChange&, const NoChange&) = default;
};

/// The order was repaired. `moved_anc` / `moved_des` count the vertices
/// relocated from the ancestor and descendant side respectively.
struct Reordered {
  std::size_t moved_anc = 0;
  std::size_t moved_des = 0;

  friend bool operator==(const Reordered&, const Reordered&) = default;
};

/// The insertion closed a directed cycle. `edge_index` is the 0-based
/// ordinal of the offending insert_edge call on this engine.
struct CycleDetected {
  std::size_t edge_index = 0;

  friend bool operator==(const CycleDetected&, const CycleDetected&) = default;
};

using InsertOutcome = std::variant<NoChange, Reordered, CycleDetected>;

inline bool is_cycle(const InsertOutcome& o) {
  return std::holds_alternative<CycleDetected>(o);
}

std::string to_string(const InsertOutcome& outcome);

/// Instrumented tallies of the work an engine has performed. All fields are
/// monotonically non-decreasing until an explicit reset.
struct WorkCounters {
  std::uint64_t matrix_probes = 0;
  std::uint64_t pointer_steps = 0;
  std::uint64_t cross_check_probes = 0;
  std::uint64_t heap_inserts = 0;
  std::uint64_t heap_extracts = 0;
  std::uint64_t order_queries = 0;
  std::uint64_t relabels = 0;
  std::uint64_t moved_distance = 0;

  WorkCounters& operator+=(const WorkCounters& rhs);
  friend bool operator==(const WorkCounters&, const WorkCounters&) = default;
};

WorkCounters operator-(const WorkCounters& lhs, const WorkCounters& rhs);

/// True iff every counter in `later` is >= the same counter in `earlier`.
bool dominates(const WorkCounters& later, const WorkCounters& earlier);

class DeadEngineError : public std::logic_error {
 public:
  DeadEngineError()
      : std::logic_error("engine refused operation after a detected cycle") {}
};

class VertexOutOfRange : public std::out_of_range {
 public:
  VertexOutOfRange(VertexId v, std::size_t n);
};

/// Thrown when a debug-mode invariant check fails inside an engine.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// True iff `ord` (indexed by vertex, holding 1-based positions) is
/// injective, covers every endpoint in `edges`, and satisfies
/// ord[src] < ord[dst] for every edge.
bool validate_order(std::span<const Edge> edges,
                    std::span<const OrderIndex> ord);

/// Same check, taking the order as a permutation A[0..n) of vertices.
bool validate_permutation(std::span<const Edge> edges,
                          std::span<const VertexId> order);

/// Inverse of a permutation, as 1-based positions indexed by vertex.
/// Throws std::invalid_argument if `order` is not a permutation of [0, n).
std::vector<OrderIndex> positions_of(std::span<const VertexId> order);

/// Identity permutation, or a validated copy of `initial`.
std::vector<VertexId> checked_initial_order(
    std::size_t n, std::optional<std::span<const VertexId>> initial);

/// Options shared by all engines.
struct EngineOptions {
  /// Run the per-step invariant assertions (Phase-2 queue/slot equality,
  /// phase-1 balance, probe accounting, episode ordering). Off by default.
  bool check_invariants = false;
  /// Test-only: deliberately flip the "already ordered" comparison so the
  /// verification harness can prove it catches faults.
  bool inject_fault = false;
};

/// Common interface of the dynamic topological-order engines.
class DynamicOrder {
 public:
  virtual ~DynamicOrder() = default;

  virtual std::string_view name() const = 0;
  virtual std::size_t vertex_count() const = 0;

  /// Inserts edge (u, v) and repairs the order. Throws DeadEngineError after
  /// a cycle and VertexOutOfRange for ids >= n.
  virtual InsertOutcome insert_edge(VertexId u, VertexId v) = 0;

  /// 1-based position of `x`. Throws DeadEngineError after a cycle.
  virtual OrderIndex order_of(VertexId x) const = 0;

  /// Vertices by increasing position. Throws DeadEngineError after a cycle.
  virtual std::vector<VertexId> current_order() const = 0;

  /// The last valid order, available even after a cycle for diagnostics.
  virtual std::vector<VertexId> last_valid_order() const = 0;

  virtual bool dead() const = 0;

  virtual WorkCounters counters() const = 0;
  virtual void reset_counters() = 0;

  /// Number of individual invariant checks executed in check_invariants mode.
  virtual std::uint64_t invariant_checks() const { return 0; }
};

/// counters_snapshot: copy of the engine's current counters.
inline WorkCounters counters_snapshot(const DynamicOrder& engine) {
  return engine.counters();
}

}  // namespace dyntopo

#endif  // DYNTOPO_CORE_HPP
