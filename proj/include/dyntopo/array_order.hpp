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

#ifndef DYNTOPO_ARRAY_ORDER_HPP
#define DYNTOPO_ARRAY_ORDER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dyntopo/bit_matrix.hpp"
#include "dyntopo/core.hpp"

namespace dyntopo {

/// Output of the pointer sweep that precedes reordering.
///
/// `anc_queue` holds u followed by the ancestors of u found in A[t..j] in
/// discovery order; `des_queue` holds v followed by the descendants of v
/// found in A[i..t].
struct Phase1Result {
  OrderIndex i = 0;  // ord(v)
  OrderIndex j = 0;  // ord(u)
  OrderIndex t = 0;  // meeting point of the two pointers
  std::vector<VertexId> anc_queue;
  std::vector<VertexId> des_queue;
  /// True when the sweep stopped on the left pointer's break.
  bool left_break = false;
};

/// Dynamic topological order over an n x n bit adjacency matrix and a
/// position array. Each invalidating edge (u, v) is handled by a two-sided
/// pointer sweep over A[ord(v)..ord(u)] followed by queue-driven
/// reinsertion into the emptied slots. Total time over any edge sequence is
/// O(n^{5/2}).
class ArrayEngine final : public DynamicOrder {
 public:
  explicit ArrayEngine(std::size_t n,
                       std::optional<std::span<const VertexId>> initial_order =
                           std::nullopt,
                       EngineOptions options = {});

  std::string_view name() const override { return "array"; }
  std::size_t vertex_count() const override { return n_; }

  InsertOutcome insert_edge(VertexId u, VertexId v) override;

  OrderIndex order_of(VertexId x) const override;
  std::vector<VertexId> current_order() const override;
  std::vector<VertexId> last_valid_order() const override;
  bool dead() const override { return dead_; }

  WorkCounters counters() const override { return counters_; }
  void reset_counters() override { counters_ = {}; }
  std::uint64_t invariant_checks() const override { return checks_; }

  bool has_edge(VertexId x, VertexId y) const { return matrix_.test(x, y); }

  // The three stages of an invalidating insertion, exposed for testing.
  // insert_edge runs them in order; callers of the individual stages must
  // respect the same preconditions.

  /// Requires ord(u) > ord(v). Does not modify the order.
  Phase1Result phase1(VertexId u, VertexId v);

  /// True iff the sweep exposed a cycle: A[t] is in both queues or some
  /// DES member has an edge into some ANC member.
  bool cross_edge_check(const Phase1Result& p1);

  /// Empties the slots of all queued vertices and refills A[i..t] from the
  /// ANC queue and A[t+1..j] from the DES queue, absorbing further
  /// predecessors / successors met on the way. Requires cross_edge_check to
  /// have returned false. Returns the number of vertices relocated from
  /// each side.
  Reordered phase2(const Phase1Result& p1);

 private:
  static constexpr VertexId kEmpty = kNoVertex;

  void require_alive() const;
  void check_vertex(VertexId x) const;
  void check(bool condition, const char* what) const;

  bool is_predecessor_of_any(VertexId x, std::span<const VertexId> queue);
  bool is_successor_of_any(VertexId x, std::span<const VertexId> queue);

  std::size_t n_;
  BitMatrix matrix_;
  std::vector<VertexId> slots_;       // A[1..n]; slots_[0] unused
  std::vector<OrderIndex> position_;  // inverse of slots_
  std::vector<std::uint32_t> anc_mark_;
  std::vector<std::uint32_t> des_mark_;
  std::uint32_t epoch_ = 0;
  std::size_t insertions_ = 0;
  bool dead_ = false;
  EngineOptions options_;
  WorkCounters counters_;
  mutable std::uint64_t checks_ = 0;
};

}  // namespace dyntopo

#endif  // DYNTOPO_ARRAY_ORDER_HPP
