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

#ifndef DYNTOPO_BALANCED_ORDER_HPP
#define DYNTOPO_BALANCED_ORDER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "dyntopo/core.hpp"
#include "dyntopo/ordered_list.hpp"
#include "dyntopo/visit_heap.hpp"

namespace dyntopo {

enum class BalanceClass {
  kBalanced,  // visit both sides
  kAncSide,   // visit the ancestor side only
  kDesSide,   // visit the descendant side only
};

/// Step kind that ended an episode.
enum class StepMode {
  kBoth,
  kAncestorOnly,
  kDescendantOnly,
};

/// Classifies the edge work done so far on each side of an episode.
/// `anc_edges` (`des_edges`) is the summed in-degree (out-degree) of the
/// ancestor (descendant) set. The sides are balanced when either sum lies
/// within size * ceil(log2 n) above the other.
BalanceClass balance_class(std::uint64_t anc_edges, std::size_t anc_size,
                           std::uint64_t des_edges, std::size_t des_size,
                           std::size_t n);

/// Summary of the most recent invalidating insertion.
struct EpisodeStats {
  std::size_t anc_size = 0;
  std::size_t des_size = 0;
  std::uint64_t anc_edges = 0;
  std::uint64_t des_edges = 0;
  StepMode final_mode = StepMode::kBoth;
};

/// Dynamic topological order kept in an order-maintenance list, with
/// adjacency lists and two pairing heaps that drive the search for
/// ancestors of u (latest first) and descendants of v (earliest first).
/// Each step visits one or both sides depending on how balanced the edge
/// work of the two sides is. Total time is O((m + n log n) sqrt(m)).
///
/// Cycles are detected with two per-vertex flags: a vertex reached both as
/// an ancestor of u and as a descendant of v closes a cycle.
class BalancedEngine final : public DynamicOrder {
 public:
  explicit BalancedEngine(
      std::size_t n,
      std::optional<std::span<const VertexId>> initial_order = std::nullopt,
      EngineOptions options = {});

  std::string_view name() const override { return "balanced"; }
  std::size_t vertex_count() const override { return n_; }

  InsertOutcome insert_edge(VertexId u, VertexId v) override;

  /// Rank by walking the list: O(n).
  OrderIndex order_of(VertexId x) const override;
  std::vector<VertexId> current_order() const override;
  std::vector<VertexId> last_valid_order() const override;
  bool dead() const override { return dead_; }

  WorkCounters counters() const override;
  void reset_counters() override;
  std::uint64_t invariant_checks() const override { return checks_; }

  const OrderedList& list() const { return list_; }
  std::size_t in_degree(VertexId x) const { return in_adj_[x].size(); }
  std::size_t out_degree(VertexId x) const { return out_adj_[x].size(); }

  const EpisodeStats& last_episode() const { return last_episode_; }
  /// Sum of |ANC| * |DES| over all completed reorderings.
  std::uint64_t vertex_pair_total() const { return vertex_pair_total_; }
  /// Sum of anc_edges * des_edges over reorderings that ended in a
  /// both-sides step.
  std::uint64_t edge_pair_total() const { return edge_pair_total_; }

  // Episode internals, exposed for testing. start_episode clears both heaps
  // and the per-vertex flags and marks u / v. The visit functions offer the
  // in-neighbours of x to the ancestor heap (out-neighbours of y to the
  // descendant heap) and return false if some vertex now carries both
  // flags, i.e. the pending edge closes a cycle.
  void start_episode(VertexId u, VertexId v);
  bool visit_ancestor(VertexId x);
  bool visit_descendant(VertexId y);
  const VisitHeap& ancestor_heap() const { return ancestors_; }
  const VisitHeap& descendant_heap() const { return descendants_; }

 private:
  void require_alive() const;
  void check_vertex(VertexId x) const;
  void check(bool condition, const char* what) const;
  void append_edge(VertexId u, VertexId v);
  void reinsert(const std::vector<VertexId>& anc,
                const std::vector<VertexId>& des, StepMode mode,
                std::optional<VertexId> anc_frontier);

  std::size_t n_;
  std::vector<std::vector<VertexId>> out_adj_;
  std::vector<std::vector<VertexId>> in_adj_;
  std::unordered_set<std::uint64_t> edges_;
  OrderedList list_;
  VisitHeap ancestors_;
  VisitHeap descendants_;
  std::vector<std::uint32_t> anc_flag_;
  std::vector<std::uint32_t> des_flag_;
  std::uint32_t epoch_ = 0;
  std::size_t insertions_ = 0;
  bool dead_ = false;
  EngineOptions options_;
  std::uint64_t edge_scans_ = 0;
  EpisodeStats last_episode_;
  std::uint64_t vertex_pair_total_ = 0;
  std::uint64_t edge_pair_total_ = 0;
  mutable std::uint64_t checks_ = 0;
};

}  // namespace dyntopo

#endif  // DYNTOPO_BALANCED_ORDER_HPP
