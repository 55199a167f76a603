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

#ifndef DYNTOPO_ORACLE_HPP
#define DYNTOPO_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dyntopo/core.hpp"

namespace dyntopo::oracle {

/// Immutable graph with duplicate edges removed.
class StaticGraph {
 public:
  StaticGraph(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexId>& successors(VertexId x) const { return out_[x]; }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> out_;
};

/// Kahn's algorithm, always taking the smallest ready vertex id.
/// Returns nullopt when the graph has a cycle.
std::optional<std::vector<VertexId>> topo_sort(const StaticGraph& g);

/// Whether a directed path (possibly of length 0) leads from s to t.
bool reachable(const StaticGraph& g, VertexId s, VertexId t);

/// Index of the first edge whose insertion closes a cycle, tested by a
/// reachability search before every insertion.
std::optional<std::size_t> first_cycle_index(std::size_t n,
                                             std::span<const Edge> edges);

/// Baseline engine: re-sorts the whole graph after every new edge.
class NaiveEngine final : public DynamicOrder {
 public:
  explicit NaiveEngine(
      std::size_t n,
      std::optional<std::span<const VertexId>> initial_order = std::nullopt);

  std::string_view name() const override { return "naive"; }
  std::size_t vertex_count() const override { return n_; }
  InsertOutcome insert_edge(VertexId u, VertexId v) override;
  OrderIndex order_of(VertexId x) const override;
  std::vector<VertexId> current_order() const override;
  std::vector<VertexId> last_valid_order() const override { return order_; }
  bool dead() const override { return dead_; }
  WorkCounters counters() const override { return {}; }
  void reset_counters() override {}

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<bool>> present_;
  std::vector<VertexId> order_;
  std::vector<OrderIndex> position_;
  std::size_t insertions_ = 0;
  bool dead_ = false;
};

}  // namespace dyntopo::oracle

#endif  // DYNTOPO_ORACLE_HPP
