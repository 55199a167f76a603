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

#include "dyntopo/oracle.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <utility>

namespace dyntopo::oracle {

StaticGraph::StaticGraph(std::size_t n, std::span<const Edge> edges)
    : n_(n), out_(n) {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : edges) {
    if (e.src >= n || e.dst >= n) throw VertexOutOfRange(std::max(e.src, e.dst), n);
    if (!seen.emplace(e.src, e.dst).second) continue;
    edges_.push_back(e);
    out_[e.src].push_back(e.dst);
  }
}

std::optional<std::vector<VertexId>> topo_sort(const StaticGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indegree(n, 0);
  for (const Edge& e : g.edges()) ++indegree[e.dst];
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId x = 0; x < n; ++x) {
    if (indegree[x] == 0) ready.push(x);
  }
  std::vector<VertexId> order;
  order.reserve(n);
  while (!ready.empty()) {
    const VertexId x = ready.top();
    ready.pop();
    order.push_back(x);
    for (VertexId y : g.successors(x)) {
      if (--indegree[y] == 0) ready.push(y);
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

bool reachable(const StaticGraph& g, VertexId s, VertexId t) {
  if (s == t) return true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack{s};
  seen[s] = true;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : g.successors(x)) {
      if (y == t) return true;
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return false;
}

std::optional<std::size_t> first_cycle_index(std::size_t n,
                                             std::span<const Edge> edges) {
  std::vector<std::vector<VertexId>> out(n);
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Edge& e = edges[k];
    // Does dst already reach src?
    ++stamp;
    std::vector<VertexId> stack{e.dst};
    seen[e.dst] = stamp;
    bool closes = e.src == e.dst;
    while (!closes && !stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : out[x]) {
        if (y == e.src) {
          closes = true;
          break;
        }
        if (seen[y] != stamp) {
          seen[y] = stamp;
          stack.push_back(y);
        }
      }
    }
    if (closes) return k;
    out[e.src].push_back(e.dst);
  }
  return std::nullopt;
}

NaiveEngine::NaiveEngine(std::size_t n,
                         std::optional<std::span<const VertexId>> initial_order)
    : n_(n),
      present_(n, std::vector<bool>(n, false)),
      order_(checked_initial_order(n, initial_order)),
      position_(positions_of(order_)) {}

InsertOutcome NaiveEngine::insert_edge(VertexId u, VertexId v) {
  if (dead_) throw DeadEngineError();
  if (u >= n_) throw VertexOutOfRange(u, n_);
  if (v >= n_) throw VertexOutOfRange(v, n_);
  const std::size_t index = insertions_++;
  if (present_[u][v]) return NoChange{};
  edges_.push_back(Edge{u, v});
  auto sorted = topo_sort(StaticGraph(n_, edges_));
  if (!sorted) {
    edges_.pop_back();
    dead_ = true;
    return CycleDetected{index};
  }
  present_[u][v] = true;
  Reordered moved;
  const std::vector<OrderIndex> next = positions_of(*sorted);
  for (VertexId x = 0; x < n_; ++x) {
    if (next[x] < position_[x]) ++moved.moved_anc;
    if (next[x] > position_[x]) ++moved.moved_des;
  }
  order_ = std::move(*sorted);
  position_ = next;
  return moved;
}

OrderIndex NaiveEngine::order_of(VertexId x) const {
  if (dead_) throw DeadEngineError();
  if (x >= n_) throw VertexOutOfRange(x, n_);
  return position_[x];
}

std::vector<VertexId> NaiveEngine::current_order() const {
  if (dead_) throw DeadEngineError();
  return order_;
}

}  // namespace dyntopo::oracle
