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

#include "dyntopo/core.hpp"

#include <string>

namespace dyntopo {

std::string to_string(const InsertOutcome& outcome) {
  struct Visitor {
    std::string operator()(const NoChange&) const { return "NoChange"; }
    std::string operator()(const Reordered& r) const {
      return "Reordered{anc=" + std::to_string(r.moved_anc) +
             ",des=" + std::to_string(r.moved_des) + "}";
    }
    std::string operator()(const CycleDetected& c) const {
      return "CycleDetected{" + std::to_string(c.edge_index) + "}";
    }
  };
  return std::visit(Visitor{}, outcome);
}

WorkCounters& WorkCounters::operator+=(const WorkCounters& rhs) {
  matrix_probes += rhs.matrix_probes;
  pointer_steps += rhs.pointer_steps;
  cross_check_probes += rhs.cross_check_probes;
  heap_inserts += rhs.heap_inserts;
  heap_extracts += rhs.heap_extracts;
  order_queries += rhs.order_queries;
  relabels += rhs.relabels;
  moved_distance += rhs.moved_distance;
  return *this;
}

WorkCounters operator-(const WorkCounters& lhs, const WorkCounters& rhs) {
  WorkCounters d;
  d.matrix_probes = lhs.matrix_probes - rhs.matrix_probes;
  d.pointer_steps = lhs.pointer_steps - rhs.pointer_steps;
  d.cross_check_probes = lhs.cross_check_probes - rhs.cross_check_probes;
  d.heap_inserts = lhs.heap_inserts - rhs.heap_inserts;
  d.heap_extracts = lhs.heap_extracts - rhs.heap_extracts;
  d.order_queries = lhs.order_queries - rhs.order_queries;
  d.relabels = lhs.relabels - rhs.relabels;
  d.moved_distance = lhs.moved_distance - rhs.moved_distance;
  return d;
}

bool dominates(const WorkCounters& later, const WorkCounters& earlier) {
  return later.matrix_probes >= earlier.matrix_probes &&
         later.pointer_steps >= earlier.pointer_steps &&
         later.cross_check_probes >= earlier.cross_check_probes &&
         later.heap_inserts >= earlier.heap_inserts &&
         later.heap_extracts >= earlier.heap_extracts &&
         later.order_queries >= earlier.order_queries &&
         later.relabels >= earlier.relabels &&
         later.moved_distance >= earlier.moved_distance;
}

VertexOutOfRange::VertexOutOfRange(VertexId v, std::size_t n)
    : std::out_of_range("vertex " + std::to_string(v) +
                        " out of range for n=" + std::to_string(n)) {}

bool validate_order(std::span<const Edge> edges,
                    std::span<const OrderIndex> ord) {
  std::vector<bool> used(ord.size() + 1, false);
  for (OrderIndex p : ord) {
    if (p == 0 || p > ord.size() || used[p]) return false;
    used[p] = true;
  }
  for (const Edge& e : edges) {
    if (e.src >= ord.size() || e.dst >= ord.size()) return false;
    if (ord[e.src] >= ord[e.dst]) return false;
  }
  return true;
}

bool validate_permutation(std::span<const Edge> edges,
                          std::span<const VertexId> order) {
  std::vector<OrderIndex> ord;
  try {
    ord = positions_of(order);
  } catch (const std::invalid_argument&) {
    return false;
  }
  return validate_order(edges, ord);
}

std::vector<OrderIndex> positions_of(std::span<const VertexId> order) {
  std::vector<OrderIndex> ord(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    VertexId v = order[i];
    if (v >= order.size() || ord[v] != 0) {
      throw std::invalid_argument("not a permutation of [0, n)");
    }
    ord[v] = static_cast<OrderIndex>(i + 1);
  }
  return ord;
}

std::vector<VertexId> checked_initial_order(
    std::size_t n, std::optional<std::span<const VertexId>> initial) {
  if (n == 0) throw std::invalid_argument("vertex count must be >= 1");
  if (n >= kNoVertex) throw std::invalid_argument("vertex count too large");
  if (!initial) {
    std::vector<VertexId> id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<VertexId>(i);
    return id;
  }
  if (initial->size() != n) {
    throw std::invalid_argument("initial order length differs from n");
  }
  positions_of(*initial);  // throws on non-permutations
  return {initial->begin(), initial->end()};
}

}  // namespace dyntopo
