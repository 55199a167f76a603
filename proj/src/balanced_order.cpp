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

#include "dyntopo/balanced_order.hpp"

#include <algorithm>
#include <bit>

namespace dyntopo {
namespace {

std::uint64_t edge_key(VertexId u, VertexId v) {
  return (std::uint64_t{u} << 32) | v;
}

}  // namespace

BalanceClass balance_class(std::uint64_t anc_edges, std::size_t anc_size,
                           std::uint64_t des_edges, std::size_t des_size,
                           std::size_t n) {
  const std::uint64_t log_n = n >= 2 ? std::bit_width(n - 1) : 0;
  const bool balanced =
      (anc_edges <= des_edges && des_edges <= anc_edges + anc_size * log_n) ||
      (des_edges <= anc_edges && anc_edges <= des_edges + des_size * log_n);
  if (balanced) return BalanceClass::kBalanced;
  return anc_edges < des_edges ? BalanceClass::kAncSide : BalanceClass::kDesSide;
}

BalancedEngine::BalancedEngine(
    std::size_t n, std::optional<std::span<const VertexId>> initial_order,
    EngineOptions options)
    : n_(n),
      out_adj_(n),
      in_adj_(n),
      list_(n, checked_initial_order(n, initial_order)),
      ancestors_(list_, HeapDirection::kMax),
      descendants_(list_, HeapDirection::kMin),
      anc_flag_(n, 0),
      des_flag_(n, 0),
      options_(options) {}

void BalancedEngine::require_alive() const {
  if (dead_) throw DeadEngineError();
}

void BalancedEngine::check_vertex(VertexId x) const {
  if (x >= n_) throw VertexOutOfRange(x, n_);
}

void BalancedEngine::check(bool condition, const char* what) const {
  ++checks_;
  if (!condition) throw InvariantViolation(what);
}

OrderIndex BalancedEngine::order_of(VertexId x) const {
  require_alive();
  check_vertex(x);
  OrderIndex rank = 1;
  for (VertexId p = list_.front(); p != x; p = list_.next(p)) ++rank;
  return rank;
}

std::vector<VertexId> BalancedEngine::current_order() const {
  require_alive();
  return list_.to_vector();
}

std::vector<VertexId> BalancedEngine::last_valid_order() const {
  return list_.to_vector();
}

WorkCounters BalancedEngine::counters() const {
  WorkCounters c;
  c.pointer_steps = edge_scans_;
  c.heap_inserts = ancestors_.inserts() + descendants_.inserts();
  c.heap_extracts = ancestors_.extracts() + descendants_.extracts();
  c.order_queries = list_.order_queries();
  c.relabels = list_.relabels();
  return c;
}

void BalancedEngine::reset_counters() {
  edge_scans_ = 0;
  ancestors_.reset_stats();
  descendants_.reset_stats();
  list_.reset_stats();
}

void BalancedEngine::append_edge(VertexId u, VertexId v) {
  edges_.insert(edge_key(u, v));
  out_adj_[u].push_back(v);
  in_adj_[v].push_back(u);
}

void BalancedEngine::start_episode(VertexId u, VertexId v) {
  ancestors_.reset();
  descendants_.reset();
  if (++epoch_ == 0) {
    std::fill(anc_flag_.begin(), anc_flag_.end(), 0);
    std::fill(des_flag_.begin(), des_flag_.end(), 0);
    epoch_ = 1;
  }
  anc_flag_[u] = epoch_;
  des_flag_[v] = epoch_;
}

bool BalancedEngine::visit_ancestor(VertexId x) {
  for (VertexId w : in_adj_[x]) {
    ++edge_scans_;
    if (des_flag_[w] == epoch_) return false;
    if (anc_flag_[w] == epoch_) continue;
    anc_flag_[w] = epoch_;
    ancestors_.insert(w);
  }
  return true;
}

bool BalancedEngine::visit_descendant(VertexId y) {
  for (VertexId z : out_adj_[y]) {
    ++edge_scans_;
    if (anc_flag_[z] == epoch_) return false;
    if (des_flag_[z] == epoch_) continue;
    des_flag_[z] = epoch_;
    descendants_.insert(z);
  }
  return true;
}

InsertOutcome BalancedEngine::insert_edge(VertexId u, VertexId v) {
  require_alive();
  check_vertex(u);
  check_vertex(v);
  const std::size_t index = insertions_++;
  if (u == v) {
    dead_ = true;
    return CycleDetected{index};
  }
  if (edges_.contains(edge_key(u, v))) return NoChange{};
  if (options_.inject_fault || list_.order(u, v)) {
    append_edge(u, v);
    return NoChange{};
  }

  // Visited / extracted vertices stay in the list until the episode ends,
  // so a pending frontier vertex can still be compared against the other
  // side. anc[k] and des[k] are in extraction order.
  start_episode(u, v);
  std::vector<VertexId> anc{u};
  std::vector<VertexId> des{v};
  std::uint64_t anc_edges = in_degree(u);
  std::uint64_t des_edges = out_degree(v);
  bool anc_visited = false;  // whether anc.back() has been visited
  bool des_visited = false;

  auto cycle = [&] {
    dead_ = true;
    return CycleDetected{index};
  };
  auto add_ancestor = [&](VertexId x) {
    if (options_.check_invariants) {
      check(list_.precedes_unmetered(des.back(), x),
            "new ancestor precedes a visited descendant");
    }
    anc.push_back(x);
    anc_edges += in_degree(x);
    anc_visited = false;
  };
  auto add_descendant = [&](VertexId y) {
    if (options_.check_invariants) {
      check(list_.precedes_unmetered(y, anc.back()),
            "new descendant follows a visited ancestor");
    }
    des.push_back(y);
    des_edges += out_degree(y);
    des_visited = false;
  };

  StepMode mode;
  std::optional<VertexId> anc_frontier;
  while (true) {
    const BalanceClass cls =
        balance_class(anc_edges, anc.size(), des_edges, des.size(), n_);
    if (cls == BalanceClass::kBalanced) {
      if (!anc_visited && !visit_ancestor(anc.back())) return cycle();
      if (!des_visited && !visit_descendant(des.back())) return cycle();
      anc_visited = des_visited = true;
      const std::optional<VertexId> x = ancestors_.extract();
      const std::optional<VertexId> y = descendants_.extract();
      if (!x || !y || list_.order(*x, *y)) {
        mode = StepMode::kBoth;
        anc_frontier = x;
        break;
      }
      add_ancestor(*x);
      add_descendant(*y);
    } else if (cls == BalanceClass::kAncSide) {
      if (!anc_visited && !visit_ancestor(anc.back())) return cycle();
      anc_visited = true;
      const std::optional<VertexId> x = ancestors_.extract();
      if (!x || list_.order(*x, des.back())) {
        mode = StepMode::kAncestorOnly;
        break;
      }
      add_ancestor(*x);
    } else {
      if (!des_visited && !visit_descendant(des.back())) return cycle();
      des_visited = true;
      const std::optional<VertexId> y = descendants_.extract();
      if (!y || list_.order(anc.back(), *y)) {
        mode = StepMode::kDescendantOnly;
        break;
      }
      add_descendant(*y);
    }
  }

  reinsert(anc, des, mode, anc_frontier);
  append_edge(u, v);

  last_episode_ = EpisodeStats{anc.size(), des.size(), anc_edges, des_edges, mode};
  vertex_pair_total_ += static_cast<std::uint64_t>(anc.size()) * des.size();
  if (mode == StepMode::kBoth) edge_pair_total_ += anc_edges * des_edges;
  return Reordered{anc.size(), des.size()};
}

void BalancedEngine::reinsert(const std::vector<VertexId>& anc,
                              const std::vector<VertexId>& des, StepMode mode,
                              std::optional<VertexId> anc_frontier) {
  // Final block: ancestors by increasing position, then descendants.
  std::vector<VertexId> block(anc.rbegin(), anc.rend());
  block.insert(block.end(), des.begin(), des.end());

  if (mode == StepMode::kDescendantOnly) {
    // The block takes the place of the earliest ancestor; its pending
    // in-neighbours all precede it.
    const VertexId keep = block.front();
    for (std::size_t k = 1; k < block.size(); ++k) list_.erase(block[k]);
    VertexId cursor = keep;
    for (std::size_t k = 1; k < block.size(); ++k) {
      list_.insert_after(block[k], cursor);
      cursor = block[k];
    }
    return;
  }

  // Otherwise the block goes right after the later of the ancestor frontier
  // and the latest descendant.
  if (mode == StepMode::kBoth && anc_frontier &&
      list_.order(des.back(), *anc_frontier)) {
    for (VertexId x : block) list_.erase(x);
    VertexId cursor = *anc_frontier;
    for (VertexId x : block) {
      list_.insert_after(x, cursor);
      cursor = x;
    }
    return;
  }
  const VertexId keep = block.back();
  for (std::size_t k = 0; k + 1 < block.size(); ++k) list_.erase(block[k]);
  for (std::size_t k = 0; k + 1 < block.size(); ++k) {
    list_.insert_before(block[k], keep);
  }
}

}  // namespace dyntopo
