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

#include "dyntopo/array_order.hpp"

#include <algorithm>
#include <cstdlib>

namespace dyntopo {

ArrayEngine::ArrayEngine(std::size_t n,
                         std::optional<std::span<const VertexId>> initial_order,
                         EngineOptions options)
    : n_(n), matrix_(n), options_(options) {
  std::vector<VertexId> order = checked_initial_order(n, initial_order);
  slots_.assign(n + 1, kEmpty);
  position_.assign(n, 0);
  for (std::size_t p = 1; p <= n; ++p) {
    slots_[p] = order[p - 1];
    position_[order[p - 1]] = static_cast<OrderIndex>(p);
  }
  anc_mark_.assign(n, 0);
  des_mark_.assign(n, 0);
}

void ArrayEngine::require_alive() const {
  if (dead_) throw DeadEngineError();
}

void ArrayEngine::check_vertex(VertexId x) const {
  if (x >= n_) throw VertexOutOfRange(x, n_);
}

void ArrayEngine::check(bool condition, const char* what) const {
  ++checks_;
  if (!condition) throw InvariantViolation(what);
}

OrderIndex ArrayEngine::order_of(VertexId x) const {
  require_alive();
  check_vertex(x);
  return position_[x];
}

std::vector<VertexId> ArrayEngine::current_order() const {
  require_alive();
  return last_valid_order();
}

std::vector<VertexId> ArrayEngine::last_valid_order() const {
  return {slots_.begin() + 1, slots_.end()};
}

bool ArrayEngine::is_predecessor_of_any(VertexId x,
                                        std::span<const VertexId> queue) {
  for (VertexId w : queue) {
    ++counters_.matrix_probes;
    if (matrix_.test(x, w)) return true;
  }
  return false;
}

bool ArrayEngine::is_successor_of_any(VertexId x,
                                      std::span<const VertexId> queue) {
  for (VertexId w : queue) {
    ++counters_.matrix_probes;
    if (matrix_.test(w, x)) return true;
  }
  return false;
}

InsertOutcome ArrayEngine::insert_edge(VertexId u, VertexId v) {
  require_alive();
  check_vertex(u);
  check_vertex(v);
  const std::size_t index = insertions_++;
  if (u == v) {
    dead_ = true;
    return CycleDetected{index};
  }
  if (matrix_.test(u, v)) return NoChange{};
  if (options_.inject_fault || position_[u] < position_[v]) {
    matrix_.set(u, v);
    return NoChange{};
  }

  const WorkCounters before = counters_;
  Phase1Result p1 = phase1(u, v);
  if (cross_edge_check(p1)) {
    dead_ = true;
    return CycleDetected{index};
  }

  std::vector<VertexId> window;
  if (options_.check_invariants) {
    window.assign(slots_.begin() + p1.i, slots_.begin() + p1.j + 1);
  }
  const Reordered moved = phase2(p1);
  matrix_.set(u, v);

  if (options_.check_invariants) {
    // Vertices that were never queued keep their slot.
    for (OrderIndex p = p1.i; p <= p1.j; ++p) {
      VertexId before_slot = window[p - p1.i];
      if (anc_mark_[before_slot] != epoch_ && des_mark_[before_slot] != epoch_) {
        check(slots_[p] == before_slot, "unqueued vertex moved");
      }
    }
    const WorkCounters delta = counters_ - before;
    check(delta.matrix_probes <= delta.moved_distance,
          "sweep probes exceed moved distance");
  }
  return moved;
}

Phase1Result ArrayEngine::phase1(VertexId u, VertexId v) {
  if (++epoch_ == 0) {
    std::fill(anc_mark_.begin(), anc_mark_.end(), 0);
    std::fill(des_mark_.begin(), des_mark_.end(), 0);
    epoch_ = 1;
  }
  Phase1Result r;
  r.i = position_[v];
  r.j = position_[u];
  r.anc_queue.push_back(u);
  r.des_queue.push_back(v);
  anc_mark_[u] = epoch_;
  des_mark_[v] = epoch_;

  OrderIndex right = r.i;
  OrderIndex left = r.j;
  while (true) {
    --left;
    ++counters_.pointer_steps;
    bool hit = false;
    while (true) {
      hit = is_predecessor_of_any(slots_[left], r.anc_queue);
      if (hit || left == right) break;
      --left;
      ++counters_.pointer_steps;
    }
    if (hit) {
      r.anc_queue.push_back(slots_[left]);
      anc_mark_[slots_[left]] = epoch_;
    }
    if (left == right) {
      r.t = left;
      r.left_break = true;
      break;
    }

    ++right;
    ++counters_.pointer_steps;
    while (true) {
      hit = is_successor_of_any(slots_[right], r.des_queue);
      if (hit || right == left) break;
      ++right;
      ++counters_.pointer_steps;
    }
    if (hit) {
      r.des_queue.push_back(slots_[right]);
      des_mark_[slots_[right]] = epoch_;
    }
    if (right == left) {
      r.t = right;
      break;
    }
  }

  if (options_.check_invariants) {
    const VertexId at_t = slots_[r.t];
    const bool t_in_both = anc_mark_[at_t] == epoch_ && des_mark_[at_t] == epoch_;
    if (!t_in_both) {
      // Descendants of v at positions <= t balance ancestors of u at > t.
      std::size_t anc_right_of_t = 0;
      for (VertexId a : r.anc_queue) anc_right_of_t += position_[a] > r.t;
      check(r.des_queue.size() == anc_right_of_t, "phase-1 sides unbalanced");
      check(r.anc_queue.size() == r.des_queue.size() + (r.left_break ? 0 : 1),
            "phase-1 queue sizes");
    }
  }
  return r;
}

bool ArrayEngine::cross_edge_check(const Phase1Result& p1) {
  const VertexId at_t = slots_[p1.t];
  if (anc_mark_[at_t] == epoch_ && des_mark_[at_t] == epoch_) return true;
  for (VertexId x : p1.des_queue) {
    for (VertexId y : p1.anc_queue) {
      ++counters_.cross_check_probes;
      if (matrix_.test(x, y)) return true;
    }
  }
  return false;
}

Reordered ArrayEngine::phase2(const Phase1Result& p1) {
  std::vector<VertexId> anc = p1.anc_queue;
  std::vector<VertexId> des = p1.des_queue;
  for (VertexId x : anc) slots_[position_[x]] = kEmpty;
  for (VertexId x : des) slots_[position_[x]] = kEmpty;

  // Old positions stay in position_ until a vertex is placed, so the moved
  // distance can be taken at placement time.
  auto place = [&](VertexId h, OrderIndex p) {
    counters_.moved_distance +=
        static_cast<std::uint64_t>(std::abs(static_cast<long long>(position_[h]) -
                                            static_cast<long long>(p)));
    slots_[p] = h;
    position_[h] = p;
  };
  auto count_empty = [&](OrderIndex lo, OrderIndex hi) {
    std::size_t c = 0;
    for (OrderIndex p = lo; p <= hi; ++p) c += slots_[p] == kEmpty;
    return c;
  };

  // Ancestor side: t down to i.
  {
    std::size_t head = 0;
    std::size_t empty_in_range =
        options_.check_invariants ? count_empty(p1.i, p1.t) : 0;
    for (OrderIndex p = p1.t;; --p) {
      if (options_.check_invariants) {
        check(anc.size() - head == empty_in_range,
              "ANC queue size differs from empty slots");
      }
      const VertexId r = slots_[p];
      if (r == kEmpty) {
        if (head == anc.size()) throw std::logic_error("ANC queue underflow");
        place(anc[head++], p);
        --empty_in_range;
      } else if (is_predecessor_of_any(
                     r, std::span<const VertexId>(anc).subspan(head))) {
        anc.push_back(r);
        anc_mark_[r] = epoch_;
        place(anc[head++], p);
      }
      if (p == p1.i) break;
      ++counters_.pointer_steps;
    }
    if (head != anc.size()) throw std::logic_error("ANC queue not drained");
  }

  // Descendant side: t+1 up to j.
  {
    std::size_t head = 0;
    std::size_t empty_in_range =
        options_.check_invariants ? count_empty(p1.t + 1, p1.j) : 0;
    for (OrderIndex p = p1.t + 1; p <= p1.j; ++p) {
      if (options_.check_invariants) {
        check(des.size() - head == empty_in_range,
              "DES queue size differs from empty slots");
      }
      const VertexId r = slots_[p];
      if (r == kEmpty) {
        if (head == des.size()) throw std::logic_error("DES queue underflow");
        place(des[head++], p);
        --empty_in_range;
      } else if (is_successor_of_any(
                     r, std::span<const VertexId>(des).subspan(head))) {
        des.push_back(r);
        des_mark_[r] = epoch_;
        place(des[head++], p);
      }
      ++counters_.pointer_steps;
    }
    if (head != des.size()) throw std::logic_error("DES queue not drained");
  }

  return Reordered{anc.size(), des.size()};
}

}  // namespace dyntopo
