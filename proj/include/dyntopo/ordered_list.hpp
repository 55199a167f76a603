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

#ifndef DYNTOPO_ORDERED_LIST_HPP
#define DYNTOPO_ORDERED_LIST_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dyntopo/core.hpp"

namespace dyntopo {

/// Order-maintenance list over vertex items.
///
/// Every item carries an integer tag drawn from a 62-bit space; tags
/// increase along the list, so precedence is a single comparison. When an
/// insertion finds no free tag between its neighbours, the smallest
/// aligned tag range around the insertion point whose density is below
/// T^-k (k = log2 of the range size, T = 1.4) is renumbered evenly. The
/// renumbering work is O(log n) amortized and in practice a small constant
/// for word sized tags.
///
/// Items are vertex ids in [0, capacity). Each id is present at most once.
class OrderedList {
 public:
  explicit OrderedList(std::size_t capacity);
  OrderedList(std::size_t capacity, std::span<const VertexId> initial);

  std::size_t capacity() const { return label_.size() - 1; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool contains(VertexId x) const;

  /// True iff x precedes y. Both must be present and distinct.
  bool order(VertexId x, VertexId y) const;
  /// Same as order() without counting a query; for assertions.
  bool precedes_unmetered(VertexId x, VertexId y) const;

  /// Inserts absent x immediately after / before present y.
  void insert_after(VertexId x, VertexId y);
  void insert_before(VertexId x, VertexId y);
  void push_front(VertexId x);
  void push_back(VertexId x);

  void erase(VertexId x);

  /// First / last item, or kNoVertex when empty.
  VertexId front() const;
  VertexId back() const;
  /// Neighbours of a present item, or kNoVertex at either end.
  VertexId next(VertexId x) const;
  VertexId prev(VertexId x) const;

  /// Items from front to back.
  std::vector<VertexId> to_vector() const;

  std::uint64_t relabels() const { return relabels_; }
  std::uint64_t order_queries() const { return order_queries_; }
  void reset_stats() {
    relabels_ = 0;
    order_queries_ = 0;
  }

 private:
  static constexpr std::uint32_t kNil = 0xffffffffu;

  void require_present(VertexId x, const char* op) const;
  void require_absent(VertexId x, const char* op) const;
  void link_after(std::uint32_t x, std::uint32_t anchor);
  void renumber_around(std::uint32_t x);

  std::uint32_t head() const { return static_cast<std::uint32_t>(capacity()); }

  // Index capacity() is a head sentinel with the fixed tag 0.
  std::vector<std::uint64_t> label_;
  std::vector<std::uint32_t> next_;
  std::vector<std::uint32_t> prev_;
  std::vector<bool> present_;
  std::uint32_t tail_;
  std::size_t size_ = 0;
  std::uint64_t relabels_ = 0;
  mutable std::uint64_t order_queries_ = 0;
};

}  // namespace dyntopo

#endif  // DYNTOPO_ORDERED_LIST_HPP
