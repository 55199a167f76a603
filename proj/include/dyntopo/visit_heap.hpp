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

#ifndef DYNTOPO_VISIT_HEAP_HPP
#define DYNTOPO_VISIT_HEAP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dyntopo/core.hpp"
#include "dyntopo/ordered_list.hpp"

namespace dyntopo {

enum class HeapDirection {
  kMax,  // latest item in the list first
  kMin,  // earliest item in the list first
};

/// Pairing heap of vertices keyed by their current position in an
/// OrderedList. Keys are never cached: every comparison asks the list, so
/// renumbering of the list between operations cannot corrupt heap order.
///
/// Membership uses per-vertex epoch stamps, so contains() is O(1) and
/// reset() is O(1) regardless of how many vertices were touched.
class VisitHeap {
 public:
  VisitHeap(const OrderedList& list, HeapDirection direction);

  HeapDirection direction() const { return direction_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool contains(VertexId v) const;

  /// Adds v unless already present. Returns true if v was added.
  bool insert(VertexId v);

  /// Removes and returns the extreme vertex, or nullopt when empty.
  std::optional<VertexId> extract();

  /// Extreme vertex without removing it, or nullopt when empty.
  std::optional<VertexId> top() const;

  /// Drops every element in O(1).
  void reset();

  std::uint64_t inserts() const { return inserts_; }
  std::uint64_t extracts() const { return extracts_; }
  std::uint64_t comparisons() const { return comparisons_; }
  void reset_stats() { inserts_ = extracts_ = comparisons_ = 0; }

 private:
  static constexpr std::uint32_t kNil = 0xffffffffu;

  struct Node {
    VertexId vertex;
    std::uint32_t child = kNil;
    std::uint32_t sibling = kNil;
  };

  bool before(std::uint32_t a, std::uint32_t b);  // a belongs above b
  std::uint32_t meld(std::uint32_t a, std::uint32_t b);
  void ensure_capacity(VertexId v);

  const OrderedList* list_;
  HeapDirection direction_;
  std::vector<Node> nodes_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> scratch_;
  std::uint32_t epoch_ = 1;
  std::uint32_t root_ = kNil;
  std::size_t size_ = 0;
  std::uint64_t inserts_ = 0;
  std::uint64_t extracts_ = 0;
  std::uint64_t comparisons_ = 0;
};

}  // namespace dyntopo

#endif  // DYNTOPO_VISIT_HEAP_HPP
