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

#include "dyntopo/visit_heap.hpp"

#include <algorithm>

namespace dyntopo {

VisitHeap::VisitHeap(const OrderedList& list, HeapDirection direction)
    : list_(&list), direction_(direction), stamp_(list.capacity(), 0) {}

void VisitHeap::ensure_capacity(VertexId v) {
  if (v >= stamp_.size()) stamp_.resize(std::max<std::size_t>(v + 1, list_->capacity()), 0);
}

bool VisitHeap::contains(VertexId v) const {
  return v < stamp_.size() && stamp_[v] == epoch_;
}

bool VisitHeap::before(std::uint32_t a, std::uint32_t b) {
  ++comparisons_;
  const VertexId va = nodes_[a].vertex;
  const VertexId vb = nodes_[b].vertex;
  return direction_ == HeapDirection::kMax ? list_->order(vb, va)
                                           : list_->order(va, vb);
}

std::uint32_t VisitHeap::meld(std::uint32_t a, std::uint32_t b) {
  if (a == kNil) return b;
  if (b == kNil) return a;
  if (before(b, a)) std::swap(a, b);
  nodes_[b].sibling = nodes_[a].child;
  nodes_[a].child = b;
  return a;
}

bool VisitHeap::insert(VertexId v) {
  ensure_capacity(v);
  if (stamp_[v] == epoch_) return false;
  stamp_[v] = epoch_;
  nodes_.push_back(Node{v});
  root_ = meld(root_, static_cast<std::uint32_t>(nodes_.size() - 1));
  ++size_;
  ++inserts_;
  return true;
}

std::optional<VertexId> VisitHeap::top() const {
  if (root_ == kNil) return std::nullopt;
  return nodes_[root_].vertex;
}

std::optional<VertexId> VisitHeap::extract() {
  ++extracts_;
  if (root_ == kNil) return std::nullopt;
  const VertexId result = nodes_[root_].vertex;
  stamp_[result] = epoch_ - 1;

  // Two-pass pairing of the root's children.
  scratch_.clear();
  for (std::uint32_t c = nodes_[root_].child; c != kNil;) {
    const std::uint32_t next = nodes_[c].sibling;
    nodes_[c].sibling = kNil;
    scratch_.push_back(c);
    c = next;
  }
  std::size_t pairs = 0;
  for (std::size_t k = 0; k + 1 < scratch_.size(); k += 2) {
    scratch_[pairs++] = meld(scratch_[k], scratch_[k + 1]);
  }
  if (scratch_.size() % 2 == 1) scratch_[pairs++] = scratch_.back();
  std::uint32_t merged = kNil;
  for (std::size_t k = pairs; k-- > 0;) merged = meld(scratch_[k], merged);

  root_ = merged;
  --size_;
  return result;
}

void VisitHeap::reset() {
  nodes_.clear();
  root_ = kNil;
  size_ = 0;
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
}

}  // namespace dyntopo
