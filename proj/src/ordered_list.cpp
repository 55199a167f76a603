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

#include "dyntopo/ordered_list.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dyntopo {
namespace {

constexpr int kTagBits = 62;
constexpr std::uint64_t kTagLimit = std::uint64_t{1} << kTagBits;
constexpr double kDensityBase = 1.4;

}  // namespace

OrderedList::OrderedList(std::size_t capacity)
    : label_(capacity + 1, 0),
      next_(capacity + 1, kNil),
      prev_(capacity + 1, kNil),
      present_(capacity, false),
      tail_(static_cast<std::uint32_t>(capacity)) {
  if (capacity >= kNil) throw std::invalid_argument("capacity too large");
}

OrderedList::OrderedList(std::size_t capacity,
                         std::span<const VertexId> initial)
    : OrderedList(capacity) {
  const std::uint64_t gap = kTagLimit / (initial.size() + 1);
  std::uint64_t tag = gap;
  for (VertexId x : initial) {
    require_absent(x, "init");
    link_after(x, tail_);
    label_[x] = tag;
    tag += gap;
  }
}

bool OrderedList::contains(VertexId x) const {
  return x < present_.size() && present_[x];
}

void OrderedList::require_present(VertexId x, const char* op) const {
  if (!contains(x)) {
    throw std::invalid_argument(std::string(op) + ": item " +
                                std::to_string(x) + " not in list");
  }
}

void OrderedList::require_absent(VertexId x, const char* op) const {
  if (x >= present_.size()) {
    throw std::invalid_argument(std::string(op) + ": item " +
                                std::to_string(x) + " exceeds capacity");
  }
  if (present_[x]) {
    throw std::invalid_argument(std::string(op) + ": item " +
                                std::to_string(x) + " already in list");
  }
}

bool OrderedList::order(VertexId x, VertexId y) const {
  require_present(x, "order");
  require_present(y, "order");
  ++order_queries_;
  return label_[x] < label_[y];
}

bool OrderedList::precedes_unmetered(VertexId x, VertexId y) const {
  require_present(x, "order");
  require_present(y, "order");
  return label_[x] < label_[y];
}

void OrderedList::link_after(std::uint32_t x, std::uint32_t anchor) {
  const std::uint32_t after = next_[anchor];
  prev_[x] = anchor;
  next_[x] = after;
  next_[anchor] = x;
  if (after == kNil) {
    tail_ = x;
  } else {
    prev_[after] = x;
  }
  present_[x] = true;
  ++size_;
}

void OrderedList::insert_after(VertexId x, VertexId y) {
  require_absent(x, "insert_after");
  require_present(y, "insert_after");
  link_after(x, y);
  const std::uint64_t lo = label_[y];
  const std::uint64_t hi = next_[x] == kNil ? kTagLimit : label_[next_[x]];
  if (hi - lo >= 2) {
    label_[x] = lo + (hi - lo) / 2;
  } else {
    renumber_around(x);
  }
}

void OrderedList::insert_before(VertexId x, VertexId y) {
  require_present(y, "insert_before");
  const std::uint32_t before = prev_[y];
  if (before == head()) {
    push_front(x);
  } else {
    insert_after(x, before);
  }
}

void OrderedList::push_front(VertexId x) {
  require_absent(x, "push_front");
  link_after(x, head());
  const std::uint64_t hi = next_[x] == kNil ? kTagLimit : label_[next_[x]];
  if (hi >= 2) {
    label_[x] = hi / 2;
  } else {
    renumber_around(x);
  }
}

void OrderedList::push_back(VertexId x) {
  if (tail_ == head()) {
    push_front(x);
  } else {
    insert_after(x, tail_);
  }
}

void OrderedList::renumber_around(std::uint32_t x) {
  // x is linked but has no tag yet; the range is anchored at its
  // predecessor's tag (0 for the head sentinel, which never moves).
  const std::uint64_t anchor = label_[prev_[x]];
  std::uint32_t first = x;
  std::uint32_t last = x;
  std::size_t count = 1;
  for (int k = 1; k <= kTagBits; ++k) {
    const std::uint64_t width = std::uint64_t{1} << k;
    const std::uint64_t base = anchor & ~(width - 1);
    for (std::uint32_t p = prev_[first]; p != head() && label_[p] >= base;
         p = prev_[p]) {
      first = p;
      ++count;
    }
    for (std::uint32_t q = next_[last]; q != kNil && label_[q] < base + width;
         q = next_[q]) {
      last = q;
      ++count;
    }
    const std::uint64_t lowest = base == 0 ? 1 : base;
    const std::uint64_t span = base + width - lowest;
    const double threshold = std::pow(2.0 / kDensityBase, k);
    if (static_cast<double>(count) > threshold || count + 1 > span) continue;

    const std::uint64_t gap = span / (count + 1);
    std::uint64_t tag = lowest + gap / 2;
    for (std::uint32_t p = first;; p = next_[p]) {
      if (p != x && label_[p] != tag) ++relabels_;
      label_[p] = tag;
      tag += gap;
      if (p == last) break;
    }
    return;
  }
  throw std::length_error("ordered list tag space exhausted");
}

void OrderedList::erase(VertexId x) {
  require_present(x, "erase");
  const std::uint32_t before = prev_[x];
  const std::uint32_t after = next_[x];
  next_[before] = after;
  if (after == kNil) {
    tail_ = before;
  } else {
    prev_[after] = before;
  }
  prev_[x] = next_[x] = kNil;
  present_[x] = false;
  --size_;
}

VertexId OrderedList::front() const {
  const std::uint32_t f = next_[head()];
  return f == kNil ? kNoVertex : f;
}

VertexId OrderedList::back() const {
  return tail_ == head() ? kNoVertex : tail_;
}

VertexId OrderedList::next(VertexId x) const {
  require_present(x, "next");
  return next_[x] == kNil ? kNoVertex : next_[x];
}

VertexId OrderedList::prev(VertexId x) const {
  require_present(x, "prev");
  return prev_[x] == head() ? kNoVertex : prev_[x];
}

std::vector<VertexId> OrderedList::to_vector() const {
  std::vector<VertexId> out;
  out.reserve(size_);
  for (std::uint32_t p = next_[head()]; p != kNil; p = next_[p]) {
    out.push_back(p);
  }
  return out;
}

}  // namespace dyntopo
