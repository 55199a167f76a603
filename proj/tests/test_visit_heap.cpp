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

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "dyntopo/visit_heap.hpp"
#include "support/reference.hpp"

namespace dyntopo {
namespace {

std::vector<VertexId> ids(std::initializer_list<VertexId> list) { return list; }

TEST(VisitHeap, DuplicateInsertIsIgnored) {
  const auto order = ids({0, 1});
  OrderedList list(2, order);
  VisitHeap heap(list, HeapDirection::kMax);
  EXPECT_TRUE(heap.insert(1));
  EXPECT_FALSE(heap.insert(1));
  EXPECT_EQ(heap.size(), 1u);
}

TEST(VisitHeap, MaxHeapReturnsLatest) {
  const auto order = ids({0, 1});
  OrderedList list(2, order);
  VisitHeap heap(list, HeapDirection::kMax);
  heap.insert(0);
  heap.insert(1);
  EXPECT_EQ(heap.top(), 1u);
  EXPECT_EQ(heap.extract(), 1u);
}

TEST(VisitHeap, EmptyAndSingle) {
  const auto order = ids({0});
  OrderedList list(1, order);
  VisitHeap heap(list, HeapDirection::kMin);
  EXPECT_EQ(heap.extract(), std::nullopt);
  heap.insert(0);
  EXPECT_EQ(heap.extract(), 0u);
  EXPECT_EQ(heap.extract(), std::nullopt);
}

TEST(VisitHeap, MinHeapIgnoresInsertionOrder) {
  const VertexId a = 0, b = 1, c = 2;
  const auto order = ids({a, b, c});
  OrderedList list(3, order);
  std::vector<VertexId> perm{a, b, c};
  do {
    VisitHeap heap(list, HeapDirection::kMin);
    for (VertexId x : perm) heap.insert(x);
    EXPECT_EQ(heap.extract(), a);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(VisitHeap, ComparesThroughCurrentListOrder) {
  const auto order = ids({0, 1, 2, 3});
  OrderedList list(4, order);
  VisitHeap heap(list, HeapDirection::kMax);
  heap.insert(0);
  heap.insert(1);
  // Move a non-member past both members.
  list.erase(3);
  list.push_front(3);
  heap.insert(3);
  EXPECT_EQ(heap.extract(), 1u);
  EXPECT_EQ(heap.extract(), 0u);
  EXPECT_EQ(heap.extract(), 3u);
}

TEST(VisitHeap, ResetClearsMembership) {
  const auto order = ids({0, 1, 2});
  OrderedList list(3, order);
  VisitHeap heap(list, HeapDirection::kMin);
  heap.insert(0);
  heap.insert(2);
  heap.reset();
  EXPECT_TRUE(heap.empty());
  for (VertexId v = 0; v < 3; ++v) EXPECT_FALSE(heap.contains(v));
  EXPECT_EQ(heap.extract(), std::nullopt);
}

TEST(VisitHeap, ManyResetCyclesLeaveNoStaleMembers) {
  constexpr std::size_t kUniverse = 64;
  std::vector<VertexId> order(kUniverse);
  std::iota(order.begin(), order.end(), VertexId{0});
  OrderedList list(kUniverse, order);
  VisitHeap heap(list, HeapDirection::kMax);
  std::mt19937_64 rng(9);
  for (int cycle = 0; cycle < 10000; ++cycle) {
    heap.reset();
    std::vector<bool> fresh(kUniverse, false);
    const int count = static_cast<int>(rng() % 5);
    for (int k = 0; k < count; ++k) {
      const VertexId v = static_cast<VertexId>(rng() % kUniverse);
      heap.insert(v);
      fresh[v] = true;
    }
    for (VertexId v = 0; v < kUniverse; ++v) ASSERT_EQ(heap.contains(v), fresh[v]);
  }
}

TEST(VisitHeap, ExhaustiveInterleavingsUpToFive) {
  std::optional<std::string> mismatch;
  const auto runs = testing::run_heap_exhaustive(5, mismatch);
  EXPECT_FALSE(mismatch) << *mismatch;
  EXPECT_GT(runs, 0u);
}

TEST(VisitHeap, RandomWorkloadsMatchScanOracle) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    for (HeapDirection dir : {HeapDirection::kMax, HeapDirection::kMin}) {
      const auto r = testing::run_heap_workload(seed, 10000, dir);
      EXPECT_FALSE(r.mismatch) << *r.mismatch;
    }
  }
}

TEST(VisitHeap, ExtractComparisonsAreLogarithmic) {
  std::uint64_t comparisons = 0;
  double budget = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto r = testing::run_heap_workload(seed, 20000, HeapDirection::kMax, 2048);
    comparisons += r.comparisons;
    budget += r.log_budget;
  }
  EXPECT_LE(static_cast<double>(comparisons), 4.0 * budget);
}

}  // namespace
}  // namespace dyntopo
