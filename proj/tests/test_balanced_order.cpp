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

#include <algorithm>

#include "dyntopo/array_order.hpp"
#include "dyntopo/balanced_order.hpp"
#include "dyntopo/genseq.hpp"
#include "dyntopo/oracle.hpp"

namespace dyntopo {
namespace {

std::vector<VertexId> ids(std::initializer_list<VertexId> list) { return list; }

// Length of the longest common subsequence of two permutations of [0, n).
std::size_t common_subsequence(const std::vector<VertexId>& a,
                               const std::vector<VertexId>& b) {
  const auto pos = positions_of(b);
  std::vector<OrderIndex> tails;
  for (VertexId x : a) {
    auto it = std::lower_bound(tails.begin(), tails.end(), pos[x]);
    if (it == tails.end()) {
      tails.push_back(pos[x]);
    } else {
      *it = pos[x];
    }
  }
  return tails.size();
}

TEST(BalanceClass, Examples) {
  EXPECT_EQ(balance_class(3, 1, 5, 1, 16), BalanceClass::kBalanced);
  EXPECT_EQ(balance_class(3, 1, 10, 1, 16), BalanceClass::kAncSide);
  EXPECT_EQ(balance_class(10, 1, 3, 1, 16), BalanceClass::kDesSide);
  for (std::size_t size : {1u, 5u, 40u}) {
    EXPECT_EQ(balance_class(7, size, 7, 1, 1000), BalanceClass::kBalanced);
  }
  // L = 4 for n = 16: m_D = m_A + |ANC| * L is the edge of the window.
  EXPECT_EQ(balance_class(3, 2, 11, 1, 16), BalanceClass::kBalanced);
  EXPECT_EQ(balance_class(3, 2, 12, 1, 16), BalanceClass::kAncSide);
  // L = 5 for n = 17.
  EXPECT_EQ(balance_class(3, 2, 13, 1, 17), BalanceClass::kBalanced);
}

TEST(BalancedEngine, Construction) {
  BalancedEngine engine(3);
  EXPECT_TRUE(engine.list().order(0, 1));
  EXPECT_EQ(engine.current_order(), ids({0, 1, 2}));
  EXPECT_EQ(engine.order_of(2), 3u);
  EXPECT_THROW(BalancedEngine(0), std::invalid_argument);
}

TEST(BalancedEngine, VisitWithoutInEdgesAddsNothing) {
  BalancedEngine engine(4);
  engine.start_episode(3, 0);
  EXPECT_TRUE(engine.visit_ancestor(1));
  EXPECT_TRUE(engine.ancestor_heap().empty());
}

TEST(BalancedEngine, VisitSkipsVerticesAlreadyQueued) {
  const VertexId a = 0, b = 1, x = 2, y = 3, u = 5, v = 4;
  BalancedEngine engine(6);
  for (Edge e : {Edge{a, x}, Edge{b, x}, Edge{a, y}}) {
    ASSERT_FALSE(is_cycle(engine.insert_edge(e.src, e.dst)));
  }
  engine.start_episode(u, v);
  EXPECT_TRUE(engine.visit_ancestor(y));
  EXPECT_EQ(engine.ancestor_heap().size(), 1u);
  EXPECT_TRUE(engine.visit_ancestor(x));
  EXPECT_EQ(engine.ancestor_heap().size(), 2u);
  EXPECT_TRUE(engine.ancestor_heap().contains(b));
}

TEST(BalancedEngine, DescendantReachingAncestorFlagSignalsCycle) {
  BalancedEngine engine(3);
  ASSERT_FALSE(is_cycle(engine.insert_edge(0, 1)));
  ASSERT_FALSE(is_cycle(engine.insert_edge(1, 2)));
  engine.start_episode(2, 0);
  EXPECT_TRUE(engine.visit_descendant(0));
  EXPECT_FALSE(engine.visit_descendant(1));
}

TEST(BalancedEngine, AdjacentInversion) {
  const auto order = ids({1, 0});
  BalancedEngine engine(2, std::span<const VertexId>(order));
  EXPECT_TRUE(std::holds_alternative<Reordered>(engine.insert_edge(0, 1)));
  EXPECT_EQ(engine.current_order(), ids({0, 1}));
}

TEST(BalancedEngine, FourVertexTrace) {
  const auto order = ids({3, 1, 2, 0});
  BalancedEngine engine(4, std::span<const VertexId>(order));
  ASSERT_TRUE(std::holds_alternative<NoChange>(engine.insert_edge(2, 0)));
  ASSERT_TRUE(std::holds_alternative<NoChange>(engine.insert_edge(3, 1)));
  EXPECT_TRUE(std::holds_alternative<Reordered>(engine.insert_edge(0, 3)));
  const std::vector<Edge> edges{{2, 0}, {3, 1}, {0, 3}};
  EXPECT_TRUE(validate_permutation(edges, engine.current_order()));
}

TEST(BalancedEngine, ThreeCycle) {
  BalancedEngine engine(3);
  EXPECT_FALSE(is_cycle(engine.insert_edge(0, 1)));
  EXPECT_FALSE(is_cycle(engine.insert_edge(1, 2)));
  const InsertOutcome out = engine.insert_edge(2, 0);
  ASSERT_TRUE(is_cycle(out));
  EXPECT_EQ(std::get<CycleDetected>(out).edge_index, 2u);
  EXPECT_EQ(engine.last_valid_order(), ids({0, 1, 2}));
  EXPECT_THROW(engine.current_order(), DeadEngineError);
  EXPECT_THROW(engine.insert_edge(0, 2), DeadEngineError);
}

TEST(BalancedEngine, DuplicateEdgesAreFiltered) {
  BalancedEngine engine(3);
  engine.insert_edge(2, 0);
  EXPECT_TRUE(std::holds_alternative<NoChange>(engine.insert_edge(2, 0)));
  EXPECT_EQ(engine.out_degree(2), 1u);
  EXPECT_EQ(engine.in_degree(0), 1u);
}

// Reinsertion placements that are only safe when the block is anchored
// next to the last descendant or the live ancestor frontier.
TEST(BalancedEngine, ReinsertionAnchorsKeepOrderValid) {
  {
    // p0..p19, v, y1, x, w, y2, u in that order.
    const VertexId v = 20, y1 = 21, x = 22, w = 23, y2 = 24, u = 25;
    std::vector<Edge> edges{{x, u}, {v, y1}, {y1, y2}, {x, w}};
    for (VertexId p = 0; p < 20; ++p) edges.push_back({p, x});
    edges.push_back({u, v});
    for (auto algo : {0, 1}) {
      std::unique_ptr<DynamicOrder> engine;
      if (algo == 0) {
        engine = std::make_unique<BalancedEngine>(26);
      } else {
        engine = std::make_unique<ArrayEngine>(26);
      }
      for (const Edge& e : edges) ASSERT_FALSE(is_cycle(engine->insert_edge(e.src, e.dst)));
      EXPECT_TRUE(validate_permutation(edges, engine->current_order()));
    }
  }
  {
    const VertexId v = 0, w = 1, d = 2, a = 3, u = 4;
    const std::vector<Edge> edges{{v, d}, {w, d}, {a, u}, {u, v}};
    BalancedEngine engine(5);
    for (const Edge& e : edges) ASSERT_FALSE(is_cycle(engine.insert_edge(e.src, e.dst)));
    EXPECT_TRUE(validate_permutation(edges, engine.current_order()));
  }
}

TEST(BalancedEngine, RandomStreamsStayValidWithInvariants) {
  std::uint64_t checks = 0;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const std::size_t n = 4 + seed % 29;
    const EdgeStream s = gen_random_dag(n, (n * (n - 1) / 2) * (seed % 5 + 1) / 5, seed);
    BalancedEngine engine(n, std::nullopt, EngineOptions{.check_invariants = true});
    std::vector<Edge> accepted;
    for (const Edge& e : s.edges) {
      ASSERT_FALSE(is_cycle(engine.insert_edge(e.src, e.dst)));
      accepted.push_back(e);
      ASSERT_TRUE(validate_permutation(accepted, engine.current_order()))
          << "seed " << seed << " edge " << accepted.size() - 1;
    }
    checks += engine.invariant_checks();
  }
  EXPECT_GT(checks, 0u);
}

TEST(BalancedEngine, UnvisitedVerticesKeepRelativeOrder) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const EdgeStream s = gen_random_dag(30, 200, seed);
    BalancedEngine engine(30);
    for (const Edge& e : s.edges) {
      const auto before = engine.current_order();
      const InsertOutcome out = engine.insert_edge(e.src, e.dst);
      ASSERT_FALSE(is_cycle(out));
      if (!std::holds_alternative<Reordered>(out)) {
        ASSERT_EQ(engine.current_order(), before);
        continue;
      }
      const EpisodeStats& ep = engine.last_episode();
      const std::size_t visited = ep.anc_size + ep.des_size;
      ASSERT_GE(common_subsequence(before, engine.current_order()),
                before.size() - visited);
    }
  }
}

TEST(BalancedEngine, PairBudgetsOnRandomStreams) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t n = 40;
    const EdgeStream s = gen_random_dag(n, 400, seed);
    BalancedEngine engine(n);
    for (const Edge& e : s.edges) engine.insert_edge(e.src, e.dst);
    const std::uint64_t m = s.edges.size();
    EXPECT_LE(engine.vertex_pair_total(), n * (n - 1) / 2);
    EXPECT_LE(engine.edge_pair_total(), m * (m - 1) / 2);
  }
}

TEST(BalancedEngine, CountersOnlyGrow) {
  const EdgeStream s = gen_random_dag(50, 600, 3);
  BalancedEngine engine(50);
  WorkCounters prev = engine.counters();
  for (const Edge& e : s.edges) {
    engine.insert_edge(e.src, e.dst);
    const WorkCounters now = engine.counters();
    ASSERT_TRUE(dominates(now, prev));
    prev = now;
  }
  EXPECT_EQ(prev.moved_distance, 0u);
  EXPECT_GT(prev.heap_extracts, 0u);
}

}  // namespace
}  // namespace dyntopo
