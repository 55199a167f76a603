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

#include <set>

#include "dyntopo/array_order.hpp"
#include "dyntopo/genseq.hpp"
#include "dyntopo/harness.hpp"
#include "dyntopo/oracle.hpp"

namespace dyntopo {
namespace {

bool same_stream(const EdgeStream& a, const EdgeStream& b) {
  return a.n == b.n && a.edges == b.edges && a.initial_order == b.initial_order;
}

std::set<std::pair<VertexId, VertexId>> edge_set(const EdgeStream& s) {
  std::set<std::pair<VertexId, VertexId>> out;
  for (const Edge& e : s.edges) out.insert({e.src, e.dst});
  return out;
}

TEST(SplitMix64, DeterministicAndBounded) {
  SplitMix64 a(42), b(42);
  for (int k = 0; k < 100; ++k) ASSERT_EQ(a.next(), b.next());
  for (int k = 0; k < 1000; ++k) ASSERT_LT(a.uniform(7), 7u);
}

TEST(RandomDag, Example) {
  const EdgeStream s = gen_random_dag(5, 10, 7);
  EXPECT_EQ(s.edges.size(), 10u);
  EXPECT_EQ(edge_set(s).size(), 10u);
  EXPECT_EQ(oracle::first_cycle_index(s.n, s.edges), std::nullopt);
}

TEST(RandomDag, DeterministicAcyclicDistinct) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const std::size_t n = 2 + seed % 40;
    const std::size_t m = (seed * 37) % (n * (n - 1) / 2 + 1);
    const EdgeStream a = gen_random_dag(n, m, seed);
    EXPECT_TRUE(same_stream(a, gen_random_dag(n, m, seed)));
    EXPECT_EQ(a.edges.size(), m);
    EXPECT_EQ(edge_set(a).size(), m);
    EXPECT_EQ(oracle::first_cycle_index(n, a.edges), std::nullopt);
  }
  EXPECT_FALSE(same_stream(gen_random_dag(20, 50, 1), gen_random_dag(20, 50, 2)));
}

TEST(RandomDag, EdgeCases) {
  EXPECT_TRUE(gen_random_dag(5, 0, 1).edges.empty());
  EXPECT_EQ(gen_random_dag(5, 10, 1).edges.size(), 10u);
  EXPECT_THROW(gen_random_dag(5, 11, 1), std::invalid_argument);
}

TEST(CompleteAdversarial, Shape) {
  const EdgeStream s = gen_complete_adversarial(3, 0);
  EXPECT_EQ(s.edges.size(), 3u);
  EXPECT_EQ(oracle::first_cycle_index(3, s.edges), std::nullopt);
  const EdgeStream big = gen_complete_adversarial(30, 5);
  EXPECT_EQ(edge_set(big).size(), 30u * 29 / 2);
  EXPECT_TRUE(same_stream(big, gen_complete_adversarial(30, 5)));
  // Edge lengths in the target order never decrease.
  const auto target = oracle::topo_sort(oracle::StaticGraph(30, big.edges));
  ASSERT_TRUE(target);
  const auto pos = positions_of(*target);
  for (std::size_t k = 1; k < big.edges.size(); ++k) {
    const auto len = [&](const Edge& e) { return pos[e.dst] - pos[e.src]; };
    ASSERT_LE(len(big.edges[k - 1]), len(big.edges[k]));
  }
  EXPECT_THROW(gen_complete_adversarial(1, 0), std::invalid_argument);
}

TEST(CompleteAdversarial, MovesMoreThanRandom) {
  const std::size_t n = 64;
  const EdgeStream adv = gen_complete_adversarial(n, 1);
  const EdgeStream rnd = gen_random_dag(n, adv.edges.size(), 1);
  ArrayEngine a(n), b(n);
  const RunReport ra = replay(a, adv);
  const RunReport rb = replay(b, rnd);
  EXPECT_GT(ra.counters.moved_distance, rb.counters.moved_distance);
}

TEST(ChainMerge, FourVertices) {
  const EdgeStream s = gen_chain_merge(4);
  EXPECT_EQ(s.edges.size(), 3u);
  EXPECT_EQ(edge_set(s), (std::set<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(oracle::topo_sort(oracle::StaticGraph(4, s.edges)),
            (std::vector<VertexId>{0, 1, 2, 3}));
}

TEST(ChainMerge, PaddedToPowerOfTwo) {
  for (std::size_t n : {1u, 2u, 5u, 8u, 100u}) {
    const EdgeStream s = gen_chain_merge(n);
    EXPECT_EQ(s.n & (s.n - 1), 0u);
    EXPECT_GE(s.n, n);
    EXPECT_EQ(s.edges.size(), s.n - 1);
    EXPECT_EQ(oracle::first_cycle_index(s.n, s.edges), std::nullopt);
  }
}

TEST(WithCycle, SmallExample) {
  const EdgeStream s = gen_with_cycle(3, 3, 1, 2);
  ASSERT_EQ(s.edges.size(), 3u);
  // A path a -> b -> c, then the back edge c -> a.
  const Edge back = s.edges[2];
  EXPECT_EQ(oracle::first_cycle_index(3, s.edges), 2u);
  EXPECT_EQ(oracle::topo_sort(oracle::StaticGraph(3, {s.edges.begin(), s.edges.begin() + 2}))
                ->front(),
            back.dst);
}

TEST(WithCycle, SelfLoopAtZero) {
  const EdgeStream s = gen_with_cycle(4, 3, 9, 0);
  EXPECT_EQ(s.edges.front().src, s.edges.front().dst);
  EXPECT_EQ(oracle::first_cycle_index(4, s.edges), 0u);
}

TEST(WithCycle, OracleConfirmsIndex) {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.uniform(30);
    const std::size_t cycle_at = rng.uniform(n * (n - 1) / 2 + 1);
    const std::size_t m = cycle_at + 1 + rng.uniform(10);
    const EdgeStream s = gen_with_cycle(n, m, rng.next(), cycle_at);
    ASSERT_EQ(s.edges.size(), m);
    ASSERT_EQ(oracle::first_cycle_index(n, s.edges), cycle_at);
    ASSERT_TRUE(same_stream(s, gen_with_cycle(n, m, s.seed, cycle_at)));
  }
}

TEST(WithCycle, RejectsInfeasibleParameters) {
  EXPECT_THROW(gen_with_cycle(3, 2, 1, 2), std::invalid_argument);
  EXPECT_THROW(gen_with_cycle(3, 10, 1, 4), std::invalid_argument);
  EXPECT_THROW(gen_with_cycle(1, 3, 1, 1), std::invalid_argument);
}

}  // namespace
}  // namespace dyntopo
