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

#include "dyntopo/genseq.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace dyntopo {
namespace {

std::vector<VertexId> random_permutation(std::size_t n, SplitMix64& rng) {
  std::vector<VertexId> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = static_cast<VertexId>(k);
  rng.shuffle(perm);
  return perm;
}

std::uint64_t pair_count(std::size_t n) {
  return static_cast<std::uint64_t>(n) * (n == 0 ? 0 : n - 1) / 2;
}

std::uint64_t pair_key(std::size_t a, std::size_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

// m distinct rank pairs (a, b) with a < b < n, excluding `banned`.
std::vector<std::pair<std::size_t, std::size_t>> sample_forward_pairs(
    std::size_t n, std::size_t m, SplitMix64& rng,
    const std::unordered_set<std::uint64_t>& banned = {}) {
  const std::uint64_t total = pair_count(n) - banned.size();
  if (m > total) throw std::invalid_argument("too many edges requested");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (2 * static_cast<std::uint64_t>(m) >= total) {
    std::vector<std::pair<std::size_t, std::size_t>> all;
    all.reserve(total);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!banned.contains(pair_key(a, b))) all.emplace_back(a, b);
      }
    }
    for (std::size_t k = 0; k < m; ++k) {
      std::swap(all[k], all[k + rng.uniform(all.size() - k)]);
    }
    all.resize(m);
    return all;
  }
  std::unordered_set<std::uint64_t> taken;
  out.reserve(m);
  while (out.size() < m) {
    std::size_t a = rng.uniform(n);
    std::size_t b = rng.uniform(n);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    const std::uint64_t key = pair_key(a, b);
    if (banned.contains(key) || !taken.insert(key).second) continue;
    out.emplace_back(a, b);
  }
  return out;
}

}  // namespace

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::uniform(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform bound must be positive");
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = -bound % bound;
  while (true) {
    const std::uint64_t r = next();
    if (r >= limit) return r % bound;
  }
}

EdgeStream gen_random_dag(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  if (m > pair_count(n)) throw std::invalid_argument("m exceeds n(n-1)/2");
  SplitMix64 rng(seed);
  const std::vector<VertexId> hidden = random_permutation(n, rng);
  EdgeStream s{n, {}, {}, "random", seed,
               "n=" + std::to_string(n) + " m=" + std::to_string(m)};
  for (auto [a, b] : sample_forward_pairs(n, m, rng)) {
    s.edges.push_back(Edge{hidden[a], hidden[b]});
  }
  rng.shuffle(s.edges);
  return s;
}

EdgeStream gen_complete_adversarial(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  EdgeStream s{n, {}, {}, "complete", seed, "n=" + std::to_string(n)};
  s.edges.reserve(pair_count(n));
  auto target = [n](std::size_t k) { return static_cast<VertexId>(n - 1 - k); };
  for (std::size_t d = 1; d < n; ++d) {
    for (std::size_t k = n - d; k-- > 0;) {
      s.edges.push_back(Edge{target(k), target(k + d)});
    }
  }
  return s;
}

EdgeStream gen_chain_merge(std::size_t n) {
  const std::size_t size = std::bit_ceil(std::max<std::size_t>(n, 1));
  EdgeStream s{size, {}, {}, "chain", 0, "n=" + std::to_string(size)};
  for (std::size_t width = 1; width < size; width *= 2) {
    for (std::size_t base = 0; base < size; base += 2 * width) {
      s.edges.push_back(Edge{static_cast<VertexId>(base + width - 1),
                             static_cast<VertexId>(base + width)});
    }
  }
  for (std::size_t k = size; k-- > 0;) {
    s.initial_order.push_back(static_cast<VertexId>(k));
  }
  return s;
}

EdgeStream gen_with_cycle(std::size_t n, std::size_t m, std::uint64_t seed,
                          std::size_t cycle_at) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  if (cycle_at >= m) throw std::invalid_argument("cycle_at must be < m");
  if (cycle_at > 0 && n < 2) {
    throw std::invalid_argument("a non-trivial cycle needs n >= 2");
  }
  if (cycle_at > pair_count(n)) {
    throw std::invalid_argument("acyclic prefix longer than n(n-1)/2");
  }
  SplitMix64 rng(seed);
  const std::vector<VertexId> hidden = random_permutation(n, rng);
  EdgeStream s{n, {}, {}, "cycle", seed,
               "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                   " cycle_at=" + std::to_string(cycle_at)};

  if (cycle_at == 0) {
    s.edges.push_back(Edge{hidden[0], hidden[0]});
  } else {
    const std::size_t path = std::min(cycle_at, n - 1);
    std::unordered_set<std::uint64_t> banned;
    for (std::size_t k = 0; k < path; ++k) {
      s.edges.push_back(Edge{hidden[k], hidden[k + 1]});
      banned.insert(pair_key(k, k + 1));
    }
    for (auto [a, b] : sample_forward_pairs(n, cycle_at - path, rng, banned)) {
      s.edges.push_back(Edge{hidden[a], hidden[b]});
    }
    rng.shuffle(s.edges);
    s.edges.push_back(Edge{hidden[path], hidden[0]});
  }
  while (s.edges.size() < m) {
    const auto a = static_cast<VertexId>(rng.uniform(n));
    const auto b = static_cast<VertexId>(rng.uniform(n));
    if (a != b || n == 1) s.edges.push_back(Edge{a, b});
  }
  return s;
}

}  // namespace dyntopo
