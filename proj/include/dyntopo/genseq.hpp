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

#ifndef DYNTOPO_GENSEQ_HPP
#define DYNTOPO_GENSEQ_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dyntopo/core.hpp"

namespace dyntopo {

/// SplitMix64: a counter-based generator whose output is a pure function of
/// the seed and the draw count, identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);
  /// Independent child stream.
  SplitMix64 split() { return SplitMix64(next()); }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t k = items.size(); k > 1; --k) {
      std::swap(items[k - 1], items[uniform(k)]);
    }
  }

 private:
  std::uint64_t state_;
};

/// An edge sequence plus the order the engines should start from.
struct EdgeStream {
  std::size_t n = 0;
  std::vector<Edge> edges;
  /// Empty means the identity order.
  std::vector<VertexId> initial_order;
  std::string generator;
  std::uint64_t seed = 0;
  std::string params;
};

/// m distinct edges consistent with a hidden random order of the n
/// vertices, emitted in uniformly random order. Acyclic by construction.
EdgeStream gen_random_dag(std::size_t n, std::size_t m, std::uint64_t seed);

/// All n(n-1)/2 edges of the total order n-1 -> n-2 -> ... -> 0, i.e. the
/// reverse of the identity start order, shortest edges first and, within a
/// length, from the tail of the target order backwards. Each length-1 edge
/// drags the whole chain built so far. The seed is recorded but does not
/// change the stream.
EdgeStream gen_complete_adversarial(std::size_t n, std::uint64_t seed);

/// The chain 0 -> 1 -> ... -> N-1 (N = n rounded up to a power of two),
/// joined pairwise, then pairs of pairs, and so on, starting from the
/// reversed order so every join relocates a whole block.
EdgeStream gen_chain_merge(std::size_t n);

/// Acyclic prefix of `cycle_at` edges containing a path p0 -> ... -> pk,
/// then the back edge (pk, p0), then random filler up to m edges. When
/// cycle_at is 0 the first edge is a self-loop.
EdgeStream gen_with_cycle(std::size_t n, std::size_t m, std::uint64_t seed,
                          std::size_t cycle_at);

}  // namespace dyntopo

#endif  // DYNTOPO_GENSEQ_HPP
