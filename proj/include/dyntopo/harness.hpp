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

#ifndef DYNTOPO_HARNESS_HPP
#define DYNTOPO_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dyntopo/core.hpp"
#include "dyntopo/genseq.hpp"

namespace dyntopo {

enum class Algorithm { kArray, kBalanced, kNaive };

std::string_view to_string(Algorithm algo);
/// Accepts "array", "balanced", "naive".
std::optional<Algorithm> parse_algorithm(std::string_view name);

std::unique_ptr<DynamicOrder> make_engine(Algorithm algo, std::size_t n,
                                          std::span<const VertexId> initial_order = {},
                                          EngineOptions options = {});

/// Result of replaying one stream through one engine.
struct RunReport {
  std::string algo;
  std::string gen;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> cycle_at;  // nullopt: completed
  WorkCounters counters;
  std::uint64_t total_ns = 0;

  std::string outcome() const;
};

/// Called after every insertion with the edge index, the outcome and the
/// engine, for per-step checks.
using StepObserver =
    std::function<void(std::size_t, const InsertOutcome&, const DynamicOrder&)>;

/// Feeds the stream to the engine until it ends or a cycle is reported.
RunReport replay(DynamicOrder& engine, const EdgeStream& stream,
                 const StepObserver& observer = {});

inline constexpr std::string_view kCsvHeader =
    "algo,gen,n,m,seed,outcome,matrixProbes,pointerSteps,crossCheckProbes,"
    "heapInserts,heapExtracts,orderQueries,relabels,movedDistance,total_ns";

std::string to_csv_row(const RunReport& report);

/// Options for the cross-engine verification sweep.
struct VerifyOptions {
  std::size_t n = 8;
  std::size_t streams = 50;
  std::uint64_t seed_base = 1;
  std::size_t threads = 1;
  EngineOptions engine;
};

struct VerifyFailure {
  std::size_t stream_index = 0;
  std::string reason;
  EdgeStream stream;
};

struct VerifyResult {
  std::size_t streams_checked = 0;
  std::optional<VerifyFailure> failure;  // the lowest failing stream index
};

/// For each stream index k, builds a random DAG stream and a stream with a
/// planted cycle from seed_base + k, replays both through every engine, and
/// checks that (a) each dynamic engine's order is valid after every
/// insertion and (b) all engines and the reachability oracle agree on the
/// first-cycle index.
VerifyResult verify_engines(const VerifyOptions& options);

/// Stream family selectable from the command line.
enum class Generator { kRandom, kComplete, kChain, kCycle };

std::string_view to_string(Generator gen);
std::optional<Generator> parse_generator(std::string_view name);

/// Builds a stream. `m` is used by kRandom and kCycle only.
EdgeStream generate(Generator gen, std::size_t n, std::size_t m,
                    std::uint64_t seed);

/// Default edge count for generators that take one.
std::size_t default_edge_count(std::size_t n);

/// Number of worker threads from DYNTOPO_THREADS, else `fallback`.
std::size_t default_thread_count(std::size_t fallback);

/// Runs fn(0..count) on up to `threads` workers.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace dyntopo

#endif  // DYNTOPO_HARNESS_HPP
