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

#include "dyntopo/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "dyntopo/array_order.hpp"
#include "dyntopo/balanced_order.hpp"
#include "dyntopo/oracle.hpp"

namespace dyntopo {

std::string_view to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::kArray:
      return "array";
    case Algorithm::kBalanced:
      return "balanced";
    case Algorithm::kNaive:
      return "naive";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "array") return Algorithm::kArray;
  if (name == "balanced") return Algorithm::kBalanced;
  if (name == "naive") return Algorithm::kNaive;
  return std::nullopt;
}

std::unique_ptr<DynamicOrder> make_engine(Algorithm algo, std::size_t n,
                                          std::span<const VertexId> initial_order,
                                          EngineOptions options) {
  std::optional<std::span<const VertexId>> initial;
  if (!initial_order.empty()) initial = initial_order;
  switch (algo) {
    case Algorithm::kArray:
      return std::make_unique<ArrayEngine>(n, initial, options);
    case Algorithm::kBalanced:
      return std::make_unique<BalancedEngine>(n, initial, options);
    case Algorithm::kNaive:
      return std::make_unique<oracle::NaiveEngine>(n, initial);
  }
  throw std::invalid_argument("unknown algorithm");
}

std::string RunReport::outcome() const {
  return cycle_at ? "cycle:" + std::to_string(*cycle_at) : "completed";
}

RunReport replay(DynamicOrder& engine, const EdgeStream& stream,
                 const StepObserver& observer) {
  RunReport report;
  report.algo = std::string(engine.name());
  report.gen = stream.generator;
  report.n = stream.n;
  report.m = stream.edges.size();
  report.seed = stream.seed;
  std::uint64_t ns = 0;
  for (std::size_t k = 0; k < stream.edges.size(); ++k) {
    const Edge& e = stream.edges[k];
    const auto start = std::chrono::steady_clock::now();
    const InsertOutcome outcome = engine.insert_edge(e.src, e.dst);
    ns += static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now() - start)
            .count());
    if (observer) observer(k, outcome, engine);
    if (const auto* c = std::get_if<CycleDetected>(&outcome)) {
      report.cycle_at = c->edge_index;
      break;
    }
  }
  report.counters = engine.counters();
  report.total_ns = ns;
  return report;
}

std::string to_csv_row(const RunReport& r) {
  const WorkCounters& c = r.counters;
  std::string row;
  auto field = [&row](const auto& value) {
    if (!row.empty()) row += ',';
    if constexpr (std::is_convertible_v<decltype(value), std::string_view>) {
      row += value;
    } else {
      row += std::to_string(value);
    }
  };
  field(r.algo);
  field(r.gen);
  field(r.n);
  field(r.m);
  field(r.seed);
  field(r.outcome());
  field(c.matrix_probes);
  field(c.pointer_steps);
  field(c.cross_check_probes);
  field(c.heap_inserts);
  field(c.heap_extracts);
  field(c.order_queries);
  field(c.relabels);
  field(c.moved_distance);
  field(r.total_ns);
  return row;
}

namespace {

std::optional<std::string> check_stream(const EdgeStream& stream,
                                        const EngineOptions& engine_options) {
  const std::optional<std::size_t> expected =
      oracle::first_cycle_index(stream.n, stream.edges);
  for (Algorithm algo :
       {Algorithm::kArray, Algorithm::kBalanced, Algorithm::kNaive}) {
    auto engine = make_engine(algo, stream.n, stream.initial_order, engine_options);
    std::vector<Edge> accepted;
    std::optional<std::string> problem;
    RunReport report;
    try {
      report = replay(*engine, stream,
                      [&](std::size_t k, const InsertOutcome& outcome,
                          const DynamicOrder& e) {
                        if (problem || is_cycle(outcome)) return;
                        accepted.push_back(stream.edges[k]);
                        if (!validate_permutation(accepted, e.current_order())) {
                          problem = std::string(e.name()) +
                                    ": invalid order after edge " +
                                    std::to_string(k);
                        }
                      });
    } catch (const std::exception& ex) {
      return std::string(engine->name()) + ": " + ex.what();
    }
    if (problem) return problem;
    if (report.cycle_at != expected) {
      auto show = [](std::optional<std::size_t> k) {
        return k ? std::to_string(*k) : std::string("none");
      };
      return std::string(engine->name()) + ": first cycle at " +
             show(report.cycle_at) + ", oracle says " + show(expected);
    }
  }
  return std::nullopt;
}

}  // namespace

VerifyResult verify_engines(const VerifyOptions& options) {
  const std::size_t pairs = options.n * (options.n - 1) / 2;
  std::vector<std::optional<VerifyFailure>> failures(options.streams);
  parallel_for(options.streams, options.threads, [&](std::size_t k) {
    SplitMix64 rng(options.seed_base + k);
    const std::size_t m = static_cast<std::size_t>(rng.uniform(pairs + 1));
    std::vector<EdgeStream> streams;
    streams.push_back(gen_random_dag(options.n, m, rng.next()));
    const std::size_t cycle_at =
        options.n < 2 ? 0 : static_cast<std::size_t>(rng.uniform(pairs + 1));
    const std::size_t cycle_m = cycle_at + 1 + rng.uniform(options.n + 1);
    streams.push_back(gen_with_cycle(options.n, cycle_m, rng.next(), cycle_at));
    for (const EdgeStream& s : streams) {
      if (auto reason = check_stream(s, options.engine)) {
        failures[k] = VerifyFailure{k, *reason, s};
        return;
      }
    }
  });
  VerifyResult result;
  result.streams_checked = options.streams;
  for (auto& f : failures) {
    if (f) {
      result.failure = std::move(f);
      break;
    }
  }
  return result;
}

std::string_view to_string(Generator gen) {
  switch (gen) {
    case Generator::kRandom:
      return "random";
    case Generator::kComplete:
      return "complete";
    case Generator::kChain:
      return "chain";
    case Generator::kCycle:
      return "cycle";
  }
  return "?";
}

std::optional<Generator> parse_generator(std::string_view name) {
  if (name == "random") return Generator::kRandom;
  if (name == "complete") return Generator::kComplete;
  if (name == "chain") return Generator::kChain;
  if (name == "cycle") return Generator::kCycle;
  return std::nullopt;
}

std::size_t default_edge_count(std::size_t n) {
  return std::min<std::size_t>(4 * n, n * (n - 1) / 2);
}

EdgeStream generate(Generator gen, std::size_t n, std::size_t m,
                    std::uint64_t seed) {
  switch (gen) {
    case Generator::kRandom:
      return gen_random_dag(n, m, seed);
    case Generator::kComplete:
      return gen_complete_adversarial(n, seed);
    case Generator::kChain:
      return gen_chain_merge(n);
    case Generator::kCycle:
      return gen_with_cycle(n, std::max<std::size_t>(m, 1), seed,
                            std::min<std::size_t>(m / 2, n * (n - 1) / 2));
  }
  throw std::invalid_argument("unknown generator");
}

std::size_t default_thread_count(std::size_t fallback) {
  if (const char* env = std::getenv("DYNTOPO_THREADS")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return std::max<std::size_t>(fallback, 1);
}

void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& fn) {
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (threads == 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> workers;
    for (std::size_t t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t k; (k = next.fetch_add(1)) < count;) {
          try {
            fn(k);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace dyntopo
