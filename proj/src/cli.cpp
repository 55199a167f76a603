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

#include "dyntopo/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dyntopo/edge_list.hpp"
#include "dyntopo/harness.hpp"

namespace dyntopo {
namespace {

int cmd_insert(const std::string& path, Algorithm algo, std::ostream& out,
               std::ostream& err) {
  EdgeStream stream;
  try {
    stream = read_edge_list_file(path);
  } catch (const std::exception& ex) {
    err << path << ": " << ex.what() << "\n";
    return kExitUsage;
  }
  auto engine = make_engine(algo, stream.n, stream.initial_order);
  RunReport report;
  try {
    report = replay(*engine, stream);
  } catch (const std::exception& ex) {
    err << path << ": " << ex.what() << "\n";
    return kExitUsage;
  }
  if (report.cycle_at) {
    out << "CYCLE " << *report.cycle_at << "\n";
    return kExitCycle;
  }
  const std::vector<OrderIndex> pos = positions_of(engine->current_order());
  out << "ORDER\n";
  for (std::size_t x = 0; x < pos.size(); ++x) out << x << " " << pos[x] << "\n";
  return kExitOk;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err) {
  const VerifyResult result = verify_engines(options);
  if (!result.failure) {
    out << "verified " << result.streams_checked << " stream pairs at n="
        << options.n << "\n";
    return kExitOk;
  }
  const VerifyFailure& f = *result.failure;
  err << "stream " << f.stream_index << " (seed " << options.seed_base + f.stream_index
      << "): " << f.reason << "\n";
  out << "# counterexample\n";
  write_edge_list(out, f.stream);
  return kExitVerifyFailed;
}

struct BenchJob {
  Algorithm algo;
  Generator gen;
  std::size_t n;
  std::uint64_t seed;
};

int cmd_bench(const std::vector<BenchJob>& jobs, std::optional<std::size_t> m,
              std::size_t threads, const std::string& csv_path,
              std::ostream& out, std::ostream& err) {
  std::vector<std::string> rows(jobs.size());
  try {
    parallel_for(jobs.size(), threads, [&](std::size_t k) {
      const BenchJob& job = jobs[k];
      const EdgeStream stream =
          generate(job.gen, job.n, m.value_or(default_edge_count(job.n)), job.seed);
      auto engine = make_engine(job.algo, stream.n, stream.initial_order);
      RunReport report = replay(*engine, stream);
      report.algo = std::string(to_string(job.algo));
      report.gen = std::string(to_string(job.gen));
      rows[k] = to_csv_row(report);
    });
  } catch (const std::exception& ex) {
    err << "bench: " << ex.what() << "\n";
    return kExitUsage;
  }
  std::ofstream file;
  std::ostream* sink = &out;
  if (!csv_path.empty()) {
    file.open(csv_path);
    if (!file) {
      err << "cannot write " << csv_path << "\n";
      return kExitUsage;
    }
    sink = &file;
  }
  *sink << kCsvHeader << "\n";
  for (const auto& row : rows) *sink << row << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Dynamic topological order maintenance"};
  app.require_subcommand(1);

  const std::vector<std::string> algos{"array", "balanced", "naive"};
  const std::vector<std::string> gens{"random", "complete", "chain", "cycle"};

  auto* insert = app.add_subcommand("insert", "Replay an edge-list file");
  std::string path;
  std::string algo = "array";
  insert->add_option("file", path, "Edge-list file")->required();
  insert->add_option("--algo", algo, "array | balanced | naive")
      ->transform(CLI::IsMember(algos));

  const std::size_t env_threads = default_thread_count(1);

  auto* verify = app.add_subcommand("verify", "Cross-check engines on random streams");
  VerifyOptions vopts;
  vopts.threads = env_threads;
  verify->add_option("--n", vopts.n, "Vertex count")->check(CLI::PositiveNumber);
  verify->add_option("--streams", vopts.streams, "Number of stream pairs");
  verify->add_option("--seed-base", vopts.seed_base, "Seed of stream 0");
  verify->add_option("--threads", vopts.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--debug-invariants", vopts.engine.check_invariants,
                   "Run per-step invariant assertions");
  verify->add_flag("--inject-fault", vopts.engine.inject_fault)->group("");

  auto* bench = app.add_subcommand("bench", "Emit work counters as CSV");
  std::vector<std::string> bench_algos{"array"};
  std::vector<std::string> bench_gens{"random"};
  std::vector<std::size_t> bench_ns{64};
  std::vector<std::uint64_t> bench_seeds{1};
  std::optional<std::size_t> bench_m;
  std::string csv_path;
  std::size_t bench_threads = env_threads;
  bench->add_option("--algo", bench_algos, "Engines")
      ->transform(CLI::IsMember(algos));
  bench->add_option("--gen", bench_gens, "random | complete | chain | cycle")
      ->transform(CLI::IsMember(gens));
  bench->add_option("--n", bench_ns, "Vertex counts")->check(CLI::PositiveNumber);
  bench->add_option("--m", bench_m, "Edge count (random, cycle)");
  bench->add_option("--seed", bench_seeds, "Seeds");
  bench->add_option("--csv", csv_path, "Write CSV here instead of stdout");
  bench->add_option("--threads", bench_threads, "Worker threads")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  if (*insert) return cmd_insert(path, *parse_algorithm(algo), out, err);
  if (*verify) return cmd_verify(vopts, out, err);

  std::vector<BenchJob> jobs;
  for (const auto& a : bench_algos)
    for (const auto& g : bench_gens)
      for (std::size_t n : bench_ns)
        for (std::uint64_t s : bench_seeds)
          jobs.push_back({*parse_algorithm(a), *parse_generator(g), n, s});
  return cmd_bench(jobs, bench_m, bench_threads, csv_path, out, err);
}

}  // namespace dyntopo
