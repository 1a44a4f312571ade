// Copyright 2026 The Marshal Authors
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

// Command-line front end: solve, oracle, gen and bench.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "marshal/bench.h"
#include "marshal/generator.h"
#include "marshal/instance.h"
#include "marshal/oracle.h"
#include "marshal/pipeline.h"
#include "marshal/placement.h"

namespace {

using namespace marshal;

void PrintOrder(const Instance& instance, const std::vector<int>& order) {
  std::cout << "order =";
  for (int b : order) std::cout << ' ' << instance.label_of(b);
  std::cout << '\n';
}

void PrintAssignment(const std::vector<int>& track_of, int tracks) {
  for (int k = 1; k <= tracks; ++k) {
    std::cout << "track " << k << ':';
    for (size_t r = 0; r < track_of.size(); ++r) {
      if (track_of[r] == k) std::cout << ' ' << r + 1;
    }
    std::cout << '\n';
  }
}

int RunSolve(const std::string& path, const std::string& method_name,
             bool no_shrink, bool print_assignment, bool lemmas, int max_t) {
  const auto method = ParseMethod(method_name);
  if (!method) {
    std::cerr << "error: unknown method '" << method_name << "'\n";
    return 2;
  }
  const Instance instance = ReadInstanceFile(path);
  PipelineOptions options;
  options.method = *method;
  options.shrink = !no_shrink;
  options.bottom_up_lemmas = lemmas;
  options.oracle_max_t = max_t;
  const PipelineResult out = SolveInstance(instance, options);
  const SolveResult& result = out.result;

  std::cout << "k_opt = " << result.k_opt << '\n';
  PrintOrder(instance, result.order);
  std::cout << "n = " << instance.n() << ", t = " << instance.t()
            << ", solved n = " << out.reduced_n << '\n';
  if (*method != Method::kOracle) {
    std::cout << "entries_computed = " << result.stats.entries_computed
              << ", entries_filled_by_lemma = "
              << result.stats.entries_filled_by_lemma
              << ", min_evaluations = " << result.stats.min_evaluations << '\n';
  }
  std::cout << "time = "
            << std::chrono::duration<double>(result.stats.wall_time).count()
            << " s\n";
  if (print_assignment) PrintAssignment(result.track_of, result.k_opt);
  return 0;
}

int RunOracle(const std::string& path, int max_t) {
  const Instance instance = ReadInstanceFile(path);
  const OracleResult result = OracleMin(instance, max_t);
  std::cout << "k_opt = " << result.k_opt << '\n';
  std::cout << "evaluated = " << result.evaluated << '\n';
  std::cout << "optimal orders (first " << result.best_orders.size() << "):\n";
  for (const auto& order : result.best_orders) {
    std::cout << ' ';
    for (int b : order) std::cout << ' ' << instance.label_of(b);
    std::cout << '\n';
  }
  return 0;
}

int RunGen(const GenSpec& spec, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  const auto instances = Generate(spec);
  for (int k = 0; k < spec.count; ++k) {
    const auto path = std::filesystem::path(out_dir) / InstanceFileName(spec, k);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << path << '\n';
      return 1;
    }
    out << EmitInstance(instances[k]);
    std::cout << path.string() << '\n';
  }
  return 0;
}

int RunBenchCommand(BenchConfig config, const std::vector<std::string>& methods,
                    const std::string& format) {
  config.methods.clear();
  for (const auto& name : methods) {
    const auto method = ParseMethod(name);
    if (!method) {
      std::cerr << "error: unknown method '" << name << "'\n";
      return 2;
    }
    config.methods.push_back(*method);
  }
  for (int n : config.n_list) {
    for (int t : config.t_list) {
      if (t < 1 || n < t) {
        std::cerr << "error: grid cell n = " << n << ", t = " << t
                  << " needs n >= t >= 1\n";
        return 2;
      }
    }
  }
  const auto rows = RunBench(config);
  std::cout << (format == "csv" ? FormatCsv(rows) : FormatText(rows));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for the train marshalling problem"};
  app.require_subcommand(1);

  std::string path;
  std::string method = "memoized";
  bool no_shrink = false;
  bool print_assignment = false;
  bool lemmas = false;
  int max_t = kDefaultOracleMaxT;
  auto* solve = app.add_subcommand("solve", "Solve one instance file");
  solve->add_option("file", path, "Instance file")->required();
  solve->add_option("--method", method, "memoized, bottomup or oracle")
      ->check(CLI::IsMember({"memoized", "bottomup", "oracle"}));
  solve->add_flag("--no-shrink", no_shrink, "Skip run-collapsing preprocessing");
  solve->add_flag("--print-assignment", print_assignment,
                  "Print the railcars of each track");
  solve->add_flag("--bottomup-lemmas", lemmas,
                  "Bottom-up: skip unneeded rows and share equal-value rows");
  solve->add_option("--max-t", max_t, "Oracle refuses instances with larger t");

  auto* oracle = app.add_subcommand("oracle", "Brute force over all block orders");
  oracle->add_option("file", path, "Instance file")->required();
  oracle->add_option("--max-t", max_t, "Refuse instances with larger t");

  GenSpec spec;
  std::string out_dir = ".";
  auto* gen = app.add_subcommand("gen", "Generate random instances");
  gen->add_option("--n", spec.n, "Railcars")->required()->check(CLI::PositiveNumber);
  gen->add_option("--t", spec.t, "Destinations")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", spec.seed, "Base seed")->required();
  gen->add_option("--count", spec.count, "Number of instances")
      ->check(CLI::PositiveNumber);
  gen->add_option("--out", out_dir, "Output directory");

  BenchConfig config;
  std::vector<std::string> methods = {"memoized"};
  std::string format = "text";
  bool bench_no_shrink = false;
  auto* bench = app.add_subcommand("bench", "Time solvers on generated instances");
  bench->add_option("--n-list", config.n_list, "Railcar counts")->delimiter(',');
  bench->add_option("--t-list", config.t_list, "Destination counts")->delimiter(',');
  bench->add_option("--count", config.count, "Instances per cell")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", config.seed, "Base seed");
  bench->add_option("--methods", methods, "memoized, bottomup, oracle")
      ->delimiter(',');
  bench->add_option("--time-limit", config.time_limit_seconds,
                    "Seconds per instance");
  bench->add_option("--format", format)->check(CLI::IsMember({"csv", "text"}));
  bench->add_option("--jobs", config.jobs,
                    "Cells run concurrently; timings then compete for cores")
      ->check(CLI::PositiveNumber);
  bench->add_option("--max-t", config.oracle_max_t, "Oracle cap on t");
  bench->add_flag("--no-shrink", bench_no_shrink);
  bench->add_flag("--bottomup-lemmas", config.bottom_up_lemmas);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      return RunSolve(path, method, no_shrink, print_assignment, lemmas, max_t);
    }
    if (*oracle) return RunOracle(path, max_t);
    if (*gen) return RunGen(spec, out_dir);
    if (*bench) {
      config.shrink = !bench_no_shrink;
      return RunBenchCommand(config, methods, format);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
