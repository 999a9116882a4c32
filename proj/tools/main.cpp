// Copyright 2026 The pebblegame Authors
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

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "pebble/error.hpp"

using namespace pebble;
using namespace pebble::cli;

namespace {

struct Choices {
  std::string format;
  std::string model = "standard";
  std::string solver = "exact";
};

void add_format(CLI::App* cmd, Choices& c) {
  cmd->add_option("--format", c.format, "json, csv, dot or text")
      ->check(CLI::IsMember({"json", "csv", "dot", "text"}));
}

void add_model(CLI::App* cmd, Choices& c) {
  cmd->add_option("--model", c.model, "standard or fused")
      ->check(CLI::IsMember({"standard", "fused"}));
}

void apply(const Choices& c, RunConfig& cfg) {
  if (!c.format.empty()) {
    const std::map<std::string, Format> formats{
        {"json", Format::Json}, {"csv", Format::Csv}, {"dot", Format::Dot}, {"text", Format::Text}};
    cfg.format = formats.at(c.format);
    cfg.format_set = true;
  }
  if (c.model != "both") cfg.model = parse_cost_model(c.model);
  cfg.both_models = c.model == "both";
  const std::map<std::string, Solver> solvers{
      {"exact", Solver::Exact}, {"christofides", Solver::Christofides}, {"multilevel", Solver::MultiLevel}};
  cfg.solver = solvers.at(c.solver);
}

void add_dag_input(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--input", cfg.input, "Edge list or Matrix Market file")->required();
  cmd->add_option("--line-size", cfg.line_size, "Cache-line size B in words")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  Choices choices;
  CLI::App app{"Red-blue pebble game with partial computations"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Find a pebbling strategy and replay it");
  add_dag_input(solve, cfg);
  solve->add_option("--memory", cfg.memory, "Cache size M in pebbles")->check(CLI::Range(2, 64));
  add_model(solve, choices);
  solve->add_option("--solver", choices.solver, "exact, christofides or multilevel")
      ->check(CLI::IsMember({"exact", "christofides", "multilevel"}));
  solve->add_option("--seed", cfg.seed, "Unused by the deterministic solvers");
  add_format(solve, choices);
  solve->add_option("--out", cfg.out, "Write the report here instead of stdout");

  auto* simulate = app.add_subcommand("simulate", "Replay a strategy JSON file");
  add_dag_input(simulate, cfg);
  simulate->add_option("--strategy", cfg.strategy, "Strategy JSON")->required();
  simulate->add_option("--memory", cfg.memory, "Cache size M in pebbles")->check(CLI::PositiveNumber);
  add_format(simulate, choices);
  simulate->add_option("--out", cfg.out);

  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  auto* gen_random = gen->add_subcommand("random", "Random bipartite DAGs");
  gen_random->add_option("--sources", cfg.sources)->check(CLI::PositiveNumber);
  gen_random->add_option("--sinks", cfg.sinks)->check(CLI::PositiveNumber);
  gen_random->add_option("--density", cfg.density)->check(CLI::Range(0.0, 1.0));
  gen_random->add_option("--count", cfg.count, "Instances; more than one needs --out DIR")
      ->check(CLI::PositiveNumber);
  gen_random->add_option("--seed", cfg.seed);
  add_format(gen_random, choices);
  gen_random->add_option("--out", cfg.out, "File, or directory when --count > 1");
  auto* gen_gadget = gen->add_subcommand("gadget", "Hardness gadget DAG for an undirected graph");
  gen_gadget->add_option("--graph", cfg.graph, "Graph file: n, then 1-based edges")->required();
  gen_gadget->add_option("--out", cfg.out, "Prefix for PREFIX.edges and PREFIX.json");

  auto* bench = app.add_subcommand("bench", "Christofides vs Held-Karp over a corpus");
  bench->add_option("--input", cfg.input, "Corpus directory")->required();
  bench->add_option("--model", choices.model, "standard, fused or both")
      ->check(CLI::IsMember({"standard", "fused", "both"}));
  bench->add_option("--jobs", cfg.jobs, "Worker threads (default: all cores)");
  add_format(bench, choices);
  bench->add_option("--out", cfg.out);

  auto* exp = app.add_subcommand("export", "Print a DAG, its cache-line DAG, levels or conflict graph");
  add_dag_input(exp, cfg);
  exp->add_option("--what", cfg.what, "dag, lines, levels or conflict")
      ->check(CLI::IsMember({"dag", "lines", "levels", "conflict"}));
  add_model(exp, choices);
  add_format(exp, choices);
  exp->add_option("--out", cfg.out);

  auto* reduce = app.add_subcommand("reduce", "Check the hardness reduction on a small graph");
  reduce->add_option("--graph", cfg.graph)->required();
  reduce->add_option("--out", cfg.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    apply(choices, cfg);
    if (*solve) return cmd_solve(cfg);
    if (*simulate) return cmd_simulate(cfg);
    if (*gen_random) return cmd_gen_random(cfg);
    if (*gen_gadget) return cmd_gen_gadget(cfg);
    if (*bench) return cmd_bench(cfg);
    if (*exp) {
      if (cfg.what == "lines" && cfg.line_size == 1) {
        std::cerr << "note: --line-size 1 leaves the DAG unchanged\n";
      }
      return cmd_export(cfg);
    }
    if (*reduce) return cmd_reduce(cfg);
  } catch (const SizeGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSizeGuard;
  } catch (const IllegalMoveError& e) {
    std::cerr << "error: illegal " << e.what() << "\n";
    return kExitIllegalMove;
  } catch (const NonTerminalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNonTerminal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitValidation;
}
