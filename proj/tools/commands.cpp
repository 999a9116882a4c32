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

#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "json.hpp"
#include "pebble/approx.hpp"
#include "pebble/cache_lines.hpp"
#include "pebble/conflict_graph.hpp"
#include "pebble/dag_io.hpp"
#include "pebble/error.hpp"
#include "pebble/exact.hpp"
#include "pebble/generators.hpp"
#include "pebble/hardness.hpp"
#include "pebble/levels.hpp"
#include "pebble/strategy_io.hpp"

namespace pebble::cli {
namespace {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

constexpr double kStandardBound = 21.0 / 8.0;
constexpr double kFusedBound = 2.0;

std::string_view solver_name(Solver s) {
  switch (s) {
    case Solver::Exact:
      return "exact";
    case Solver::Christofides:
      return "christofides";
    case Solver::MultiLevel:
      return "multilevel";
  }
  return "?";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_output(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw ValidationError("cannot write '" + out + "'");
  file << text;
}

std::string fixed(double x) {
  if (std::isinf(x)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

// Loads the input and, for B > 1, collapses it onto aligned cache-lines.
Dag load_working_dag(const RunConfig& cfg) {
  if (cfg.input.empty()) throw ValidationError("--input is required");
  Dag dag = load_dag(cfg.input);
  if (cfg.line_size > 1) dag = transform_cache_lines(dag, MemoryLayout::aligned(dag, cfg.line_size)).dag;
  return dag;
}

bool state_space_fits(const Dag& dag) {
  return dag.node_count() <= kStateSpaceNodeLimit && dag.edge_count() <= kStateSpaceEdgeLimit;
}

struct Oracle {
  std::string method;
  Cost cost = 0;
};

// Best available optimum for (dag, M), or nothing when every exact method
// is over its size guard.
std::optional<Oracle> find_oracle(const Dag& dag, std::size_t memory, CostModel model) {
  if (dag.edge_count() == 0) return Oracle{"trivial", 0};
  if (memory == 2 && dag.is_one_level() && dag.edge_count() <= kHeldKarpLimit) {
    return Oracle{"held-karp", held_karp_path(ConflictGraph(dag, model)).cost + 3};
  }
  if (state_space_fits(dag)) return Oracle{"state-space", state_space_opt(dag, memory, model).cost};
  return std::nullopt;
}

ojson moves_json(const Strategy& s, const Dag& dag) {
  return ojson::parse(strategy_to_json(s, dag))["moves"];
}

}  // namespace

int cmd_solve(const RunConfig& cfg) {
  if (cfg.memory < 2) throw ValidationError("--memory must be at least 2");
  const Dag dag = load_working_dag(cfg);
  const CostModel model = cfg.model;

  Strategy strategy{model, {}};
  std::string method = "trivial";
  std::optional<Oracle> oracle;
  std::optional<double> lower_bound;
  bool optimal = false;

  if (dag.edge_count() > 0) {
    switch (cfg.solver) {
      case Solver::Exact:
        if (cfg.memory == 2 && dag.is_one_level()) {
          const ConflictGraph cg(dag, model);
          strategy = path_to_strategy(dag, held_karp_path(cg), model);
          method = "held-karp";
        } else {
          strategy = state_space_opt(dag, cfg.memory, model).strategy;
          method = "state-space";
        }
        optimal = true;
        break;
      case Solver::Christofides: {
        if (!dag.is_one_level()) {
          throw ValidationError(
              "christofides needs a one-level DAG (every edge source -> sink); "
              "use --solver multilevel for leveled DAGs");
        }
        const ConflictGraph cg(dag, model);
        strategy = path_to_strategy(dag, christofides_path(cg), model);
        method = "christofides";
        break;
      }
      case Solver::MultiLevel: {
        const LeveledDag ld = compute_levels(dag);
        strategy = multi_level_solve(ld, christofides_path, model).strategy;
        method = "multilevel";
        const bool small = std::all_of(ld.levels.begin(), ld.levels.end(), [](const Level& l) {
          return l.dag.edge_count() <= kHeldKarpLimit;
        });
        if (small) lower_bound = multi_level_lower_bound(ld, model).lower_bound;
        break;
      }
    }
    if (!optimal) oracle = find_oracle(dag, cfg.memory, model);
  } else {
    optimal = true;
  }

  // Every reported cost comes from the simulator, never from the solver.
  const SimulationResult run = simulate(dag, strategy, cfg.memory);
  if (optimal) oracle = Oracle{method, run.cost};
  std::optional<double> ratio;
  if (oracle) {
    ratio = oracle->cost == 0 ? 1.0 : static_cast<double>(run.cost) / static_cast<double>(oracle->cost);
  }

  std::string text;
  switch (cfg.format_set ? cfg.format : Format::Text) {
    case Format::Json: {
      ojson doc;
      doc["input"] = cfg.input;
      doc["nodes"] = dag.node_count();
      doc["edges"] = dag.edge_count();
      doc["memory"] = cfg.memory;
      doc["line_size"] = cfg.line_size;
      doc["model"] = to_string(model);
      doc["solver"] = solver_name(cfg.solver);
      doc["method"] = method;
      doc["cost"] = run.cost;
      if (oracle) {
        doc["oracle"] = {{"method", oracle->method}, {"cost", oracle->cost}};
        doc["ratio"] = *ratio;
      } else {
        doc["oracle"] = nullptr;
        doc["ratio"] = nullptr;
      }
      if (lower_bound) doc["lower_bound"] = *lower_bound;
      doc["moves"] = moves_json(strategy, dag);
      doc["trace"] = ojson::parse(trace_to_json(run.trace, dag));
      text = doc.dump(2) + "\n";
      break;
    }
    case Format::Csv:
      text = "input,nodes,edges,memory,line_size,model,solver,method,cost,oracle,ratio\n";
      text += cfg.input + "," + std::to_string(dag.node_count()) + "," +
              std::to_string(dag.edge_count()) + "," + std::to_string(cfg.memory) + "," +
              std::to_string(cfg.line_size) + "," + std::string(to_string(model)) + "," +
              std::string(solver_name(cfg.solver)) + "," + method + "," +
              std::to_string(run.cost) + "," + (oracle ? std::to_string(oracle->cost) : "") +
              "," + (ratio ? fixed(*ratio) : "") + "\n";
      break;
    case Format::Dot:
      throw ValidationError("solve supports --format text, json or csv");
    case Format::Text: {
      std::ostringstream out;
      out << "dag: " << dag.node_count() << " nodes, " << dag.edge_count() << " edges\n";
      out << "memory: " << cfg.memory << ", line size: " << cfg.line_size
          << ", model: " << to_string(model) << "\n";
      out << "solver: " << solver_name(cfg.solver) << " (" << method << ")\n";
      out << "cost: " << run.cost << "\n";
      if (oracle) {
        out << "oracle: " << oracle->cost << " (" << oracle->method << "), ratio "
            << fixed(*ratio) << "\n";
      } else {
        out << "oracle: none (instance over every exact size guard)\n";
      }
      if (lower_bound) out << "level lower bound: " << fixed(*lower_bound) << "\n";
      out << "moves:\n";
      for (const Move& m : strategy.moves) out << "  " << describe(m, dag) << "\n";
      out << "trace:\n" << trace_to_text(run.trace, dag);
      text = out.str();
      break;
    }
  }
  write_output(cfg.out, text);
  return kExitOk;
}

int cmd_simulate(const RunConfig& cfg) {
  const Dag dag = load_working_dag(cfg);
  if (cfg.strategy.empty()) throw ValidationError("--strategy is required");
  const Strategy strategy = strategy_from_json(read_file(cfg.strategy), dag);
  const SimulationResult run = simulate(dag, strategy, cfg.memory);
  std::string text;
  switch (cfg.format_set ? cfg.format : Format::Text) {
    case Format::Json: {
      ojson doc;
      doc["model"] = to_string(strategy.model);
      doc["memory"] = cfg.memory;
      doc["cost"] = run.cost;
      doc["trace"] = ojson::parse(trace_to_json(run.trace, dag));
      text = doc.dump(2) + "\n";
      break;
    }
    case Format::Text:
      text = "cost: " + std::to_string(run.cost) + "\n" + trace_to_text(run.trace, dag);
      break;
    default:
      throw ValidationError("simulate supports --format text or json");
  }
  write_output(cfg.out, text);
  return kExitOk;
}

namespace {

std::string render_dag(const Dag& dag, Format format) {
  switch (format) {
    case Format::Json:
      return to_json(dag) + "\n";
    case Format::Dot:
      return to_dot(dag);
    case Format::Text:
      return to_edge_list(dag);
    case Format::Csv:
      break;
  }
  throw ValidationError("DAG output supports --format text, json or dot");
}

std::string_view extension(Format format) {
  switch (format) {
    case Format::Json:
      return ".json";
    case Format::Dot:
      return ".dot";
    default:
      return ".edges";
  }
}

}  // namespace

int cmd_gen_random(const RunConfig& cfg) {
  const Format format = cfg.format_set ? cfg.format : Format::Text;
  if (cfg.count == 0) throw ValidationError("--count must be positive");
  Rng rng(cfg.seed);
  if (cfg.count == 1) {
    write_output(cfg.out, render_dag(random_bipartite_dag(cfg.sources, cfg.sinks, cfg.density, rng), format));
    return kExitOk;
  }
  if (cfg.out.empty()) throw ValidationError("--out DIR is required with --count > 1");
  fs::create_directories(cfg.out);
  for (std::size_t i = 0; i < cfg.count; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "random_%04zu", i);
    const Dag dag = random_bipartite_dag(cfg.sources, cfg.sinks, cfg.density, rng);
    write_output((fs::path(cfg.out) / (name + std::string(extension(format)))).string(),
                 render_dag(dag, format));
  }
  return kExitOk;
}

int cmd_gen_gadget(const RunConfig& cfg) {
  if (cfg.graph.empty()) throw ValidationError("--graph is required");
  std::istringstream in(read_file(cfg.graph));
  const GadgetInstance inst = build_gadget_instance(parse_undirected_graph(in));
  const std::string sidecar = gadget_sidecar_json(inst) + "\n";
  if (cfg.out.empty()) {
    // Edge-list comments carry the sidecar when everything goes to stdout.
    write_output("", "# " + sidecar + to_edge_list(inst.dag));
    return kExitOk;
  }
  write_output(cfg.out + ".edges", to_edge_list(inst.dag));
  write_output(cfg.out + ".json", sidecar);
  return kExitOk;
}

namespace {

struct BenchRow {
  std::string instance;
  std::size_t m = 0;
  CostModel model = CostModel::Standard;
  Cost opt = 0;
  Cost approx = 0;
  Cost cost = 0;
  double ratio = 1.0;
  double bound = 0.0;
  bool within = true;
};

struct BenchEntry {
  std::vector<BenchRow> rows;
  std::string warning;
};

BenchEntry bench_one(const fs::path& path, const std::vector<CostModel>& models) {
  BenchEntry entry;
  const std::string name = path.filename().string();
  Dag dag;
  try {
    dag = load_dag(path);
  } catch (const Error& e) {
    entry.warning = name + ": " + e.what();
    return entry;
  }
  if (!dag.is_one_level()) {
    entry.warning = name + ": not a one-level DAG";
    return entry;
  }
  if (dag.edge_count() == 0) {
    entry.warning = name + ": no edges";
    return entry;
  }
  if (dag.edge_count() > kHeldKarpLimit) {
    entry.warning = name + ": " + std::to_string(dag.edge_count()) +
                    " edges exceeds the Held-Karp limit " + std::to_string(kHeldKarpLimit);
    return entry;
  }
  for (CostModel model : models) {
    const ConflictGraph cg(dag, model);
    BenchRow row;
    row.instance = name;
    row.m = cg.size();
    row.model = model;
    row.opt = held_karp_path(cg).cost;
    const HamPath approx = christofides_path(cg);
    row.approx = approx.cost;
    row.cost = simulate(dag, path_to_strategy(dag, approx, model), 2).cost;
    if (row.cost != row.approx + 3) {
      throw Error(name + ": replayed cost " + std::to_string(row.cost) +
                  " disagrees with path weight " + std::to_string(row.approx));
    }
    if (row.opt > 0) {
      row.ratio = static_cast<double>(row.approx) / static_cast<double>(row.opt);
    } else {
      row.ratio = row.approx == 0 ? 1.0 : std::numeric_limits<double>::infinity();
    }
    row.bound = model == CostModel::Fused ? kFusedBound : kStandardBound;
    row.within = row.ratio <= row.bound;
    entry.rows.push_back(row);
  }
  return entry;
}

}  // namespace

int cmd_bench(const RunConfig& cfg) {
  if (cfg.input.empty()) throw ValidationError("--input DIR is required");
  if (!fs::is_directory(cfg.input)) throw ValidationError("'" + cfg.input + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(cfg.input)) {
    if (!e.is_directory()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

  std::vector<CostModel> models;
  if (cfg.both_models) {
    models = {CostModel::Standard, CostModel::Fused};
  } else {
    models = {cfg.model};
  }

  // Workers fill slots by index, so output order never depends on timing.
  std::vector<BenchEntry> entries(files.size());
  std::vector<std::string> failures(files.size());
  std::atomic<std::size_t> next{0};
  const std::size_t jobs =
      std::max<std::size_t>(1, cfg.jobs ? cfg.jobs : std::thread::hardware_concurrency());
  {
    std::vector<std::jthread> workers;
    for (std::size_t t = 0; t < std::min(jobs, std::max<std::size_t>(files.size(), 1)); ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < files.size(); i = next++) {
          try {
            entries[i] = bench_one(files[i], models);
          } catch (const std::exception& e) {
            failures[i] = e.what();
          }
        }
      });
    }
  }
  for (const auto& f : failures) {
    if (!f.empty()) throw Error(f);
  }

  std::size_t skipped = 0, violations = 0, evaluated = 0;
  std::vector<double> max_ratio(2, 0.0);
  std::vector<const BenchRow*> rows;
  for (const auto& entry : entries) {
    if (!entry.warning.empty()) {
      ++skipped;
      std::cerr << "warning: skipping " << entry.warning << "\n";
      continue;
    }
    ++evaluated;
    for (const auto& row : entry.rows) {
      rows.push_back(&row);
      if (!row.within) ++violations;
      auto& slot = max_ratio[row.model == CostModel::Fused ? 1 : 0];
      slot = std::max(slot, row.ratio);
    }
  }

  std::string text;
  const Format format = cfg.format_set ? cfg.format : Format::Csv;
  if (format == Format::Csv) {
    text = "instance,m,model,opt,approx,cost,ratio,bound,within_bound\n";
    for (const BenchRow* r : rows) {
      text += r->instance + "," + std::to_string(r->m) + "," + std::string(to_string(r->model)) +
              "," + std::to_string(r->opt) + "," + std::to_string(r->approx) + "," +
              std::to_string(r->cost) + "," + fixed(r->ratio) + "," + fixed(r->bound) + "," +
              (r->within ? "true" : "false") + "\n";
    }
  } else if (format == Format::Json) {
    ojson doc;
    auto& out = doc["rows"] = ojson::array();
    for (const BenchRow* r : rows) {
      out.push_back({{"instance", r->instance},
                     {"m", r->m},
                     {"model", to_string(r->model)},
                     {"opt", r->opt},
                     {"approx", r->approx},
                     {"cost", r->cost},
                     {"ratio", std::isinf(r->ratio) ? ojson(nullptr) : ojson(r->ratio)},
                     {"bound", r->bound},
                     {"within_bound", r->within}});
    }
    doc["summary"] = {{"instances", evaluated}, {"skipped", skipped}, {"violations", violations}};
    for (CostModel model : models) {
      doc["summary"]["max_ratio"][std::string(to_string(model))] =
          max_ratio[model == CostModel::Fused ? 1 : 0];
    }
    text = doc.dump(2) + "\n";
  } else {
    throw ValidationError("bench supports --format csv or json");
  }
  write_output(cfg.out, text);

  std::cerr << "instances: " << evaluated << ", skipped: " << skipped
            << ", bound violations: " << violations;
  for (CostModel model : models) {
    std::cerr << ", max ratio " << to_string(model) << ": "
              << fixed(max_ratio[model == CostModel::Fused ? 1 : 0]);
  }
  std::cerr << "\n";
  if (evaluated == 0) {
    std::cerr << "error: no instances evaluated\n";
    return kExitValidation;
  }
  return violations == 0 ? kExitOk : kExitBoundViolation;
}

int cmd_export(const RunConfig& cfg) {
  const Format format = cfg.format_set ? cfg.format : Format::Text;
  if (cfg.what == "dag" || cfg.what == "lines") {
    write_output(cfg.out, render_dag(load_working_dag(cfg), format));
    return kExitOk;
  }
  if (cfg.what == "conflict") {
    const Dag dag = load_working_dag(cfg);
    const ConflictGraph cg(dag, cfg.model);
    if (format == Format::Dot) {
      write_output(cfg.out, to_dot(cg));
    } else if (format == Format::Json || format == Format::Text) {
      write_output(cfg.out, to_json(cg) + "\n");
    } else {
      throw ValidationError("conflict export supports --format json or dot");
    }
    return kExitOk;
  }
  if (cfg.what == "levels") {
    const Dag dag = load_working_dag(cfg);
    const LeveledDag ld = compute_levels(dag);
    ojson doc;
    doc["k"] = ld.k;
    auto& levels = doc["levels"] = ojson::array();
    for (const Level& level : ld.levels) {
      ojson edges = ojson::array();
      for (EdgeId e : level.base_edge) {
        edges.push_back({dag.name(dag.edge(e).src), dag.name(dag.edge(e).dst)});
      }
      levels.push_back(std::move(edges));
    }
    write_output(cfg.out, doc.dump(2) + "\n");
    return kExitOk;
  }
  throw ValidationError("unknown export target '" + cfg.what + "'");
}

int cmd_reduce(const RunConfig& cfg) {
  if (cfg.graph.empty()) throw ValidationError("--graph is required");
  std::istringstream in(read_file(cfg.graph));
  const ReductionCheck check = verify_reduction(parse_undirected_graph(in));
  ojson doc{{"has_ham_path", check.has_ham_path},
            {"opt", check.opt},
            {"threshold", check.threshold},
            {"consistent", check.consistent}};
  write_output(cfg.out, doc.dump() + "\n");
  return check.consistent ? kExitOk : kExitBoundViolation;
}

}  // namespace pebble::cli
