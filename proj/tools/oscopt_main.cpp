// Command-line driver: solve instances on the oscillator network, predict
// resource counts, verify witnesses, and run oracle-vs-solver sweeps over a
// fixture directory.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oscopt/corpus.hpp"
#include "oscopt/counts.hpp"
#include "oscopt/dynamics.hpp"
#include "oscopt/oracle.hpp"
#include "oscopt/reductions.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace oscopt;

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool looks_like_dimacs(const std::string& path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".cnf") return true;
  if (path.size() >= 7 && path.substr(path.size() - 7) == ".dimacs")
    return true;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    return line[pos] == 'c' || line[pos] == 'p';
  }
  return false;
}

ProblemInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  if (looks_like_dimacs(path)) {
    ProblemInstance inst;
    inst.kind = ProblemKind::sat;
    inst.name = fs::path(path).stem().string();
    inst.cnf = CnfFormula::parse_dimacs(in);
    return inst;
  }
  json j;
  in >> j;
  return ProblemInstance::from_json(j);
}

std::string default_out_dir() {
  const char* env = std::getenv("OSCOPT_OUT_DIR");
  return env ? env : ".";
}

struct SolveFlags {
  std::string engine = "hopfield";
  int restarts = 8;
  std::uint64_t seed = 0;
  int sweeps = 256;
  double dt = 1e-3;
  double total_time = 20.0;
  bool merge_bias = false;
};

void add_solver_flags(CLI::App* cmd, SolveFlags& f) {
  cmd->add_option("--engine", f.engine, "hopfield or kuramoto")
      ->check(CLI::IsMember({"hopfield", "kuramoto"}));
  cmd->add_option("--restarts", f.restarts, "independent solver runs")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "base RNG seed");
  cmd->add_option("--sweeps", f.sweeps, "Hopfield sweep limit");
  cmd->add_option("--dt", f.dt, "Kuramoto integrator step");
  cmd->add_option("--time", f.total_time, "Kuramoto integration horizon");
  cmd->add_flag("--merge-bias", f.merge_bias,
                "use one merged bias source per clause network");
}

MultistartConfig solver_config(const SolveFlags& f) {
  MultistartConfig cfg;
  cfg.engine = f.engine == "kuramoto" ? Engine::kuramoto : Engine::hopfield;
  cfg.restarts = f.restarts;
  cfg.seed = f.seed;
  cfg.sweep.max_sweeps = f.sweeps;
  cfg.sweep.seed = f.seed;
  cfg.ode.dt = f.dt;
  cfg.ode.total_time = f.total_time;
  cfg.ode.seed = f.seed;
  return cfg;
}

struct SolveOutcome {
  DecodedSolution decoded;
  bool checker_agrees = true;
  std::optional<double> energy;
  RunTrace best;
};

constexpr double kPumpFactor = 0.1;

SolveOutcome run_solver(const ReductionArtifact& art, const SolveFlags& f) {
  SolveOutcome out;
  if (art.trivially_unsat) return out;
  const MultistartConfig cfg = solver_config(f);
  const CouplingGraph& g = art.graph();

  // Rank restarts by decoded feasibility first, then energy, then run order.
  // A run capped mid-cycle can report a snapshot energy below every settled
  // solution, so energy alone is not a safe selector.
  bool best_feasible = false;
  auto consider = [&](RunTrace&& trace) {
    const double e = g.discrete_energy(trace.state);
    const bool feas = decode_artifact(art, trace.state).feasible;
    if (!out.energy || std::make_pair(!feas, e) <
                           std::make_pair(!best_feasible, *out.energy)) {
      best_feasible = feas;
      out.energy = e;
      out.best = std::move(trace);
    }
  };

  if (art.form == NetworkForm::maze) {
    // The maze settles by draining the all-True state down to the corridor,
    // so every restart begins there and only the sweep order varies.
    PottsState all_true = make_state(g, SpinLabel::T);
    apply_clamps(g, all_true);
    for (int r = 0; r < cfg.restarts; ++r) {
      SweepConfig sc = cfg.sweep;
      sc.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(r));
      consider(hopfield_solve(g, all_true, sc));
    }
  } else if (cfg.engine == Engine::kuramoto) {
    // Phase runs on the pumped graph; the quantized state then descends on
    // the plain graph so the reported labels sit in an exact local minimum.
    CouplingGraph pumped = g;
    set_binding_pump(pumped, kPumpFactor);
    for (int r = 0; r < cfg.restarts; ++r) {
      const std::uint64_t run_seed =
          derive_seed(cfg.seed, static_cast<std::uint64_t>(r));
      std::mt19937_64 rng(run_seed);
      OdeConfig oc = cfg.ode;
      oc.seed = run_seed;
      RunTrace trace = kuramoto_solve(pumped, random_phases(pumped, rng), oc);
      SweepConfig polish = cfg.sweep;
      polish.seed = run_seed;
      trace.state = hopfield_solve(g, trace.state, polish).state;
      consider(std::move(trace));
    }
  } else {
    for (int r = 0; r < cfg.restarts; ++r) {
      const std::uint64_t run_seed =
          derive_seed(cfg.seed, static_cast<std::uint64_t>(r));
      std::mt19937_64 rng(run_seed);
      SweepConfig sc = cfg.sweep;
      sc.seed = run_seed;
      consider(hopfield_solve(g, random_state(g, rng), sc));
    }
  }

  out.energy = g.discrete_energy(out.best.state);
  out.decoded = decode_artifact(art, out.best.state);
  if (out.decoded.feasible)
    out.checker_agrees = check_witness(art.source, out.decoded.witness);
  return out;
}

json solution_json(const ProblemInstance& inst, const SolveOutcome& out,
                   std::uint64_t seed) {
  const bool feasible = out.decoded.feasible && out.checker_agrees;
  json j;
  j["kind"] = kind_name(inst.kind);
  j["feasible"] = feasible;
  j["witness"] = feasible ? out.decoded.witness : json();
  j["objective"] =
      (feasible && out.decoded.objective) ? json(*out.decoded.objective)
                                          : json();
  j["energy"] = out.energy ? json(*out.energy) : json();
  j["seed"] = seed;
  return j;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::string trace_csv(const RunTrace& trace) {
  std::string csv = "step,energy\n";
  for (size_t i = 0; i < trace.energies.size(); ++i)
    csv += std::to_string(i) + "," + format_double(trace.energies[i]) + "\n";
  return csv;
}

std::string timestamp_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

int cmd_solve(const std::string& instance_path, const SolveFlags& flags,
              const std::string& out_dir) {
  const std::string started = timestamp_now();
  const ProblemInstance inst = load_instance(instance_path);
  const ReductionArtifact art = encode(inst, {flags.merge_bias, {}});
  const SolveOutcome out = run_solver(art, flags);
  if (!out.checker_agrees)
    std::cerr << "warning: decoded witness failed the independent checker\n";

  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  const json solution = solution_json(inst, out, flags.seed);
  write_text(dir / "solution.json", solution.dump(2) + "\n");
  write_text(dir / "trace.csv", trace_csv(out.best));

  json manifest;
  manifest["schema"] = 1;
  manifest["command"] = "solve";
  manifest["instance"] = instance_path;
  manifest["seed"] = flags.seed;
  manifest["config"] = {{"engine", flags.engine},
                        {"restarts", flags.restarts},
                        {"sweeps", flags.sweeps},
                        {"dt", flags.dt},
                        {"time", flags.total_time},
                        {"merge_bias", flags.merge_bias}};
  manifest["started"] = started;
  manifest["finished"] = timestamp_now();
  manifest["outputs"] = {(dir / "solution.json").string(),
                         (dir / "trace.csv").string()};
  if (art.trivially_unsat) manifest["note"] = art.note;
  write_text(dir / "manifest.json", manifest.dump(2) + "\n");

  const bool feasible = solution.at("feasible").get<bool>();
  std::cout << (feasible ? "feasible" : "no solution found");
  if (feasible && !solution.at("objective").is_null())
    std::cout << ", objective " << solution.at("objective").dump();
  if (out.energy) std::cout << ", energy " << format_double(*out.energy);
  std::cout << " -> " << (dir / "solution.json").string() << "\n";
  return feasible ? 0 : 2;
}

// ------------------------------------------------------------------ predict

struct PredictParams {
  std::string kind;
  std::string instance_path;
  int n = 0, k = -1, edges = -1;
  int vars = 0, clauses = 0;
  int universe = 0, sets = 0, set_size = 2;
  int width = 0, height = 0;
  std::string gate = "and";
  int inputs = 2;
  bool as_json = false, as_csv = false;
};

std::vector<std::array<int, 2>> synth_edges(int n, int want, bool directed) {
  std::vector<std::array<int, 2>> edges;
  for (int span = 1; span < n && static_cast<int>(edges.size()) < want; ++span)
    for (int i = 0; i < n && static_cast<int>(edges.size()) < want; ++i) {
      const int j = (i + span) % n;
      const std::array<int, 2> e =
          directed ? std::array<int, 2>{i, j}
                   : std::array<int, 2>{std::min(i, j), std::max(i, j)};
      if (std::find(edges.begin(), edges.end(), e) == edges.end())
        edges.push_back(e);
    }
  return edges;
}

ProblemInstance synth_instance(const PredictParams& p) {
  const ProblemKind kind = kind_from_name(p.kind);
  ProblemInstance inst;
  inst.kind = kind;
  inst.name = "synthesized";
  auto graph_kind = [&](bool directed, int default_edges) {
    inst.graph.n = p.n;
    inst.graph.directed = directed;
    const int want = p.edges >= 0 ? p.edges : default_edges;
    inst.graph.edges = synth_edges(p.n, want, directed);
  };
  auto sets_kind = [&] {
    inst.universe_size = p.universe;
    const int size = std::min(p.set_size, p.universe);
    for (int j = 0; j < p.sets; ++j) {
      std::vector<int> s;
      for (int i = 0; i < size; ++i) s.push_back((j * size + i) % p.universe);
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      inst.subsets.push_back(std::move(s));
    }
  };
  const int complete = p.n * (p.n - 1) / 2;
  switch (kind) {
    case ProblemKind::sat: {
      inst.cnf.set_num_vars(p.vars);
      const int len = std::min(3, p.vars);
      for (int c = 0; c < p.clauses; ++c) {
        std::vector<int> clause;
        for (int i = 0; i < len; ++i) clause.push_back((c + i) % p.vars + 1);
        inst.cnf.add_clause(std::move(clause));
      }
      break;
    }
    case ProblemKind::ip01: {
      inst.C.assign(1, std::vector<long long>(static_cast<size_t>(p.n), 1));
      inst.b = {p.n / 2};
      break;
    }
    case ProblemKind::number_partitioning:
      inst.numbers.assign(static_cast<size_t>(p.n), 2);
      break;
    case ProblemKind::knapsack:
      inst.a.assign(static_cast<size_t>(p.n), 1);
      inst.b = {p.n / 2};
      break;
    case ProblemKind::hamilton_path:
    case ProblemKind::hamilton_circle:
      graph_kind(false, complete);
      break;
    case ProblemKind::tsp:
      inst.tsp_weights.assign(
          static_cast<size_t>(p.n),
          std::vector<double>(static_cast<size_t>(p.n), 1.0));
      for (int i = 0; i < p.n; ++i)
        inst.tsp_weights[static_cast<size_t>(i)][static_cast<size_t>(i)] = 0.0;
      break;
    case ProblemKind::clique:
    case ProblemKind::node_cover:
    case ProblemKind::independent_set:
    case ProblemKind::chromatic_number:
    case ProblemKind::clique_cover:
    case ProblemKind::shortest_path:
      graph_kind(false, complete);
      inst.k = p.k >= 0 ? p.k : 2;
      if (kind == ProblemKind::shortest_path) {
        inst.s = 0;
        inst.t = p.n - 1;
      }
      break;
    case ProblemKind::feedback_node_set:
    case ProblemKind::feedback_arc_set:
      graph_kind(true, p.n);
      break;
    case ProblemKind::graph_partitioning:
    case ProblemKind::min_cut:
    case ProblemKind::max_cut:
      graph_kind(false, complete);
      break;
    case ProblemKind::set_cover:
    case ProblemKind::exact_cover:
      sets_kind();
      break;
    case ProblemKind::set_packing:
    case ProblemKind::hitting_set:
      sets_kind();
      inst.k = p.k >= 0 ? p.k : 1;
      break;
    case ProblemKind::three_dim_matching: {
      inst.t_size = p.n;
      const int m = p.sets > 0 ? p.sets : p.n;
      for (int i = 0; i < m; ++i)
        inst.triples.push_back(
            {i % p.n, (i + i / p.n) % p.n, (i + 2 * (i / p.n)) % p.n});
      break;
    }
    case ProblemKind::maze:
      inst.maze_spec.width = p.width;
      inst.maze_spec.height = p.height;
      inst.maze_spec.start = 0;
      inst.maze_spec.end = p.width * p.height - 1;
      break;
    case ProblemKind::logic_gate:
      inst.gate = gate_from_name(p.gate);
      inst.gate_inputs.assign(static_cast<size_t>(p.inputs), true);
      break;
  }
  inst.validate();
  return inst;
}

void print_report(const CountReport& rep) {
  std::cout << "decision variables: " << rep.decision_vars << "\n";
  auto row = [](const char* label, const CountRow& r) {
    std::cout << label << ": #v=" << r.v << " #c=" << r.c
              << " l_total=" << r.l_total << " l_avg=" << format_double(r.l_avg())
              << "\n";
  };
  row("mixed clause form", rep.mixed);
  row("3-sat clause form", rep.three_sat);
  std::cout << "network nodes: split=" << rep.nodes
            << " merged=" << rep.nodes_merged << "\n";
  std::cout << "network connections: split=" << rep.connections
            << " merged=" << rep.connections_merged << "\n";
  for (const auto& [key, value] : rep.extras)
    std::cout << "extra " << key << ": " << format_double(value) << "\n";
  for (const auto& t : rep.tables) {
    std::cout << "[" << t.table << "] " << t.row
              << ": published=" << format_double(t.published)
              << " derived=" << format_double(t.derived)
              << (t.matches ? "  (match)" : "  (MISMATCH)");
    if (!t.note.empty()) std::cout << "  note: " << t.note;
    std::cout << "\n";
  }
}

int cmd_predict(const PredictParams& p) {
  const ProblemInstance inst = p.instance_path.empty()
                                   ? synth_instance(p)
                                   : load_instance(p.instance_path);
  const CountReport rep = predict_resources(inst);
  if (p.as_json)
    std::cout << rep.to_json().dump(2) << "\n";
  else if (p.as_csv)
    std::cout << rep.to_csv();
  else
    print_report(rep);
  return 0;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const std::string& instance_path,
               const std::string& witness_path) {
  const ProblemInstance inst = load_instance(instance_path);
  std::ifstream in(witness_path);
  if (!in) throw std::runtime_error("cannot open witness file: " + witness_path);
  json w;
  in >> w;
  if (w.is_object() && w.contains("kind")) {
    const std::string k = w.at("kind").get<std::string>();
    if (kind_from_name(k) != inst.kind)
      throw std::runtime_error("witness kind '" + k +
                               "' does not match instance kind '" +
                               kind_name(inst.kind) + "'");
  }
  if (w.is_object() && w.contains("witness")) w = w.at("witness");
  const bool ok = check_witness(inst, w);
  std::cout << (ok ? "witness is valid\n" : "witness is NOT valid\n");
  return ok ? 0 : 2;
}

// ------------------------------------------------------------------- corpus

int cmd_corpus(const std::string& dir, const SolveFlags& flags) {
  if (!fs::is_directory(dir))
    throw std::runtime_error("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw std::runtime_error("no .json fixtures in " + dir);

  int disagreements = 0;
  std::printf("%-32s %-22s %-10s %-10s %s\n", "fixture", "kind", "oracle",
              "solver", "verdict");
  for (const auto& file : files) {
    const ProblemInstance inst = load_instance(file.string());
    const OracleVerdict oracle = brute_force(inst);
    const ReductionArtifact art = encode(inst, {flags.merge_bias, {}});
    const SolveOutcome out = run_solver(art, flags);
    const bool solver_feasible = out.decoded.feasible && out.checker_agrees;

    bool sound = true;
    if (out.decoded.feasible && !out.checker_agrees) sound = false;
    if (solver_feasible && !oracle.feasible) sound = false;
    if (solver_feasible != oracle.feasible) sound = false;  // missed solution

    std::printf("%-32s %-22s %-10s %-10s %s\n",
                file.stem().string().c_str(), kind_name(inst.kind),
                oracle.feasible ? "feasible" : "unsat",
                solver_feasible ? "feasible" : "unsat",
                sound ? "agree" : "DISAGREE");
    if (!sound) ++disagreements;
  }
  std::printf("%zu fixtures, %d disagreement%s\n", files.size(), disagreements,
              disagreements == 1 ? "" : "s");
  return disagreements == 0 ? 0 : 2;
}

int cmd_gen_corpus(const std::string& out_dir) {
  fs::create_directories(out_dir);
  int count = 0;
  for (const ProblemInstance& inst : full_corpus()) {
    json j = inst.to_json();
    write_text(fs::path(out_dir) / (inst.name + ".json"), j.dump(2) + "\n");
    ++count;
  }
  std::cout << "wrote " << count << " fixtures to " << out_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oscillator-network compiler and solver for combinatorial "
               "problems"};
  app.require_subcommand(1);

  std::string instance_path, witness_path, out_dir = default_out_dir();
  SolveFlags flags;
  PredictParams params;

  CLI::App* solve = app.add_subcommand("solve",
                                       "compile an instance, minimize, decode");
  solve->add_option("instance", instance_path,
                    "instance JSON or DIMACS CNF file")
      ->required();
  add_solver_flags(solve, flags);
  solve->add_option("--out", out_dir, "output directory for artifacts");

  CLI::App* predict = app.add_subcommand(
      "predict", "closed-form resource counts for an instance or parameters");
  predict->add_option("kind", params.kind, "problem kind (omit with --instance)");
  predict->add_option("--instance", params.instance_path,
                      "predict for an existing instance file");
  predict->add_option("--n", params.n, "primary size parameter");
  predict->add_option("--k", params.k, "target size / color count");
  predict->add_option("--edges", params.edges, "edge count for graph kinds");
  predict->add_option("--vars", params.vars, "SAT variable count");
  predict->add_option("--clauses", params.clauses, "SAT clause count");
  predict->add_option("--universe", params.universe, "set-system universe size");
  predict->add_option("--sets", params.sets, "set-system subset count");
  predict->add_option("--set-size", params.set_size, "elements per subset");
  predict->add_option("--width", params.width, "maze width");
  predict->add_option("--height", params.height, "maze height");
  predict->add_option("--gate", params.gate, "logic gate name");
  predict->add_option("--inputs", params.inputs, "logic gate fan-in");
  predict->add_flag("--json", params.as_json, "emit the report as JSON");
  predict->add_flag("--csv", params.as_csv, "emit the report as CSV");

  CLI::App* verify = app.add_subcommand(
      "verify", "check a witness file against an instance");
  verify->add_option("instance", instance_path, "instance file")->required();
  verify->add_option("witness", witness_path,
                     "witness JSON (bare or solution file)")
      ->required();

  CLI::App* corpus = app.add_subcommand(
      "corpus", "solve every fixture in a directory and compare to the oracle");
  corpus->add_option("dir", instance_path, "directory of instance JSON files")
      ->required();
  add_solver_flags(corpus, flags);

  CLI::App* gen = app.add_subcommand("gen-corpus",
                                     "write the built-in fixtures as JSON");
  gen->add_option("--out", out_dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(instance_path, flags, out_dir);
    if (predict->parsed()) {
      if (params.instance_path.empty() && params.kind.empty())
        throw std::runtime_error("predict needs a kind or --instance");
      return cmd_predict(params);
    }
    if (verify->parsed()) return cmd_verify(instance_path, witness_path);
    if (corpus->parsed()) {
      SolveFlags corpus_flags = flags;
      if (corpus->count("--restarts") == 0) corpus_flags.restarts = 64;
      return cmd_corpus(instance_path, corpus_flags);
    }
    if (gen->parsed()) return cmd_gen_corpus(out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
