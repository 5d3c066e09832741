#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "enumcc/editdist.hpp"
#include "enumcc/enumcc.hpp"
#include "enumcc/errors.hpp"
#include "enumcc/generators.hpp"
#include "enumcc/io.hpp"
#include "enumcc/oracle.hpp"
#include "json.hpp"
#include "run_record.hpp"

namespace fs = std::filesystem;
using namespace enumcc;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kCapTripped = 2, kInvalidInput = 3, kVerificationFailed = 4 };

fs::path default_out_dir() {
  const char* env = std::getenv("ENUMCC_OUT_DIR");
  return env && *env ? fs::path(env) : fs::current_path();
}

fs::path out_dir_or_default(const std::string& flag) {
  fs::path dir = flag.empty() ? default_out_dir() : fs::path(flag);
  fs::create_directories(dir);
  return dir;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

std::string compact(double x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  int dataset = 1;
  GeneratorConfig cfg;
  int seeds = 1;
  std::string out;
};

int cmd_generate(const GenerateArgs& a) {
  if (a.dataset != 1 && a.dataset != 2) throw InputError("--dataset must be 1 or 2");
  if (a.seeds < 1) throw InputError("--seeds must be positive");
  a.cfg.validate();
  fs::path dir = out_dir_or_default(a.out);
  ordered_json manifest;
  manifest["dataset"] = a.dataset;
  manifest["config"] = {{"n", a.cfg.n},     {"l0", a.cfg.l0},   {"d", a.cfg.d},
                        {"q_m", a.cfg.q_m}, {"q_neg", a.cfg.q_neg}, {"first_seed", a.cfg.seed},
                        {"seeds", a.seeds}, {"max_attempts", a.cfg.max_attempts}};
  manifest["rng"] = "mt19937_64";
  manifest["instances"] = ordered_json::array();
  int warnings = 0;
  for (int k = 0; k < a.seeds; ++k) {
    GeneratorConfig cfg = a.cfg;
    cfg.seed = a.cfg.seed + static_cast<std::uint64_t>(k);
    PlantedInstance inst = a.dataset == 1 ? gen_dataset1(cfg) : gen_dataset2(cfg);
    std::string stem = "ds" + std::to_string(a.dataset) + "_n" + std::to_string(cfg.n) + "_l" +
                       std::to_string(cfg.l0) + "_d" + compact(cfg.d) + "_qm" + compact(cfg.q_m) +
                       (a.dataset == 1 && cfg.d < 1 ? "_qneg" + compact(cfg.q_neg) : "") + "_s" +
                       std::to_string(cfg.seed);
    save_graph(dir / (stem + ".graph"), inst.graph);
    save_partition(dir / (stem + ".planted"), inst.planted);
    ordered_json entry{{"seed", cfg.seed},
                       {"graph", stem + ".graph"},
                       {"planted", stem + ".planted"},
                       {"n", inst.graph.n()},
                       {"m", inst.graph.m()},
                       {"m_neg", inst.graph.m_neg()},
                       {"q_neg_achieved", inst.q_neg_achieved},
                       {"planted_imbalance", imbalance(inst.graph, inst.planted)}};
    if (a.dataset == 2) {
      std::ostringstream log;
      log << "step,kind,u,v,sign,accepted\n";
      int accepted = 0;
      for (std::size_t i = 0; i < inst.log.size(); ++i) {
        const auto& p = inst.log[i];
        log << i << ',' << to_string(p.kind) << ',' << p.edge.u << ',' << p.edge.v << ',' << p.edge.sign << ','
            << (p.accepted ? 1 : 0) << '\n';
        accepted += p.accepted;
      }
      write_text(dir / (stem + ".log.csv"), log.str());
      entry["log"] = stem + ".log.csv";
      entry["perturbations_accepted"] = accepted;
      entry["perturbations_rejected"] = static_cast<int>(inst.log.size()) - accepted;
      entry["warning"] = inst.warning;
      warnings += inst.warning;
    }
    manifest["instances"].push_back(entry);
  }
  write_text(dir / "manifest.json", manifest.dump(2) + "\n");
  std::cout << "wrote " << a.seeds << " instances to " << dir.string() << "\n";
  if (warnings) std::cerr << "warning: " << warnings << " dataset2 instances stopped short of the perturbation target\n";
  return kOk;
}

// ---------------------------------------------------------------- solve

int cmd_solve(const std::string& graph) {
  auto g = load_graph(graph);
  auto res = solve_first(g);
  std::cout << "istar " << res.istar << "\npartition " << to_string(res.partition) << "\nnodes " << res.nodes << "\n";
  return kOk;
}

// ---------------------------------------------------------------- enumerate / verify

struct RunArgs {
  std::string graph;
  int r_max = 3;
  double time_limit = 0;
  std::size_t max_solutions = 50000;
  std::string mode = "enumcc";
  bool no_mvmo = false;
  bool no_atomic = false;
  int threads = 1;
  std::string out;
  std::string name;
};

EnumLimits limits_of(const RunArgs& a) {
  EnumLimits lim;
  lim.time_seconds = a.time_limit > 0 ? a.time_limit : std::numeric_limits<double>::infinity();
  lim.max_solutions = a.max_solutions;
  lim.mode = parse_mode(a.mode);
  lim.cons.threads = a.threads;
  if (a.no_mvmo) lim.cons.pruning.int_mvmo = lim.cons.pruning.ext_mvmo = false;
  if (a.no_atomic) lim.cons.pruning.int_atomic = lim.cons.pruning.ext_atomic = false;
  if (a.threads < 1) throw InputError("--threads must be positive");
  return lim;
}

struct Outcome {
  EnumResult result;
  bool partial = false;
};

Outcome run_enum(const SignedGraph& g, const RunArgs& a, const EnumLimits& lim) {
  try {
    return {enum_cc(g, a.r_max, lim), false};
  } catch (const EnumTimeout& e) {
    std::cerr << "warning: " << e.what() << "\n";
    return {e.partial(), true};
  }
}

int cmd_enumerate(const RunArgs& a) {
  auto g = load_graph(a.graph);
  auto lim = limits_of(a);
  auto [res, partial] = run_enum(g, a, lim);
  fs::path dir = out_dir_or_default(a.out);
  std::string stem = a.name.empty() ? fs::path(a.graph).stem().string() : a.name;
  save_solutions(dir / (stem + ".solutions"), res.solutions);
  auto record = cli::RunRecord::from(stem, a.graph, g, a.r_max, lim, res.stats, partial);
  write_text(dir / (stem + ".stats.json"), cli::to_json(record).dump(2) + "\n");
  write_text(dir / (stem + ".csv"), cli::csv_line(cli::csv_header()) + "\n" + cli::csv_line(cli::csv_row(record)) + "\n");
  std::cout << "istar " << res.stats.istar << " solutions " << res.solutions.size() << " reason "
            << to_string(res.stats.reason) << (partial ? " (partial)" : "") << "\n";
  bool tripped = partial || res.stats.reason != Termination::exhausted;
  return tripped ? kCapTripped : kOk;
}

int cmd_verify(const RunArgs& a, bool inject_fault) {
  auto g = load_graph(a.graph);
  auto lim = limits_of(a);
  SolutionSet oracle = oracle_optima(g);
  auto [res, partial] = run_enum(g, a, lim);
  auto got = res.solutions.sorted();
  if (inject_fault && !got.empty()) got.pop_back();
  auto want = oracle.sorted();
  std::vector<Membership> missing, extra;
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
  bool equal = missing.empty() && extra.empty() && oracle.istar() == res.stats.istar;
  std::cout << "oracle istar " << oracle.istar() << " solutions " << want.size() << "\n";
  std::cout << "enumcc istar " << res.stats.istar << " solutions " << got.size() << " reason "
            << to_string(res.stats.reason) << "\n";
  for (const auto& p : missing) std::cout << "missing " << to_string(p) << "\n";
  for (const auto& p : extra) std::cout << "extra " << to_string(p) << "\n";
  std::cout << (equal ? "EQUAL" : "DIFFERENT") << "\n";
  return equal ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::string dir;
  int r = 3;
  int reps = 3;
  std::string target = "cons";
  int r_max = 3;
  std::string out;
};

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::size_t k = v.size() / 2;
  return v.size() % 2 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

int cmd_bench(const BenchArgs& a) {
  if (!fs::is_directory(a.dir)) throw InputError("not a directory: " + a.dir);
  if (a.reps < 1) throw InputError("--reps must be positive");
  if (a.target != "cons" && a.target != "rns") throw InputError("--target must be cons or rns");
  std::vector<fs::path> graphs;
  for (const auto& e : fs::directory_iterator(a.dir))
    if (e.is_regular_file() && e.path().extension() == ".graph") graphs.push_back(e.path());
  std::sort(graphs.begin(), graphs.end());

  PruningOptions no_mvmo = PruningOptions::all(), no_atomic = PruningOptions::all();
  no_mvmo.int_mvmo = no_mvmo.ext_mvmo = false;
  no_atomic.int_atomic = no_atomic.ext_atomic = false;
  const std::vector<std::pair<std::string, PruningOptions>> variants = {
      {"full", PruningOptions::all()}, {"no_mvmo", no_mvmo}, {"no_atomic", no_atomic}, {"none", PruningOptions::none()}};

  std::ostringstream csv;
  csv << "instance,n,m,target,r,reps,found";
  for (const auto& [name, opt] : variants) csv << ',' << name << "_ms";
  csv << ",mvmo_speedup\n";
  for (const auto& path : graphs) {
    auto g = load_graph(path);
    fs::path planted = fs::path(path).replace_extension(".planted");
    Membership ps = fs::exists(planted) ? load_partition(planted) : solve_first(g).partition;
    if (ps.size() != g.n()) throw InputError(planted.string() + ": partition length does not match graph");
    std::vector<double> medians;
    std::size_t found = 0;
    for (const auto& [name, opt] : variants) {
      std::vector<double> times;
      for (int k = 0; k < a.reps; ++k) {
        auto t = std::chrono::steady_clock::now();
        if (a.target == "cons") {
          found = a.r < g.n() ? cons(g, ps, a.r, {opt, 1}).neighbors.size() : 0;
        } else {
          RnsOptions o;
          o.cons.pruning = opt;
          found = rns(g, ps, a.r_max, o).discovered.size();
        }
        times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t).count());
      }
      medians.push_back(median_of(times));
    }
    csv << path.stem().string() << ',' << g.n() << ',' << g.m() << ',' << a.target << ','
        << (a.target == "cons" ? a.r : a.r_max) << ',' << a.reps << ',' << found;
    for (double ms : medians) csv << ',' << ms;
    csv << ',' << (medians[0] > 0 ? medians[1] / medians[0] : 0.0) << '\n';
  }
  if (a.out.empty() || a.out == "-") {
    std::cout << csv.str();
  } else {
    fs::path out = a.out;
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    write_text(out, csv.str());
  }
  return kOk;
}

void add_run_flags(CLI::App* cmd, RunArgs& a) {
  cmd->add_option("graph", a.graph, "graph file")->required();
  cmd->add_option("--rmax", a.r_max, "largest edit cost explored by neighborhood search")->capture_default_str();
  cmd->add_option("--time-limit", a.time_limit, "wall-clock limit in seconds (0: none)");
  cmd->add_option("--max-solutions", a.max_solutions, "stop after this many optima")->capture_default_str();
  cmd->add_option("--mode", a.mode, "enumcc, sequential or rns-only")->capture_default_str();
  cmd->add_flag("--no-mvmo", a.no_mvmo, "disable margin-based pruning");
  cmd->add_flag("--no-atomic", a.no_atomic, "disable atomicity pruning");
  cmd->add_option("--threads", a.threads, "worker threads per neighborhood search")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration of all optimal correlation clusterings of a signed graph"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "write random planted instances and a manifest");
  g->add_option("--dataset", gen.dataset, "1: balanced with misplaced edges, 2: perturbed with planted optimum")
      ->capture_default_str();
  g->add_option("--n", gen.cfg.n, "vertices")->capture_default_str();
  g->add_option("--l0", gen.cfg.l0, "planted modules")->capture_default_str();
  g->add_option("--d", gen.cfg.d, "density")->capture_default_str();
  g->add_option("--qm", gen.cfg.q_m, "misplaced-edge proportion")->capture_default_str();
  g->add_option("--qneg", gen.cfg.q_neg, "negative-edge proportion (dataset 1, d < 1)")->capture_default_str();
  g->add_option("--seed", gen.cfg.seed, "first seed")->capture_default_str();
  g->add_option("--seeds", gen.seeds, "number of consecutive seeds")->capture_default_str();
  g->add_option("--max-attempts", gen.cfg.max_attempts, "dataset 2 perturbation attempts (0: automatic)");
  g->add_option("--out", gen.out, "output directory (default $ENUMCC_OUT_DIR or .)");

  std::string solve_graph;
  auto* s = app.add_subcommand("solve", "print one optimal partition");
  s->add_option("graph", solve_graph, "graph file")->required();

  RunArgs run;
  auto* e = app.add_subcommand("enumerate", "enumerate all optimal partitions");
  add_run_flags(e, run);
  e->add_option("--out", run.out, "output directory (default $ENUMCC_OUT_DIR or .)");
  e->add_option("--name", run.name, "output file stem (default: graph file stem)");

  RunArgs ver;
  bool inject_fault = false;
  auto* v = app.add_subcommand("verify", "compare the enumeration with brute force");
  add_run_flags(v, ver);
  v->add_flag("--inject-fault", inject_fault, "drop one enumerated solution before comparing");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "time neighborhood search under each pruning variant");
  b->add_option("dir", bench.dir, "directory of .graph files (.planted used as start when present)")->required();
  b->add_option("--r", bench.r, "edit cost for cons timing")->capture_default_str();
  b->add_option("--rmax", bench.r_max, "largest edit cost for rns timing")->capture_default_str();
  b->add_option("--reps", bench.reps, "repetitions per variant (median reported)")->capture_default_str();
  b->add_option("--target", bench.target, "cons or rns")->capture_default_str();
  b->add_option("--out", bench.out, "CSV file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kInvalidInput;
  }

  try {
    if (*g) return cmd_generate(gen);
    if (*s) return cmd_solve(solve_graph);
    if (*e) return cmd_enumerate(run);
    if (*v) return cmd_verify(ver, inject_fault);
    if (*b) return cmd_bench(bench);
  } catch (const GenerationError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kInvalidInput;
  } catch (const InputError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kInvalidInput;
  } catch (const CapExceeded& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kInvalidInput;
  } catch (const fs::filesystem_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kInvalidInput;
  }
  return kOk;
}
