#include "run_record.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace enumcc::cli {

namespace {

using nlohmann::ordered_json;

// Name and member pointer of every prune counter, in output order.
const std::vector<std::pair<const char*, std::uint64_t ConsStats::*>>& prune_fields() {
  static const std::vector<std::pair<const char*, std::uint64_t ConsStats::*>> fields = {
      {"mover_sets", &ConsStats::mover_sets},
      {"pruned_int_atomic", &ConsStats::pruned_int_atomic},
      {"pruned_int_mvmo", &ConsStats::pruned_int_mvmo},
      {"target_assignments", &ConsStats::target_assignments},
      {"pruned_min_edit", &ConsStats::pruned_min_edit},
      {"pruned_ext_atomic", &ConsStats::pruned_ext_atomic},
      {"pruned_ext_mvmo", &ConsStats::pruned_ext_mvmo},
      {"couplings", &ConsStats::couplings},
      {"completions", &ConsStats::completions},
      {"equal_imbalance", &ConsStats::equal_imbalance},
      {"rejected_not_minimal", &ConsStats::rejected_not_minimal},
      {"rejected_not_atomic", &ConsStats::rejected_not_atomic},
      {"accepted", &ConsStats::accepted},
      {"duplicates", &ConsStats::duplicates},
  };
  return fields;
}

const std::vector<std::pair<const char*, bool PruningOptions::*>>& pruning_fields() {
  static const std::vector<std::pair<const char*, bool PruningOptions::*>> fields = {
      {"int_atomic", &PruningOptions::int_atomic}, {"ext_atomic", &PruningOptions::ext_atomic},
      {"int_mvmo", &PruningOptions::int_mvmo},     {"ext_mvmo", &PruningOptions::ext_mvmo},
      {"min_edit", &PruningOptions::min_edit},
  };
  return fields;
}

Termination parse_reason(const std::string& s) {
  if (s == "solution_cap") return Termination::solution_cap;
  if (s == "time_cap") return Termination::time_cap;
  return Termination::exhausted;
}

std::string number(double x) {
  if (std::isinf(x)) return "inf";
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

}  // namespace

RunRecord RunRecord::from(const std::string& instance, const std::string& graph, const SignedGraph& g, int r_max,
                          const EnumLimits& limits, const RunStats& stats, bool partial) {
  RunRecord r;
  r.instance = instance;
  r.graph = graph;
  r.n = g.n();
  r.m = g.m();
  r.r_max = r_max;
  r.mode = to_string(limits.mode);
  r.time_limit = limits.time_seconds;
  r.max_solutions = limits.max_solutions;
  r.threads = limits.cons.threads;
  r.pruning = limits.cons.pruning;
  r.stats = stats;
  r.partial = partial;
  return r;
}

ordered_json to_json(const RunRecord& r) {
  ordered_json j;
  j["instance"] = r.instance;
  j["graph"] = r.graph;
  j["n"] = r.n;
  j["m"] = r.m;
  ordered_json params;
  params["r_max"] = r.r_max;
  params["mode"] = r.mode;
  params["time_limit"] = std::isinf(r.time_limit) ? ordered_json(nullptr) : ordered_json(r.time_limit);
  params["max_solutions"] = r.max_solutions;
  params["threads"] = r.threads;
  for (const auto& [name, member] : pruning_fields()) params["pruning"][name] = r.pruning.*member;
  j["params"] = params;
  const auto& s = r.stats;
  j["istar"] = s.istar;
  j["solutions_found"] = s.solutions_found;
  j["n_jump"] = s.n_jump;
  j["n_rns"] = s.n_rns;
  j["cons_calls"] = s.cons_calls;
  j["solver_nodes"] = s.solver_nodes;
  j["rns_duplicates"] = s.rns_duplicates;
  j["times_ms"] = {{"solve", s.solve_ms}, {"rns", s.rns_ms}, {"jump", s.jump_ms}, {"total", s.total_ms}};
  for (const auto& [name, member] : prune_fields()) j["prune"][name] = s.prune.*member;
  j["reason"] = to_string(s.reason);
  j["complete"] = s.complete;
  j["partial"] = r.partial;
  return j;
}

RunRecord record_from_json(const nlohmann::json& j) {
  RunRecord r;
  r.instance = j.at("instance");
  r.graph = j.at("graph");
  r.n = j.at("n");
  r.m = j.at("m");
  const auto& p = j.at("params");
  r.r_max = p.at("r_max");
  r.mode = p.at("mode");
  r.time_limit = p.at("time_limit").is_null() ? std::numeric_limits<double>::infinity()
                                              : p.at("time_limit").get<double>();
  r.max_solutions = p.at("max_solutions");
  r.threads = p.at("threads");
  for (const auto& [name, member] : pruning_fields()) r.pruning.*member = p.at("pruning").at(name);
  auto& s = r.stats;
  s.istar = j.at("istar");
  s.solutions_found = j.at("solutions_found");
  s.n_jump = j.at("n_jump");
  s.n_rns = j.at("n_rns");
  s.cons_calls = j.at("cons_calls");
  s.solver_nodes = j.at("solver_nodes");
  s.rns_duplicates = j.at("rns_duplicates");
  const auto& t = j.at("times_ms");
  s.solve_ms = t.at("solve");
  s.rns_ms = t.at("rns");
  s.jump_ms = t.at("jump");
  s.total_ms = t.at("total");
  for (const auto& [name, member] : prune_fields()) s.prune.*member = j.at("prune").at(name);
  s.reason = parse_reason(j.at("reason"));
  s.complete = j.at("complete");
  r.partial = j.at("partial");
  return r;
}

std::vector<std::string> csv_header() {
  std::vector<std::string> h{"instance", "graph", "n", "m", "r_max", "mode", "time_limit", "max_solutions", "threads"};
  for (const auto& [name, member] : pruning_fields()) h.push_back(std::string("pruning_") + name);
  for (const char* name : {"istar", "solutions_found", "n_jump", "n_rns", "cons_calls", "solver_nodes",
                           "rns_duplicates", "solve_ms", "rns_ms", "jump_ms", "total_ms"})
    h.push_back(name);
  for (const auto& [name, member] : prune_fields()) h.push_back(name);
  for (const char* name : {"reason", "complete", "partial"}) h.push_back(name);
  return h;
}

std::vector<std::string> csv_row(const RunRecord& r) {
  const auto& s = r.stats;
  std::vector<std::string> row{r.instance,
                               r.graph,
                               std::to_string(r.n),
                               std::to_string(r.m),
                               std::to_string(r.r_max),
                               r.mode,
                               number(r.time_limit),
                               std::to_string(r.max_solutions),
                               std::to_string(r.threads)};
  for (const auto& [name, member] : pruning_fields()) row.push_back(r.pruning.*member ? "1" : "0");
  for (auto v : {static_cast<std::uint64_t>(s.istar), static_cast<std::uint64_t>(s.solutions_found), s.n_jump,
                 s.n_rns, s.cons_calls, s.solver_nodes, s.rns_duplicates})
    row.push_back(std::to_string(v));
  for (double v : {s.solve_ms, s.rns_ms, s.jump_ms, s.total_ms}) row.push_back(number(v));
  for (const auto& [name, member] : prune_fields()) row.push_back(std::to_string(s.prune.*member));
  row.push_back(to_string(s.reason));
  row.push_back(s.complete ? "1" : "0");
  row.push_back(r.partial ? "1" : "0");
  return row;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    const auto& f = fields[i];
    if (f.find_first_of(",\"\n") == std::string::npos) {
      out += f;
      continue;
    }
    out += '"';
    for (char c : f) {
      if (c == '"') out += '"';
      out += c;
    }
    out += '"';
  }
  return out;
}

}  // namespace enumcc::cli
