#include "enumcc/enumcc.hpp"

#include <algorithm>
#include <chrono>

#include "enumcc/errors.hpp"

namespace enumcc {

std::string to_string(EnumMode mode) {
  switch (mode) {
    case EnumMode::enumcc: return "enumcc";
    case EnumMode::sequential: return "sequential";
    case EnumMode::rns_only: return "rns-only";
  }
  return "enumcc";
}

std::string to_string(Termination reason) {
  switch (reason) {
    case Termination::exhausted: return "exhausted";
    case Termination::solution_cap: return "solution_cap";
    case Termination::time_cap: return "time_cap";
  }
  return "exhausted";
}

EnumMode parse_mode(const std::string& text) {
  if (text == "enumcc") return EnumMode::enumcc;
  if (text == "sequential") return EnumMode::sequential;
  if (text == "rns-only" || text == "rns_only") return EnumMode::rns_only;
  throw InputError("unknown mode '" + text + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

class Run {
 public:
  Run(const SignedGraph& g, int r_max, const EnumLimits& limits)
      : g_(g), r_max_(r_max), limits_(limits), start_(Clock::now()) {}

  EnumResult execute() {
    auto t = Clock::now();
    SolveResult first;
    try {
      first = solve_first(g_, budget());
    } catch (const SolverTimeout& e) {
      stats_.solve_ms += ms_since(t);
      if (time_left() <= 0) return finish(Termination::time_cap);
      throw EnumTimeout(e.what(), snapshot());
    }
    stats_.solve_ms += ms_since(t);
    stats_.solver_nodes += first.nodes;
    stats_.istar = first.istar;
    set_ = SolutionSet(first.istar);

    Membership current = first.partition;
    if (limits_.mode == EnumMode::sequential) set_.insert(current);
    while (true) {
      if (limits_.mode != EnumMode::sequential) {
        if (auto reason = explore(current)) return finish(*reason);
        if (limits_.mode == EnumMode::rns_only) return finish(Termination::exhausted);
      }
      if (auto reason = cap_tripped()) return finish(*reason);
      std::optional<Membership> next;
      auto tj = Clock::now();
      try {
        stats_.n_jump++;
        JumpResult jr = jump(g_, set_, stats_.istar, budget());
        stats_.solver_nodes += jr.nodes;
        next = std::move(jr.partition);
      } catch (const SolverTimeout& e) {
        stats_.jump_ms += ms_since(tj);
        if (time_left() <= 0) return finish(Termination::time_cap);
        throw EnumTimeout(e.what(), snapshot());
      }
      stats_.jump_ms += ms_since(tj);
      if (!next) {
        stats_.complete = true;
        return finish(Termination::exhausted);
      }
      current = std::move(*next);
      if (limits_.mode == EnumMode::sequential) set_.insert(current);
    }
  }

 private:
  double time_left() const {
    return limits_.time_seconds - std::chrono::duration<double>(Clock::now() - start_).count();
  }

  SolverBudget budget() const {
    SolverBudget b = limits_.solver;
    b.seconds = std::min(b.seconds, std::max(0.0, time_left()));
    return b;
  }

  std::optional<Termination> cap_tripped() const {
    if (set_.size() >= limits_.max_solutions) return Termination::solution_cap;
    if (time_left() <= 0) return Termination::time_cap;
    return std::nullopt;
  }

  std::optional<Termination> explore(const Membership& p) {
    auto t = Clock::now();
    RnsOptions options;
    options.cons = limits_.cons;
    options.stop = [this](const SolutionSet&) { return cap_tripped().has_value(); };
    stats_.n_rns++;
    RnsResult rr = rns_into(g_, p, r_max_, set_, options);
    stats_.rns_ms += ms_since(t);
    stats_.cons_calls += rr.stats.cons_calls;
    stats_.rns_duplicates += rr.stats.duplicates;
    stats_.prune += rr.stats.cons;
    if (rr.stopped) return cap_tripped().value_or(Termination::time_cap);
    return std::nullopt;
  }

  EnumResult snapshot() {
    EnumResult out{truncated(), stats_};
    out.stats.solutions_found = out.solutions.size();
    out.stats.total_ms = ms_since(start_);
    return out;
  }

  EnumResult finish(Termination reason) {
    stats_.reason = reason;
    if (reason != Termination::exhausted) stats_.complete = false;
    if (reason == Termination::exhausted && limits_.mode == EnumMode::rns_only) stats_.complete = false;
    return snapshot();
  }

  // A cons call can overshoot the solution cap; keep the smallest members.
  SolutionSet truncated() const {
    if (set_.size() <= limits_.max_solutions) return set_;
    SolutionSet out(set_.istar());
    auto members = set_.sorted();
    for (std::size_t i = 0; i < limits_.max_solutions; ++i) out.insert(members[i]);
    return out;
  }

  const SignedGraph& g_;
  int r_max_;
  EnumLimits limits_;
  Clock::time_point start_;
  SolutionSet set_;
  RunStats stats_;
};

}  // namespace

EnumResult enum_cc(const SignedGraph& g, int r_max, const EnumLimits& limits) {
  if (r_max < 1) throw InputError("r_max must be at least 1");
  if (g.n() < 1) throw InputError("graph has no vertices");
  if (limits.max_solutions < 1) throw InputError("solution cap must be at least 1");
  return Run(g, r_max, limits).execute();
}

}  // namespace enumcc
