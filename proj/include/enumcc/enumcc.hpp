#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "enumcc/neighborhood.hpp"
#include "enumcc/rns.hpp"
#include "enumcc/solution_set.hpp"
#include "enumcc/solver.hpp"

namespace enumcc {

enum class EnumMode { enumcc, sequential, rns_only };
enum class Termination { exhausted, solution_cap, time_cap };

std::string to_string(EnumMode mode);
std::string to_string(Termination reason);
EnumMode parse_mode(const std::string& text);

struct EnumLimits {
  double time_seconds = std::numeric_limits<double>::infinity();
  std::size_t max_solutions = 50000;
  SolverBudget solver;  // per solver call, further clipped by the remaining time
  EnumMode mode = EnumMode::enumcc;
  ConsOptions cons;
};

struct RunStats {
  std::uint64_t n_jump = 0;
  std::uint64_t n_rns = 0;
  std::uint64_t cons_calls = 0;
  std::uint64_t solver_nodes = 0;
  std::uint64_t rns_duplicates = 0;
  double solve_ms = 0;
  double rns_ms = 0;
  double jump_ms = 0;
  double total_ms = 0;
  ConsStats prune;
  std::size_t solutions_found = 0;
  int istar = 0;
  Termination reason = Termination::exhausted;
  // True iff the output is the whole optimum space.
  bool complete = false;
};

struct EnumResult {
  SolutionSet solutions;
  RunStats stats;
};

// Raised when a solver call runs out of its own node or time budget before
// the run's time cap. Carries what was found so far.
class EnumTimeout : public std::runtime_error {
 public:
  EnumTimeout(const std::string& what, EnumResult partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const EnumResult& partial() const { return partial_; }

 private:
  EnumResult partial_;
};

EnumResult enum_cc(const SignedGraph& g, int r_max, const EnumLimits& limits = {});

}  // namespace enumcc
