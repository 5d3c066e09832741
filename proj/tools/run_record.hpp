#pragma once

#include <string>
#include <vector>

#include "enumcc/enumcc.hpp"
#include "json.hpp"

namespace enumcc::cli {

// One enumeration run, flattened for a CSV row and a JSON object.
struct RunRecord {
  std::string instance;
  std::string graph;
  int n = 0;
  int m = 0;
  int r_max = 3;
  std::string mode = "enumcc";
  double time_limit = 0;  // infinite when no limit was given
  std::size_t max_solutions = 0;
  int threads = 1;
  PruningOptions pruning;
  RunStats stats;
  bool partial = false;

  static RunRecord from(const std::string& instance, const std::string& graph, const SignedGraph& g, int r_max,
                        const EnumLimits& limits, const RunStats& stats, bool partial);
};

nlohmann::ordered_json to_json(const RunRecord& r);
RunRecord record_from_json(const nlohmann::json& j);

std::vector<std::string> csv_header();
std::vector<std::string> csv_row(const RunRecord& r);
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace enumcc::cli
