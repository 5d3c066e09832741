#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "enumcc/graph.hpp"
#include "enumcc/partition.hpp"
#include "enumcc/solution_set.hpp"

namespace enumcc {

// Graph text format: a header line "n m", then m lines "u v s" with 0-based
// ids, u < v and s in {+1, -1}. '#' starts a comment. Errors carry line numbers.
SignedGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const SignedGraph& g);

SignedGraph load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const SignedGraph& g);

// One comma-separated label line.
Membership load_partition(const std::filesystem::path& path);
void save_partition(const std::filesystem::path& path, const Membership& p);

// One canonical vector per line, sorted.
std::vector<Membership> read_solutions(std::istream& in);
void write_solutions(std::ostream& out, const SolutionSet& s);
std::vector<Membership> load_solutions(const std::filesystem::path& path);
void save_solutions(const std::filesystem::path& path, const SolutionSet& s);

// +1 for "+1", "1" or "+", -1 for "-1" or "-". Throws ParseError otherwise.
int parse_sign(const std::string& token, int line);

}  // namespace enumcc
