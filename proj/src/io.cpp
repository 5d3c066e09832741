#include "enumcc/io.hpp"

#include <fstream>
#include <sstream>

#include "enumcc/errors.hpp"

namespace enumcc {

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  std::string s = hash == std::string::npos ? line : line.substr(0, hash);
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t") == std::string::npos; }

long long parse_int(const std::string& token, int line, const char* what) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw ParseError(std::string("expected ") + what + ", got '" + token + "'", line);
  }
  if (used != token.size()) throw ParseError(std::string("expected ") + what + ", got '" + token + "'", line);
  return value;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  return out;
}

}  // namespace

int parse_sign(const std::string& token, int line) {
  if (token == "+1" || token == "1" || token == "+") return 1;
  if (token == "-1" || token == "-") return -1;
  if (token == "0" || token.empty()) throw ParseError("unsigned edge", line);
  throw ParseError("bad sign '" + token + "'", line);
}

SignedGraph read_graph(std::istream& in) {
  std::string raw;
  int line = 0;
  long long n = -1, m = -1;
  std::vector<SignedEdge> edges;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = strip_comment(raw);
    if (blank(s)) continue;
    std::istringstream fields(s);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (n < 0) {
      if (tokens.size() != 2) throw ParseError("header must be 'n m'", line);
      n = parse_int(tokens[0], line, "vertex count");
      m = parse_int(tokens[1], line, "edge count");
      if (n < 0 || m < 0 || n > (1LL << 30)) throw ParseError("bad header", line);
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (tokens.size() != 3) throw ParseError("edge line must be 'u v s'", line);
    long long u = parse_int(tokens[0], line, "vertex id");
    long long v = parse_int(tokens[1], line, "vertex id");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("vertex id out of range", line);
    if (u >= v) throw ParseError("edge endpoints must satisfy u < v", line);
    if (static_cast<long long>(edges.size()) == m) throw ParseError("more edges than the header declares", line);
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), parse_sign(tokens[2], line)});
    if (edges.size() >= 2) {
      const auto& a = edges[edges.size() - 2];
      const auto& b = edges.back();
      if (a.u == b.u && a.v == b.v) throw ParseError("duplicate edge", line);
    }
  }
  if (n < 0) throw ParseError("missing header", line + 1);
  if (static_cast<long long>(edges.size()) != m) throw ParseError("fewer edges than the header declares", line + 1);
  try {
    return SignedGraph(static_cast<int>(n), std::move(edges));
  } catch (const InputError& e) {
    throw ParseError(e.what(), line);
  }
}

void write_graph(std::ostream& out, const SignedGraph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? "+1" : "-1") << '\n';
}

SignedGraph load_graph(const std::filesystem::path& path) {
  auto in = open_in(path);
  try {
    return read_graph(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.detail(), e.line());
  }
}

void save_graph(const std::filesystem::path& path, const SignedGraph& g) {
  auto out = open_out(path);
  write_graph(out, g);
}

Membership load_partition(const std::filesystem::path& path) {
  auto parts = load_solutions(path);
  if (parts.size() != 1) throw InputError(path.string() + ": expected exactly one partition line");
  return parts.front();
}

void save_partition(const std::filesystem::path& path, const Membership& p) {
  auto out = open_out(path);
  out << to_string(p) << '\n';
}

std::vector<Membership> read_solutions(std::istream& in) {
  std::vector<Membership> out;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = strip_comment(raw);
    if (blank(s)) continue;
    try {
      out.push_back(parse_membership(s));
    } catch (const InputError& e) {
      throw ParseError(e.what(), line);
    }
    if (out.back().size() != out.front().size()) throw ParseError("partition length differs from the first line", line);
  }
  return out;
}

void write_solutions(std::ostream& out, const SolutionSet& s) {
  for (const auto& p : s.sorted()) out << to_string(p) << '\n';
}

std::vector<Membership> load_solutions(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_solutions(in);
}

void save_solutions(const std::filesystem::path& path, const SolutionSet& s) {
  auto out = open_out(path);
  write_solutions(out, s);
}

}  // namespace enumcc
