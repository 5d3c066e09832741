#include "enumcc/generators.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/stoer_wagner_min_cut.hpp>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "enumcc/errors.hpp"
#include "enumcc/io.hpp"
#include "enumcc/rng.hpp"
#include "enumcc/solver.hpp"

namespace enumcc {

void GeneratorConfig::validate() const {
  if (n < 1) throw InputError("n must be positive");
  if (l0 < 1 || l0 > n) throw InputError("l0 must lie in [1, n]");
  if (!(q_m >= 0 && q_m <= 1)) throw InputError("q_m must lie in [0, 1]");
  if (!(d > 0 && d <= 1)) throw InputError("d must lie in (0, 1]");
  if (!(q_neg >= 0 && q_neg <= 1)) throw InputError("q_neg must lie in [0, 1]");
  if (max_attempts < 0) throw InputError("max_attempts must be non-negative");
}

std::string to_string(PerturbationKind kind) {
  switch (kind) {
    case PerturbationKind::flip: return "flip";
    case PerturbationKind::add: return "add";
    case PerturbationKind::remove: return "remove";
  }
  return "flip";
}

Membership planted_modules(int n, int l0) {
  if (l0 < 1 || l0 > n) throw InputError("l0 must lie in [1, n]");
  std::vector<int> labels;
  labels.reserve(n);
  int base = n / l0, extra = n % l0;
  for (int i = 0; i < l0; ++i)
    for (int k = 0; k < base + (i < extra ? 1 : 0); ++k) labels.push_back(i);
  return Membership::from_canonical(std::move(labels));
}

namespace {

using Pair = std::pair<Vertex, Vertex>;

long long rounded(double x) { return std::llround(x); }

void split_pairs(const Membership& p, std::vector<Pair>& internal, std::vector<Pair>& external) {
  for (Vertex u = 0; u < p.size(); ++u)
    for (Vertex v = u + 1; v < p.size(); ++v) (p[u] == p[v] ? internal : external).emplace_back(u, v);
}

double achieved_q_neg(const SignedGraph& g) { return g.m() == 0 ? 0.0 : static_cast<double>(g.m_neg()) / g.m(); }

}  // namespace

PlantedInstance gen_dataset1(const GeneratorConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  Membership planted = planted_modules(cfg.n, cfg.l0);
  std::vector<Pair> internal, external;
  split_pairs(planted, internal, external);
  const long long n_in = static_cast<long long>(internal.size());
  const long long n_ex = static_cast<long long>(external.size());
  const long long m = rounded(cfg.d * static_cast<double>(n_in + n_ex));

  auto negatives = [&](long long m_in) {
    long long m_ex = m - m_in;
    return (m_ex - rounded(cfg.q_m * m_ex)) + rounded(cfg.q_m * m_in);
  };

  long long m_in = n_in;
  if (cfg.d < 1 && m > 0) {
    // The internal/external split is the only free quantity that moves q_neg.
    long long lo = std::max(0LL, m - n_ex), hi = std::min(n_in, m);
    double proportional = cfg.d * n_in;
    double best = std::numeric_limits<double>::infinity();
    for (long long k = lo; k <= hi; ++k) {
      double err = std::abs(static_cast<double>(negatives(k)) / m - cfg.q_neg);
      double tie = std::abs(k - proportional);
      if (err < best - 1e-12 || (err < best + 1e-12 && tie < std::abs(m_in - proportional))) {
        best = std::min(best, err);
        m_in = k;
      }
    }
    double tolerance = std::max(0.02, 1.0 / static_cast<double>(m));
    if (best > tolerance) {
      std::ostringstream msg;
      msg << "q_neg = " << cfg.q_neg << " is infeasible for d = " << cfg.d << ", q_m = " << cfg.q_m
          << " (closest achievable " << static_cast<double>(negatives(m_in)) / m << ")";
      throw GenerationError(msg.str());
    }
  }
  const long long m_ex = m - m_in;

  std::vector<SignedEdge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  auto take = [&](const std::vector<Pair>& pool, long long count, int sign) {
    auto chosen = rng.sample(pool.size(), static_cast<std::uint64_t>(count));
    long long flips = rounded(cfg.q_m * count);
    for (long long i = 0; i < count; ++i) {
      const auto& [u, v] = pool[chosen[i]];
      edges.push_back({u, v, i < flips ? -sign : sign});
    }
  };
  take(internal, m_in, +1);
  take(external, m_ex, -1);

  PlantedInstance out{SignedGraph(cfg.n, std::move(edges)), std::move(planted), {}, false, 0};
  out.q_neg_achieved = achieved_q_neg(out.graph);
  return out;
}

int balanced_margin(const SignedGraph& g, const Membership& planted) {
  if (planted.size() != g.n()) throw InputError("membership length does not match graph order");
  int margin = std::numeric_limits<int>::max();
  const int l = planted.num_modules();
  std::vector<int> between(static_cast<std::size_t>(l) * l, 0);
  for (const auto& e : g.edges())
    if (e.sign < 0 && planted[e.u] != planted[e.v]) {
      int a = std::min(planted[e.u], planted[e.v]), b = std::max(planted[e.u], planted[e.v]);
      between[static_cast<std::size_t>(a) * l + b]++;
    }
  for (int a = 0; a < l; ++a)
    for (int b = a + 1; b < l; ++b) margin = std::min(margin, between[static_cast<std::size_t>(a) * l + b]);

  using CutGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                         boost::property<boost::edge_weight_t, int>>;
  for (const auto& module : planted.modules()) {
    if (module.size() < 2) continue;
    auto sub = induced_subgraph(g, module);
    SignedGraph pos = positive_graph(sub.graph);
    std::vector<Vertex> all(module.size());
    std::iota(all.begin(), all.end(), 0);
    if (!is_connected(pos, all)) return 0;
    CutGraph h(module.size());
    for (const auto& e : pos.edges()) boost::add_edge(e.u, e.v, 1, h);
    margin = std::min(margin, boost::stoer_wagner_min_cut(h, boost::get(boost::edge_weight, h)));
  }
  return margin;
}

bool single_move_optimal(const SignedGraph& g, const Membership& p) {
  if (p.size() != g.n()) throw InputError("membership length does not match graph order");
  std::vector<int> toward(p.num_modules(), 0);
  for (Vertex u = 0; u < g.n(); ++u) {
    for (const auto& nb : g.neighbors(u)) toward[p[nb.v]] += nb.sign;
    int own = toward[p[u]];
    bool improving = own < 0;  // leaving for a new module
    for (const auto& nb : g.neighbors(u))
      if (p[nb.v] != p[u] && own - toward[p[nb.v]] < 0) improving = true;
    for (const auto& nb : g.neighbors(u)) toward[p[nb.v]] = 0;
    if (improving) return false;
  }
  return true;
}

namespace {

// Edge set over all pairs with O(1) random choice among present/absent pairs.
class PairPool {
 public:
  explicit PairPool(int n) : n_(n), sign_(static_cast<std::size_t>(n) * (n - 1) / 2, 0) {
    position_.assign(sign_.size(), 0);
    absent_.resize(sign_.size());
    std::iota(absent_.begin(), absent_.end(), 0);
    std::iota(position_.begin(), position_.end(), 0);
  }

  std::size_t pairs() const { return sign_.size(); }
  const std::vector<std::size_t>& present() const { return present_; }
  const std::vector<std::size_t>& absent() const { return absent_; }
  int sign(std::size_t i) const { return sign_[i]; }

  void set(std::size_t i, int sign) {
    if ((sign_[i] != 0) != (sign != 0)) {
      auto& from = sign_[i] != 0 ? present_ : absent_;
      auto& to = sign_[i] != 0 ? absent_ : present_;
      std::size_t pos = position_[i];
      position_[from.back()] = pos;
      from[pos] = from.back();
      from.pop_back();
      position_[i] = to.size();
      to.push_back(i);
    }
    sign_[i] = static_cast<std::int8_t>(sign);
  }

  Pair endpoints(std::size_t i) const {
    // Row-major upper triangle.
    Vertex u = 0;
    std::size_t row = static_cast<std::size_t>(n_ - 1);
    while (i >= row) {
      i -= row;
      ++u;
      --row;
    }
    return {u, static_cast<Vertex>(u + 1 + i)};
  }

  SignedGraph graph() const {
    std::vector<std::size_t> ids = present_;
    std::sort(ids.begin(), ids.end());
    std::vector<SignedEdge> edges;
    edges.reserve(ids.size());
    for (auto i : ids) {
      auto [u, v] = endpoints(i);
      edges.push_back({u, v, sign_[i]});
    }
    return SignedGraph(n_, std::move(edges));
  }

 private:
  int n_;
  std::vector<std::int8_t> sign_;
  std::vector<std::size_t> position_;
  std::vector<std::size_t> present_;
  std::vector<std::size_t> absent_;
};

}  // namespace

PlantedInstance gen_dataset2(const GeneratorConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  Membership planted = planted_modules(cfg.n, cfg.l0);
  PairPool pool(cfg.n);
  const long long m = rounded(cfg.d * static_cast<double>(pool.pairs()));
  for (auto i : rng.sample(pool.pairs(), static_cast<std::uint64_t>(m))) {
    auto [u, v] = pool.endpoints(i);
    pool.set(i, planted[u] == planted[v] ? 1 : -1);
  }

  SignedGraph graph = pool.graph();
  const int margin = balanced_margin(graph, planted);
  const long long target = rounded(cfg.q_m * static_cast<double>(m));
  const long long budget = cfg.max_attempts > 0 ? cfg.max_attempts : 20 * target + 100;
  const bool exact = cfg.n <= 12;

  PlantedInstance out{graph, planted, {}, false, 0};
  long long accepted = 0;
  for (long long attempt = 0; attempt < budget && accepted < target; ++attempt) {
    std::vector<PerturbationKind> kinds;
    if (!pool.present().empty()) kinds.push_back(PerturbationKind::flip);
    if (cfg.d < 1) {
      if (!pool.absent().empty()) kinds.push_back(PerturbationKind::add);
      if (!pool.present().empty()) kinds.push_back(PerturbationKind::remove);
    }
    if (kinds.empty()) break;
    PerturbationKind kind = kinds[rng.below(kinds.size())];
    std::size_t id;
    int before, after;
    if (kind == PerturbationKind::add) {
      id = pool.absent()[rng.below(pool.absent().size())];
      before = 0;
      after = rng.below(2) ? 1 : -1;
    } else {
      id = pool.present()[rng.below(pool.present().size())];
      before = pool.sign(id);
      after = kind == PerturbationKind::flip ? -before : 0;
    }
    pool.set(id, after);
    SignedGraph candidate = pool.graph();
    int planted_value = imbalance(candidate, planted);
    bool ok;
    if (planted_value == 0) {
      ok = true;
    } else if (exact) {
      ok = solve_first(candidate).istar == planted_value;
    } else {
      // Every partition loses at most one unit per accepted step from its
      // imbalance in the balanced base graph, which is at least `margin`.
      ok = single_move_optimal(candidate, planted) && planted_value <= margin - (accepted + 1);
    }
    auto [u, v] = pool.endpoints(id);
    out.log.push_back({kind, {u, v, kind == PerturbationKind::remove ? before : after}, ok});
    if (ok) {
      ++accepted;
      out.graph = std::move(candidate);
    } else {
      pool.set(id, before);
    }
  }
  out.warning = accepted < target;
  out.q_neg_achieved = achieved_q_neg(out.graph);
  return out;
}

EdgeListFormat parse_edge_list_format(const std::string& text) {
  if (text == "graph") return EdgeListFormat::graph;
  if (text == "csv") return EdgeListFormat::csv;
  if (text == "whitespace" || text == "edgelist" || text == "tsv") return EdgeListFormat::whitespace;
  throw InputError("unknown edge-list format '" + text + "'");
}

namespace {

std::string trim(std::string s) {
  auto issp = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '"'; };
  while (!s.empty() && issp(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && issp(s[i])) ++i;
  return s.substr(i);
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

struct RawEdges {
  std::vector<std::string> names;
  std::vector<SignedEdge> edges;
  int edges_read = 0;
  int dropped = 0;
};

RawEdges read_named_edges(std::istream& in, EdgeListFormat format) {
  RawEdges raw;
  std::unordered_map<std::string, Vertex> ids;
  std::unordered_map<std::uint64_t, std::pair<int, int>> seen;  // pair -> (sign, line)
  auto id_of = [&](const std::string& name) {
    auto [it, fresh] = ids.emplace(name, static_cast<Vertex>(raw.names.size()));
    if (fresh) raw.names.push_back(name);
    return it->second;
  };
  std::string text;
  int line = 0;
  bool header = format == EdgeListFormat::csv;
  while (std::getline(in, text)) {
    ++line;
    if (auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);
    if (trim(text).empty()) continue;
    std::vector<std::string> fields;
    if (format == EdgeListFormat::csv) {
      std::stringstream ss(text);
      for (std::string f; std::getline(ss, f, ',');) fields.push_back(trim(f));
    } else {
      std::istringstream ss(text);
      for (std::string f; ss >> f;) fields.push_back(f);
    }
    if (header) {
      if (fields.size() != 3 || lower(fields[0]) != "source" || lower(fields[1]) != "target" ||
          lower(fields[2]) != "sign")
        throw ParseError("expected header 'source,target,sign'", line);
      header = false;
      continue;
    }
    if (fields.size() == 2) throw ParseError("unsigned edge", line);
    if (fields.size() != 3) throw ParseError("expected 3 fields", line);
    int sign = parse_sign(fields[2], line);
    ++raw.edges_read;
    Vertex u = id_of(fields[0]), v = id_of(fields[1]);
    if (u == v) {
      ++raw.dropped;
      continue;
    }
    std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) | static_cast<std::uint32_t>(std::max(u, v));
    auto [it, fresh] = seen.emplace(key, std::make_pair(sign, line));
    if (!fresh) {
      if (it->second.first != sign)
        throw ParseError("conflicting sign with line " + std::to_string(it->second.second), line);
      ++raw.dropped;
      continue;
    }
    raw.edges.push_back({u, v, sign});
  }
  if (header) throw ParseError("missing header 'source,target,sign'", line + 1);
  return raw;
}

}  // namespace

IngestResult ingest_real(const std::string& path, EdgeListFormat format) {
  SignedGraph full;
  IngestResult out;
  std::vector<std::string> names;
  int dropped = 0;
  if (format == EdgeListFormat::graph) {
    full = load_graph(path);
    for (Vertex u = 0; u < full.n(); ++u) names.push_back(std::to_string(u));
    out.edges_read = full.m();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    RawEdges raw;
    try {
      raw = read_named_edges(in, format);
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.detail(), e.line());
    }
    names = std::move(raw.names);
    full = SignedGraph(static_cast<int>(names.size()), std::move(raw.edges));
    out.edges_read = raw.edges_read;
    dropped = raw.dropped;
  }
  out.vertices_read = full.n();
  if (full.n() == 0) throw InputError(path + ": no vertices");

  auto component = connected_components(positive_graph(full));
  std::vector<int> size(full.n(), 0);
  for (int c : component) size[c]++;
  // Component ids follow smallest member, so max_element keeps the earliest on ties.
  int keep = static_cast<int>(std::max_element(size.begin(), size.end()) - size.begin());
  VertexSet kept;
  for (Vertex u = 0; u < full.n(); ++u)
    if (component[u] == keep) kept.push_back(u);
  auto sub = induced_subgraph(full, kept);
  out.graph = std::move(sub.graph);
  for (auto u : sub.to_parent) out.names.push_back(names[u]);
  out.dropped_vertices = full.n() - out.graph.n();
  out.dropped_edges = dropped + (full.m() - out.graph.m());
  return out;
}

}  // namespace enumcc
