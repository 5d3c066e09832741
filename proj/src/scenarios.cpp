#include "enumcc/scenarios.hpp"

#include <algorithm>
#include <cstdint>

#include "enumcc/errors.hpp"

namespace enumcc {

namespace {

const std::vector<EditScenario> kTwoEdit = {
    {'a', 2, {0, 0, 0}, {1, 1, 0}, {{1, 0, 0}}},
    {'b', 2, {0, 1, 0}, {1, 0, 0}, {{-1, 0, 0}}},
    {'c', 2, {0, 0, 0}, {1, 2, 0}, {}},
    {'d', 2, {0, 1, 0}, {2, 2, 0}, {}},
    {'e', 2, {0, 1, 0}, {1, 2, 0}, {}},
};

const std::vector<EditScenario> kThreeEdit = {
    {'a', 3, {0, 0, 0}, {1, 1, 1}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}}},
    {'b', 3, {0, 0, 0}, {1, 2, 2}, {{1, 1, 1}}},
    {'c', 3, {0, 0, 0}, {1, 2, 3}, {{1, 1, 1}}},
    {'d', 3, {0, 0, 1}, {2, 2, 2}, {{1, 1, 1}}},
    {'e', 3, {0, 0, 1}, {1, 1, 0}, {{0, -1, -1}, {1, -1, -1}, {1, -1, 0}, {1, 0, -1}}},
    {'f', 3, {0, 0, 1}, {1, 1, 2}, {{1, -1, -1}}},
    {'g', 3, {0, 0, 1}, {2, 2, 0}, {{1, -1, -1}}},
    {'h', 3, {0, 0, 1}, {2, 3, 0}, {{1, -1, -1}}},
    {'i', 3, {0, 0, 1}, {2, 1, 0}, {{1, -1, -1}}},
    {'j', 3, {0, 0, 1}, {1, 2, 2}, {{1, -1, 1}}},
    {'k', 3, {0, 0, 1}, {2, 1, 3}, {}},
    {'l', 3, {0, 1, 2}, {1, 2, 0}, {{-1, -1, -1}}},
    {'m', 3, {0, 1, 2}, {1, 2, 3}, {}},
    {'n', 3, {0, 1, 2}, {1, 0, 1}, {{-1, 1, -1}}},
    {'o', 3, {0, 1, 2}, {1, 3, 3}, {}},
    {'p', 3, {0, 1, 2}, {1, 3, 1}, {{-1, 1, -1}}},
    {'r', 3, {0, 1, 2}, {3, 3, 3}, {{1, 1, 1}}},
};

using Key = std::array<int, 6>;

constexpr std::array<int, 3> kIdentity{0, 1, 2};

// Relabels by first occurrence over sources, then targets.
Key pattern_key(int r, const int* s, const int* t, const int* perm) {
  Key key;
  key.fill(-1);
  std::array<int, 6> seen{};
  int distinct = 0;
  auto code = [&](int label) {
    for (int i = 0; i < distinct; ++i)
      if (seen[i] == label) return i;
    seen[distinct] = label;
    return distinct++;
  };
  for (int i = 0; i < r; ++i) key[i] = code(s[perm[i]]);
  if (t)
    for (int i = 0; i < r; ++i) key[3 + i] = code(t[perm[i]]);
  return key;
}

std::array<int, 3> permuted_signs(int r, std::span<const int> signs, const int* perm) {
  std::array<int, 3> out{0, 0, 0};
  for (int x = 0; x < r; ++x)
    for (int y = x + 1; y < r; ++y) {
      int a = std::min(perm[x], perm[y]), b = std::max(perm[x], perm[y]);
      out[pair_slot(x, y)] = signs[pair_slot(a, b)];
    }
  return out;
}

struct KeyedScenario {
  Key source_key;
  Key full_key;
  const EditScenario* scenario;
};

std::vector<KeyedScenario> keyed(const std::vector<EditScenario>& table) {
  std::vector<KeyedScenario> out;
  for (const auto& sc : table) {
    int r = sc.movers;
    out.push_back({pattern_key(r, sc.source.data(), nullptr, kIdentity.data()),
                   pattern_key(r, sc.source.data(), sc.target.data(), kIdentity.data()), &sc});
  }
  return out;
}

const std::vector<KeyedScenario>& keyed_table(std::size_t r) {
  static const std::vector<KeyedScenario> two = keyed(kTwoEdit);
  static const std::vector<KeyedScenario> three = keyed(kThreeEdit);
  if (r == 2) return two;
  if (r == 3) return three;
  throw InputError("scenario tables cover 2 or 3 moving vertices");
}

bool admits(const EditScenario& sc, const std::array<int, 3>& signs) {
  return std::find(sc.admissible.begin(), sc.admissible.end(), signs) != sc.admissible.end();
}

bool any_scenario_scan(std::span<const int> source, const int* target, std::span<const int> pair_signs) {
  std::size_t r = source.size();
  const auto& table = keyed_table(r);
  if (pair_signs.size() < (r == 2 ? 1u : 3u)) throw InputError("too few pair signs");
  int n = static_cast<int>(r);
  std::array<int, 3> perm{0, 1, 2};
  do {
    Key key = pattern_key(n, source.data(), target, perm.data());
    auto signs = permuted_signs(n, pair_signs, perm.data());
    for (const auto& entry : table)
      if ((target ? entry.full_key : entry.source_key) == key && admits(*entry.scenario, signs))
        return true;
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return false;
}

int key_code(const Key& key) {
  int code = 0;
  for (int i = 5; i >= 0; --i) code = code * 7 + key[i] + 1;
  return code;
}

int sign_code(int r, std::span<const int> signs) {
  int pairs = r == 2 ? 1 : 3, code = 0;
  for (int k = pairs - 1; k >= 0; --k) code = code * 3 + signs[k] + 1;
  return code;
}

// Scan results for every equality pattern, one bit per sign vector.
std::vector<std::uint32_t> build_verdicts() {
  std::vector<std::uint32_t> bits(117649, 0);
  auto digits = [](int value, int base, int r) {
    std::array<int, 3> out{0, 0, 0};
    for (int i = 0; i < r; ++i, value /= base) out[i] = value % base;
    return out;
  };
  for (int r = 2; r <= 3; ++r) {
    int pairs = r == 2 ? 1 : 3, sign_vectors = r == 2 ? 3 : 27;
    int sources = r == 2 ? 4 : 27, targets = r == 2 ? 16 : 216;
    for (int with_target = 0; with_target < 2; ++with_target)
      for (int si = 0; si < sources; ++si)
        for (int ti = 0; ti < (with_target ? targets : 1); ++ti) {
          auto src = digits(si, r, r), tgt = digits(ti, 2 * r, r);
          const int* t = with_target ? tgt.data() : nullptr;
          int code = key_code(pattern_key(r, src.data(), t, kIdentity.data()));
          for (int sc = 0; sc < sign_vectors; ++sc) {
            std::array<int, 3> signs{0, 0, 0};
            for (int k = 0, x = sc; k < pairs; ++k, x /= 3) signs[k] = x % 3 - 1;
            if (any_scenario_scan(std::span<const int>(src.data(), r), t, signs)) bits[code] |= 1u << sc;
          }
        }
  }
  return bits;
}

bool any_scenario(std::span<const int> source, const int* target, std::span<const int> pair_signs) {
  std::size_t r = source.size();
  if (r != 2 && r != 3) throw InputError("scenario tables cover 2 or 3 moving vertices");
  if (pair_signs.size() < (r == 2 ? 1u : 3u)) throw InputError("too few pair signs");
  for (std::size_t k = 0; k < (r == 2 ? 1u : 3u); ++k)
    if (pair_signs[k] < -1 || pair_signs[k] > 1) throw InputError("pair signs must lie in {-1, 0, 1}");
  static const std::vector<std::uint32_t> verdicts = build_verdicts();
  int n = static_cast<int>(r);
  int code = key_code(pattern_key(n, source.data(), target, kIdentity.data()));
  return verdicts[code] >> sign_code(n, pair_signs) & 1u;
}

}  // namespace

std::span<const EditScenario> two_edit_scenarios() { return kTwoEdit; }
std::span<const EditScenario> three_edit_scenarios() { return kThreeEdit; }

bool scenario_admits_sources(std::span<const int> source, std::span<const int> pair_signs) {
  return any_scenario(source, nullptr, pair_signs);
}

bool scenario_admits(std::span<const int> source, std::span<const int> target,
                     std::span<const int> pair_signs) {
  if (source.size() != target.size()) throw InputError("source and target sizes differ");
  return any_scenario(source, target.data(), pair_signs);
}

}  // namespace enumcc
