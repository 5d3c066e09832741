#include "enumcc/rng.hpp"

#include <unordered_map>

#include "enumcc/errors.hpp"

namespace enumcc {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next() { return engine_(); }

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("empty range");
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return x % bound;
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::vector<std::uint64_t> Rng::sample(std::uint64_t n, std::uint64_t k) {
  if (k > n) throw InputError("sample larger than population");
  std::unordered_map<std::uint64_t, std::uint64_t> swapped;
  std::vector<std::uint64_t> out;
  out.reserve(k);
  auto value_at = [&](std::uint64_t i) {
    auto it = swapped.find(i);
    return it == swapped.end() ? i : it->second;
  };
  for (std::uint64_t i = 0; i < k; ++i) {
    std::uint64_t j = i + below(n - i);
    std::uint64_t vi = value_at(i), vj = value_at(j);
    swapped[j] = vi;
    swapped[i] = vj;
    out.push_back(vj);
  }
  return out;
}

}  // namespace enumcc
