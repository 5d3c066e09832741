#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace enumcc {

// mt19937_64 output is fixed by the standard; std distributions are not, so
// derived draws are implemented here to keep streams identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  // Uniform integer in [0, bound), bound > 0, without modulo bias.
  std::uint64_t below(std::uint64_t bound);
  // Uniform double in [0, 1) with 53 random bits.
  double unit();

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

  // k distinct values from [0, n) in random order.
  std::vector<std::uint64_t> sample(std::uint64_t n, std::uint64_t k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace enumcc
