#pragma once

#include <cstdint>
#include <span>

namespace infobid {

// splitmix64. Used instead of <random> engines so sampled streams are
// identical across platforms and across serial/parallel execution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform index in [0, k), k >= 1.
  std::size_t next_index(std::size_t k) { return next_u64() % k; }

  // Index drawn from a probability vector by cumulative inversion.
  std::size_t sample(std::span<const double> pmf);

 private:
  std::uint64_t state_;
};

// Independent stream for (seed, index); one stream per Monte Carlo run or
// per trial keeps parallel batches reproducible.
Rng substream(std::uint64_t seed, std::uint64_t index);

}  // namespace infobid
