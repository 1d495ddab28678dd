#include "infobid/rng.hpp"

namespace infobid {

std::size_t Rng::sample(std::span<const double> pmf) {
  double u = next_double();
  double acc = 0;
  for (std::size_t j = 0; j < pmf.size(); ++j) {
    acc += pmf[j];
    if (u < acc) return j;
  }
  // Mass sums to 1 within tolerance; u can exceed acc only by rounding.
  for (std::size_t j = pmf.size(); j-- > 0;) {
    if (pmf[j] > 0) return j;
  }
  return 0;
}

Rng substream(std::uint64_t seed, std::uint64_t index) {
  Rng mix_seed(seed);
  Rng mix_index(index);
  std::uint64_t a = mix_seed.next_u64();
  std::uint64_t b = mix_index.next_u64();
  return Rng(a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2)));
}

}  // namespace infobid
