#pragma once

#include <algorithm>
#include <vector>

namespace infobid {

// Reductions over per-bidder quantities sort their operands first, so the
// result is invariant under bidder permutations at the bit level.

inline double order_invariant_product(std::vector<double> factors) {
  std::sort(factors.begin(), factors.end());
  double out = 1.0;
  for (double f : factors) out *= f;
  return out;
}

inline double order_invariant_sum(std::vector<double> terms) {
  std::sort(terms.begin(), terms.end());
  double out = 0.0;
  for (double t : terms) out += t;
  return out;
}

}  // namespace infobid
