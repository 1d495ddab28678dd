#pragma once

#include <span>
#include <vector>

#include "infobid/grid.hpp"

namespace infobid {

using Density = std::vector<double>;

// Stage-2 outcome of the efficient rule: win probabilities (uniform split
// among the highest bids) and winner-contingent payments. payments[i] is
// what i pays if i receives the object; 0 whenever win_prob[i] == 0.
struct Outcome {
  std::vector<double> win_prob;
  std::vector<double> payments;
};

Outcome allocate(std::span<const double> bids);

// win_prob_i * (value - payment_i); exactly 0 at a tie won at own value.
double expost_payoff(int bidder, double value, std::span<const double> bids);

// Expected truthful stage-2 payoff pi_j = E[(z_j - Y)^+] against the
// highest opponent draw Y, and the CDF of Y. pi is nondecreasing and convex
// along the grid.
struct InterimCurve {
  std::vector<double> pi;
  std::vector<double> opp_max_cdf;
};

InterimCurve interim_curve(const ValueGrid& grid, std::span<const Density> opponent_mixtures);

// Expected payoff of bidding z_bid while valuing z_value, with exact
// tie-splitting over opponent subsets; truthful bidding maximizes this.
double deviation_payoff(const ValueGrid& grid, std::span<const Density> opponent_mixtures,
                        int value_idx, int bid_idx);

}  // namespace infobid
