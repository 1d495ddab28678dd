#include "infobid/vcg.hpp"

#include <cmath>
#include <stdexcept>

#include "infobid/errors.hpp"
#include "infobid/numeric.hpp"

namespace infobid {

Outcome allocate(std::span<const double> bids) {
  if (bids.empty()) throw std::invalid_argument("allocate: empty bid vector");
  const int n = int(bids.size());
  double top = bids[0];
  for (double b : bids) top = std::max(top, b);
  int ties = 0;
  double second = -1;  // highest bid strictly below top
  for (double b : bids) {
    if (b == top)
      ++ties;
    else
      second = std::max(second, b);
  }
  Outcome o;
  o.win_prob.assign(n, 0.0);
  o.payments.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (bids[i] != top) continue;
    o.win_prob[i] = 1.0 / ties;
    // Winner pays the highest competing bid: the tied value itself at a
    // tie, the runner-up otherwise.
    o.payments[i] = ties > 1 ? top : second;
  }
  if (n == 1) o.payments[0] = 0.0;
  return o;
}

double expost_payoff(int bidder, double value, std::span<const double> bids) {
  Outcome o = allocate(bids);
  return o.win_prob[bidder] * (value - o.payments[bidder]);
}

namespace {

void check_mixtures(const ValueGrid& grid, std::span<const Density> mixtures) {
  if (mixtures.empty()) throw ConfigError("interim curve needs at least one opponent");
  for (const Density& g : mixtures)
    if (g.size() != grid.points.size())
      throw ConfigError("opponent mixture is not on the value grid");
}

// CDF of the highest opponent draw, factors multiplied in sorted order so
// the curve does not depend on opponent order.
std::vector<double> max_cdf(const ValueGrid& grid, std::span<const Density> mixtures) {
  const int m1 = grid.size();
  std::vector<std::vector<double>> cdf(mixtures.size(), std::vector<double>(m1));
  for (std::size_t j = 0; j < mixtures.size(); ++j) {
    double acc = 0;
    for (int k = 0; k < m1; ++k) {
      acc += mixtures[j][k];
      cdf[j][k] = std::min(acc, 1.0);
    }
  }
  std::vector<double> out(m1);
  std::vector<double> factors(mixtures.size());
  for (int k = 0; k < m1; ++k) {
    for (std::size_t j = 0; j < mixtures.size(); ++j) factors[j] = cdf[j][k];
    out[k] = order_invariant_product(factors);
  }
  return out;
}

}  // namespace

InterimCurve interim_curve(const ValueGrid& grid, std::span<const Density> opponent_mixtures) {
  check_mixtures(grid, opponent_mixtures);
  const int m1 = grid.size();
  InterimCurve c;
  c.opp_max_cdf = max_cdf(grid, opponent_mixtures);
  c.pi.assign(m1, 0.0);
  // pi_j = sum_{k<j} (z_j - z_k) P(Y = z_k); ties pay own value, so they
  // contribute nothing.
  double prob_below = 0, mass_below = 0;
  for (int j = 0; j < m1; ++j) {
    c.pi[j] = grid.points[j] * prob_below - mass_below;
    double py = c.opp_max_cdf[j] - (j > 0 ? c.opp_max_cdf[j - 1] : 0.0);
    prob_below += py;
    mass_below += grid.points[j] * py;
  }
  return c;
}

double deviation_payoff(const ValueGrid& grid, std::span<const Density> opponent_mixtures,
                        int value_idx, int bid_idx) {
  check_mixtures(grid, opponent_mixtures);
  const int n_opp = int(opponent_mixtures.size());
  if (n_opp > 20) throw ConfigError("deviation_payoff: too many opponents for exact tie shares");
  const double value = grid.points[value_idx];
  const double bid = grid.points[bid_idx];

  std::vector<double> ycdf = max_cdf(grid, opponent_mixtures);

  // Strict wins: pay the highest opponent value.
  double u = 0;
  for (int k = 0; k < bid_idx; ++k) {
    double py = ycdf[k] - (k > 0 ? ycdf[k - 1] : 0.0);
    u += py * (value - grid.points[k]);
  }

  // There is positive probability of tying at the bid. The winner then pays
  // the tied value, and the object splits uniformly among 1 + |S| tied
  // bidders; enumerate the opponent subsets S tying exactly.
  std::vector<double> at(n_opp), below(n_opp);
  for (int j = 0; j < n_opp; ++j) {
    at[j] = opponent_mixtures[j][bid_idx];
    double acc = 0;
    for (int k = 0; k < bid_idx; ++k) acc += opponent_mixtures[j][k];
    below[j] = acc;
  }
  double tie_share = 0;  // E[ 1{max = bid} / (1 + |S|) ]
  for (unsigned mask = 1; mask < (1u << n_opp); ++mask) {
    double p = 1.0;
    int tied = 0;
    for (int j = 0; j < n_opp; ++j) {
      if (mask & (1u << j)) {
        p *= at[j];
        ++tied;
      } else {
        p *= below[j];
      }
    }
    tie_share += p / (1.0 + tied);
  }
  u += tie_share * (value - bid);
  return u;
}

}  // namespace infobid
