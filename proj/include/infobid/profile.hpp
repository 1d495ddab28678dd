#pragma once

#include <vector>

#include "infobid/experiment.hpp"
#include "infobid/grid.hpp"
#include "infobid/vcg.hpp"

namespace infobid {

// Per-bidder assignment of an experiment to every grid type (r, s);
// maps[bidder][type_grid.cell(ri, si)].
struct StrategyProfile {
  int n = 0;
  std::vector<std::vector<Experiment>> maps;

  static StrategyProfile symmetric(int n, std::vector<Experiment> map);

  const Experiment& at(int bidder, int ri, int si, const TypeGrid& tg) const {
    return maps[bidder][tg.cell(ri, si)];
  }

  bool is_symmetric() const;
  void validate(const ValueGrid& grid, const TypeGrid& tg, double mean_tol) const;
};

// Type-marginalized bid density sum_theta w(theta) * map(theta).
Density marginal_mixture(const ValueGrid& grid, const TypeGrid& tg,
                         const std::vector<Experiment>& map);

// The value densities g_j of every bidder j != exclude.
std::vector<Density> opponent_mixture(const StrategyProfile& profile, const TypeGrid& tg,
                                      const ValueGrid& grid, int exclude);

// Bidder-average map, assigned to every slot; preserves each type's center.
StrategyProfile symmetrize(const StrategyProfile& profile);

}  // namespace infobid
