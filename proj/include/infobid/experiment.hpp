#pragma once

#include <string>
#include <vector>

#include "infobid/grid.hpp"

namespace infobid {

// A discrete density over the value grid together with its declared mean.
// An experiment claiming center z_alpha must have mean within mean_tol.
struct Experiment {
  std::vector<double> mass;
  double center = 0;

  double mean(const ValueGrid& grid) const;
  void validate(const ValueGrid& grid, double mean_tol) const;
};

enum class DensityShape { Degenerate, TwoPointExtreme, Uniform };

DensityShape parse_density_shape(const std::string& name);

// Member of the mean-constrained class D(alpha). Degenerate puts all mass
// at z_alpha (the two bracketing grid points when z_alpha is off-grid);
// TwoPointExtreme mixes the endpoints a and b; Uniform is feasible only
// when the grid's uniform mean already equals z_alpha.
Experiment make_mean_constrained(const ValueGrid& grid, double alpha, DensityShape shape,
                                 double mean_tol = 1e-9);

Experiment point_mass(const ValueGrid& grid, int index);

// Convex mixture of experiments with a common center.
Experiment mix(const Experiment& f, const Experiment& g, double lambda);

}  // namespace infobid
