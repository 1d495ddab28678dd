#pragma once

#include <vector>

#include "infobid/experiment.hpp"
#include "infobid/grid.hpp"

namespace infobid {

// Convex nondecreasing kernel k with k(0) = 0: either scale * x^gamma with
// gamma >= 1, or a tabulated piecewise-linear curve.
struct CostKernel {
  enum class Type { Power, Table };
  Type type = Type::Power;
  double gamma = 2.0;
  double scale = 1.0;
  std::vector<double> xs, ys;  // table nodes, xs[0] == 0, ys[0] == 0

  double operator()(double x) const;
  void validate() const;
};

// Where the kernel distance is anchored: at the reported mean value z_s, or
// at the experiment's own mean (under which every point mass is free).
enum class CostVariant { AnchorAtS, AnchorAtCenter };

struct CostModel {
  CostKernel kernel;
  CostVariant variant = CostVariant::AnchorAtS;
};

// Information-processing cost r * sum_j k(|z_j - anchor|) * mass_j.
double cost(const CostModel& model, const ValueGrid& grid, double r, double s,
            const Experiment& f);

// Per-point coefficients r * k(|z_j - anchor|) for a fixed anchor; the cost
// of any density with that anchor is the dot product with its mass.
std::vector<double> cost_coefficients(const CostModel& model, const ValueGrid& grid, double r,
                                      double anchor);

}  // namespace infobid
