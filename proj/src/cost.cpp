#include "infobid/cost.hpp"

#include <cmath>

#include "infobid/errors.hpp"

namespace infobid {

double CostKernel::operator()(double x) const {
  x = std::abs(x);
  if (type == Type::Power) return scale * std::pow(x, gamma);
  // Piecewise-linear table; extrapolate the last segment beyond the range.
  if (x <= xs.front()) return scale * ys.front();
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (x <= xs[i]) {
      double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
      return scale * (ys[i - 1] + t * (ys[i] - ys[i - 1]));
    }
  }
  std::size_t i = xs.size() - 1;
  double slope = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]);
  return scale * (ys[i] + slope * (x - xs[i]));
}

void CostKernel::validate() const {
  if (scale < 0) throw ConfigError("cost kernel scale must be nonnegative");
  if (type == Type::Power) {
    if (gamma < 1.0) throw ConfigError("power kernel needs gamma >= 1");
    return;
  }
  if (xs.size() < 2 || xs.size() != ys.size())
    throw ConfigError("table kernel needs matching xs/ys with at least two nodes");
  if (xs.front() != 0.0 || ys.front() != 0.0)
    throw ConfigError("table kernel must start at k(0) = 0");
  double prev_slope = 0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] <= xs[i - 1]) throw ConfigError("table kernel xs must be strictly increasing");
    if (ys[i] < ys[i - 1]) throw ConfigError("table kernel must be nondecreasing");
    double slope = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]);
    if (slope + 1e-12 < prev_slope) throw ConfigError("table kernel must be convex");
    prev_slope = slope;
  }
}

double cost(const CostModel& model, const ValueGrid& grid, double r, double s,
            const Experiment& f) {
  if (f.mass.size() != grid.points.size())
    throw ConfigError("cost: experiment is not on the model's grid");
  if (r == 0.0) return 0.0;
  const double anchor =
      model.variant == CostVariant::AnchorAtS ? grid.value_at(s) : f.mean(grid);
  double acc = 0;
  for (std::size_t j = 0; j < f.mass.size(); ++j) {
    if (f.mass[j] == 0.0) continue;
    acc += model.kernel(grid.points[j] - anchor) * f.mass[j];
  }
  return r * acc;
}

std::vector<double> cost_coefficients(const CostModel& model, const ValueGrid& grid, double r,
                                      double anchor) {
  std::vector<double> c(grid.points.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = r * model.kernel(grid.points[j] - anchor);
  return c;
}

}  // namespace infobid
