#include "infobid/experiment.hpp"

#include <cmath>

#include "infobid/errors.hpp"

namespace infobid {

double Experiment::mean(const ValueGrid& grid) const {
  if (mass.size() != grid.points.size())
    throw ConfigError("experiment mass does not match the value grid");
  double m = 0;
  for (std::size_t j = 0; j < mass.size(); ++j) m += grid.points[j] * mass[j];
  return m;
}

void Experiment::validate(const ValueGrid& grid, double mean_tol) const {
  if (mass.size() != grid.points.size())
    throw ConfigError("experiment mass does not match the value grid");
  double sum = 0;
  for (double v : mass) {
    if (v < 0) throw ConfigError("experiment mass must be nonnegative");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-10) throw ConfigError("experiment mass must sum to 1 within 1e-10");
  if (std::abs(mean(grid) - center) > mean_tol)
    throw ConfigError("experiment mean does not match its declared center");
}

DensityShape parse_density_shape(const std::string& name) {
  if (name == "degenerate") return DensityShape::Degenerate;
  if (name == "two-point-extreme") return DensityShape::TwoPointExtreme;
  if (name == "uniform") return DensityShape::Uniform;
  throw ConfigError("unknown density shape: " + name);
}

Experiment point_mass(const ValueGrid& grid, int index) {
  Experiment f;
  f.mass.assign(grid.points.size(), 0.0);
  f.mass[index] = 1.0;
  f.center = grid.points[index];
  return f;
}

Experiment make_mean_constrained(const ValueGrid& grid, double alpha, DensityShape shape,
                                 double mean_tol) {
  if (alpha < 0 || alpha > 1) throw InfeasibleError("mean parameter alpha must lie in [0,1]");
  const double target = grid.value_at(alpha);
  Experiment f;
  f.mass.assign(grid.points.size(), 0.0);
  f.center = target;

  switch (shape) {
    case DensityShape::Degenerate: {
      // Exact grid point if available, else the two bracketing points.
      int lo = 0;
      const int m = grid.size() - 1;
      while (lo < m && grid.points[lo + 1] <= target) ++lo;
      if (std::abs(grid.points[lo] - target) <= mean_tol) {
        f.mass[lo] = 1.0;
        return f;
      }
      int hi = lo + 1;
      double lam = (grid.points[hi] - target) / (grid.points[hi] - grid.points[lo]);
      f.mass[lo] = lam;
      f.mass[hi] = 1.0 - lam;
      return f;
    }
    case DensityShape::TwoPointExtreme: {
      double lam = (grid.b - target) / (grid.b - grid.a);  // weight on a
      f.mass.front() = lam;
      f.mass.back() = 1.0 - lam;
      return f;
    }
    case DensityShape::Uniform: {
      const double w = 1.0 / grid.size();
      for (double& v : f.mass) v = w;
      if (std::abs(f.mean(grid) - target) > mean_tol)
        throw InfeasibleError("uniform density cannot meet the requested mean");
      return f;
    }
  }
  throw InfeasibleError("unhandled density shape");
}

Experiment mix(const Experiment& f, const Experiment& g, double lambda) {
  if (f.mass.size() != g.mass.size()) throw ConfigError("cannot mix experiments across grids");
  Experiment out;
  out.mass.resize(f.mass.size());
  for (std::size_t j = 0; j < f.mass.size(); ++j)
    out.mass[j] = lambda * f.mass[j] + (1.0 - lambda) * g.mass[j];
  out.center = lambda * f.center + (1.0 - lambda) * g.center;
  return out;
}

}  // namespace infobid
