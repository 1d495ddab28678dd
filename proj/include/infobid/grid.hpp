#pragma once

#include <vector>

namespace infobid {

// Uniform discretization z_0 = a < ... < z_m = b of the value interval.
struct ValueGrid {
  double a = 0;
  double b = 0;
  std::vector<double> points;

  static ValueGrid uniform(double a, double b, int m);

  int size() const { return static_cast<int>(points.size()); }

  // Mean value z_alpha = a + alpha * (b - a).
  double value_at(double alpha) const { return a + alpha * (b - a); }

  bool same_as(const ValueGrid& other) const;
  void validate() const;
};

// Discretized product distribution of the private types (r, s) on [0,1]^2.
// r scales the information-processing cost, s indexes the mean-value class.
struct TypeGrid {
  std::vector<double> r_points, s_points;
  std::vector<double> r_weights, s_weights;

  static TypeGrid uniform(std::vector<double> r_points, std::vector<double> s_points);

  int num_r() const { return static_cast<int>(r_points.size()); }
  int num_s() const { return static_cast<int>(s_points.size()); }
  int num_cells() const { return num_r() * num_s(); }
  int cell(int ri, int si) const { return ri * num_s() + si; }
  double weight(int ri, int si) const { return r_weights[ri] * s_weights[si]; }

  // Ordering, range and weight-sum checks only. Full-range containment of
  // {0, 1} is a MechanismConfig requirement; degenerate grids are legal for
  // direct library use.
  void validate() const;
  bool has_full_range() const;

  // Index of r = 1 (the top cost scale), required by the fee bound.
  int top_r_index() const;
};

std::vector<double> uniform_weights(int k);

// Beta(alpha, beta) density evaluated at the points, normalized.
std::vector<double> beta_weights(const std::vector<double>& points, double alpha, double beta);

}  // namespace infobid
