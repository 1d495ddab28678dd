#include "infobid/grid.hpp"

#include <cmath>
#include <cstdio>

#include "infobid/errors.hpp"

namespace infobid {

namespace {

void check_weights(const std::vector<double>& points, const std::vector<double>& weights,
                   const char* axis) {
  if (points.empty()) throw ConfigError(std::string(axis) + "-points must be nonempty");
  if (points.size() != weights.size())
    throw ConfigError(std::string(axis) + "-weights size does not match points");
  double prev = -1;
  for (double p : points) {
    if (p < 0 || p > 1) throw ConfigError(std::string(axis) + "-points must lie in [0,1]");
    if (p <= prev) throw ConfigError(std::string(axis) + "-points must be strictly increasing");
    prev = p;
  }
  double sum = 0;
  for (double w : weights) {
    if (w < 0) throw ConfigError(std::string(axis) + "-weights must be nonnegative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw ConfigError(std::string(axis) + "-weights must sum to 1 within 1e-12");
}

bool contains(const std::vector<double>& points, double v) {
  for (double p : points)
    if (std::abs(p - v) <= 1e-12) return true;
  return false;
}

}  // namespace

ValueGrid ValueGrid::uniform(double a, double b, int m) {
  if (!(a > 0)) throw ConfigError("value grid needs a > 0");
  if (!(b > a)) throw ConfigError("value grid needs b > a");
  if (m < 2) throw ConfigError("value grid needs m >= 2");
  ValueGrid g;
  g.a = a;
  g.b = b;
  g.points.resize(m + 1);
  for (int j = 0; j <= m; ++j) g.points[j] = a + (b - a) * (double(j) / m);
  g.points.front() = a;
  g.points.back() = b;
  return g;
}

bool ValueGrid::same_as(const ValueGrid& other) const {
  return a == other.a && b == other.b && points == other.points;
}

void ValueGrid::validate() const {
  if (!(a > 0) || !(b > a)) throw ConfigError("value grid needs 0 < a < b");
  if (points.size() < 3) throw ConfigError("value grid needs m >= 2");
  if (points.front() != a || points.back() != b)
    throw ConfigError("value grid endpoints must equal a and b");
  for (std::size_t j = 1; j < points.size(); ++j)
    if (points[j] <= points[j - 1]) throw ConfigError("value grid must be strictly increasing");
}

TypeGrid TypeGrid::uniform(std::vector<double> r_points, std::vector<double> s_points) {
  TypeGrid tg;
  tg.r_weights = uniform_weights(int(r_points.size()));
  tg.s_weights = uniform_weights(int(s_points.size()));
  tg.r_points = std::move(r_points);
  tg.s_points = std::move(s_points);
  tg.validate();
  return tg;
}

void TypeGrid::validate() const {
  check_weights(r_points, r_weights, "r");
  check_weights(s_points, s_weights, "s");
}

bool TypeGrid::has_full_range() const {
  return contains(r_points, 0.0) && contains(r_points, 1.0) && contains(s_points, 0.0) &&
         contains(s_points, 1.0);
}

int TypeGrid::top_r_index() const {
  for (int ri = num_r(); ri-- > 0;)
    if (std::abs(r_points[ri] - 1.0) <= 1e-12) return ri;
  throw ConfigError("r-points must contain 1 (the participation fee bound anchors there)");
}

std::vector<double> uniform_weights(int k) {
  if (k <= 0) throw ConfigError("weights need at least one point");
  std::vector<double> w(k, 1.0 / k);
  return w;
}

std::vector<double> beta_weights(const std::vector<double>& points, double alpha, double beta) {
  if (!(alpha > 0) || !(beta > 0)) throw ConfigError("beta weights need alpha, beta > 0");
  std::vector<double> w(points.size());
  double sum = 0;
  for (std::size_t j = 0; j < points.size(); ++j) {
    // Clamp away from the open-interval endpoints so exponents < 1 stay finite.
    double x = std::min(std::max(points[j], 1e-9), 1.0 - 1e-9);
    w[j] = std::pow(x, alpha - 1.0) * std::pow(1.0 - x, beta - 1.0);
    sum += w[j];
  }
  for (double& v : w) v /= sum;
  // Renormalize exactly: compensate the largest entry for rounding.
  double total = 0;
  for (double v : w) total += v;
  std::size_t top = 0;
  for (std::size_t j = 1; j < w.size(); ++j)
    if (w[j] > w[top]) top = j;
  w[top] += 1.0 - total;
  return w;
}

}  // namespace infobid
