#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "infobid/cost.hpp"
#include "infobid/grid.hpp"

namespace infobid {

inline constexpr const char* kVersion = "0.1.0";

struct Tolerances {
  double mean_tol = 1e-9;
  double solver_tol = 1e-10;
  double fee_tol = 1e-8;
};

// Monotone tabulated auditing-cost curve, linearly interpolated on [0, 1].
struct AuditCurve {
  std::vector<double> q{0.0, 1.0};
  std::vector<double> k{0.0, 0.0};

  double operator()(double prob) const;
  void validate() const;
};

struct SolverOptions {
  int max_iters = 200;
};

struct MechanismConfig {
  int n = 2;
  ValueGrid value_grid;
  TypeGrid type_grid;
  CostModel cost_model;
  Tolerances tol;
  std::uint64_t seed = 1;
  std::vector<double> punishment;  // P_i <= 0, one entry per bidder
  AuditCurve audit_cost_experiment;  // k_e
  AuditCurve audit_cost_rate;        // k_r
  SolverOptions solver;
  int workers = 0;

  double punishment_for(int bidder) const;

  // Strict validation used by the CLI: n >= 2, positive tolerances,
  // P_i <= 0, and both type axes containing 0 and 1.
  void validate() const;
};

// JSON config ingestion. parse_config reports schema violations with the
// offending key; load_config adds the file path and, for syntax errors, the
// line number.
MechanismConfig parse_config(const std::string& text, const std::string& origin = "<config>");
MechanismConfig load_config(const std::string& path);

// Canonical serialization (sorted keys, defaults filled in) and the FNV-1a
// hash over it; semantically identical configs hash equal.
std::string config_canonical_json(const MechanismConfig& cfg);
std::uint64_t config_hash(const MechanismConfig& cfg);

}  // namespace infobid
