#pragma once

#include <string>
#include <vector>

#include "infobid/config.hpp"
#include "infobid/exec.hpp"
#include "infobid/profile.hpp"

namespace infobid {

// A stage-2 rule tabulated over every grid bid profile. p holds win
// probabilities, x expected payments (losers may pay under non-efficient
// rules). Profile index: bidder 0 is the least significant digit base m1.
struct StageTable {
  int n = 0;
  int m1 = 0;
  std::vector<double> p, x;

  std::size_t profiles() const;
  std::size_t idx(std::size_t profile, int bidder) const { return profile * n + bidder; }
  void validate() const;  // p >= 0, sum_i p = 1 per profile
};

StageTable vcg_stage_table(int n, const ValueGrid& grid);

// Constant allocation shares with zero payments; truthful and individually
// rational, maximally inefficient.
StageTable random_dictator_table(int n, const ValueGrid& grid, const std::vector<double>& shares);

// Elementwise convex combination; preserves stage-2 feasibility.
StageTable mix_stage_tables(const StageTable& a, const StageTable& b, double lambda);

// A full two-stage mechanism with arbitrary tabulated stage-2 and per-type
// fees (fees[bidder][type cell]).
struct TabulatedMechanism {
  StageTable stage2;
  StrategyProfile profile;
  std::vector<std::vector<double>> fees;
};

struct MechanismAccounts {
  double revenue = 0;
  double welfare = 0;
  double rents = 0;
  double surplus = 0;
  double info_cost = 0;
  double stage2_payment = 0;
  double fee_total = 0;
  std::vector<std::vector<double>> v;  // net payoff per bidder per type cell
};

MechanismAccounts tabulated_accounts(const TabulatedMechanism& m, const MechanismConfig& cfg);

struct ConstraintViolation {
  std::string constraint;  // "stage2-ir", "stage2-ic", "stage1-ir", "stage1-ic"
  std::string where;
  double slack = 0;
};

struct FeasibilityCheckReport {
  bool feasible = true;
  int checks = 0;
  std::vector<ConstraintViolation> violations;
};

// Exhaustive check of the four feasibility constraints. Stage-2 deviations
// range over the grid, stage-1 misreports over all type pairs with
// true-cost / misreported-experiment semantics.
FeasibilityCheckReport check_feasibility(const TabulatedMechanism& m, const MechanismConfig& cfg);

// Replace stage-2 by the efficient rule and shift each type's fee by its
// interim payoff change. Feasibility, per-type rents and weakly higher
// revenue are guaranteed; the input must be feasible.
TabulatedMechanism lemma1_transform(const TabulatedMechanism& m, const MechanismConfig& cfg);

struct Theorem1Report {
  bool pass = false;
  double star_revenue = 0, star_welfare = 0;
  int competitors = 0;       // feasible competitor mechanisms evaluated
  int infeasible_skipped = 0;
  double best_rival_revenue = 0, best_rival_welfare = 0;
  double max_revenue_excess = 0, max_welfare_excess = 0;  // rival - star
  bool optima_coincide = false;  // the revenue pick is also the welfare pick
};

// Compares the solved mechanism against a structured family of feasible
// competitors: every per-type choice between the degenerate and the
// extremal experiment, crossed with that map's own chain-closure fee, a
// flat fee and seeded projected fees.
Theorem1Report theorem1_suite(const MechanismConfig& cfg, int fee_trials_per_map = 3,
                              Exec exec = Exec::Parallel);

}  // namespace infobid
