#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "infobid/config.hpp"
#include "infobid/exec.hpp"
#include "infobid/potential.hpp"
#include "infobid/profile.hpp"
#include "infobid/rng.hpp"

namespace infobid {

// Pre-fee value tables of a representative bidder against the others'
// profile. Phi(r, s) is the best compliant value; PhiMis(r, s, s') the best
// value when the true type (r, s) reports center class s'; H(s, s') the
// worst-case truthful advantage min_r (Phi(r, s) - PhiMis(r, s, s')).
struct GapTable {
  int R = 0, S = 0;
  std::vector<double> phi;      // R*S
  std::vector<double> phi_mis;  // R*S*S, [r][s_true][s_rep]
  std::vector<double> h;        // S*S,   [s_true][s_rep]

  double Phi(int ri, int si) const { return phi[ri * S + si]; }
  double PhiMis(int ri, int s_true, int s_rep) const {
    return phi_mis[(ri * S + s_true) * S + s_rep];
  }
  double H(int s_true, int s_rep) const { return h[s_true * S + s_rep]; }
  bool h_nonnegative() const;
};

GapTable value_tables(const StrategyProfile& profile, const MechanismConfig& cfg,
                      Exec exec = Exec::Parallel);

// Fee indexed by the reported s (the base schedule is independent of r).
struct FeeSchedule {
  std::vector<double> fee;
};

// Fee indexed by the reported (r, s); the cost-audit variant.
struct FeeScheduleRS {
  int R = 0, S = 0;
  std::vector<double> fee;
  double at(int ri, int si) const { return fee[ri * S + si]; }
};

// Revenue-maximal feasible schedule: single-source shortest path from the
// participation bound Phi(r=1, .) over the misreport-gap edges H. Dijkstra
// when all gaps are nonnegative, Bellman-Ford otherwise; a negative gap
// cycle raises InfeasibleError ("unbounded fee extraction").
FeeSchedule chain_closure_fee(const GapTable& table, const MechanismConfig& cfg);

// Per-r chain closure with sources Phi(r, .) and r-conditional gaps
// H(s, s' | r) = Phi(r, s) - PhiMis(r, s, s').
FeeScheduleRS chain_closure_fee_rs(const GapTable& table, const MechanismConfig& cfg);

struct FeasibilityReport {
  bool feasible = true;
  int violations = 0;
  double worst_slack = 0;  // most negative slack seen (0 when none checked)
  std::string worst_constraint;
};

// Exhaustive participation (fee <= Phi(1, s)) and truth-telling
// (fee(s) <= fee(s') + H(s, s')) checks at fee_tol.
FeasibilityReport verify_feasible(const FeeSchedule& tau, const GapTable& table, double fee_tol);

struct DominanceReport {
  bool all_dominated = true;
  int trials = 0;
  double max_excess = 0;  // max over trials and points of candidate - tau
};

// Random feasible schedules (random start, projected onto the constraint
// set) must sit pointwise below tau + fee_tol.
DominanceReport dominance_check(const FeeSchedule& tau, const GapTable& table, int trials,
                                std::uint64_t seed, double fee_tol);

// One random feasible schedule: iterated pointwise minimum with the bound
// maps until fixpoint.
FeeSchedule random_feasible_fee(const GapTable& table, Rng& rng);

}  // namespace infobid
