#pragma once

#include <span>
#include <vector>

#include "infobid/config.hpp"
#include "infobid/exec.hpp"
#include "infobid/profile.hpp"

namespace infobid {

// Expected-welfare decomposition of a strategy profile. welfare is the
// exact potential of the stage-1 experiment game: a unilateral change of
// one bidder's map moves welfare and that bidder's net interim payoff by
// the same amount.
struct PotentialReport {
  double welfare = 0;    // surplus - info_cost
  double surplus = 0;    // E[max of the n mixture draws]
  double info_cost = 0;
  std::vector<double> net_interim;  // per-bidder pre-fee net payoff
};

PotentialReport potential(const StrategyProfile& profile, const MechanismConfig& cfg,
                          Exec exec = Exec::Parallel);

struct BestResponse {
  Experiment experiment;
  double value = 0;  // optimal pi . f - cost(f)
  int lo = -1, hi = -1;
};

// Maximizer of a linear objective over {f >= 0, sum f = 1, mean f =
// target}; the optimum sits on at most two grid points (a vertex of the
// two-constraint polytope). Ties break on the lexicographically smallest
// support.
BestResponse solve_mean_lp(const ValueGrid& grid, std::span<const double> objective,
                           double target_mean, double mean_tol);

// Best experiment of a type whose report fixes the center class: true type
// (r, s_true) choosing within D(s_rep).
BestResponse best_response_misreport(const InterimCurve& curve, double r, double s_true,
                                     double s_rep, const MechanismConfig& cfg);

BestResponse best_response(const InterimCurve& curve, double r, double s,
                           const MechanismConfig& cfg);

// Same objective over the whole simplex (one-point optimum).
BestResponse best_response_unconstrained(const InterimCurve& curve, double r, double s,
                                         const MechanismConfig& cfg);

struct EquilibriumResult {
  StrategyProfile profile;
  PotentialReport report;
  double epsilon = 0;   // largest single-type improvement left
  bool converged = false;
  int iters = 0;
  std::vector<double> potential_trace;  // nondecreasing by construction
};

// Iterated symmetric best response: all bidders share one type map; a sweep
// recomputes the map against the opponents' mixture and is accepted only if
// the potential improves by more than solver_tol. Two deterministic starts
// (degenerate map, extremal map); the better endpoint is returned.
// `mean_constrained = false` drops the center restriction (the no-audit
// regime) so best responses range over the whole simplex.
EquilibriumResult solve_equilibrium(const MechanismConfig& cfg, Exec exec = Exec::Parallel,
                                    bool mean_constrained = true);

}  // namespace infobid
