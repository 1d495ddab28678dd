#pragma once

#include <vector>

#include "infobid/fees.hpp"

namespace infobid {

struct AuditPlan {
  enum class Regime { Experiment, Cost, None };
  Regime regime = Regime::None;
  std::vector<double> q;  // by s index (Experiment) or by r index (Cost)
  double expected_audit_cost = 0;
};

// Best pre-fee value over experiments whose center class differs from the
// reported s: Psi(r, s) = max_{s'' != s} PhiMis(r, s, s''). Needs at least
// two center classes.
double noncompliant_value(const InterimCurve& curve, double r, double s,
                          const MechanismConfig& cfg);
std::vector<double> noncompliant_table(const GapTable& table);  // [r][s]

// Minimal detection probability making compliance a best response under
// punishment P <= 0: [ (psi - phi) / (psi - P) ]^+, zero when the
// denominator is not positive.
double min_deterrence_probability(double phi, double psi, double punishment);

// q(s) = max_r min_deterrence_probability(Phi(r,s), Psi(r,s), P).
AuditPlan min_audit_experiments(const MechanismConfig& cfg, const GapTable& table,
                                double punishment);

// q(r') = max over (r, s) with fee(r', s) <= fee(r, s) of
// [ (fee(r,s) - fee(r',s)) / (Phi(r,s) - fee(r',s) - P) ]^+, clamped to
// [0, 1].
AuditPlan min_audit_costs(const MechanismConfig& cfg, const FeeScheduleRS& fee_rs,
                          const GapTable& table, double punishment);

// No verification at all: fees must be flat, experiments unconstrained.
struct NoAuditResult {
  EquilibriumResult equilibrium;
  std::vector<double> phi_na;  // [r][s] best unconstrained pre-fee value
  double flat_fee = 0;         // min over the type grid of phi_na
  double stage2_payment = 0;
  double revenue = 0;          // stage2_payment + n * flat_fee
};

NoAuditResult no_audit_regime(const MechanismConfig& cfg, Exec exec = Exec::Parallel);

}  // namespace infobid
