#pragma once

#include <cstdint>
#include <vector>

#include "infobid/config.hpp"
#include "infobid/exec.hpp"
#include "infobid/fees.hpp"
#include "infobid/profile.hpp"

namespace infobid {

// A solved two-stage mechanism: stage-1 experiment assignment plus the
// s-indexed fee schedule, stage-2 fixed as the efficient rule.
struct Mechanism {
  StrategyProfile profile;
  FeeSchedule fees;
};

struct RunRecord {
  std::vector<int> r_idx, s_idx, value_idx;
  int winner = -1;
  double payment = 0;     // stage-2 payment by the winner
  double fee_total = 0;
  double surplus = 0;     // winner's value
  double info_cost = 0;
  double revenue = 0;     // payment + fee_total
  double rents = 0;       // sum of net bidder payoffs
};

struct Estimate {
  double mean = 0;
  double se = 0;
};

struct BatchSummary {
  std::uint64_t runs = 0;
  std::uint64_t seed = 0;
  Estimate revenue, welfare, rents;
};

struct BatchResult {
  BatchSummary summary;
  std::vector<RunRecord> records;  // filled only when keep_records
};

// i.i.d. auctions with one substream per run; parallel batches reduce in
// run order, so results are identical for any worker count.
BatchResult run_batch(const Mechanism& mech, const MechanismConfig& cfg, std::uint64_t n_runs,
                      std::uint64_t seed, Exec exec = Exec::Parallel, bool keep_records = false);

struct AnalyticSummary {
  double revenue = 0;
  double welfare = 0;
  double rents = 0;
  double surplus = 0;
  double info_cost = 0;
  double stage2_payment = 0;
  double fee_total = 0;
};

// Exact grid-summation counterpart of run_batch; welfare = revenue + rents.
AnalyticSummary analytic_summary(const Mechanism& mech, const MechanismConfig& cfg);

// E[second-highest] of independent draws: the expected stage-2 payment
// under the efficient rule.
double expected_second_highest(const ValueGrid& grid, std::span<const Density> mixtures);

}  // namespace infobid
