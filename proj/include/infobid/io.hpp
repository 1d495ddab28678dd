#pragma once

#include <string>

#include <json.hpp>

#include "infobid/audit.hpp"
#include "infobid/fees.hpp"
#include "infobid/potential.hpp"
#include "infobid/simulate.hpp"
#include "infobid/verify.hpp"

namespace infobid {

// All emitted files are byte-deterministic: doubles print with %.17g,
// newline endings, JSON keys sorted.

std::string format_double(double x);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

// CSV schemas (header row shown in parentheses).
std::string experiment_csv(const ValueGrid& grid, const Experiment& f);        // (z,mass)
std::string profile_csv(const StrategyProfile& p, const TypeGrid& tg, const ValueGrid& grid);
                                                                               // (bidder,r,s,z,mass)
StrategyProfile parse_profile_csv(const std::string& text, const TypeGrid& tg,
                                  const ValueGrid& grid);
std::string curve_csv(const ValueGrid& grid, const InterimCurve& curve);       // (z,pi,opp_max_cdf)
std::string fee_csv(const TypeGrid& tg, const FeeSchedule& tau);               // (s,fee)
FeeSchedule parse_fee_csv(const std::string& text, const TypeGrid& tg);
std::string fee_rs_csv(const TypeGrid& tg, const FeeScheduleRS& tau);          // (r,s,fee)
FeeScheduleRS parse_fee_rs_csv(const std::string& text, const TypeGrid& tg);
std::string audit_csv(const std::vector<double>& params, const AuditPlan& plan,
                      const AuditCurve& curve);                                // (param,q,audit_cost)
std::string run_records_csv(const std::vector<RunRecord>& records, const MechanismConfig& cfg);

nlohmann::json to_json(const PotentialReport& r);
nlohmann::json to_json(const EquilibriumResult& r);
nlohmann::json to_json(const GapTable& t, const TypeGrid& tg);
nlohmann::json to_json(const FeasibilityReport& r);
nlohmann::json to_json(const DominanceReport& r);
nlohmann::json to_json(const AuditPlan& p);
nlohmann::json to_json(const BatchSummary& s);
nlohmann::json to_json(const AnalyticSummary& s);
nlohmann::json to_json(const NoAuditResult& r, const TypeGrid& tg);
nlohmann::json to_json(const FeasibilityCheckReport& r);
nlohmann::json to_json(const Theorem1Report& r);

}  // namespace infobid
