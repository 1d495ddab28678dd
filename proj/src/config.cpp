#include "infobid/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "infobid/errors.hpp"

namespace infobid {

using nlohmann::json;

double AuditCurve::operator()(double prob) const {
  if (prob <= q.front()) return k.front();
  for (std::size_t i = 1; i < q.size(); ++i) {
    if (prob <= q[i]) {
      double t = (prob - q[i - 1]) / (q[i] - q[i - 1]);
      return k[i - 1] + t * (k[i] - k[i - 1]);
    }
  }
  return k.back();
}

void AuditCurve::validate() const {
  if (q.size() < 2 || q.size() != k.size())
    throw ConfigError("audit curve needs matching q/k with at least two nodes");
  if (q.front() != 0.0 || std::abs(q.back() - 1.0) > 1e-12)
    throw ConfigError("audit curve must cover q in [0,1]");
  for (std::size_t i = 1; i < q.size(); ++i) {
    if (q[i] <= q[i - 1]) throw ConfigError("audit curve q must be strictly increasing");
    if (k[i] < k[i - 1]) throw ConfigError("audit curve cost must be nondecreasing");
  }
  if (k.front() < 0) throw ConfigError("audit curve cost must be nonnegative");
}

double MechanismConfig::punishment_for(int bidder) const {
  if (punishment.empty()) return 0.0;
  if (bidder < int(punishment.size())) return punishment[bidder];
  return punishment.back();
}

void MechanismConfig::validate() const {
  if (n < 2) throw ConfigError("config: n >= 2 bidders required");
  value_grid.validate();
  type_grid.validate();
  if (!type_grid.has_full_range())
    throw ConfigError("config: type_grid r and s points must include 0 and 1");
  cost_model.kernel.validate();
  if (!(tol.mean_tol > 0) || !(tol.solver_tol > 0) || !(tol.fee_tol > 0))
    throw ConfigError("config: tolerances must be positive");
  for (double p : punishment)
    if (p > 0) throw ConfigError("config: punishment entries must be <= 0");
  audit_cost_experiment.validate();
  audit_cost_rate.validate();
  if (solver.max_iters < 1) throw ConfigError("config: solver.max_iters must be >= 1");
}

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw ConfigError(origin + ": " + what);
}

double get_number(const json& j, const char* key, const std::string& origin) {
  if (!j.contains(key)) fail(origin, std::string("missing key '") + key + "'");
  if (!j[key].is_number()) fail(origin, std::string("'") + key + "' must be a number");
  return j[key].get<double>();
}

std::vector<double> get_array(const json& j, const std::string& origin) {
  if (!j.is_array()) fail(origin, "expected an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) fail(origin, "expected an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<double> parse_weights(const json& j, const std::vector<double>& points,
                                  const std::string& origin) {
  if (!j.contains("weights") || (j["weights"].is_string() && j["weights"] == "uniform"))
    return uniform_weights(int(points.size()));
  const json& w = j["weights"];
  if (w.is_object() && w.contains("beta")) {
    auto ab = get_array(w["beta"], origin + ".weights.beta");
    if (ab.size() != 2) fail(origin, "weights.beta needs [alpha, beta]");
    return beta_weights(points, ab[0], ab[1]);
  }
  if (w.is_array()) return get_array(w, origin + ".weights");
  fail(origin, "weights must be \"uniform\", an array, or {\"beta\": [a, b]}");
}

AuditCurve parse_audit_curve(const json& j, const std::string& origin) {
  AuditCurve c;
  if (j.contains("q")) c.q = get_array(j["q"], origin + ".q");
  if (j.contains("k")) c.k = get_array(j["k"], origin + ".k");
  return c;
}

json curve_to_json(const AuditCurve& c) {
  return json{{"q", c.q}, {"k", c.k}};
}

}  // namespace

MechanismConfig parse_config(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ConfigError(origin + ":" + std::to_string(line) + ": " + e.what());
  }

  MechanismConfig cfg;
  cfg.n = int(get_number(j, "n", origin));

  if (!j.contains("value_grid")) fail(origin, "missing key 'value_grid'");
  {
    const json& g = j["value_grid"];
    cfg.value_grid = ValueGrid::uniform(get_number(g, "a", origin + ".value_grid"),
                                        get_number(g, "b", origin + ".value_grid"),
                                        int(get_number(g, "m", origin + ".value_grid")));
  }

  if (!j.contains("type_grid")) fail(origin, "missing key 'type_grid'");
  {
    const json& g = j["type_grid"];
    for (const char* axis : {"r", "s"}) {
      if (!g.contains(axis)) fail(origin, std::string("type_grid needs '") + axis + "'");
      const json& a = g[axis];
      if (!a.contains("points")) fail(origin, std::string("type_grid.") + axis + " needs points");
      auto points = get_array(a["points"], origin + ".type_grid." + axis + ".points");
      auto weights = parse_weights(a, points, origin + ".type_grid." + axis);
      if (axis[0] == 'r') {
        cfg.type_grid.r_points = points;
        cfg.type_grid.r_weights = weights;
      } else {
        cfg.type_grid.s_points = points;
        cfg.type_grid.s_weights = weights;
      }
    }
    cfg.type_grid.validate();
  }

  if (j.contains("cost")) {
    const json& c = j["cost"];
    if (c.contains("kernel")) {
      const json& k = c["kernel"];
      std::string type = k.value("type", "power");
      if (type == "power") {
        cfg.cost_model.kernel.type = CostKernel::Type::Power;
        cfg.cost_model.kernel.gamma = k.value("gamma", 2.0);
      } else if (type == "table") {
        cfg.cost_model.kernel.type = CostKernel::Type::Table;
        cfg.cost_model.kernel.xs = get_array(k.value("x", json::array()), origin + ".cost.kernel.x");
        cfg.cost_model.kernel.ys = get_array(k.value("k", json::array()), origin + ".cost.kernel.k");
      } else {
        fail(origin, "cost.kernel.type must be \"power\" or \"table\"");
      }
      cfg.cost_model.kernel.scale = k.value("scale", 1.0);
    }
    std::string variant = c.value("variant", "anchor-at-s");
    if (variant == "anchor-at-s")
      cfg.cost_model.variant = CostVariant::AnchorAtS;
    else if (variant == "anchor-at-center")
      cfg.cost_model.variant = CostVariant::AnchorAtCenter;
    else
      fail(origin, "cost.variant must be \"anchor-at-s\" or \"anchor-at-center\"");
  }

  if (j.contains("tolerances")) {
    const json& t = j["tolerances"];
    cfg.tol.mean_tol = t.value("mean", cfg.tol.mean_tol);
    cfg.tol.solver_tol = t.value("solver", cfg.tol.solver_tol);
    cfg.tol.fee_tol = t.value("fee", cfg.tol.fee_tol);
  }

  cfg.seed = std::uint64_t(j.value("seed", 1.0));

  if (j.contains("punishment")) {
    if (j["punishment"].is_number())
      cfg.punishment.assign(std::size_t(cfg.n), j["punishment"].get<double>());
    else
      cfg.punishment = get_array(j["punishment"], origin + ".punishment");
  }

  if (j.contains("audit_cost")) {
    const json& a = j["audit_cost"];
    if (a.contains("experiment"))
      cfg.audit_cost_experiment = parse_audit_curve(a["experiment"], origin + ".audit_cost.experiment");
    if (a.contains("rate"))
      cfg.audit_cost_rate = parse_audit_curve(a["rate"], origin + ".audit_cost.rate");
  }

  if (j.contains("solver")) cfg.solver.max_iters = int(j["solver"].value("max_iters", 200.0));
  cfg.workers = int(j.value("workers", 0.0));

  cfg.validate();
  return cfg;
}

MechanismConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

std::string config_canonical_json(const MechanismConfig& cfg) {
  json j;
  j["n"] = cfg.n;
  j["value_grid"] = {{"a", cfg.value_grid.a},
                     {"b", cfg.value_grid.b},
                     {"m", cfg.value_grid.size() - 1}};
  j["type_grid"] = {{"r", {{"points", cfg.type_grid.r_points}, {"weights", cfg.type_grid.r_weights}}},
                    {"s", {{"points", cfg.type_grid.s_points}, {"weights", cfg.type_grid.s_weights}}}};
  json kernel;
  if (cfg.cost_model.kernel.type == CostKernel::Type::Power)
    kernel = {{"type", "power"}, {"gamma", cfg.cost_model.kernel.gamma}};
  else
    kernel = {{"type", "table"}, {"x", cfg.cost_model.kernel.xs}, {"k", cfg.cost_model.kernel.ys}};
  kernel["scale"] = cfg.cost_model.kernel.scale;
  j["cost"] = {{"kernel", kernel},
               {"variant", cfg.cost_model.variant == CostVariant::AnchorAtS ? "anchor-at-s"
                                                                            : "anchor-at-center"}};
  j["tolerances"] = {{"mean", cfg.tol.mean_tol}, {"solver", cfg.tol.solver_tol}, {"fee", cfg.tol.fee_tol}};
  j["punishment"] = cfg.punishment;
  j["audit_cost"] = {{"experiment", curve_to_json(cfg.audit_cost_experiment)},
                     {"rate", curve_to_json(cfg.audit_cost_rate)}};
  j["solver"] = {{"max_iters", cfg.solver.max_iters}};
  // seed and workers are runtime knobs; they do not change what the
  // mechanism is, so they stay out of the hash.
  return j.dump();
}

std::uint64_t config_hash(const MechanismConfig& cfg) {
  std::string s = config_canonical_json(cfg);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace infobid
