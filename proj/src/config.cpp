#include "hsbm/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hsbm {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw ConfigError("config: " + what); }

ModelParams parse_model(const json& j) {
  ModelParams m;
  if (!j.is_object()) fail("'model' must be an object");
  m.n = j.value("n", std::int64_t{0});
  m.k = j.value("k", 0);
  m.d = j.value("d", 0);
  if (!j.contains("p") || !j["p"].is_array()) fail("'model.p' must be an array");
  m.p = j["p"].get<std::vector<double>>();
  if (!j.contains("Q")) fail("'model.Q' missing");
  const json& q = j["Q"];
  const AssignmentTable edge_table(std::max(m.k, 1), std::max(m.d, 0));
  const std::string kind = q.value("kind", "");
  if (kind == "symmetric") {
    // rate `same` when all d nodes share one community, `cross` otherwise
    const double same = q.value("same", -1.0);
    const double cross = q.value("cross", -1.0);
    if (same < 0 || cross < 0) fail("'model.Q' symmetric needs 'same' and 'cross' >= 0");
    m.rates.resize(edge_table.size());
    for (int t = 0; t < edge_table.size(); ++t) {
      const AssignmentVec& vec = edge_table.at(t);
      const bool pure = *std::max_element(vec.begin(), vec.end()) == m.d;
      m.rates[t] = pure ? same : cross;
    }
  } else if (kind == "table") {
    if (!q.contains("entries") || !q["entries"].is_array())
      fail("'model.Q' table needs an 'entries' array");
    m.rates.assign(edge_table.size(), -1.0);
    for (const json& e : q["entries"]) {
      const AssignmentVec t = e.value("T", AssignmentVec{});
      if (static_cast<int>(t.size()) != m.k) fail("'model.Q' entry T has wrong length");
      int sum = 0;
      for (const int c : t) sum += c;
      if (sum != m.d) fail("'model.Q' entry T does not sum to d");
      const double rate = e.value("rate", -1.0);
      if (rate < 0) fail("'model.Q' entry rate must be >= 0");
      m.rates[edge_table.rank(t)] = rate;
    }
    for (const double r : m.rates)
      if (r < 0) fail("'model.Q' table must cover every assignment vector");
  } else {
    fail("'model.Q.kind' must be 'symmetric' or 'table'");
  }
  try {
    validate(m);
  } catch (const std::exception& e) {
    fail(e.what());
  }
  return m;
}

GammaChoice parse_gamma(const json& j) {
  GammaChoice g;
  if (j.is_null()) return g;
  const std::string formula = j.value("formula", "sqrt_log_n");
  if (formula == "sqrt_log_n") {
    g.formula = GammaChoice::Formula::kSqrtLogN;
  } else if (formula == "pow") {
    g.formula = GammaChoice::Formula::kPow;
    g.exponent = j.value("exponent", 0.5);
    if (!(g.exponent > 0.0 && g.exponent < 1.0))
      fail("'gamma.exponent' must be in (0,1) so gamma is o(log n) and omega(1)");
  } else {
    fail("'gamma.formula' must be 'sqrt_log_n' or 'pow'");
  }
  g.multiplier = j.value("multiplier", 1.0);
  if (!(g.multiplier > 0.0)) fail("'gamma.multiplier' must be > 0");
  return g;
}

}  // namespace

double GammaChoice::value_for(std::int64_t n) const {
  const double logn = std::log(static_cast<double>(n));
  switch (formula) {
    case Formula::kSqrtLogN:
      return multiplier * std::sqrt(logn);
    case Formula::kPow:
      return multiplier * std::pow(logn, exponent);
  }
  return multiplier * std::sqrt(logn);
}

ExperimentConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("JSON parse error: ") + e.what());
  }
  ExperimentConfig cfg;
  if (!j.contains("model")) fail("'model' missing");
  cfg.model = parse_model(j["model"]);
  cfg.gamma = parse_gamma(j.contains("gamma") ? j["gamma"] : json());
  cfg.trim_constant = j.value("trim_constant", 20.0);
  if (!(cfg.trim_constant > 0.0)) fail("'trim_constant' must be > 0");
  cfg.radius_multiplier = j.value("radius_multiplier", 1.0);
  if (!(cfg.radius_multiplier > 0.0)) fail("'radius_multiplier' must be > 0");
  cfg.trials = j.value("trials", 1);
  if (cfg.trials < 1) fail("'trials' must be >= 1");
  cfg.seed = j.value("seed", std::uint64_t{0});
  cfg.workers = j.value("workers", 0);
  if (cfg.workers < 0) fail("'workers' must be >= 0");
  if (j.contains("sweep")) {
    if (!j["sweep"].is_array()) fail("'sweep' must be an array of scale factors");
    cfg.sweep = j["sweep"].get<std::vector<double>>();
    for (const double s : cfg.sweep) {
      if (!(s > 0.0)) fail("sweep scale factors must be > 0");
      const ModelParams scaled = cfg.model.scaled(s);
      if (scaled.edge_prob(scaled.rate_max()) > 1.0)
        fail("sweep scale " + std::to_string(s) + " pushes a probability above 1");
    }
  }
  if (j.contains("output")) {
    const json& o = j["output"];
    cfg.output.path = o.value("path", cfg.output.path);
    const std::string fmt = o.value("format", "csv");
    if (fmt == "csv")
      cfg.output.format = OutputSpec::Format::kCsv;
    else if (fmt == "json")
      cfg.output.format = OutputSpec::Format::kJson;
    else
      fail("'output.format' must be 'csv' or 'json'");
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace hsbm
