#include "purekit/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <set>
#include <string>

#include "purekit/errors.hpp"

namespace purekit {

std::string format15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

double round15(double v) {
  if (!std::isfinite(v)) return v;
  const double r = std::strtod(format15(v).c_str(), nullptr);
  return r == 0.0 ? 0.0 : r;  // drop negative zero
}

namespace {

Json num(double v) { return round15(v); }

Json complex_pair(Complex c) { return Json::array({num(c.real()), num(c.imag())}); }

Json matrix_entries(const Mat2& m) {
  Json out = Json::array();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.push_back(complex_pair(m(i, j)));
  return out;
}

void require_fields(const Json& j, std::initializer_list<const char*> fields, const char* what) {
  if (!j.is_object()) throw InvalidInput(std::string(what) + " must be a JSON object");
  std::set<std::string> allowed;
  for (const char* f : fields) {
    allowed.insert(f);
    if (!j.contains(f)) throw InvalidInput(std::string(what) + " is missing field '" + f + "'");
    if (!j.at(f).is_number()) {
      throw InvalidInput(std::string(what) + " field '" + f + "' must be a number");
    }
  }
  for (const auto& item : j.items()) {
    if (!allowed.contains(item.key())) {
      throw InvalidInput(std::string(what) + " has unknown field '" + item.key() + "'");
    }
  }
}

Json verdicts_json(const std::vector<Verdict>& verdicts) {
  Json out = Json::array();
  for (const auto& v : verdicts) {
    Json item;
    item["name"] = v.name;
    item["kind"] = v.identity ? "identity" : "inequality";
    item[v.identity ? "residual" : "slack"] = num(v.value);
    item["holds"] = v.holds;
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace

Json to_json(const DensityMatrix& rho) {
  Json j;
  j["m00"] = num(rho.m00());
  j["m01_re"] = num(rho.m01().real());
  j["m01_im"] = num(rho.m01().imag());
  return j;
}

Json to_json(const PureState& psi) {
  Json j;
  j["a0_re"] = num(psi.a0().real());
  j["a0_im"] = num(psi.a0().imag());
  j["a1_re"] = num(psi.a1().real());
  j["a1_im"] = num(psi.a1().imag());
  return j;
}

Json to_json(const BlochVector& r) {
  Json j;
  j["x"] = num(r.x);
  j["y"] = num(r.y);
  j["z"] = num(r.z);
  return j;
}

Json to_json(const KrausPair& k) {
  Json j;
  j["A0"] = matrix_entries(k.a0());
  j["A1"] = matrix_entries(k.a1());
  return j;
}

Json to_json(const CompleteRecord& rec) {
  Json j;
  j["p1"] = num(rec.p1);
  j["p2"] = num(rec.p2);
  j["p3"] = num(rec.p3);
  return j;
}

Json to_json(const PartialRecord& rec) {
  Json j;
  j["p1"] = num(rec.p1);
  j["p2"] = num(rec.p2);
  return j;
}

Json to_json(const SingleRecord& rec) {
  Json j;
  j["p1"] = num(rec.p1);
  return j;
}

Json to_json(const ClosestPureResult& res) {
  Json j;
  j["state"] = to_json(res.state);
  j["p_tilde"] = num(res.p_tilde);
  j["theta"] = num(res.theta);
  j["fidelity"] = num(res.f_achieved);
  return j;
}

Json to_json(const FidelityReport& report, double tol) {
  Json j;
  j["scenario"] = std::string(scenario_name(report.scenario));
  Json values, closed;
  for (const auto& name : value_names(report.scenario)) {
    values[name] = num(report.values.at(name));
    closed[name] = num(report.closed_form.at(name));
  }
  j["values"] = std::move(values);
  j["closed_form"] = std::move(closed);
  j["max_path_discrepancy"] = num(report.max_path_discrepancy());
  if (report.scenario == Scenario::partial) j["sx_abs"] = num(report.sx_abs);
  if (report.scenario == Scenario::single) j["degenerate"] = report.degenerate;
  if (report.scenario == Scenario::complete) {
    Json samples = Json::array();
    for (double f : report.f_a_samples) samples.push_back(num(f));
    j["f_a_samples"] = std::move(samples);
  }
  j["verdicts"] = verdicts_json(verify_inequalities(report, tol));
  return j;
}

Json to_json(const MonteCarloSummary& summary) {
  Json j;
  j["scenario"] = std::string(scenario_name(summary.scenario));
  j["trials"] = summary.trials;
  j["seed"] = summary.seed;
  j["degenerate_skips"] = summary.degenerate_skips;
  j["max_path_discrepancy"] = num(summary.max_path_discrepancy);
  Json values;
  for (const auto& name : value_names(summary.scenario)) {
    auto it = summary.values.find(name);
    Json stat;
    if (it != summary.values.end()) {
      stat["min"] = num(it->second.min);
      stat["mean"] = num(it->second.mean());
      stat["max"] = num(it->second.max);
      stat["count"] = it->second.count;
    } else {
      stat["count"] = 0;
    }
    values[name] = std::move(stat);
  }
  j["values"] = std::move(values);
  Json verdicts;
  for (const auto& name : verdict_names(summary.scenario)) {
    const VerdictStat& st = summary.verdicts.at(name);
    Json v;
    v["kind"] = st.identity ? "identity" : "inequality";
    v[st.identity ? "max_residual" : "min_slack"] = num(st.worst);
    v["violations"] = st.violations;
    if (!st.identity) v["equalities"] = st.equalities;
    v["count"] = st.count;
    verdicts[name] = std::move(v);
  }
  j["verdicts"] = std::move(verdicts);
  j["all_hold"] = summary.all_hold();
  return j;
}

DensityMatrix density_from_json(const Json& j) {
  require_fields(j, {"m00", "m01_re", "m01_im"}, "density matrix");
  return DensityMatrix(j.at("m00").get<double>(),
                       Complex(j.at("m01_re").get<double>(), j.at("m01_im").get<double>()));
}

PureState pure_from_json(const Json& j) {
  require_fields(j, {"a0_re", "a0_im", "a1_re", "a1_im"}, "pure state");
  return PureState(Complex(j.at("a0_re").get<double>(), j.at("a0_im").get<double>()),
                   Complex(j.at("a1_re").get<double>(), j.at("a1_im").get<double>()));
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

void write_csv(std::ostream& out, const MonteCarloSummary& summary) {
  const auto values = value_names(summary.scenario);
  const auto verdicts = verdict_names(summary.scenario);
  out << "scenario,trial,p1,p2,p3";
  for (const auto& v : values) out << ',' << v;
  for (const auto& v : verdicts) out << ",slack:" << v;
  out << '\n';
  for (const auto& row : summary.rows) {
    out << scenario_name(summary.scenario) << ',' << row.trial << ',' << format15(row.p1) << ','
        << format15(row.p2) << ',' << format15(row.p3);
    for (const auto& v : values) {
      out << ',';
      if (!row.skipped) out << format15(row.values.at(v));
    }
    for (std::size_t k = 0; k < verdicts.size(); ++k) {
      out << ',';
      if (!row.skipped) out << format15(row.verdicts.at(k).value);
    }
    out << '\n';
  }
}

}  // namespace purekit
