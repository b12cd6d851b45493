#include "purekit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "purekit/errors.hpp"
#include "purekit/measurement.hpp"
#include "purekit/purify_a.hpp"
#include "purekit/purify_b.hpp"

namespace purekit {

std::string_view scenario_name(Scenario s) {
  switch (s) {
    case Scenario::complete: return "complete";
    case Scenario::partial: return "partial";
    case Scenario::single: return "single";
  }
  return "unknown";
}

Scenario parse_scenario(std::string_view name) {
  if (name == "complete") return Scenario::complete;
  if (name == "partial") return Scenario::partial;
  if (name == "single") return Scenario::single;
  throw InvalidInput("unknown scenario '" + std::string(name) + "'");
}

std::vector<std::string> value_names(Scenario scenario) {
  switch (scenario) {
    case Scenario::complete: return {"F_msmt", "F_A", "F_B"};
    case Scenario::partial: return {"F1", "F2a", "F2b", "F2av", "F3"};
    case Scenario::single: return {"F4", "F5av", "F6"};
  }
  return {};
}

std::vector<std::string> verdict_names(Scenario scenario) {
  switch (scenario) {
    case Scenario::complete: return {"F_msmt=2/3", "F_A=2/3", "F_B=1"};
    case Scenario::partial:
      return {"F3>=F1", "F3>=F2av", "2F3-1=sqrt(2F2av-1)", "F3-F1=(2s-s^2)/4"};
    case Scenario::single: return {"F6>=F4", "F6>=F5av", "F5av=F4"};
  }
  return {};
}

double FidelityReport::max_path_discrepancy() const {
  double worst = 0.0;
  for (const auto& [name, v] : values) {
    if (auto it = closed_form.find(name); it != closed_form.end()) {
      worst = std::max(worst, std::abs(v - it->second));
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// chains

FidelityReport chain_partial(const PureState& psi) {
  const DensityMatrix ini = density_from_pure(psi);
  const PartialRecord rec = probabilities_partial(psi);
  const DensityMatrix mixed = msmt_state_partial(rec);
  const double a1 = rec.a1();
  const double a2 = rec.a2();
  const double s2 = a1 * a1 + a2 * a2;
  const double sx2 = std::max(0.0, 0.25 * (1.0 - s2));

  FidelityReport r;
  r.scenario = Scenario::partial;
  r.sx_abs = std::sqrt(sx2);

  const ClosestPureResult best = purify_b(mixed);
  const auto [plus, minus] = protocol_a_candidates_partial(rec);
  const double f_plus = fidelity(density_from_pure(plus), ini);
  const double f_minus = fidelity(density_from_pure(minus), ini);

  r.values["F1"] = fidelity(mixed, ini);
  r.values["F2a"] = std::max(f_plus, f_minus);
  r.values["F2b"] = std::min(f_plus, f_minus);
  r.values["F2av"] = 0.5 * (f_plus + f_minus);
  r.values["F3"] = fidelity(best.state, ini);

  r.closed_form["F1"] = 0.25 * (s2 + 2.0);
  r.closed_form["F2a"] = 1.0;
  r.closed_form["F2b"] = 1.0 - 4.0 * sx2;
  r.closed_form["F2av"] = 1.0 - 2.0 * sx2;
  r.closed_form["F3"] = 0.5 * (1.0 + std::sqrt(s2));
  return r;
}

FidelityReport chain_single(const PureState& psi) {
  const DensityMatrix ini = density_from_pure(psi);
  const SingleRecord rec = probabilities_single(psi);
  const DensityMatrix mixed = msmt_state_single(rec);
  const double p1 = rec.p1;

  FidelityReport r;
  r.scenario = Scenario::single;

  // phase average of the probability-preserving family; four equally spaced
  // phases cancel the cos(theta + phi) term exactly
  double f5 = 0.0;
  for (int k = 0; k < 4; ++k) {
    f5 += fidelity(purify_a_z(p1, 0.5 * std::numbers::pi * k), ini);
  }

  double f6 = 0.0;
  try {
    f6 = fidelity(purify_b(mixed).state, ini);
  } catch (const DegenerateState&) {
    r.degenerate = true;
    f6 = fidelity(DensityMatrix::diagonal(1.0), ini);
  }

  r.values["F4"] = fidelity(mixed, ini);
  r.values["F5av"] = 0.25 * f5;
  r.values["F6"] = f6;

  const double q = p1 * p1 + (1.0 - p1) * (1.0 - p1);
  r.closed_form["F4"] = q;
  r.closed_form["F5av"] = q;
  r.closed_form["F6"] = r.degenerate ? 0.5 : std::max(p1, 1.0 - p1);
  return r;
}

FidelityReport chain_complete(const PureState& psi, const std::vector<double>& phis) {
  if (phis.empty()) throw InvalidInput("chain_complete needs at least one phase");
  const DensityMatrix ini = density_from_pure(psi);
  const DensityMatrix mixed = msmt_state_complete(psi);
  const Spectral2 spec = eigen2(mixed);
  const OrthogonalMixture mix(spec.lambda_large, density_from_pure(spec.vec_large),
                              density_from_pure(spec.vec_small));

  FidelityReport r;
  r.scenario = Scenario::complete;
  double sum = 0.0;
  for (double phi : phis) {
    const Mat2 pi = ProjectionChoice::from_phase(phi).projector_in(spec.vec_large, spec.vec_small);
    const double f = fidelity(purify_a_general(mix, pi), ini);
    r.f_a_samples.push_back(f);
    sum += f;
  }

  r.values["F_msmt"] = fidelity(mixed, ini);
  r.values["F_A"] = sum / static_cast<double>(phis.size());
  r.values["F_B"] = fidelity(purify_b(mixed).state, ini);

  r.closed_form["F_msmt"] = 2.0 / 3.0;
  r.closed_form["F_A"] = 2.0 / 3.0;
  r.closed_form["F_B"] = 1.0;
  return r;
}

FidelityReport chain_complete(const PureState& psi) {
  const double h = 0.5 * std::numbers::pi;
  return chain_complete(psi, {0.0, h, 2.0 * h, 3.0 * h});
}

// ---------------------------------------------------------------------------
// verdicts

namespace {

Verdict inequality(std::string name, double lhs, double rhs, double tol) {
  const double slack = lhs - rhs;
  return {std::move(name), slack, false, slack >= -tol};
}

Verdict identity(std::string name, double lhs, double rhs, double tol) {
  const double residual = std::abs(lhs - rhs);
  return {std::move(name), residual, true, residual <= tol};
}

double at(const FidelityReport& r, const std::string& key) {
  auto it = r.values.find(key);
  if (it == r.values.end()) {
    throw InvalidInput("report is missing value " + key);
  }
  return it->second;
}

}  // namespace

std::vector<Verdict> verify_inequalities(const FidelityReport& report, double tol) {
  std::vector<Verdict> out;
  switch (report.scenario) {
    case Scenario::partial: {
      const double f1 = at(report, "F1");
      const double f2av = at(report, "F2av");
      const double f3 = at(report, "F3");
      // s^2 = A1^2 + A2^2 = 1 - 4 <S_x>^2
      const double s = std::sqrt(std::max(0.0, 1.0 - 4.0 * report.sx_abs * report.sx_abs));
      out.push_back(inequality("F3>=F1", f3, f1, tol));
      out.push_back(inequality("F3>=F2av", f3, f2av, tol));
      out.push_back(identity("2F3-1=sqrt(2F2av-1)", 2.0 * f3 - 1.0,
                             std::sqrt(std::max(0.0, 2.0 * f2av - 1.0)), kIdentityTol));
      out.push_back(identity("F3-F1=(2s-s^2)/4", f3 - f1, 0.25 * (2.0 * s - s * s), kIdentityTol));
      break;
    }
    case Scenario::single: {
      const double f4 = at(report, "F4");
      const double f5 = at(report, "F5av");
      const double f6 = at(report, "F6");
      out.push_back(inequality("F6>=F4", f6, f4, tol));
      out.push_back(inequality("F6>=F5av", f6, f5, tol));
      out.push_back(identity("F5av=F4", f5, f4, tol));
      break;
    }
    case Scenario::complete: {
      out.push_back(identity("F_msmt=2/3", at(report, "F_msmt"), 2.0 / 3.0, tol));
      double worst_a = std::abs(at(report, "F_A") - 2.0 / 3.0);
      for (double f : report.f_a_samples) worst_a = std::max(worst_a, std::abs(f - 2.0 / 3.0));
      out.push_back({"F_A=2/3", worst_a, true, worst_a <= tol});
      out.push_back(identity("F_B=1", at(report, "F_B"), 1.0, tol));
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Monte Carlo

void ValueStat::add(double v) {
  if (count == 0) {
    min = max = v;
  } else {
    min = std::min(min, v);
    max = std::max(max, v);
  }
  sum += v;
  ++count;
}

bool MonteCarloSummary::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const auto& kv) { return kv.second.violations == 0; });
}

MonteCarloSummary montecarlo(Scenario scenario, std::int64_t trials, std::uint64_t seed,
                             bool keep_rows, double tol) {
  if (trials < 1) throw InvalidInput("montecarlo needs at least one trial");

  MonteCarloSummary summary;
  summary.scenario = scenario;
  summary.trials = trials;
  summary.seed = seed;
  for (const auto& name : verdict_names(scenario)) summary.verdicts[name];

  for (std::int64_t t = 0; t < trials; ++t) {
    const PureState psi = haar_random_pure(seed + static_cast<std::uint64_t>(t));
    const CompleteRecord probs = probabilities_complete(psi);
    TrialRow row;
    row.trial = t;
    row.p1 = probs.p1;
    row.p2 = probs.p2;
    row.p3 = probs.p3;

    FidelityReport report;
    try {
      switch (scenario) {
        case Scenario::complete: report = chain_complete(psi); break;
        case Scenario::partial: report = chain_partial(psi); break;
        case Scenario::single: report = chain_single(psi); break;
      }
    } catch (const DegenerateState&) {
      row.skipped = true;
    }
    if (report.degenerate) row.skipped = true;

    if (row.skipped) {
      ++summary.degenerate_skips;
    } else {
      row.values = report.values;
      row.verdicts = verify_inequalities(report, tol);
      summary.max_path_discrepancy =
          std::max(summary.max_path_discrepancy, report.max_path_discrepancy());
      for (const auto& [name, v] : report.values) summary.values[name].add(v);
      for (const auto& v : row.verdicts) {
        VerdictStat& st = summary.verdicts[v.name];
        st.identity = v.identity;
        st.worst = st.count == 0 ? v.value
                   : v.identity  ? std::max(st.worst, v.value)
                                 : std::min(st.worst, v.value);
        if (!v.holds) ++st.violations;
        if (!v.identity && std::abs(v.value) <= tol) ++st.equalities;
        ++st.count;
      }
    }
    if (keep_rows) summary.rows.push_back(std::move(row));
  }
  return summary;
}

}  // namespace purekit
