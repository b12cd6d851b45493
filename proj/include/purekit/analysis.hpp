#pragma once

// Fidelity chains for the three measurement scenarios and the identities and
// inequalities relating them.
//
// Names used in reports:
//   partial  F1   post-measurement mixture vs initial state
//            F2a  probability-preserving candidate with the correct sign of <S_x>
//            F2b  candidate with the wrong sign
//            F2av average of F2a and F2b (the two candidates equally weighted)
//            F3   fidelity-maximizing purification
//   single   F4   post-measurement mixture
//            F5av probability-preserving purification, averaged over the
//                 unknown relative phase
//            F6   fidelity-maximizing purification
//   complete F_msmt, F_A, F_B for the mixture and the two purifications.
//
// Every value is computed twice: `values` holds tr(sigma rho_ini) evaluated on
// the constructed states, `closed_form` the algebraic expression in p1, p2.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "purekit/qubit.hpp"

namespace purekit {

enum class Scenario { complete, partial, single };

std::string_view scenario_name(Scenario s);
/// Throws InvalidInput for an unknown name.
Scenario parse_scenario(std::string_view name);

struct FidelityReport {
  Scenario scenario = Scenario::complete;
  std::map<std::string, double> values;
  std::map<std::string, double> closed_form;
  /// |<S_x>| of the initial state (partial scenario).
  double sx_abs = 0.0;
  /// Single scenario with p1 = 1/2: no unique fidelity-maximizing state.
  bool degenerate = false;
  /// F_A at each sampled phase (complete scenario).
  std::vector<double> f_a_samples;

  /// Largest |values[k] - closed_form[k]| over shared keys.
  double max_path_discrepancy() const;
};

/// Throws DegenerateState when the partial mixture is I/2 (psi = |+-x>).
FidelityReport chain_partial(const PureState& psi);

FidelityReport chain_single(const PureState& psi);

/// F_A is evaluated at every phase in `phis`; the reported F_A is their mean.
FidelityReport chain_complete(const PureState& psi, const std::vector<double>& phis);
FidelityReport chain_complete(const PureState& psi);

struct Verdict {
  std::string name;
  /// Slack (lhs - rhs) for inequalities, |lhs - rhs| for identities.
  double value = 0.0;
  bool identity = false;
  bool holds = false;
};

inline constexpr double kIdentityTol = 1e-9;

/// Inequalities hold when slack >= -tol. The two partial-scenario identities
/// use kIdentityTol, all other identities `tol`.
std::vector<Verdict> verify_inequalities(const FidelityReport& report, double tol = kDefaultTol);

struct ValueStat {
  double min = 0.0;
  double max = 0.0;
  double sum = 0.0;
  std::int64_t count = 0;

  double mean() const { return count > 0 ? sum / static_cast<double>(count) : 0.0; }
  void add(double v);
};

struct VerdictStat {
  bool identity = false;
  /// Smallest slack (inequalities) or largest residual (identities).
  double worst = 0.0;
  std::int64_t violations = 0;
  /// Inequality trials where the slack is within tol of zero.
  std::int64_t equalities = 0;
  std::int64_t count = 0;
};

struct TrialRow {
  std::int64_t trial = 0;
  double p1 = 0.0, p2 = 0.0, p3 = 0.0;
  bool skipped = false;
  std::map<std::string, double> values;
  std::vector<Verdict> verdicts;
};

struct MonteCarloSummary {
  Scenario scenario = Scenario::complete;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::int64_t degenerate_skips = 0;
  double max_path_discrepancy = 0.0;
  std::map<std::string, ValueStat> values;
  std::map<std::string, VerdictStat> verdicts;
  std::vector<TrialRow> rows;

  bool all_hold() const;
};

/// Haar sweep; trial t uses the state drawn from seed + t. Degenerate trials
/// are counted in degenerate_skips and left out of the statistics.
/// Throws InvalidInput for trials < 1.
MonteCarloSummary montecarlo(Scenario scenario, std::int64_t trials, std::uint64_t seed,
                             bool keep_rows = false, double tol = kDefaultTol);

/// Fixed value-column order used by tabular output for a scenario.
std::vector<std::string> value_names(Scenario scenario);
/// Fixed verdict-column order for a scenario.
std::vector<std::string> verdict_names(Scenario scenario);

}  // namespace purekit
