#pragma once

// JSON and CSV encodings. Field order is fixed; every number is rounded to 15
// significant digits before it is written, so output is byte-stable.
//
//   DensityMatrix  {"m00", "m01_re", "m01_im"}
//   PureState      {"a0_re", "a0_im", "a1_re", "a1_im"}
//   KrausPair      {"A0": [[re, im] x4], "A1": [[re, im] x4]}  (row-major)

#include <iosfwd>
#include <string_view>

#include <json.hpp>

#include "purekit/analysis.hpp"
#include "purekit/kraus.hpp"
#include "purekit/measurement.hpp"
#include "purekit/purify_b.hpp"
#include "purekit/qubit.hpp"

namespace purekit {

using Json = nlohmann::ordered_json;

/// Rounds to 15 significant digits (the printed precision).
double round15(double v);

Json to_json(const DensityMatrix& rho);
Json to_json(const PureState& psi);
Json to_json(const BlochVector& r);
Json to_json(const KrausPair& k);
Json to_json(const CompleteRecord& rec);
Json to_json(const PartialRecord& rec);
Json to_json(const SingleRecord& rec);
Json to_json(const ClosestPureResult& res);
Json to_json(const FidelityReport& report, double tol = kDefaultTol);
Json to_json(const MonteCarloSummary& summary);

/// Strict decoders: unknown or missing fields and non-numeric values throw
/// InvalidInput; invariant violations throw InvalidState.
DensityMatrix density_from_json(const Json& j);
PureState pure_from_json(const Json& j);

/// Parses text, throwing InvalidInput on malformed JSON.
Json parse_json(std::string_view text);

/// Header plus one line per trial; columns are scenario, trial, p1, p2, p3,
/// the scenario's values, then one slack column per verdict. Skipped trials
/// leave value and slack cells empty.
void write_csv(std::ostream& out, const MonteCarloSummary& summary);

/// %.15g
std::string format15(double v);

}  // namespace purekit
