#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "purekit/analysis.hpp"
#include "purekit/errors.hpp"
#include "purekit/json_io.hpp"
#include "purekit/kraus.hpp"
#include "purekit/measurement.hpp"
#include "purekit/purify_a.hpp"
#include "purekit/purify_b.hpp"

namespace purekit::cli {

namespace {

struct Options {
  double tolerance = kDefaultTol;
  std::uint64_t seed = 0;
  std::string format = "json";

  // purify-a
  std::optional<double> p1;
  double phi = 0.0;
  std::string basis = "z";
  // shared payloads
  std::string rho;
  std::string state;
  std::string mode = "complete";
  // purify-b
  bool oracle = false;
  std::string grid = "720x1440";
  // measure
  std::optional<std::int64_t> n;
  // montecarlo
  std::int64_t trials = 1000;
  // dilation-check
  double alpha_re = 1.0, alpha_im = 0.0, beta_re = 0.0, beta_im = 0.0;
  bool dump_kraus = false;
};

std::string read_payload(const std::string& arg, std::istream& in) {
  if (arg != "-") return arg;
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::pair<int, int> parse_grid(const std::string& text) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument("no separator");
    std::size_t used_a = 0, used_b = 0;
    const int a = std::stoi(text.substr(0, x), &used_a);
    const int b = std::stoi(text.substr(x + 1), &used_b);
    if (used_a != x || used_b != text.size() - x - 1) throw std::invalid_argument("trailing");
    return {a, b};
  } catch (const std::logic_error&) {
    throw InvalidInput("grid must look like NxM, got '" + text + "'");
  }
}

double resolve_tolerance(const CLI::Option* flag, double flag_value) {
  double tol = kDefaultTol;
  if (const char* env = std::getenv("PUREKIT_TOLERANCE"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    tol = std::strtod(env, &end);
    if (end == env || *end != '\0') {
      throw InvalidInput(std::string("PUREKIT_TOLERANCE is not a number: ") + env);
    }
  }
  if (flag->count() > 0) tol = flag_value;
  if (!(tol > 0.0 && tol <= 1e-4)) {
    throw InvalidInput("tolerance must lie in (0, 1e-4], got " + format15(tol));
  }
  return tol;
}

Json header(const std::string& command, const Options& o) {
  Json j;
  j["command"] = command;
  j["tolerance"] = round15(o.tolerance);
  return j;
}

Json cmd_purify_a(const Options& o, std::istream& in) {
  Json j = header("purify-a", o);
  if (!o.rho.empty()) {
    if (o.p1) throw InvalidInput("--p1 and --rho are mutually exclusive");
    const DensityMatrix rho = density_from_json(parse_json(read_payload(o.rho, in)));
    const Spectral2 spec = eigen2(rho);
    const OrthogonalMixture mix(spec.lambda_large, density_from_pure(spec.vec_large),
                                density_from_pure(spec.vec_small));
    const Mat2 pi =
        ProjectionChoice::from_phase(o.phi).projector_in(spec.vec_large, spec.vec_small);
    const DensityMatrix out = purify_a_general(mix, pi);
    j["basis"] = "eigenbasis";
    j["input"] = to_json(rho);
    j["p1"] = round15(mix.p1());
    j["phi"] = round15(o.phi);
    j["state"] = to_json(out);
    j["purity"] = round15(purity(out));
    j["overlaps"]["p1_check"] = round15(fidelity(out, mix.rho1()));
    return j;
  }
  if (o.basis != "z") throw InvalidInput("--basis must be 'z' (or pass --rho)");
  if (!o.p1) throw InvalidInput("purify-a needs --p1 or --rho");
  const DensityMatrix out = purify_a_z(*o.p1, o.phi);
  j["basis"] = "z";
  j["p1"] = round15(*o.p1);
  j["phi"] = round15(o.phi);
  j["state"] = to_json(out);
  j["purity"] = round15(purity(out));
  j["overlaps"]["p1_check"] = round15(fidelity(out, DensityMatrix::diagonal(1.0)));
  if (o.dump_kraus) j["kraus"] = to_json(kraus_for_a(*o.p1, o.phi));
  return j;
}

Json cmd_purify_b(const Options& o, std::istream& in) {
  const DensityMatrix rho = density_from_json(parse_json(read_payload(o.rho, in)));
  const ClosestPureResult res = purify_b(rho);
  Json j = header("purify-b", o);
  j["input"] = to_json(rho);
  j["state"] = to_json(res.state);
  j["p_tilde"] = round15(res.p_tilde);
  j["theta"] = round15(res.theta);
  j["fidelity"] = round15(res.f_achieved);
  if (auto r = stationarity_residual(rho, res.p_tilde)) {
    j["stationarity_residual"] = round15(*r);
  } else {
    j["stationarity_residual"] = nullptr;
  }
  if (o.oracle) {
    const auto [nt, np] = parse_grid(o.grid);
    const GridOracleResult g = grid_oracle(rho, nt, np);
    j["oracle_grid"] = Json::array({nt, np});
    j["oracle_state"] = to_json(g.state);
    j["oracle_fidelity"] = round15(g.fidelity);
    j["oracle_ok"] = res.f_achieved >= g.fidelity - 1e-5;
  }
  return j;
}

Json cmd_measure(const Options& o, std::istream& in) {
  const PureState psi = pure_from_json(parse_json(read_payload(o.state, in)));
  const Scenario mode = parse_scenario(o.mode);
  Json j = header("measure", o);
  j["state"] = to_json(psi);
  const bool sampled = o.n.has_value();
  EnsembleConfig cfg;
  if (sampled) {
    if (*o.n < 1) throw InvalidInput("--n must be positive");
    cfg = {*o.n, o.seed};
  }
  switch (mode) {
    case Scenario::complete: {
      const CompleteRecord rec = sampled ? sample_complete(psi, cfg) : probabilities_complete(psi);
      j["record"] = to_json(rec);
      j["sphere_residual"] = round15(rec.sphere_residual());
      j["mixture"] = to_json(msmt_state_from_record(rec));
      break;
    }
    case Scenario::partial: {
      const PartialRecord rec = sampled ? sample_partial(psi, cfg) : probabilities_partial(psi);
      j["record"] = to_json(rec);
      j["mixture"] = to_json(msmt_state_partial(rec));
      break;
    }
    case Scenario::single: {
      const SingleRecord rec = sampled ? sample_single(psi, cfg) : probabilities_single(psi);
      j["record"] = to_json(rec);
      j["mixture"] = to_json(msmt_state_single(rec));
      break;
    }
  }
  Json prov;
  prov["mode"] = std::string(scenario_name(mode));
  prov["n"] = sampled ? Json(*o.n) : Json(nullptr);
  prov["seed"] = o.seed;
  prov["sampled"] = sampled;
  j["provenance"] = std::move(prov);
  return j;
}

Json cmd_reconstruct(const Options& o, std::istream& in) {
  const DensityMatrix rho = density_from_json(parse_json(read_payload(o.rho, in)));
  const PureState psi = reconstruct_complete(rho);
  const ReconstructionPaths paths = reconstruct_complete_paths(rho);
  Json j = header("reconstruct", o);
  j["input"] = to_json(rho);
  j["state"] = to_json(psi);
  j["paths"]["eigenvector"] = to_json(paths.eigenvector);
  j["paths"]["inversion"] = to_json(paths.inversion);
  j["path_overlap"] = round15(std::norm(paths.eigenvector.inner(paths.inversion)));
  return j;
}

Json cmd_chain(const Options& o, std::istream& in) {
  const PureState psi = pure_from_json(parse_json(read_payload(o.state, in)));
  FidelityReport report;
  switch (parse_scenario(o.mode)) {
    case Scenario::complete: report = chain_complete(psi); break;
    case Scenario::partial: report = chain_partial(psi); break;
    case Scenario::single: report = chain_single(psi); break;
  }
  Json j = header("chain", o);
  j["state"] = to_json(psi);
  j["report"] = to_json(report, o.tolerance);
  return j;
}

void cmd_montecarlo(const Options& o, std::ostream& out) {
  const bool csv = o.format == "csv";
  const MonteCarloSummary summary =
      montecarlo(parse_scenario(o.mode), o.trials, o.seed, csv, o.tolerance);
  if (csv) {
    write_csv(out, summary);
    return;
  }
  Json j = header("montecarlo", o);
  j["summary"] = to_json(summary);
  out << j.dump(2) << '\n';
}

Json cmd_dilation_check(const Options& o) {
  const TargetAmplitudes t({o.alpha_re, o.alpha_im}, {o.beta_re, o.beta_im});
  const DilationUnitary u = dilation_unitary(t);
  const KrausPair direct = kraus_pair_from_target(t);
  const KrausPair extracted = kraus_from_unitary(u);
  const double unitarity = u.unitarity_residual();
  const double roundtrip = max_abs_diff(direct, extracted);
  Json j = header("dilation-check", o);
  j["alpha"] = Json::array({round15(o.alpha_re), round15(o.alpha_im)});
  j["beta"] = Json::array({round15(o.beta_re), round15(o.beta_im)});
  j["unitarity_residual"] = round15(unitarity);
  j["roundtrip_residual"] = round15(roundtrip);
  j["completeness_residual"] = round15(extracted.completeness_residual());
  j["ok"] = unitarity < o.tolerance && roundtrip < o.tolerance;
  if (o.dump_kraus) j["kraus"] = to_json(extracted);
  return j;
}

Json error_object(std::string_view code, const std::string& message,
                  const std::vector<std::string>& args) {
  Json j;
  j["error"]["code"] = std::string(code);
  j["error"]["message"] = message;
  j["error"]["input_echo"] = args;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Qubit purification and reconstruction toolkit", "purekit"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  double tol_flag = kDefaultTol;
  CLI::Option* tol_opt =
      app.add_option("--tolerance", tol_flag, "Tolerance in (0, 1e-4] (env PUREKIT_TOLERANCE)");
  app.add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  auto* pa = app.add_subcommand("purify-a", "Probability-preserving purification");
  pa->add_option("--p1", o.p1, "Weight of the first eigenstate");
  pa->add_option("--phi", o.phi, "Free relative phase (radians)")->capture_default_str();
  pa->add_option("--basis", o.basis, "Mixture basis")->check(CLI::IsMember({"z"}));
  pa->add_option("--rho", o.rho, "Mixed state JSON, or - for stdin");
  pa->add_flag("--dump-kraus", o.dump_kraus, "Include the generating Kraus pair");

  auto* pb = app.add_subcommand("purify-b", "Closest pure state");
  pb->add_option("--rho", o.rho, "Mixed state JSON, or - for stdin")->required();
  pb->add_flag("--oracle", o.oracle, "Cross-check against the grid oracle");
  pb->add_option("--grid", o.grid, "Oracle grid NxM")->capture_default_str();

  const std::vector<std::string> modes{"complete", "partial", "single"};
  auto* ms = app.add_subcommand("measure", "Measurement record and post-measurement mixture");
  ms->add_option("--state", o.state, "Pure state JSON, or - for stdin")->required();
  ms->add_option("--mode", o.mode)->check(CLI::IsMember(modes))->capture_default_str();
  ms->add_option("--n", o.n, "Ensemble size (exact probabilities when omitted)");

  auto* rc = app.add_subcommand("reconstruct", "Recover the state behind a complete mixture");
  rc->add_option("--rho", o.rho, "Measurement mixture JSON, or - for stdin")->required();

  auto* ch = app.add_subcommand("chain", "Fidelity chain for one initial state");
  ch->add_option("--state", o.state, "Pure state JSON, or - for stdin")->required();
  ch->add_option("--mode", o.mode)->check(CLI::IsMember(modes))->capture_default_str();

  auto* mc = app.add_subcommand("montecarlo", "Haar-random sweep");
  mc->add_option("--mode", o.mode)->check(CLI::IsMember(modes))->capture_default_str();
  mc->add_option("--trials", o.trials)->capture_default_str();

  auto* dc = app.add_subcommand("dilation-check", "Unitary dilation round trip");
  dc->add_option("--alpha-re", o.alpha_re)->capture_default_str();
  dc->add_option("--alpha-im", o.alpha_im)->capture_default_str();
  dc->add_option("--beta-re", o.beta_re)->capture_default_str();
  dc->add_option("--beta-im", o.beta_im)->capture_default_str();
  dc->add_flag("--dump-kraus", o.dump_kraus, "Include the extracted Kraus pair");

  std::vector<const char*> argv{"purekit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    out << error_object("INVALID_INPUT", e.what(), args).dump(2) << '\n';
    return kExitMalformed;
  }

  try {
    o.tolerance = resolve_tolerance(tol_opt, tol_flag);
    if (o.format == "csv" && !mc->parsed()) {
      throw InvalidInput("--format csv is only available for montecarlo");
    }
    Json result;
    if (pa->parsed()) result = cmd_purify_a(o, in);
    if (pb->parsed()) result = cmd_purify_b(o, in);
    if (ms->parsed()) result = cmd_measure(o, in);
    if (rc->parsed()) result = cmd_reconstruct(o, in);
    if (ch->parsed()) result = cmd_chain(o, in);
    if (dc->parsed()) result = cmd_dilation_check(o);
    if (mc->parsed()) {
      cmd_montecarlo(o, out);
      return kExitOk;
    }
    out << result.dump(2) << '\n';
    return kExitOk;
  } catch (const Error& e) {
    out << error_object(error_code_name(e.code()), e.what(), args).dump(2) << '\n';
    return is_domain_error(e.code()) ? kExitDomain : kExitMalformed;
  }
}

}  // namespace purekit::cli
