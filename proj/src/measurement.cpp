#include "purekit/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "purekit/errors.hpp"

namespace purekit {

namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << name << " out of range [0, 1]: " << p;
    throw InvalidInput(os.str());
  }
}

double frequency(std::int64_t n, double p, Rng& rng) {
  std::binomial_distribution<std::int64_t> draw(n, std::clamp(p, 0.0, 1.0));
  return static_cast<double>(draw(rng)) / static_cast<double>(n);
}

std::int64_t sub_ensemble(const EnsembleConfig& cfg, int parts) {
  if (cfg.n_copies < parts || cfg.n_copies % parts != 0) {
    std::ostringstream os;
    os << "ensemble of " << cfg.n_copies << " copies cannot be split into " << parts
       << " equal sub-ensembles";
    throw InvalidInput(os.str());
  }
  return cfg.n_copies / parts;
}

}  // namespace

double CompleteRecord::sphere_residual() const {
  const double a1 = 2.0 * p1 - 1.0, a2 = 2.0 * p2 - 1.0, a3 = 2.0 * p3 - 1.0;
  return a1 * a1 + a2 * a2 + a3 * a3 - 1.0;
}

void validate(const CompleteRecord& rec) {
  check_probability(rec.p1, "p1");
  check_probability(rec.p2, "p2");
  check_probability(rec.p3, "p3");
}

void validate(const PartialRecord& rec) {
  check_probability(rec.p1, "p1");
  check_probability(rec.p2, "p2");
}

void validate(const SingleRecord& rec) { check_probability(rec.p1, "p1"); }

double outcome_probability(const PureState& psi, Axis axis) {
  return std::clamp(std::norm(PureState::basis(axis, +1).inner(psi)), 0.0, 1.0);
}

CompleteRecord probabilities_complete(const PureState& psi) {
  return {outcome_probability(psi, Axis::z), outcome_probability(psi, Axis::y),
          outcome_probability(psi, Axis::x)};
}

PartialRecord probabilities_partial(const PureState& psi) {
  return {outcome_probability(psi, Axis::z), outcome_probability(psi, Axis::y)};
}

SingleRecord probabilities_single(const PureState& psi) {
  return {outcome_probability(psi, Axis::z)};
}

DensityMatrix dephase(const PureState& psi, Axis axis) {
  const double p = outcome_probability(psi, axis);
  const Mat2 plus = density_from_pure(PureState::basis(axis, +1)).matrix();
  const Mat2 minus = density_from_pure(PureState::basis(axis, -1)).matrix();
  return DensityMatrix::from_matrix(p * plus + (1.0 - p) * minus);
}

DensityMatrix msmt_state_complete(const PureState& psi) {
  const Mat2 sum = dephase(psi, Axis::z).matrix() + dephase(psi, Axis::y).matrix() +
                   dephase(psi, Axis::x).matrix();
  return DensityMatrix::from_matrix(sum / 3.0);
}

DensityMatrix msmt_state_from_record(const CompleteRecord& rec) {
  validate(rec);
  return DensityMatrix((2.0 * rec.p1 + 2.0) / 6.0,
                       Complex(2.0 * rec.p3 - 1.0, 1.0 - 2.0 * rec.p2) / 6.0);
}

DensityMatrix msmt_state_partial(const PartialRecord& rec) {
  validate(rec);
  return DensityMatrix((2.0 * rec.p1 + 1.0) / 4.0, Complex(0.0, (1.0 - 2.0 * rec.p2) / 4.0));
}

DensityMatrix msmt_state_single(const SingleRecord& rec) {
  validate(rec);
  return DensityMatrix::diagonal(rec.p1);
}

ReconstructionPaths reconstruct_complete_paths(const DensityMatrix& rho_msmt) {
  const Spectral2 spec = eigen2(rho_msmt);
  if (std::abs(spec.lambda_large - 2.0 / 3.0) > 1e-8 ||
      std::abs(spec.lambda_small - 1.0 / 3.0) > 1e-8) {
    std::ostringstream os;
    os << "eigenvalues (" << spec.lambda_large << ", " << spec.lambda_small
       << ") are not {2/3, 1/3}";
    throw NotAMeasurementMixture(os.str());
  }
  ReconstructionPaths out;
  out.eigenvector = spec.vec_large;

  // 3 rho - I is the rank-1 projector onto the initial state; any non-zero
  // column is proportional to it.
  const Mat2 projector = 3.0 * rho_msmt.matrix() - Mat2::Identity();
  const int col = std::abs(projector(0, 0)) >= std::abs(projector(1, 1)) ? 0 : 1;
  out.inversion = PureState::normalized(projector(0, col), projector(1, col));
  return out;
}

PureState reconstruct_complete(const DensityMatrix& rho_msmt) {
  const ReconstructionPaths paths = reconstruct_complete_paths(rho_msmt);
  const double agreement = std::norm(paths.eigenvector.inner(paths.inversion));
  if (std::abs(agreement - 1.0) > kDefaultTol) {
    std::ostringstream os;
    os << "reconstruction routes disagree (overlap " << agreement << ")";
    throw std::logic_error(os.str());
  }
  return paths.eigenvector;
}

std::pair<PureState, PureState> protocol_a_candidates_partial(const PartialRecord& rec) {
  validate(rec);
  const double a1 = rec.a1();
  const double a2 = rec.a2();
  const double radicand = 1.0 - a1 * a1 - a2 * a2;
  if (radicand < -kDefaultTol) {
    std::ostringstream os;
    os << "record (" << rec.p1 << ", " << rec.p2 << ") is not compatible with any pure state";
    throw InfeasibleRecord(os.str());
  }
  // Bloch x component is 2<S_x> = +-sqrt(radicand)
  const double x = radicand < kExactTol ? 0.0 : std::sqrt(radicand);
  return {pure_from_direction({x, a2, a1}), pure_from_direction({-x, a2, a1})};
}

CompleteRecord sample_complete(const PureState& psi, const EnsembleConfig& cfg) {
  const std::int64_t n = sub_ensemble(cfg, 3);
  const CompleteRecord exact = probabilities_complete(psi);
  Rng rng(cfg.seed);
  CompleteRecord out;
  out.p1 = frequency(n, exact.p1, rng);
  out.p2 = frequency(n, exact.p2, rng);
  out.p3 = frequency(n, exact.p3, rng);
  return out;
}

PartialRecord sample_partial(const PureState& psi, const EnsembleConfig& cfg) {
  const std::int64_t n = sub_ensemble(cfg, 2);
  const PartialRecord exact = probabilities_partial(psi);
  Rng rng(cfg.seed);
  PartialRecord out;
  out.p1 = frequency(n, exact.p1, rng);
  out.p2 = frequency(n, exact.p2, rng);
  return out;
}

SingleRecord sample_single(const PureState& psi, const EnsembleConfig& cfg) {
  const std::int64_t n = sub_ensemble(cfg, 1);
  Rng rng(cfg.seed);
  return {frequency(n, probabilities_single(psi).p1, rng)};
}

}  // namespace purekit
