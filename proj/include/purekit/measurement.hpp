#pragma once

// Projective spin measurements on sub-ensembles of identically prepared
// qubits, the non-selective post-measurement mixtures they leave behind, and
// reconstruction of the initial state.
//
// Probabilities are for the "+" outcome on each axis:
//   p1 -> |+>_z,  p2 -> |+>_y,  p3 -> |+>_x.

#include <cstdint>
#include <utility>

#include "purekit/qubit.hpp"

namespace purekit {

/// Outcome probabilities on z, y and x. Each must lie in [0, 1].
struct CompleteRecord {
  double p1 = 0.5;
  double p2 = 0.5;
  double p3 = 0.5;

  /// (2p1 - 1)^2 + (2p2 - 1)^2 + (2p3 - 1)^2 - 1; zero for records of pure states.
  double sphere_residual() const;
};

/// Outcome probabilities on z and y only.
struct PartialRecord {
  double p1 = 0.5;
  double p2 = 0.5;

  double a1() const { return 2.0 * p1 - 1.0; }
  double a2() const { return 2.0 * p2 - 1.0; }
};

struct SingleRecord {
  double p1 = 0.5;
};

enum class MeasurementMode { complete, partial, single };

/// Total number of copies and the sampling seed. Complete runs need n_copies
/// divisible by 3 and partial runs an even n_copies (equal sub-ensembles).
struct EnsembleConfig {
  std::int64_t n_copies = 3;
  std::uint64_t seed = 0;
};

/// Throws InvalidInput when a probability is outside [0, 1] or non-finite.
void validate(const CompleteRecord& rec);
void validate(const PartialRecord& rec);
void validate(const SingleRecord& rec);

/// |<+_axis|psi>|^2
double outcome_probability(const PureState& psi, Axis axis);

CompleteRecord probabilities_complete(const PureState& psi);
PartialRecord probabilities_partial(const PureState& psi);
SingleRecord probabilities_single(const PureState& psi);

/// p|+><+| + (1 - p)|-><-| in the eigenbasis of `axis`.
DensityMatrix dephase(const PureState& psi, Axis axis);

/// Equal-weight average of the three dephased states, (I + |psi><psi|)/3.
DensityMatrix msmt_state_complete(const PureState& psi);

/// Same mixture assembled from (possibly estimated) probabilities:
/// (1/6) [[2p1 + 2, (2p3 - 1) + i(1 - 2p2)], [c.c., 4 - 2p1]].
DensityMatrix msmt_state_from_record(const CompleteRecord& rec);

/// [[(2p1 + 1)/4, i(1 - 2p2)/4], [-i(1 - 2p2)/4, (3 - 2p1)/4]]
DensityMatrix msmt_state_partial(const PartialRecord& rec);

/// diag(p1, 1 - p1)
DensityMatrix msmt_state_single(const SingleRecord& rec);

struct ReconstructionPaths {
  /// Top eigenvector of the measurement mixture.
  PureState eigenvector = PureState(1.0, 0.0);
  /// Direction of the Bloch vector of 3 rho_msmt - I.
  PureState inversion = PureState(1.0, 0.0);
};

/// Both recovery routes. Throws NotAMeasurementMixture unless the eigenvalues
/// are {2/3, 1/3} within 1e-8.
ReconstructionPaths reconstruct_complete_paths(const DensityMatrix& rho_msmt);

/// The initial state behind an exact complete-measurement mixture. Throws
/// std::logic_error if the two recovery routes disagree beyond 1e-10.
PureState reconstruct_complete(const DensityMatrix& rho_msmt);

/// The two pure states compatible with a z/y record; they differ in the sign
/// of the x Bloch component. Returns (+x, -x). Throws InfeasibleRecord when
/// 1 - A1^2 - A2^2 < -1e-10.
std::pair<PureState, PureState> protocol_a_candidates_partial(const PartialRecord& rec);

/// Finite-ensemble estimates. Each axis gets its own sub-ensemble and the
/// number of "+" outcomes is drawn from a binomial with the exact probability.
/// Deterministic in cfg.seed. Throws InvalidInput on a bad ensemble size.
CompleteRecord sample_complete(const PureState& psi, const EnsembleConfig& cfg);
PartialRecord sample_partial(const PureState& psi, const EnsembleConfig& cfg);
SingleRecord sample_single(const PureState& psi, const EnsembleConfig& cfg);

}  // namespace purekit
