#pragma once

// Probability-preserving purification. A mixture p1 rho1 + p2 rho2 of two
// orthogonal pure states is mapped to a pure state whose overlaps with rho1
// and rho2 are still p1 and p2. Those overlaps fix the state only up to a
// relative phase, which is selected by a rank-1 projection Pi (or directly by
// the phase phi). Nothing singles out a preferred phi, so callers pass it.

#include <utility>

#include "purekit/kraus.hpp"
#include "purekit/qubit.hpp"

namespace purekit {

class OrthogonalMixture {
 public:
  /// Throws InvalidState unless p1 is in [0, 1], both states are pure within
  /// 1e-10 and tr(rho1 rho2) < 1e-10.
  OrthogonalMixture(double p1, const DensityMatrix& rho1, const DensityMatrix& rho2);

  double p1() const { return p1_; }
  double p2() const { return 1.0 - p1_; }
  const DensityMatrix& rho1() const { return rho1_; }
  const DensityMatrix& rho2() const { return rho2_; }

  DensityMatrix mixture() const;

 private:
  double p1_;
  DensityMatrix rho1_;
  DensityMatrix rho2_;
};

/// Pi = |chi><chi| with chi = mu e0 + nu e1 for some orthonormal pair (e0, e1).
class ProjectionChoice {
 public:
  /// Throws InvalidInput unless |mu|^2 + |nu|^2 = 1 within 1e-12 and both
  /// |mu|, |nu| exceed 1e-10.
  ProjectionChoice(Complex mu, Complex nu);

  /// mu = 1/sqrt(2), nu = exp(-i phi)/sqrt(2), so that phase() == phi.
  static ProjectionChoice from_phase(double phi);

  Complex mu() const { return mu_; }
  Complex nu() const { return nu_; }
  /// arg(mu conj(nu))
  double phase() const;

  /// Pi in the computational basis.
  Mat2 projector() const;
  /// Pi = |mu e0 + nu e1><...|.
  Mat2 projector_in(const PureState& e0, const PureState& e1) const;

 private:
  Complex mu_;
  Complex nu_;
};

/// rho = p1 rho1 + p2 rho2 + sqrt(p1 p2) (rho1 Pi rho2 + rho2 Pi rho1)
///       / sqrt(tr(rho1 Pi) tr(rho2 Pi)).
/// Throws InvalidInput if `projection` is not a rank-1 projection and
/// OrthogonalProjection if either trace in the denominator is below 1e-10.
DensityMatrix purify_a_general(const OrthogonalMixture& mix, const Mat2& projection);

/// z-basis specialization: diag(p1, 1 - p1) with off-diagonal
/// sqrt(p1 (1 - p1)) exp(i phi). Throws InvalidInput for p1 outside [0, 1].
DensityMatrix purify_a_z(double p1, double phi);

/// The Kraus pair of the target sqrt(p1) exp(i phi)|0> + sqrt(1 - p1)|1>.
KrausPair kraus_for_a(double p1, double phi);

}  // namespace purekit
