#pragma once

// Fidelity-maximizing purification: the pure state with the largest overlap
// tr(rho sigma) with a given mixed state rho. Equivalently the pure state
// closest to rho in Hilbert-Schmidt distance, since
// tr((rho - sigma)^2) = tr(rho^2) + 1 - 2 tr(rho sigma) for pure sigma.
//
// Writing rho = [[a, p], [p*, 1 - a]] and the candidate as
// [[pt, sqrt(pt (1 - pt)) e^{-i theta}], [..., 1 - pt]], the overlap is
//   F = a pt + (1 - a)(1 - pt) + 2|p| sqrt(pt (1 - pt)) cos(theta + arg p),
// maximized at theta = -arg p and
//   pt = (1/2) (1 - (1 - 2a) / sqrt(4|p|^2 + (1 - 2a)^2)).
// For p = 0 the optimum sits on a pole; at a = 1/2, p = 0 there is no unique
// optimum and DegenerateState is thrown.

#include <optional>

#include "purekit/qubit.hpp"

namespace purekit {

struct ClosestPureResult {
  DensityMatrix state = DensityMatrix::diagonal(1.0);
  double p_tilde = 1.0;
  /// The output off-diagonal is sqrt(pt (1 - pt)) exp(-i theta).
  double theta = 0.0;
  /// tr(state rho), recomputed from the output state.
  double f_achieved = 1.0;
};

ClosestPureResult purify_b(const DensityMatrix& rho);

/// F'(pt) = 2a - 1 + |p| (1 - 2 pt) / sqrt(pt (1 - pt)). Empty when the
/// derivative is undefined (p = 0 or pt on the boundary).
std::optional<double> stationarity_residual(const DensityMatrix& rho, double p_tilde);

/// Closed-form optimum value F(pt) at theta = -arg p.
double closed_form_fidelity(const DensityMatrix& rho, double p_tilde);

struct GridOracleResult {
  PureState state = PureState(1.0, 0.0);
  double fidelity = 0.0;
  int theta_index = 0;
  int phi_index = 0;
};

/// Exhaustive maximization of <psi|rho|psi> over the latitude-longitude grid
/// psi = (cos(t/2), e^{i f} sin(t/2)), t = pi i/(n_theta - 1), f = 2 pi j/n_phi.
/// Ties go to the smaller theta index, then the smaller phi index.
/// Throws InvalidInput for n_theta < 2 or n_phi < 2.
GridOracleResult grid_oracle(const DensityMatrix& rho, int n_theta, int n_phi);

}  // namespace purekit
