#pragma once

// Two-element trace-preserving Kraus channels that map every input state to a
// fixed pure target, and their unitary dilation on system (x) environment.
//
// Tensor basis order is system-major: index = 2 * system + environment, i.e.
// (|0>|0_E>, |0>|1_E>, |1>|0_E>, |1>|1_E>).

#include "purekit/qubit.hpp"

namespace purekit {

/// Amplitudes (alpha, beta) of the target state alpha|0> + beta|1>.
class TargetAmplitudes {
 public:
  /// Throws InvalidState unless |alpha|^2 + |beta|^2 = 1 within 1e-12.
  TargetAmplitudes(Complex alpha, Complex beta);

  Complex alpha() const { return alpha_; }
  Complex beta() const { return beta_; }

 private:
  Complex alpha_;
  Complex beta_;
};

class KrausPair {
 public:
  /// Throws CompletenessViolation unless A0^dag A0 + A1^dag A1 = I entrywise
  /// within `tol`.
  KrausPair(const Mat2& a0, const Mat2& a1, double tol = kExactTol);

  const Mat2& a0() const { return a0_; }
  const Mat2& a1() const { return a1_; }

  /// Max entrywise deviation of A0^dag A0 + A1^dag A1 from the identity.
  double completeness_residual() const;

 private:
  Mat2 a0_;
  Mat2 a1_;
};

/// 4x4 unitary on system (x) environment.
class DilationUnitary {
 public:
  /// Throws NotUnitary unless U^dag U = I entrywise within `tol`.
  explicit DilationUnitary(const Mat4& u, double tol = kExactTol);

  const Mat4& matrix() const { return u_; }
  double unitarity_residual() const;

 private:
  Mat4 u_;
};

/// A0 = (alpha|0> + beta|1>)<0|, A1 = (alpha|0> + beta|1>)<1|.
KrausPair kraus_pair_from_target(const TargetAmplitudes& t);

/// A0 rho A0^dag + A1 rho A1^dag.
DensityMatrix apply(const KrausPair& k, const DensityMatrix& rho);
/// Same as apply() but returns the raw matrix without re-validation.
Mat2 apply_matrix(const KrausPair& k, const DensityMatrix& rho);

/// U = (psi<0|) (x) |0_E><0_E| + (psi<1|) (x) |1_E><0_E|
///   + (alpha*|1><0| - beta*|0><0|) (x) |0_E><1_E|
///   + (alpha*|1><1| - beta*|0><1|) (x) |1_E><1_E|,   psi = alpha|0> + beta|1>.
DilationUnitary dilation_unitary(const TargetAmplitudes& t);

/// A_k = <k_E| U |0_E>. Throws CompletenessViolation when the resulting pair
/// misses completeness by more than 1e-10.
KrausPair kraus_from_unitary(const DilationUnitary& u);

/// Kronecker product a (x) b in system-major order.
Mat4 kron(const Mat2& a, const Mat2& b);

double max_abs_diff(const KrausPair& a, const KrausPair& b);

}  // namespace purekit
