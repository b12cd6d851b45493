#include "purekit/kraus.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "purekit/errors.hpp"

namespace purekit {

namespace {

Mat2 ket_bra(Complex top, Complex bottom, int col) {
  Mat2 m = Mat2::Zero();
  m(0, col) = top;
  m(1, col) = bottom;
  return m;
}

Mat2 env_op(int row, int col) {
  Mat2 m = Mat2::Zero();
  m(row, col) = 1.0;
  return m;
}

}  // namespace

TargetAmplitudes::TargetAmplitudes(Complex alpha, Complex beta) : alpha_(alpha), beta_(beta) {
  const double n = std::norm(alpha) + std::norm(beta);
  if (!std::isfinite(n) || std::abs(n - 1.0) > kExactTol) {
    std::ostringstream os;
    os << "target amplitudes are not normalized (|alpha|^2 + |beta|^2 = " << n << ")";
    throw InvalidState(os.str());
  }
}

KrausPair::KrausPair(const Mat2& a0, const Mat2& a1, double tol) : a0_(a0), a1_(a1) {
  const double r = completeness_residual();
  if (!(r <= tol)) {
    std::ostringstream os;
    os << "Kraus pair violates completeness (residual " << r << ")";
    throw CompletenessViolation(os.str());
  }
}

double KrausPair::completeness_residual() const {
  const Mat2 sum = a0_.adjoint() * a0_ + a1_.adjoint() * a1_;
  return max_abs_diff(sum, Mat2::Identity());
}

DilationUnitary::DilationUnitary(const Mat4& u, double tol) : u_(u) {
  const double r = unitarity_residual();
  if (!(r <= tol)) {
    std::ostringstream os;
    os << "matrix is not unitary (residual " << r << ")";
    throw NotUnitary(os.str());
  }
}

double DilationUnitary::unitarity_residual() const {
  return (u_.adjoint() * u_ - Mat4::Identity()).cwiseAbs().maxCoeff();
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

KrausPair kraus_pair_from_target(const TargetAmplitudes& t) {
  return KrausPair(ket_bra(t.alpha(), t.beta(), 0), ket_bra(t.alpha(), t.beta(), 1));
}

Mat2 apply_matrix(const KrausPair& k, const DensityMatrix& rho) {
  const Mat2 r = rho.matrix();
  return k.a0() * r * k.a0().adjoint() + k.a1() * r * k.a1().adjoint();
}

DensityMatrix apply(const KrausPair& k, const DensityMatrix& rho) {
  return DensityMatrix::from_matrix(apply_matrix(k, rho), kDefaultTol);
}

DilationUnitary dilation_unitary(const TargetAmplitudes& t) {
  const Complex a = t.alpha();
  const Complex b = t.beta();
  const Complex ac = std::conj(a);
  const Complex bc = std::conj(b);
  const Mat4 u = kron(ket_bra(a, b, 0), env_op(0, 0)) +
                 kron(ket_bra(a, b, 1), env_op(1, 0)) +
                 kron(ket_bra(-bc, ac, 0), env_op(0, 1)) +
                 kron(ket_bra(-bc, ac, 1), env_op(1, 1));
  return DilationUnitary(u);
}

KrausPair kraus_from_unitary(const DilationUnitary& u) {
  const Mat4& m = u.matrix();
  Mat2 a0, a1;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      a0(i, j) = m(2 * i + 0, 2 * j + 0);
      a1(i, j) = m(2 * i + 1, 2 * j + 0);
    }
  }
  return KrausPair(a0, a1, kDefaultTol);
}

double max_abs_diff(const KrausPair& a, const KrausPair& b) {
  return std::max(max_abs_diff(a.a0(), b.a0()), max_abs_diff(a.a1(), b.a1()));
}

}  // namespace purekit
