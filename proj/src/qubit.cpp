#include "purekit/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "purekit/errors.hpp"

namespace purekit {

namespace {

constexpr double kPhaseCutoff = 1e-12;

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

// ---------------------------------------------------------------------------
// PureState

PureState::PureState(Complex a0, Complex a1) {
  if (!finite(a0) || !finite(a1)) {
    throw InvalidState("pure state amplitudes must be finite");
  }
  const double n = std::norm(a0) + std::norm(a1);
  if (std::abs(n - 1.0) > kExactTol) {
    std::ostringstream os;
    os << "pure state is not normalized (|a0|^2 + |a1|^2 = " << n << ")";
    throw InvalidState(os.str());
  }
  // canonical global phase
  const Complex lead = std::abs(a0) > kPhaseCutoff ? a0 : a1;
  const Complex phase = std::conj(lead) / std::abs(lead);
  a0_ = a0 * phase;
  a1_ = a1 * phase;
  if (std::abs(a0) > kPhaseCutoff) {
    a0_ = std::abs(a0);
  } else {
    a1_ = std::abs(a1);
  }
}

PureState PureState::normalized(Complex a0, Complex a1) {
  const double n = std::sqrt(std::norm(a0) + std::norm(a1));
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw InvalidState("cannot normalize a zero or non-finite vector");
  }
  return PureState(a0 / n, a1 / n);
}

PureState PureState::basis(Axis axis, int sign) {
  if (sign != 1 && sign != -1) throw InvalidInput("basis sign must be +1 or -1");
  const double s = static_cast<double>(sign);
  const double h = 1.0 / std::numbers::sqrt2;
  switch (axis) {
    case Axis::z:
      return sign > 0 ? PureState(1.0, 0.0) : PureState(0.0, 1.0);
    case Axis::x:
      return PureState(h, s * h);
    case Axis::y:
      return PureState(h, Complex(0.0, s * h));
  }
  throw InvalidInput("unknown axis");
}

Complex PureState::inner(const PureState& other) const {
  return std::conj(a0_) * other.a0_ + std::conj(a1_) * other.a1_;
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(double m00, Complex m01, double tol) : m00_(m00), m01_(m01) {
  if (!std::isfinite(m00) || !finite(m01)) {
    throw InvalidState("density matrix entries must be finite");
  }
  if (m00 < -tol || m00 > 1.0 + tol) {
    std::ostringstream os;
    os << "density matrix diagonal out of range (m00 = " << m00 << ")";
    throw InvalidState(os.str());
  }
  if (determinant() < -tol) {
    std::ostringstream os;
    os << "density matrix is not positive semidefinite (det = " << determinant() << ")";
    throw InvalidState(os.str());
  }
}

DensityMatrix DensityMatrix::from_matrix(const Mat2& m, double tol) {
  if (std::abs(m(0, 0).imag()) > tol || std::abs(m(1, 1).imag()) > tol ||
      std::abs(m(0, 1) - std::conj(m(1, 0))) > tol) {
    throw InvalidState("matrix is not Hermitian");
  }
  if (std::abs(m(0, 0).real() + m(1, 1).real() - 1.0) > tol) {
    throw InvalidState("matrix does not have unit trace");
  }
  return DensityMatrix(m(0, 0).real(), 0.5 * (m(0, 1) + std::conj(m(1, 0))), tol);
}

Mat2 DensityMatrix::matrix() const {
  Mat2 m;
  m << m00_, m01_, std::conj(m01_), m11();
  return m;
}

// ---------------------------------------------------------------------------
// conversions

DensityMatrix density_from_pure(const PureState& psi) {
  return DensityMatrix(std::norm(psi.a0()), psi.a0() * std::conj(psi.a1()));
}

BlochVector bloch_from_density(const DensityMatrix& rho) {
  return {2.0 * rho.m01().real(), -2.0 * rho.m01().imag(), 2.0 * rho.m00() - 1.0};
}

DensityMatrix density_from_bloch(const BlochVector& r) {
  if (!std::isfinite(r.x) || !std::isfinite(r.y) || !std::isfinite(r.z)) {
    throw InvalidBloch("Bloch vector must be finite");
  }
  if (r.norm() > 1.0 + kExactTol) {
    std::ostringstream os;
    os << "Bloch vector outside the unit ball (|r| = " << r.norm() << ")";
    throw InvalidBloch(os.str());
  }
  return DensityMatrix(0.5 * (1.0 + r.z), Complex(0.5 * r.x, -0.5 * r.y));
}

PureState pure_from_direction(const BlochVector& r) {
  const double n = r.norm();
  if (!(n > 1e-15) || !std::isfinite(n)) {
    throw InvalidBloch("Bloch direction undefined for a zero vector");
  }
  const double nx = r.x / n, ny = r.y / n, nz = r.z / n;
  // a0 conj(a1) = (nx - i ny)/2; pick the larger amplitude as the real one
  if (nz >= 0.0) {
    const double a0 = std::sqrt(0.5 * (1.0 + nz));
    return PureState::normalized(a0, Complex(nx, ny) / (2.0 * a0));
  }
  const double a1 = std::sqrt(0.5 * (1.0 - nz));
  return PureState::normalized(Complex(nx, -ny) / (2.0 * a1), a1);
}

// ---------------------------------------------------------------------------
// metrics

double fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  return rho1.m00() * rho2.m00() + rho1.m11() * rho2.m11() +
         2.0 * (rho1.m01() * rho2.m10()).real();
}

double hs_distance(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  const double d00 = rho1.m00() - rho2.m00();
  const Complex d01 = rho1.m01() - rho2.m01();
  // diagonal differences are (d00, -d00)
  return 2.0 * d00 * d00 + 2.0 * std::norm(d01);
}

double purity(const DensityMatrix& rho) { return fidelity(rho, rho); }

Spectral2 eigen2(const DensityMatrix& rho) {
  const BlochVector r = bloch_from_density(rho);
  const double len = r.norm();
  Spectral2 out;
  out.lambda_large = 0.5 * (1.0 + len);
  out.lambda_small = 0.5 * (1.0 - len);
  if (len < kExactTol) {
    out.degenerate = true;
    return out;
  }
  out.vec_large = pure_from_direction(r);
  out.vec_small = pure_from_direction({-r.x, -r.y, -r.z});
  return out;
}

// ---------------------------------------------------------------------------
// sampling

PureState haar_random_pure(Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double z = 2.0 * unit(rng) - 1.0;
  const double phi = 2.0 * std::numbers::pi * unit(rng);
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  return pure_from_direction({rho * std::cos(phi), rho * std::sin(phi), z});
}

PureState haar_random_pure(std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_pure(rng);
}

DensityMatrix random_mixed(Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const PureState dir = haar_random_pure(rng);
  const BlochVector n = bloch_from_density(density_from_pure(dir));
  const double len = std::cbrt(unit(rng));
  return density_from_bloch({len * n.x, len * n.y, len * n.z});
}

double max_abs_diff(const Mat2& a, const Mat2& b) { return (a - b).cwiseAbs().maxCoeff(); }

double max_abs_diff(const DensityMatrix& a, const DensityMatrix& b) {
  return max_abs_diff(a.matrix(), b.matrix());
}

}  // namespace purekit
