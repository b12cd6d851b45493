#pragma once

// Exact 2x2 state algebra for a single qubit.
//
// Conventions used throughout the library:
//   * computational basis |0> = |+>_z, |1> = |->_z
//   * sigma_y = [[0, -i], [i, 0]], so |+>_y = (1, i)/sqrt(2)
//   * Bloch vector r = (tr(rho sigma_x), tr(rho sigma_y), tr(rho sigma_z)),
//     i.e. x = 2 Re m01, y = -2 Im m01, z = 2 m00 - 1
//   * fidelity is the overlap tr(rho1 rho2), not the Uhlmann fidelity. For two
//     mixed states the two differ; this library only uses the overlap.

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace purekit {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

/// Tolerance for quantities that are exact up to rounding.
inline constexpr double kExactTol = 1e-12;
/// Default tolerance for derived invariants.
inline constexpr double kDefaultTol = 1e-10;

enum class Axis { x, y, z };

/// Normalized qubit ket in canonical global phase: the first amplitude with
/// modulus above 1e-12 is real and non-negative. Two states are physically
/// equal iff their amplitudes are equal.
class PureState {
 public:
  /// Throws InvalidState unless |a0|^2 + |a1|^2 = 1 within 1e-12.
  PureState(Complex a0, Complex a1);

  /// Rescales any non-zero vector to unit norm.
  static PureState normalized(Complex a0, Complex a1);

  /// Eigenket of the Pauli operator on `axis` with eigenvalue `sign` (+1/-1).
  static PureState basis(Axis axis, int sign);

  Complex a0() const { return a0_; }
  Complex a1() const { return a1_; }

  /// <this|other>
  Complex inner(const PureState& other) const;

 private:
  Complex a0_;
  Complex a1_;
};

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
  double dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }
};

/// Hermitian unit-trace positive semidefinite 2x2 matrix, stored by its
/// independent entries (m00, m01); m11 = 1 - m00 and m10 = conj(m01).
class DensityMatrix {
 public:
  /// Validates m00 in [-tol, 1 + tol] and det >= -tol; throws InvalidState.
  DensityMatrix(double m00, Complex m01, double tol = kExactTol);

  /// Builds from a full matrix. Requires Hermiticity and unit trace within
  /// `tol` in addition to the positivity check.
  static DensityMatrix from_matrix(const Mat2& m, double tol = kExactTol);

  static DensityMatrix maximally_mixed() { return {0.5, 0.0}; }
  static DensityMatrix diagonal(double m00) { return {m00, 0.0}; }

  double m00() const { return m00_; }
  double m11() const { return 1.0 - m00_; }
  Complex m01() const { return m01_; }
  Complex m10() const { return std::conj(m01_); }
  double determinant() const { return m00_ * m11() - std::norm(m01_); }

  Mat2 matrix() const;

 private:
  double m00_;
  Complex m01_;
};

/// Eigendecomposition of a qubit state. When the two eigenvalues coincide
/// (gap below 1e-12) `degenerate` is set and the vectors are |0>, |1>.
struct Spectral2 {
  double lambda_large = 0.5;
  PureState vec_large = PureState(1.0, 0.0);
  double lambda_small = 0.5;
  PureState vec_small = PureState(0.0, 1.0);
  bool degenerate = false;
};

DensityMatrix density_from_pure(const PureState& psi);

BlochVector bloch_from_density(const DensityMatrix& rho);
/// Throws InvalidBloch when |r| > 1 + 1e-12.
DensityMatrix density_from_bloch(const BlochVector& r);

/// Pure state pointing along the direction of a non-zero Bloch vector.
/// Throws InvalidBloch for |r| < 1e-15.
PureState pure_from_direction(const BlochVector& r);

/// Overlap fidelity tr(rho1 rho2).
double fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// Hilbert-Schmidt distance tr((rho1 - rho2)^2).
double hs_distance(const DensityMatrix& rho1, const DensityMatrix& rho2);

double purity(const DensityMatrix& rho);

/// Closed-form eigendecomposition via the Bloch vector.
Spectral2 eigen2(const DensityMatrix& rho);

using Rng = std::mt19937_64;

/// Uniform (Haar) random pure state.
PureState haar_random_pure(Rng& rng);
PureState haar_random_pure(std::uint64_t seed);

/// Uniform random point in the Bloch ball (a random mixed state).
DensityMatrix random_mixed(Rng& rng);

/// Max |entry| of a - b.
double max_abs_diff(const Mat2& a, const Mat2& b);
double max_abs_diff(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace purekit
