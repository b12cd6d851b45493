#include "purekit/purify_a.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "purekit/errors.hpp"

namespace purekit {

namespace {

void check_probability(double p1) {
  if (!(p1 >= 0.0 && p1 <= 1.0)) {
    std::ostringstream os;
    os << "probability out of range [0, 1]: " << p1;
    throw InvalidInput(os.str());
  }
}

double real_trace(const Mat2& m) { return (m(0, 0) + m(1, 1)).real(); }

}  // namespace

OrthogonalMixture::OrthogonalMixture(double p1, const DensityMatrix& rho1,
                                     const DensityMatrix& rho2)
    : p1_(p1), rho1_(rho1), rho2_(rho2) {
  check_probability(p1);
  if (std::abs(purity(rho1) - 1.0) > kDefaultTol || std::abs(purity(rho2) - 1.0) > kDefaultTol) {
    throw InvalidState("mixture components must be pure");
  }
  if (fidelity(rho1, rho2) > kDefaultTol) {
    throw InvalidState("mixture components must be orthogonal");
  }
}

DensityMatrix OrthogonalMixture::mixture() const {
  return DensityMatrix::from_matrix(p1_ * rho1_.matrix() + p2() * rho2_.matrix(), kDefaultTol);
}

ProjectionChoice::ProjectionChoice(Complex mu, Complex nu) : mu_(mu), nu_(nu) {
  const double n = std::norm(mu) + std::norm(nu);
  if (!std::isfinite(n) || std::abs(n - 1.0) > kExactTol) {
    throw InvalidInput("projection amplitudes must satisfy |mu|^2 + |nu|^2 = 1");
  }
  if (std::abs(mu) <= kDefaultTol || std::abs(nu) <= kDefaultTol) {
    throw InvalidInput("projection must have non-zero weight on both basis states");
  }
}

ProjectionChoice ProjectionChoice::from_phase(double phi) {
  const double h = 1.0 / std::numbers::sqrt2;
  return ProjectionChoice(h, std::polar(h, -phi));
}

double ProjectionChoice::phase() const { return std::arg(mu_ * std::conj(nu_)); }

Mat2 ProjectionChoice::projector() const {
  return projector_in(PureState(1.0, 0.0), PureState(0.0, 1.0));
}

Mat2 ProjectionChoice::projector_in(const PureState& e0, const PureState& e1) const {
  const Complex c0 = mu_ * e0.a0() + nu_ * e1.a0();
  const Complex c1 = mu_ * e0.a1() + nu_ * e1.a1();
  Mat2 m;
  m << c0 * std::conj(c0), c0 * std::conj(c1), c1 * std::conj(c0), c1 * std::conj(c1);
  return m;
}

DensityMatrix purify_a_general(const OrthogonalMixture& mix, const Mat2& projection) {
  const Mat2& pi = projection;
  if (max_abs_diff(pi * pi, pi) > kDefaultTol || max_abs_diff(pi.adjoint(), pi) > kDefaultTol ||
      std::abs(real_trace(pi) - 1.0) > kDefaultTol) {
    throw InvalidInput("Pi must be a rank-1 orthogonal projection");
  }
  const Mat2 r1 = mix.rho1().matrix();
  const Mat2 r2 = mix.rho2().matrix();
  const double t1 = real_trace(r1 * pi);
  const double t2 = real_trace(r2 * pi);
  if (t1 < kDefaultTol || t2 < kDefaultTol) {
    std::ostringstream os;
    os << "projection is orthogonal to a mixture component (tr(rho1 Pi) = " << t1
       << ", tr(rho2 Pi) = " << t2 << ")";
    throw OrthogonalProjection(os.str());
  }
  const Mat2 coherence = (r1 * pi * r2 + r2 * pi * r1) / std::sqrt(t1 * t2);
  const Mat2 out = mix.p1() * r1 + mix.p2() * r2 + std::sqrt(mix.p1() * mix.p2()) * coherence;
  return DensityMatrix::from_matrix(out, kDefaultTol);
}

DensityMatrix purify_a_z(double p1, double phi) {
  check_probability(p1);
  return DensityMatrix(p1, std::polar(std::sqrt(p1 * (1.0 - p1)), phi));
}

KrausPair kraus_for_a(double p1, double phi) {
  check_probability(p1);
  return kraus_pair_from_target(
      TargetAmplitudes(std::polar(std::sqrt(p1), phi), std::sqrt(1.0 - p1)));
}

}  // namespace purekit
