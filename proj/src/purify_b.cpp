#include "purekit/purify_b.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "purekit/errors.hpp"

namespace purekit {

namespace {

// Below this |p| the off-diagonal is treated as zero; it only guards arg().
constexpr double kOffDiagonalCutoff = 1e-12;

}  // namespace

ClosestPureResult purify_b(const DensityMatrix& rho) {
  const double a = rho.m00();
  const double mod_p = std::abs(rho.m01());
  ClosestPureResult out;

  if (mod_p < kOffDiagonalCutoff) {
    if (std::abs(a - 0.5) < kExactTol) {
      throw DegenerateState(
          "state has equal diagonal and no coherence; no unique closest pure state");
    }
    out.p_tilde = a > 0.5 ? 1.0 : 0.0;
    out.theta = 0.0;
    out.state = DensityMatrix::diagonal(out.p_tilde);
    out.f_achieved = fidelity(out.state, rho);
    return out;
  }

  // pt and 1 - pt each computed without cancellation:
  // 1 - d/r = 4|p|^2 / (r (r + d)) for d > 0, and symmetrically for d < 0.
  const double d = 1.0 - 2.0 * a;
  const double r = std::sqrt(4.0 * mod_p * mod_p + d * d);
  double pt = 0.0;
  double qt = 0.0;
  if (d > 0.0) {
    pt = 2.0 * mod_p * mod_p / (r * (r + d));
    qt = 1.0 - pt;
  } else {
    qt = 2.0 * mod_p * mod_p / (r * (r - d));
    pt = 1.0 - qt;
  }
  out.p_tilde = pt;
  out.theta = -std::arg(rho.m01());
  out.state = DensityMatrix(pt, std::polar(std::sqrt(pt * qt), -out.theta));
  out.f_achieved = fidelity(out.state, rho);

  const double closed = closed_form_fidelity(rho, pt);
  if (std::abs(closed - out.f_achieved) > kDefaultTol) {
    std::ostringstream os;
    os << "purify_b self-check failed: closed form " << closed << " vs recomputed "
       << out.f_achieved;
    throw std::logic_error(os.str());
  }
  return out;
}

double closed_form_fidelity(const DensityMatrix& rho, double p_tilde) {
  const double a = rho.m00();
  return a * p_tilde + (1.0 - a) * (1.0 - p_tilde) +
         2.0 * std::abs(rho.m01()) * std::sqrt(p_tilde * (1.0 - p_tilde));
}

std::optional<double> stationarity_residual(const DensityMatrix& rho, double p_tilde) {
  const double mod_p = std::abs(rho.m01());
  const double w = p_tilde * (1.0 - p_tilde);
  if (mod_p < kOffDiagonalCutoff || !(w > 0.0)) return std::nullopt;
  return 2.0 * rho.m00() - 1.0 + mod_p * (1.0 - 2.0 * p_tilde) / std::sqrt(w);
}

GridOracleResult grid_oracle(const DensityMatrix& rho, int n_theta, int n_phi) {
  if (n_theta < 2 || n_phi < 2) {
    throw InvalidInput("grid oracle needs at least 2 points per axis");
  }
  std::vector<double> cos_half(n_theta), sin_half(n_theta);
  for (int i = 0; i < n_theta; ++i) {
    const double t = std::numbers::pi * i / (n_theta - 1);
    cos_half[i] = std::cos(0.5 * t);
    sin_half[i] = std::sin(0.5 * t);
  }
  std::vector<Complex> phase(n_phi);
  for (int j = 0; j < n_phi; ++j) phase[j] = std::polar(1.0, 2.0 * std::numbers::pi * j / n_phi);

  const double m00 = rho.m00();
  const double m11 = rho.m11();
  const Complex m01 = rho.m01();

  GridOracleResult best;
  best.fidelity = -1.0;
  for (int i = 0; i < n_theta; ++i) {
    const double c = cos_half[i];
    const double s = sin_half[i];
    for (int j = 0; j < n_phi; ++j) {
      // <psi|rho|psi> with psi = (c, e^{if} s)
      const Complex a1 = phase[j] * s;
      const double f = m00 * c * c + m11 * s * s + 2.0 * (c * m01 * a1).real();
      if (f > best.fidelity) {
        best.fidelity = f;
        best.theta_index = i;
        best.phi_index = j;
      }
    }
  }
  best.state = PureState::normalized(cos_half[best.theta_index],
                                     phase[best.phi_index] * sin_half[best.theta_index]);
  return best;
}

}  // namespace purekit
