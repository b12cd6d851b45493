#include <doctest.h>

#include <cmath>
#include <numbers>

#include "purekit/errors.hpp"
#include "purekit/purify_a.hpp"

using namespace purekit;

namespace {

const DensityMatrix kUp = DensityMatrix::diagonal(1.0);
const DensityMatrix kDown = DensityMatrix::diagonal(0.0);
constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("input validation") {
  CHECK_THROWS_AS(OrthogonalMixture(0.5, kUp, kUp), InvalidState);
  CHECK_THROWS_AS(OrthogonalMixture(0.5, DensityMatrix::maximally_mixed(), kDown), InvalidState);
  CHECK_THROWS_AS(OrthogonalMixture(1.5, kUp, kDown), InvalidInput);
  CHECK_THROWS_AS(ProjectionChoice(1.0, 0.0), InvalidInput);
  CHECK_THROWS_AS(ProjectionChoice(0.6, 0.6), InvalidInput);
  CHECK_THROWS_AS(purify_a_z(-0.1, 0.0), InvalidInput);
}

TEST_CASE("purify_a_general") {
  const OrthogonalMixture mix(0.7, kUp, kDown);

  SUBCASE("Pi orthogonal to a component") {
    Mat2 onto_up;
    onto_up << 1, 0, 0, 0;
    CHECK_THROWS_AS(purify_a_general(mix, onto_up), OrthogonalProjection);
  }

  SUBCASE("not a rank-1 projection") {
    CHECK_THROWS_AS(purify_a_general(mix, Mat2::Identity()), InvalidInput);
    Mat2 not_idempotent;
    not_idempotent << 0.5, 0.2, 0.2, 0.5;
    CHECK_THROWS_AS(purify_a_general(mix, not_idempotent), InvalidInput);
  }

  SUBCASE("p1 = 1 returns rho1") {
    const OrthogonalMixture sure(1.0, kUp, kDown);
    const DensityMatrix out = purify_a_general(sure, ProjectionChoice::from_phase(1.1).projector());
    CHECK(max_abs_diff(out, kUp) < 1e-15);
  }

  SUBCASE("z basis output matches the phase of mu nu*") {
    const ProjectionChoice pc(Complex(0.6, 0.0), std::polar(0.8, -0.9));
    CHECK(pc.phase() == doctest::Approx(0.9));
    const DensityMatrix out = purify_a_general(mix, pc.projector());
    CHECK(out.m00() == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(std::abs(out.m01() - std::polar(std::sqrt(0.21), 0.9)) < 1e-14);
  }

  SUBCASE("p1 = 1/2, phi = 0 gives |+x>") {
    const OrthogonalMixture half(0.5, kUp, kDown);
    const DensityMatrix out = purify_a_general(half, ProjectionChoice::from_phase(0.0).projector());
    CHECK(max_abs_diff(out, density_from_pure(PureState::basis(Axis::x, +1))) < 1e-15);
  }

  SUBCASE("general orthogonal pair: pure output with preserved overlaps") {
    Rng rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
      const Spectral2 basis = eigen2(random_mixed(rng));
      const double p1 = u(rng);
      const OrthogonalMixture m(p1, density_from_pure(basis.vec_large),
                                density_from_pure(basis.vec_small));
      // Pi from a random ket with weight on both eigenvectors
      const PureState chi = haar_random_pure(rng);
      Mat2 pi = density_from_pure(chi).matrix();
      if (fidelity(density_from_pure(chi), m.rho1()) < 1e-3 ||
          fidelity(density_from_pure(chi), m.rho2()) < 1e-3) {
        continue;
      }
      const DensityMatrix out = purify_a_general(m, pi);
      CHECK(std::abs(purity(out) - 1.0) < 1e-10);
      CHECK(std::abs(fidelity(out, m.rho1()) - p1) < 1e-10);
      CHECK(std::abs(fidelity(out, m.rho2()) - (1.0 - p1)) < 1e-10);
    }
  }
}

TEST_CASE("purify_a_z") {
  CHECK(max_abs_diff(purify_a_z(1.0, 2.3), kUp) < 1e-15);
  CHECK(max_abs_diff(purify_a_z(0.5, kPi), density_from_pure(PureState::basis(Axis::x, -1))) <
        1e-15);

  Rng rng(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double p1 = u(rng);
    const double phi = 2.0 * kPi * u(rng);
    const DensityMatrix out = purify_a_z(p1, phi);
    CHECK(std::abs(purity(out) - 1.0) < 1e-12);
    CHECK(out.m00() == p1);
    CHECK(std::abs(fidelity(out, kUp) - p1) < 1e-12);
    // family property: only the off-diagonal phase moves
    const DensityMatrix other = purify_a_z(p1, phi + 1.0);
    CHECK(std::abs(other.m00() - out.m00()) < 1e-12);
    CHECK(std::abs(std::abs(other.m01()) - std::abs(out.m01())) < 1e-12);
  }
}

TEST_CASE("general and z-basis forms agree") {
  Rng rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double p1 = u(rng);
    const double mod_mu = std::sqrt(0.05 + 0.9 * u(rng));
    const ProjectionChoice pc(std::polar(mod_mu, 2.0 * kPi * u(rng)),
                              std::polar(std::sqrt(1.0 - mod_mu * mod_mu), 2.0 * kPi * u(rng)));
    const DensityMatrix general = purify_a_general(OrthogonalMixture(p1, kUp, kDown), pc.projector());
    CHECK(max_abs_diff(general, purify_a_z(p1, pc.phase())) < 1e-12);
  }
}

TEST_CASE("fidelity with the dominant eigenstate is flat in phi") {
  // mixture (2/3)|l><l| + (1/3)|s><s| in a rotated basis
  const Spectral2 ls = eigen2(DensityMatrix(0.6, 2.0 / 15.0));
  const OrthogonalMixture mix(2.0 / 3.0, density_from_pure(ls.vec_large),
                              density_from_pure(ls.vec_small));
  for (double phi : {0.0, kPi / 2, kPi, 3 * kPi / 2, 0.123}) {
    const Mat2 pi = ProjectionChoice::from_phase(phi).projector_in(ls.vec_large, ls.vec_small);
    const DensityMatrix out = purify_a_general(mix, pi);
    CHECK(std::abs(fidelity(out, mix.rho1()) - 2.0 / 3.0) < 1e-12);
  }
  for (double phi : {0.0, 1.0, 2.0}) {
    CHECK(std::abs(fidelity(purify_a_z(2.0 / 3.0, phi), kUp) - 2.0 / 3.0) < 1e-12);
  }
}

TEST_CASE("kraus_for_a") {
  SUBCASE("p1 = 1") {
    const KrausPair k = kraus_for_a(1.0, 0.0);
    Mat2 a0, a1;
    a0 << 1, 0, 0, 0;
    a1 << 0, 1, 0, 0;
    CHECK(max_abs_diff(k.a0(), a0) == 0.0);
    CHECK(max_abs_diff(k.a1(), a1) == 0.0);
  }

  SUBCASE("entries are sqrt(p1) e^{i phi} and sqrt(p2)") {
    const KrausPair k = kraus_for_a(2.0 / 3.0, 0.8);
    CHECK(std::abs(k.a0()(0, 0) - std::polar(std::sqrt(2.0 / 3.0), 0.8)) < 1e-15);
    CHECK(std::abs(k.a0()(1, 0) - std::sqrt(1.0 / 3.0)) < 1e-15);
    CHECK(std::abs(k.a1()(0, 1) - std::polar(std::sqrt(2.0 / 3.0), 0.8)) < 1e-15);
    CHECK(std::abs(k.a1()(1, 1) - std::sqrt(1.0 / 3.0)) < 1e-15);
  }

  SUBCASE("realizes purify_a_z on any input") {
    Rng rng(14);
    const double p1 = 0.35, phi = -1.2;
    const KrausPair k = kraus_for_a(p1, phi);
    const DensityMatrix target = purify_a_z(p1, phi);
    CHECK(max_abs_diff(apply(k, kUp), target) < 1e-12);
    CHECK(max_abs_diff(apply(k, DensityMatrix::maximally_mixed()), target) < 1e-12);
    CHECK(max_abs_diff(apply(k, random_mixed(rng)), target) < 1e-12);
  }

  SUBCASE("round trip through the dilation") {
    const double p1 = 0.42, phi = 2.5;
    const TargetAmplitudes t(std::polar(std::sqrt(p1), phi), std::sqrt(1.0 - p1));
    CHECK(max_abs_diff(kraus_from_unitary(dilation_unitary(t)), kraus_for_a(p1, phi)) < 1e-12);
  }
}
