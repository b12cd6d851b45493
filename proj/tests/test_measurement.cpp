#include <doctest.h>

#include <cmath>
#include <numbers>

#include "purekit/errors.hpp"
#include "purekit/measurement.hpp"

using namespace purekit;

namespace {

const double kR2 = std::numbers::sqrt2;

PureState example_state() { return PureState(std::sqrt(0.8), std::sqrt(0.2)); }

Mat2 pauli(Axis a) {
  Mat2 m;
  switch (a) {
    case Axis::x: m << 0, 1, 1, 0; break;
    case Axis::y: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case Axis::z: m << 1, 0, 0, -1; break;
  }
  return m;
}

}  // namespace

TEST_CASE("outcome probabilities") {
  const CompleteRecord rec = probabilities_complete(example_state());
  CHECK(rec.p1 == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(rec.p2 == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(rec.p3 == doctest::Approx(0.9).epsilon(1e-14));
  CHECK(std::abs(rec.sphere_residual()) < 1e-12);

  const PureState yp = PureState::basis(Axis::y, +1);
  CHECK(outcome_probability(yp, Axis::y) == doctest::Approx(1.0));
  CHECK(outcome_probability(yp, Axis::x) == doctest::Approx(0.5));

  Rng rng(31);
  for (int i = 0; i < 1000; ++i) {
    const PureState psi = haar_random_pure(rng);
    const CompleteRecord r = probabilities_complete(psi);
    CHECK(std::abs(r.sphere_residual()) < 1e-12);
    const BlochVector b = bloch_from_density(density_from_pure(psi));
    CHECK(std::abs(2 * r.p1 - 1 - b.z) < 1e-12);
    CHECK(std::abs(2 * r.p2 - 1 - b.y) < 1e-12);
    CHECK(std::abs(2 * r.p3 - 1 - b.x) < 1e-12);
  }
}

TEST_CASE("record validation") {
  CHECK_THROWS_AS(validate(CompleteRecord{1.1, 0.5, 0.5}), InvalidInput);
  CHECK_THROWS_AS(validate(PartialRecord{0.5, -0.01}), InvalidInput);
  CHECK_THROWS_AS(validate(SingleRecord{std::nan("")}), InvalidInput);
  CHECK_NOTHROW(validate(CompleteRecord{1.0, 0.0, 0.5}));
}

TEST_CASE("dephase") {
  const PureState xp = PureState::basis(Axis::x, +1);
  const DensityMatrix dz = dephase(xp, Axis::z);
  CHECK(max_abs_diff(dz, DensityMatrix::maximally_mixed()) < 1e-15);
  const DensityMatrix dx = dephase(xp, Axis::x);
  CHECK(max_abs_diff(dx, density_from_pure(xp)) < 1e-15);

  // dephasing in axis a keeps only the a-component of the Bloch vector
  Rng rng(32);
  for (int i = 0; i < 200; ++i) {
    const PureState psi = haar_random_pure(rng);
    const BlochVector b = bloch_from_density(density_from_pure(psi));
    const BlochVector by = bloch_from_density(dephase(psi, Axis::y));
    CHECK(std::abs(by.x) < 1e-12);
    CHECK(std::abs(by.z) < 1e-12);
    CHECK(std::abs(by.y - b.y) < 1e-12);
  }
}

TEST_CASE("complete-measurement mixture") {
  SUBCASE("example") {
    const DensityMatrix m = msmt_state_complete(example_state());
    CHECK(m.m00() == doctest::Approx(0.6).epsilon(1e-14));
    CHECK(std::abs(m.m01() - Complex(2.0 / 15.0, 0.0)) < 1e-14);
  }

  SUBCASE("(I + rho)/3 over random states, both routes") {
    Rng rng(33);
    double worst = 0.0, worst_rec = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const PureState psi = haar_random_pure(rng);
      const Mat2 expected = (Mat2::Identity() + density_from_pure(psi).matrix()) / 3.0;
      const DensityMatrix m = msmt_state_complete(psi);
      worst = std::max(worst, max_abs_diff(m.matrix(), expected));
      const DensityMatrix viarec = msmt_state_from_record(probabilities_complete(psi));
      worst_rec = std::max(worst_rec, max_abs_diff(viarec.matrix(), expected));
      const Spectral2 s = eigen2(m);
      REQUIRE(std::abs(s.lambda_large - 2.0 / 3.0) < 1e-12);
      REQUIRE(std::abs(s.lambda_small - 1.0 / 3.0) < 1e-12);
    }
    CHECK(worst < 1e-12);
    CHECK(worst_rec < 1e-12);
  }

  SUBCASE("record with an imaginary off-diagonal") {
    const DensityMatrix m = msmt_state_from_record(CompleteRecord{0.5, 1.0, 0.5});
    CHECK(std::abs(m.m01() - Complex(0.0, -1.0 / 6.0)) < 1e-15);
  }
}

TEST_CASE("reconstruction") {
  SUBCASE("example") {
    const PureState back = reconstruct_complete(msmt_state_complete(example_state()));
    CHECK(std::abs(back.a0() - std::sqrt(0.8)) < 1e-12);
    CHECK(std::abs(back.a1() - std::sqrt(0.2)) < 1e-12);
  }

  SUBCASE("y eigenstate keeps its relative phase") {
    const PureState back = reconstruct_complete(msmt_state_complete(PureState::basis(Axis::y, -1)));
    CHECK(std::abs(back.a0() - 1.0 / kR2) < 1e-12);
    CHECK(std::abs(back.a1() - Complex(0.0, -1.0 / kR2)) < 1e-12);
  }

  SUBCASE("not a measurement mixture") {
    CHECK_THROWS_AS(reconstruct_complete(DensityMatrix::maximally_mixed()), NotAMeasurementMixture);
    CHECK_THROWS_AS(reconstruct_complete(DensityMatrix::diagonal(0.8)), NotAMeasurementMixture);
    CHECK_THROWS_AS(reconstruct_complete(DensityMatrix::diagonal(2.0 / 3.0 + 1e-7)),
                    NotAMeasurementMixture);
    CHECK_NOTHROW(reconstruct_complete(DensityMatrix::diagonal(2.0 / 3.0 + 1e-9)));
  }

  SUBCASE("both routes agree on random states") {
    Rng rng(34);
    for (int i = 0; i < 10000; ++i) {
      const PureState psi = haar_random_pure(rng);
      const ReconstructionPaths p = reconstruct_complete_paths(msmt_state_complete(psi));
      REQUIRE(std::abs(1.0 - std::norm(psi.inner(p.eigenvector))) < 1e-10);
      REQUIRE(std::abs(1.0 - std::norm(psi.inner(p.inversion))) < 1e-10);
    }
  }
}

TEST_CASE("partial-measurement mixture") {
  SUBCASE("example") {
    const DensityMatrix m = msmt_state_partial(PartialRecord{0.9, 0.7});
    CHECK(m.m00() == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(std::abs(m.m01() - Complex(0.0, -0.1)) < 1e-15);
  }

  SUBCASE("boundary record") {
    const DensityMatrix m = msmt_state_partial(PartialRecord{1.0, 0.5});
    CHECK(m.m00() == doctest::Approx(0.75));
    CHECK(std::abs(m.m01()) == 0.0);
  }

  SUBCASE("equals the average of the z and y dephasings") {
    Rng rng(35);
    for (int i = 0; i < 1000; ++i) {
      const PureState psi = haar_random_pure(rng);
      const Mat2 avg = 0.5 * (dephase(psi, Axis::z).matrix() + dephase(psi, Axis::y).matrix());
      CHECK(max_abs_diff(msmt_state_partial(probabilities_partial(psi)).matrix(), avg) < 1e-12);
    }
  }

  SUBCASE("Pauli expectations of the mixture") {
    const PartialRecord rec{0.65, 0.2};
    const Mat2 m = msmt_state_partial(rec).matrix();
    CHECK(std::abs((m * pauli(Axis::z)).trace() - 0.5 * rec.a1()) < 1e-14);
    CHECK(std::abs((m * pauli(Axis::y)).trace() - 0.5 * rec.a2()) < 1e-14);
    CHECK(std::abs((m * pauli(Axis::x)).trace()) < 1e-14);
  }
}

TEST_CASE("single-axis mixture") {
  const DensityMatrix m = msmt_state_single(SingleRecord{0.8});
  CHECK(m.m00() == 0.8);
  CHECK(m.m01() == Complex(0.0, 0.0));
}

TEST_CASE("partial-record candidates") {
  SUBCASE("example") {
    const auto [plus, minus] = protocol_a_candidates_partial(PartialRecord{0.9, 0.7});
    const BlochVector bp = bloch_from_density(density_from_pure(plus));
    const BlochVector bm = bloch_from_density(density_from_pure(minus));
    CHECK(bp.x == doctest::Approx(0.44721359549995787).epsilon(1e-12));
    CHECK(bm.x == doctest::Approx(-0.44721359549995787).epsilon(1e-12));
    CHECK(bp.y == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(bp.z == doctest::Approx(0.8).epsilon(1e-12));
  }

  SUBCASE("record on the yz great circle has one candidate") {
    const auto [plus, minus] = protocol_a_candidates_partial(PartialRecord{1.0, 0.5});
    CHECK(std::abs(plus.a0() - minus.a0()) < 1e-15);
    CHECK(std::abs(plus.a1() - minus.a1()) < 1e-15);
  }

  SUBCASE("infeasible record") {
    CHECK_THROWS_AS(protocol_a_candidates_partial(PartialRecord{1.0, 1.0}), InfeasibleRecord);
  }

  SUBCASE("the true state is always a candidate") {
    Rng rng(36);
    for (int i = 0; i < 1000; ++i) {
      const PureState psi = haar_random_pure(rng);
      const auto [plus, minus] = protocol_a_candidates_partial(probabilities_partial(psi));
      const double best = std::max(std::norm(psi.inner(plus)), std::norm(psi.inner(minus)));
      CHECK(std::abs(best - 1.0) < 1e-8);
    }
  }
}

TEST_CASE("sampling") {
  const PureState psi = example_state();

  SUBCASE("deterministic in the seed") {
    const EnsembleConfig cfg{30000, 17};
    const CompleteRecord a = sample_complete(psi, cfg);
    const CompleteRecord b = sample_complete(psi, cfg);
    CHECK(a.p1 == b.p1);
    CHECK(a.p2 == b.p2);
    CHECK(a.p3 == b.p3);
    const CompleteRecord c = sample_complete(psi, EnsembleConfig{30000, 18});
    CHECK((a.p1 != c.p1 || a.p2 != c.p2 || a.p3 != c.p3));
  }

  SUBCASE("ensemble size checks") {
    CHECK_THROWS_AS(sample_complete(psi, {10, 0}), InvalidInput);
    CHECK_THROWS_AS(sample_partial(psi, {9, 0}), InvalidInput);
    CHECK_THROWS_AS(sample_single(psi, {0, 0}), InvalidInput);
    CHECK_NOTHROW(sample_single(psi, {7, 0}));
  }

  SUBCASE("eigenstate of z") {
    const CompleteRecord r = sample_complete(PureState(1.0, 0.0), {3000000, 5});
    CHECK(r.p1 == 1.0);
    CHECK(std::abs(r.p2 - 0.5) < 5.0 * std::sqrt(0.25 / 1e6));
    CHECK(std::abs(r.p3 - 0.5) < 5.0 * std::sqrt(0.25 / 1e6));
  }

  SUBCASE("binomial spread") {
    // 100 seeds, 3 axes: count deviations beyond 3 sigma
    const std::int64_t n = 30000;
    const double per_axis = n / 3.0;
    const CompleteRecord exact = probabilities_complete(psi);
    int beyond = 0;
    double mean_p3 = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const CompleteRecord r = sample_complete(psi, {n, seed});
      const double pe[3] = {exact.p1, exact.p2, exact.p3};
      const double ps[3] = {r.p1, r.p2, r.p3};
      for (int k = 0; k < 3; ++k) {
        const double sigma = std::sqrt(pe[k] * (1 - pe[k]) / per_axis);
        if (std::abs(ps[k] - pe[k]) > 3 * sigma) ++beyond;
      }
      mean_p3 += r.p3 / 100.0;
    }
    CHECK(beyond <= 5);
    CHECK(std::abs(mean_p3 - 0.9) < 3 * std::sqrt(0.09 / (per_axis * 100)));
  }

  SUBCASE("partial and single") {
    const PartialRecord p = sample_partial(psi, {20000, 3});
    CHECK(std::abs(p.p1 - 0.8) < 0.02);
    CHECK(std::abs(p.p2 - 0.5) < 0.02);
    const SingleRecord s = sample_single(psi, {10000, 3});
    CHECK(std::abs(s.p1 - 0.8) < 0.02);
  }
}
