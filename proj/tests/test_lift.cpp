#include <bit>
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "wignerlift/controls.hpp"
#include "wignerlift/lift.hpp"

using namespace wignerlift;

namespace {

constexpr Complex kI{0.0, 1.0};

ComplexVector vec(std::initializer_list<Complex> xs) {
  ComplexVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (const auto& x : xs) v[k++] = x;
  return v;
}

ErrorCode lift_error(const RayMapOracle& map, Eigen::Index dom, Eigen::Index cod) {
  try {
    lift(map, dom, cod);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("lift accepted the map");
  return ErrorCode::ParseError;
}

// Multiplies the image by a phase that depends on the exact input bits, so
// every query sees an unrelated phase while the map stays a pure function.
RayMapOracle phase_scrambled(const ComplexMatrix& u) {
  return RayMapOracle::custom(u.cols(), u.rows(), [u](const ComplexVector& x) -> ComplexVector {
    std::uint64_t h = 0;
    for (Eigen::Index k = 0; k < x.size(); ++k) {
      h = mix64(h ^ std::bit_cast<std::uint64_t>(x[k].real()));
      h = mix64(h ^ std::bit_cast<std::uint64_t>(x[k].imag()));
    }
    const double angle = static_cast<double>(h >> 11) * 0x1.0p-53 * 6.283185307179586;
    return std::polar(1.0, angle) * (u * x);
  });
}

}  // namespace

TEST_CASE("identity oracle lifts to the identity") {
  const auto l = lift(RayMapOracle::matrix_induced(ComplexMatrix::Identity(3, 3)), 3, 3);
  CHECK((l.matrix - ComplexMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK_FALSE(l.antilinear);
  CHECK(l.residual < 1e-12);
}

TEST_CASE("pure conjugation lifts to an antilinear identity") {
  const auto l = lift(RayMapOracle::matrix_induced(ComplexMatrix::Identity(2, 2), true), 2, 2);
  CHECK((l.matrix - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(l.antilinear);
}

TEST_CASE("phase-scrambled unitary oracle recovers U up to global phase") {
  const ComplexMatrix u = random_unitary(4, 7);
  const auto l = lift(phase_scrambled(u), 4, 4);
  CHECK_FALSE(l.antilinear);
  CHECK(oracle::aligned_gap(l.matrix, u) < 1e-9);
  // The one free phase is the one that makes column 1 canonical.
  CHECK((l.matrix.col(0) - canonicalize(u.col(0)).rep()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("gauge independence: scrambled phases give the same lift") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ComplexMatrix u = random_unitary(5, seed);
    const auto plain = lift(RayMapOracle::matrix_induced(u), 5, 5);
    const auto scrambled = lift(phase_scrambled(u), 5, 5);
    CHECK((plain.matrix - scrambled.matrix).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("apply_lift") {
  SemilinearLift linear{ComplexMatrix::Identity(2, 2), false, 0.0, ""};
  SemilinearLift anti{ComplexMatrix::Identity(2, 2), true, 0.0, ""};
  CHECK((apply_lift(linear, vec({kI, 1.0})) - vec({kI, 1.0})).norm() == 0.0);
  CHECK((apply_lift(anti, vec({kI, 0.0})) - vec({-kI, 0.0})).norm() == 0.0);
  CHECK_THROWS_AS(apply_lift(linear, basis_vector(3, 0)), Error);

  const auto map = RayMapOracle::matrix_induced(random_unitary(4, 3));
  const auto l = lift(map, 4, 4);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ComplexVector v = random_state(4, seed);
    const ComplexVector image = apply_oracle(map, canonicalize(v)).rep();
    CHECK(1.0 - oracle::probability(apply_lift(l, v), image) < 1e-10);
  }
}

TEST_CASE("verify_lift") {
  const auto map = RayMapOracle::matrix_induced(random_unitary(4, 11));
  const auto l = lift(map, 4, 4);
  const auto good = verify_lift(l, map, 50, 1);
  CHECK(good.pass);
  CHECK(good.max_abs_deviation < 1e-9);

  SemilinearLift bent = l;
  bent.matrix(1, 2) += 1e-3;
  const auto bad = verify_lift(bent, map, 50, 1);
  CHECK_FALSE(bad.pass);
  CHECK(bad.max_abs_deviation >= 1e-4);
}

TEST_CASE("antilinear lift passes only under the swapped inner-product branch") {
  const auto map = RayMapOracle::matrix_induced(ComplexMatrix::Identity(3, 3), true);
  const auto l = lift(map, 3, 3);
  REQUIRE(l.antilinear);
  const auto report = verify_lift(l, map, 30, 2);
  CHECK(report.pass);
  double linear_branch = 0.0;
  double swapped_branch = 0.0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const ComplexVector v = random_state(3, seed);
    const ComplexVector w = random_state(3, seed + 1000);
    linear_branch = std::max(linear_branch, inner_product_deviation(l, v, w, false));
    swapped_branch = std::max(swapped_branch, inner_product_deviation(l, v, w, true));
  }
  CHECK(swapped_branch < 1e-12);
  CHECK(linear_branch > 1e-2);
}

TEST_CASE("lift properties over random unitary oracles") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Eigen::Index dim = 2 + static_cast<Eigen::Index>(seed % 7);
    const bool conj = seed % 3 == 0;
    const ComplexMatrix u = random_unitary(dim, seed);
    const auto map = RayMapOracle::matrix_induced(u, conj);

    LiftOptions first;
    first.validation_seed = seed;
    LiftOptions second;
    second.validation_seed = seed + 12345;
    second.random_validation = 3;
    const auto a = lift(map, dim, dim, first);
    const auto b = lift(map, dim, dim, second);

    CHECK(a.antilinear == conj);
    // Uniqueness up to a global phase.
    CHECK(oracle::aligned_gap(a.matrix, b.matrix) < 1e-9);
    // Isometry.
    CHECK(unitarity_residual(a.matrix) < 1e-10);
    CHECK(oracle::aligned_gap(a.matrix, u) < 1e-9);

    // The c = i test agrees for every index.
    for (Eigen::Index j = 1; j < dim; ++j) {
      const ComplexVector x = basis_vector(dim, 0) + kI * basis_vector(dim, j);
      const ComplexVector image = apply_oracle(map, canonicalize(x)).rep();
      const ComplexVector expected = a.matrix.col(0) + (conj ? -kI : kI) * a.matrix.col(j);
      CHECK(1.0 - oracle::probability(image, expected) < 1e-12);
    }

    // Vectors with no e_1 component.
    Rng rng(seed);
    ComplexVector no_pivot = random_gaussian_vector(dim, rng);
    no_pivot[0] = 0.0;
    CHECK(ray_equal(canonicalize(apply_lift(a, no_pivot)), apply_oracle(map, canonicalize(no_pivot))));
  }
}

TEST_CASE("general scalars follow the classified branch") {
  const ComplexMatrix u = random_unitary(3, 4);
  for (bool conj : {false, true}) {
    const auto map = RayMapOracle::matrix_induced(u, conj);
    const auto l = lift(map, 3, 3);
    Rng rng(1);
    for (int t = 0; t < 20; ++t) {
      const Complex c = rng.complex_gaussian();
      const ComplexVector x = basis_vector(3, 0) + c * basis_vector(3, 2);
      const Complex tau = conj ? std::conj(c) : c;
      const ComplexVector expected = l.matrix.col(0) + tau * l.matrix.col(2);
      CHECK(1.0 - oracle::probability(apply_oracle(map, canonicalize(x)).rep(), expected) < 1e-12);
    }
  }
}

TEST_CASE("lift into a larger codomain") {
  ComplexMatrix isometry = random_unitary(5, 6).leftCols(3);
  const auto map = RayMapOracle::matrix_induced(isometry);
  const auto l = lift(map, 3, 5);
  CHECK(l.matrix.rows() == 5);
  CHECK(oracle::aligned_gap(l.matrix, isometry) < 1e-9);
}

TEST_CASE("tabulated oracles lift from exactly the structured queries") {
  for (bool conj : {false, true}) {
    const ComplexMatrix u = random_unitary(4, 31);
    const auto table = controls::unitary_table(u, conj);
    const auto l = lift(table, 4, 4);
    CHECK(l.antilinear == conj);
    CHECK(oracle::aligned_gap(l.matrix, u) < 1e-9);
    CHECK(verify_lift(l, table, 1, 0).pass);
  }
}

TEST_CASE("lift errors") {
  CHECK(lift_error(controls::one_dimensional_map(), 1, 1) == ErrorCode::AmbiguousTau);
  CHECK(lift_error(controls::inconsistent_tau_table(3), 3, 3) == ErrorCode::InconsistentTau);
  CHECK(lift_error(controls::non_unimodular_k_table(3), 2, 2) == ErrorCode::NonUnimodularK);
  CHECK(lift_error(controls::constant_ray_map(3), 3, 3) == ErrorCode::NotProbabilityPreserving);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    CHECK(lift_error(controls::perturbed_unitary_map(3, seed), 3, 3) ==
          ErrorCode::NotProbabilityPreserving);
  }
  CHECK(lift_error(RayMapOracle::matrix_induced(ComplexMatrix::Identity(2, 2)), 3, 3) ==
        ErrorCode::DimensionMismatch);

  // Only basis rays tabulated: the e1 + e2 query is missing.
  const auto partial = RayMapOracle::tabulated({{canonicalize(basis_vector(2, 0)), canonicalize(basis_vector(2, 0))},
                                                {canonicalize(basis_vector(2, 1)), canonicalize(basis_vector(2, 1))}});
  CHECK(lift_error(partial, 2, 2) == ErrorCode::NotInTable);
}

TEST_CASE("constant map failure carries the offending basis pair") {
  try {
    lift(controls::constant_ray_map(3), 3, 3);
    FAIL("accepted");
  } catch (const LiftError& e) {
    CHECK(e.report().max_abs_deviation == doctest::Approx(1.0));
    CHECK(oracle::probability(e.report().worst_pair.first.rep(),
                              e.report().worst_pair.second.rep()) == 0.0);
  }
}
