#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace qgeom;
using testsupport::max_abs;

TEST_CASE("coordinate derivatives act canonically") {
  FockSpace space(1, 6, 0.9);
  CoordinateOperators ops = coordinate_operators(space);
  Mat id = testsupport::identity_like(space);

  Operator da = nc_partial(ops.alpha[0], NcCoordinate::alpha);
  REQUIRE(max_abs(restricted_block(Operator(space, Mat(da.matrix() - id)), 1)) < 1e-13);
  REQUIRE(max_abs(restricted_block(nc_partial(ops.alpha[0], NcCoordinate::alpha_bar), 1)) <
          1e-13);
  REQUIRE(max_abs(restricted_block(nc_partial(ops.x[0], NcCoordinate::p), 1)) < 1e-13);

  SECTION("x^2 differentiates to 2x") {
    Operator x2 = matrix_power(ops.x[0], 2);
    Operator dx2 = nc_partial(x2, NcCoordinate::x);
    Operator dev(space, Mat(dx2.matrix() - 2.0 * ops.x[0].matrix()));
    REQUIRE(max_abs(restricted_block(dev, 2)) < 1e-13);
  }

  SECTION("space and mode validation") {
    REQUIRE_THROWS_AS(nc_partial(ops.x[0], NcCoordinate::x, 2), ParameterError);
  }
}

TEST_CASE("derivations: Leibniz rule and mutual commutativity") {
  FockSpace space(1, 6, 1.0);
  std::mt19937_64 rng(109);
  const NcCoordinate all[] = {NcCoordinate::x, NcCoordinate::p, NcCoordinate::alpha,
                              NcCoordinate::alpha_bar};
  for (int k = 0; k < 10; ++k) {
    Operator beta = random_operator(space, rng);
    Operator gamma = random_operator(space, rng);
    double scale = tolerance_scale(beta, gamma);
    for (NcCoordinate wrt : all) {
      Operator lhs = nc_partial(beta * gamma, wrt);
      Operator rhs = nc_partial(beta, wrt) * gamma + beta * nc_partial(gamma, wrt);
      REQUIRE(max_abs(Mat(lhs.matrix() - rhs.matrix())) < 1e-12 * scale);
    }
    for (NcCoordinate a : all)
      for (NcCoordinate b : all) {
        Operator ab = nc_partial(nc_partial(beta, a), b);
        Operator ba = nc_partial(nc_partial(beta, b), a);
        Operator dev(space, Mat(ab.matrix() - ba.matrix()));
        REQUIRE(max_abs(restricted_block(dev, 2)) < 1e-12 * scale);
      }
  }
}

TEST_CASE("operator Poisson bracket") {
  FockSpace space(1, 8, 1.0);
  CoordinateOperators ops = coordinate_operators(space);
  Mat id = testsupport::identity_like(space);

  SECTION("canonical bracket") {
    Operator b = nc_poisson(ops.x[0], ops.p[0]);
    REQUIRE(max_abs(restricted_block(Operator(space, Mat(b.matrix() - id)), 2)) < 1e-13);
  }

  SECTION("x^2 with p^2 gives 2(xp + px) = 4 BJ(xp)") {
    Operator lhs = nc_poisson(matrix_power(ops.x[0], 2), matrix_power(ops.p[0], 2));
    Mat want = 2.0 * (ops.x[0].matrix() * ops.p[0].matrix() +
                      ops.p[0].matrix() * ops.x[0].matrix());
    REQUIRE(max_abs(restricted_block(Operator(space, Mat(lhs.matrix() - want)), 4)) <
            1e-12);
    Operator bj = born_jordan(space, 1, 1) * Complex(4.0);
    REQUIRE(max_abs(restricted_block(Operator(space, Mat(lhs.matrix() - bj.matrix())),
                                     4)) < 1e-12);
  }

  SECTION("Jacobi identity") {
    std::mt19937_64 rng(113);
    for (int k = 0; k < 10; ++k) {
      Operator a = random_operator(space, rng);
      Operator b = random_operator(space, rng);
      Operator c = random_operator(space, rng);
      Mat cyc = nc_poisson(a, nc_poisson(b, c)).matrix() +
                nc_poisson(b, nc_poisson(c, a)).matrix() +
                nc_poisson(c, nc_poisson(a, b)).matrix();
      double scale =
          std::max(1.0, a.matrix().norm() * b.matrix().norm() * c.matrix().norm());
      REQUIRE(max_abs(cyc) < 1e-12 * scale);
    }
  }

  SECTION("Hamilton-form identities") {
    std::mt19937_64 rng(127);
    Operator beta = random_operator(space, rng);
    double scale = std::max(1.0, beta.matrix().norm());
    REQUIRE(max_abs(Mat(nc_poisson(ops.x[0], beta).matrix() -
                        nc_partial(beta, NcCoordinate::p).matrix())) < 1e-12 * scale);
    REQUIRE(max_abs(Mat(nc_poisson(ops.p[0], beta).matrix() +
                        nc_partial(beta, NcCoordinate::x).matrix())) < 1e-12 * scale);
  }

  SECTION("Born-Jordan identity for coordinate powers") {
    for (int m = 1; m <= 4; ++m)
      for (int n = 1; n <= 4; ++n) {
        if (m + n > space.cutoff()) continue;
        Operator lhs =
            nc_poisson(matrix_power(ops.x[0], m), matrix_power(ops.p[0], n));
        Operator rhs = born_jordan(space, m - 1, n - 1) * Complex(double(m) * n);
        Operator dev(space, Mat(lhs.matrix() - rhs.matrix()));
        Mat block = restricted_block(dev, m + n);
        REQUIRE(block.size() > 0);
        REQUIRE(max_abs(block) < 1e-12 * std::max(1.0, rhs.matrix().norm()));
      }
  }
}

TEST_CASE("symplectic components of the coordinate tensor") {
  FockSpace space(2, 4, 1.0);
  CoordinateOperators ops = coordinate_operators(space);
  Mat id = testsupport::identity_like(space);

  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Complex delta = i == j ? 1.0 : 0.0;
      REQUIRE(omega_component(Variance::covariant, i, j, BarPattern::second, 2) ==
              kImag / 2.0 * delta);
      REQUIRE(omega_component(Variance::covariant, i, j, BarPattern::first, 2) ==
              -kImag / 2.0 * delta);
      REQUIRE(omega_component(Variance::contravariant, i, j, BarPattern::second, 2) ==
              -2.0 * kImag * delta);
      REQUIRE(omega_component(Variance::contravariant, i, j, BarPattern::first, 2) ==
              2.0 * kImag * delta);
      REQUIRE(omega_component(Variance::contravariant, i, j, BarPattern::none, 2) ==
              Complex(0.0));
      REQUIRE(omega_component(Variance::covariant, i, j, BarPattern::both, 2) ==
              Complex(0.0));

      // contravariant block against the operator bracket of the coordinates
      Operator br = nc_poisson(ops.alpha[i], ops.alpha_bar[j]);
      Mat want = omega_component(Variance::contravariant, i, j, BarPattern::second, 2) * id;
      REQUIRE(max_abs(restricted_block(Operator(space, Mat(br.matrix() - want)), 2)) <
              1e-12);
    }
  REQUIRE_THROWS_AS(omega_component(Variance::covariant, 0, 2, BarPattern::first, 2),
                    ParameterError);

  SECTION("pairing of coordinate 1-forms with Hamiltonian fields") {
    std::mt19937_64 rng(131);
    Operator beta = random_operator(space, rng);
    for (int i = 0; i < 2; ++i) {
      // d alpha^i (X_beta) = (1/i hbar)[alpha_i, beta] = -2i d_ibar beta
      Operator lhs = nc_poisson(ops.alpha[i], beta);
      Operator rhs = nc_partial(beta, NcCoordinate::alpha_bar, i) * (-2.0 * kImag);
      REQUIRE(max_abs(Mat(lhs.matrix() - rhs.matrix())) <
              1e-12 * std::max(1.0, beta.matrix().norm()));
    }
  }
}

TEST_CASE("classical-form bracket and its failure") {
  FockSpace space(1, 8, 0.7);
  CoordinateOperators ops = coordinate_operators(space);

  SECTION("linear coordinates are classical") {
    ClassicalFormReport r = classical_form_counterexample(ops.x[0], ops.p[0]);
    REQUIRE(max_abs(restricted_block(r.deviation, 2)) < 1e-13);
  }

  SECTION("x^2, p^2 misses by exactly -2 i hbar") {
    Operator x2 = matrix_power(ops.x[0], 2);
    Operator p2 = matrix_power(ops.p[0], 2);
    ClassicalFormReport r = classical_form_counterexample(x2, p2);
    Mat want = -2.0 * kImag * space.hbar() * testsupport::identity_like(space);
    REQUIRE(max_abs(restricted_block(Operator(space, Mat(r.deviation.matrix() - want)),
                                     4)) < 1e-12);
  }

  SECTION("generic quartic words deviate") {
    FockSpace deep(1, 12, space.hbar());  // faithful block under quartic words
    std::mt19937_64 rng(137);
    std::uniform_int_distribution<int> split(1, 2);
    for (int k = 0; k < 10; ++k) {
      int a = split(rng);
      int b = split(rng);
      std::vector<CoordinatePower> fa{{NcCoordinate::x, 0, a},
                                      {NcCoordinate::p, 0, 4 - a - 1},
                                      {NcCoordinate::x, 0, 1}};
      std::vector<CoordinatePower> fb{{NcCoordinate::p, 0, b},
                                      {NcCoordinate::x, 0, 4 - b - 1},
                                      {NcCoordinate::p, 0, 1}};
      ClassicalFormReport r = classical_form_counterexample(
          ordered_monomial(deep, fa), ordered_monomial(deep, fb));
      REQUIRE(max_abs(restricted_block(r.deviation, 8)) > 1e-3);
    }
  }
}

TEST_CASE("operator bracket is the f-picture Poisson bracket in expectation") {
  FockSpace space(1, 7, 1.0);
  std::mt19937_64 rng(139);
  for (int k = 0; k < 20; ++k) {
    Operator beta = random_operator(space, rng);
    Operator gamma = random_operator(space, rng);
    StateVector phi = random_state(space, rng, space.cutoff() - 2);
    Complex lhs = eval_f(nc_poisson(beta, gamma), phi).value;
    Complex rhs =
        bracket(beta, gamma, phi, BracketKind::poisson, Picture::homogeneous).value;
    REQUIRE(std::abs(lhs - rhs) < 1e-10 * tolerance_scale(beta, gamma, rhs));
  }
}

TEST_CASE("ordered monomial builder fixes the factor sequence") {
  FockSpace space(1, 6, 1.0);
  CoordinateOperators ops = coordinate_operators(space);
  std::vector<CoordinatePower> word{{NcCoordinate::x, 0, 2}, {NcCoordinate::p, 0, 1}};
  Operator lhs = ordered_monomial(space, word);
  Mat want = ops.x[0].matrix() * ops.x[0].matrix() * ops.p[0].matrix();
  REQUIRE(max_abs(Mat(lhs.matrix() - want)) == 0.0);
  // a different ordering is a different operator
  std::vector<CoordinatePower> rev{{NcCoordinate::p, 0, 1}, {NcCoordinate::x, 0, 2}};
  REQUIRE(max_abs(Mat(ordered_monomial(space, rev).matrix() - want)) > 0.1);
}
