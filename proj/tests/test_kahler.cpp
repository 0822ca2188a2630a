#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace qgeom;
using testsupport::fd_wirtinger;
using testsupport::max_abs;

namespace {

StateVector superposition01(const FockSpace& space) {
  Vec z = Vec::Zero(space.dim());
  z(0) = 1.0;
  z(1) = 1.0;
  return StateVector(space, z);
}

}  // namespace

TEST_CASE("eval_H values") {
  FockSpace space(1, 6, 1.0);
  CoordinateOperators ops = coordinate_operators(space);
  std::mt19937_64 rng(7);
  StateVector phi = random_state(space, rng).on_sphere();

  Complex v = eval_H(Operator::identity(space) * Complex(2.0 * space.hbar()), phi).value;
  REQUIRE(std::abs(v - 2.0 * space.hbar()) < 1e-12);

  StateVector one = StateVector::basis(space, 1).on_sphere();
  REQUIRE(std::abs(eval_H(ops.number[0], one).value - 1.0) < 1e-12);
}

TEST_CASE("analytic gradients match finite differences") {
  FockSpace space(1, 5, 0.8);
  std::mt19937_64 rng(11);
  Operator beta = random_operator(space, rng);
  StateVector phi = random_state(space, rng);

  auto check = [&](Picture pic) {
    KahlerEval e = eval(beta, phi, pic);
    auto func = [&](const Vec& z) {
      StateVector at(space, z);
      return eval(beta, at, pic).value;
    };
    const Vec& z = phi.z();
    for (int m = 0; m < space.dim(); ++m) {
      Complex fd_h, fd_a;
      if (pic == Picture::affine) {
        // differentiate in the chart: w entries beyond [0]
        auto wfunc = [&](const Vec& w) {
          Vec zz = w * phi.z()(0);
          StateVector at(space, zz);
          return eval(beta, at, pic).value;
        };
        Vec w = phi.w_chart();
        if (m == 0) continue;
        fd_h = fd_wirtinger(wfunc, w, m, false);
        fd_a = fd_wirtinger(wfunc, w, m, true);
      } else {
        fd_h = fd_wirtinger(func, z, m, false);
        fd_a = fd_wirtinger(func, z, m, true);
      }
      REQUIRE(std::abs(e.grad_holo(m) - fd_h) < 1e-6);
      REQUIRE(std::abs(e.grad_anti(m) - fd_a) < 1e-6);
    }
  };
  check(Picture::hilbert);
  check(Picture::homogeneous);
  check(Picture::affine);
}

TEST_CASE("eval_f values and projective invariance") {
  FockSpace space(1, 4, 1.0);
  CoordinateOperators ops = coordinate_operators(space);
  StateVector phi = superposition01(space);

  REQUIRE(std::abs(eval_f(Operator::identity(space), phi).value - 1.0) < 1e-14);
  // <phi| alpha |phi> / <phi|phi> = sqrt(2 hbar) / 2 on (|0> + |1>)
  REQUIRE(std::abs(eval_f(ops.alpha[0], phi).value - std::sqrt(2.0) / 2.0) < 1e-14);

  std::mt19937_64 rng(3);
  Operator beta = random_operator(space, rng);
  StateVector scaled = phi.scaled(Complex(3.0, -4.0));
  REQUIRE(std::abs(eval_f(beta, phi).value - eval_f(beta, scaled).value) < 1e-12);
  REQUIRE(std::abs(eval_f(beta, phi, Picture::affine).value -
                   eval_f(beta, scaled, Picture::affine).value) < 1e-12);
}

TEST_CASE("Kahler product reproduces the operator product") {
  FockSpace space(1, 6, 1.0);
  CoordinateOperators ops = coordinate_operators(space);
  StateVector ground = StateVector::basis(space, 0);

  Complex prod = kahler_product(ops.alpha[0], ops.alpha_bar[0], ground,
                                Picture::homogeneous);
  REQUIRE(std::abs(prod - 2.0 * space.hbar()) < 1e-13);

  std::mt19937_64 rng(5);
  for (int k = 0; k < 40; ++k) {
    Operator beta = random_operator(space, rng);
    Operator gamma = random_operator(space, rng);
    StateVector phi = random_state(space, rng, space.cutoff() - 2);
    for (Picture pic : {Picture::hilbert, Picture::homogeneous, Picture::affine}) {
      Complex lhs = kahler_product(beta, gamma, phi, pic);
      Complex rhs = eval(beta * gamma, phi, pic).value;
      REQUIRE(std::abs(lhs - rhs) <= 1e-10 * tolerance_scale(beta, gamma, rhs));
    }
    // identity is the unit of the product
    Complex unit = kahler_product(Operator::identity(space), beta, phi,
                                  Picture::homogeneous);
    REQUIRE(std::abs(unit - eval_f(beta, phi).value) < 1e-12);
  }
}

TEST_CASE("affine chart errors at z0 = 0") {
  FockSpace space(1, 4);
  StateVector no_chart = StateVector::basis(space, 2);
  std::mt19937_64 rng(1);
  Operator beta = random_operator(space, rng);
  REQUIRE_THROWS_AS(eval_f(beta, no_chart, Picture::affine), ChartError);
  REQUIRE_THROWS_AS(
      kahler_product(beta, beta, no_chart, Picture::affine), ChartError);
}

TEST_CASE("brackets: canonical values and dual routes") {
  FockSpace space(1, 8, 0.5);
  CoordinateOperators ops = coordinate_operators(space);
  std::mt19937_64 rng(17);

  SECTION("poisson of x and p is 1 at any faithful state") {
    for (int k = 0; k < 10; ++k) {
      StateVector phi = random_state(space, rng, space.cutoff() - 2);
      BracketValue b =
          bracket(ops.x[0], ops.p[0], phi, BracketKind::poisson, Picture::homogeneous);
      REQUIRE(std::abs(b.value - 1.0) < 1e-12);
      REQUIRE(b.residual < 1e-12);
    }
  }

  SECTION("poisson of N and alpha is -(1/i hbar) f_alpha") {
    StateVector phi = random_state(space, rng, space.cutoff() - 2);
    BracketValue b = bracket(ops.number[0], ops.alpha[0], phi, BracketKind::poisson,
                             Picture::homogeneous);
    Complex want = -eval_f(ops.alpha[0], phi).value / (kImag * space.hbar());
    REQUIRE(std::abs(b.value - want) < 1e-12);
  }

  SECTION("riemann bracket of beta with itself is (2/hbar) variance") {
    Operator beta = random_hermitian(space, rng);
    StateVector phi = random_state(space, rng);
    BracketValue b = bracket(beta, beta, phi, BracketKind::riemann, Picture::homogeneous);
    double var = std::real(eval_f(beta * beta, phi).value) -
                 std::pow(std::real(eval_f(beta, phi).value), 2);
    REQUIRE(std::abs(b.value - 2.0 / space.hbar() * var) <
            1e-11 * tolerance_scale(beta, beta));
    REQUIRE(b.residual < 1e-12);
  }

  SECTION("hilbert-picture riemann matches the anticommutator form") {
    Operator beta = random_hermitian(space, rng);
    Operator gamma = random_hermitian(space, rng);
    StateVector phi = random_state(space, rng);
    BracketValue b = bracket(beta, gamma, phi, BracketKind::riemann, Picture::hilbert);
    Complex want = eval_H(anticommutator(beta, gamma), phi).value / space.hbar();
    REQUIRE(std::abs(b.value - want) < 1e-11 * tolerance_scale(beta, gamma, want));
    REQUIRE(b.residual < 1e-10);
  }

  SECTION("splitting and reality") {
    for (int k = 0; k < 20; ++k) {
      Operator beta = random_hermitian(space, rng);
      Operator gamma = random_hermitian(space, rng);
      StateVector phi = random_state(space, rng, space.cutoff() - 2);
      double scale = tolerance_scale(beta, gamma);
      for (Picture pic : {Picture::hilbert, Picture::homogeneous}) {
        Complex kp = kahler_product(beta, gamma, phi, pic);
        Complex split = bracket(beta, gamma, phi, BracketKind::jordan, pic).value +
                        0.5 * kImag * space.hbar() *
                            bracket(beta, gamma, phi, BracketKind::poisson, pic).value;
        REQUIRE(std::abs(kp - split) < 1e-12 * scale);
        REQUIRE(std::abs(std::imag(
                    bracket(beta, gamma, phi, BracketKind::poisson, pic).value)) <
                1e-12 * scale);
      }
    }
  }
}

TEST_CASE("H and f are related by |z|^2 / 2 hbar") {
  FockSpace space(2, 3, 2.0);
  std::mt19937_64 rng(23);
  for (int k = 0; k < 10; ++k) {
    Operator beta = random_operator(space, rng);
    StateVector phi = random_state(space, rng);
    Complex h = eval_H(beta, phi).value;
    Complex f = eval_f(beta, phi).value;
    REQUIRE(std::abs(h - phi.norm2() / (2.0 * space.hbar()) * f) <
            1e-12 * std::max(1.0, std::abs(h)));
  }
}

TEST_CASE("covariance and the strengthened uncertainty inequality") {
  FockSpace space(1, 8, 1.0);
  CoordinateOperators ops = coordinate_operators(space);
  std::mt19937_64 rng(29);

  SECTION("self-covariance is the variance") {
    Operator beta = random_hermitian(space, rng);
    StateVector phi = random_state(space, rng);
    CovarianceReport r = covariance_and_uncertainty(beta, beta, phi);
    REQUIRE(std::abs(r.cov - r.delta_beta * r.delta_beta) <
            1e-10 * std::max(1.0, r.cov));
  }

  SECTION("ground state saturates x-p at hbar/2") {
    StateVector ground = StateVector::basis(space, 0);
    CovarianceReport r = covariance_and_uncertainty(ops.x[0], ops.p[0], ground);
    REQUIRE(std::abs(r.delta_beta * r.delta_gamma - 0.5 * space.hbar()) < 1e-12);
    REQUIRE(std::abs(r.lhs - r.rhs) < 1e-12);
  }

  SECTION("random Hermitian pairs satisfy the bound") {
    for (int k = 0; k < 200; ++k) {
      Operator beta = random_hermitian(space, rng);
      Operator gamma = random_hermitian(space, rng);
      StateVector phi = random_state(space, rng);
      CovarianceReport r = covariance_and_uncertainty(beta, gamma, phi);
      REQUIRE(r.lhs >= r.rhs - 1e-10 * std::max(1.0, r.lhs));
    }
  }

  SECTION("non-Hermitian input is rejected") {
    std::mt19937_64 rng2(31);
    Operator bad = random_operator(space, rng2);
    StateVector phi = random_state(space, rng2);
    REQUIRE_THROWS_AS(covariance_and_uncertainty(bad, ops.x[0], phi), HermiticityError);
  }
}
