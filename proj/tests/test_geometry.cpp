#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace qgeom;
using testsupport::fd_wirtinger;
using testsupport::max_abs;

TEST_CASE("homogeneous metric annihilates the vertical directions") {
  FockSpace space(1, 6, 1.0);
  std::mt19937_64 rng(41);
  StateVector phi = random_state(space, rng);
  const Vec& z = phi.z();

  Tensor2 cov = metric(Picture::homogeneous, phi, Variance::covariant);
  REQUIRE(cov.degenerate);
  REQUIRE(max_abs(Vec(cov.block.transpose() * z)) < 1e-14);
  REQUIRE(max_abs(Vec(cov.block * z.conjugate())) < 1e-14);

  // the inverse annihilates the vertical covectors, whose antiholomorphic
  // components are proportional to z
  Tensor2 con = metric(Picture::homogeneous, phi, Variance::contravariant);
  REQUIRE(max_abs(Vec(con.block * z)) < 1e-12);
  REQUIRE(max_abs(Vec(con.block.transpose() * z.conjugate())) < 1e-12);

  SECTION("at the ground state on the sphere the pattern is diag(0, 1/2, ...)") {
    StateVector ground = StateVector::basis(space, 0).on_sphere();
    Mat g = metric(Picture::homogeneous, ground, Variance::covariant).block;
    for (int m = 0; m < space.dim(); ++m)
      REQUIRE(std::abs(g(m, m) - (m == 0 ? 0.0 : 0.5)) < 1e-14);
    REQUIRE(max_abs(Mat(g - g.diagonal().asDiagonal().toDenseMatrix())) < 1e-14);
  }
}

TEST_CASE("affine metric inverts against a matrix-inverse oracle") {
  FockSpace space(1, 4, 1.3);
  std::mt19937_64 rng(43);
  StateVector phi = random_state(space, rng);
  Mat cov = metric(Picture::affine, phi, Variance::covariant).block;
  Mat con = metric(Picture::affine, phi, Variance::contravariant).block;
  const int n = space.dim() - 1;
  Mat cov_chart = cov.block(1, 1, n, n);
  Mat con_chart = con.block(1, 1, n, n);
  // g_{m lbar} g^{lbar n} = delta, i.e. the conjugate of the stored inverse
  // block is the matrix inverse of the covariant block
  REQUIRE(max_abs(Mat(cov_chart.inverse().conjugate() - con_chart)) <
          1e-10 * con_chart.cwiseAbs().maxCoeff());
}

TEST_CASE("symplectic partner is i times the metric") {
  FockSpace space(1, 4);
  std::mt19937_64 rng(47);
  StateVector phi = random_state(space, rng);
  Tensor2 g = metric(Picture::homogeneous, phi, Variance::covariant);
  REQUIRE(max_abs(Mat(g.symplectic_partner().block - kImag * g.block)) == 0.0);
  Tensor2 gi = metric(Picture::homogeneous, phi, Variance::contravariant);
  REQUIRE(max_abs(Mat(gi.symplectic_partner().block + kImag * gi.block)) == 0.0);
  Tensor2 mixed = metric(Picture::homogeneous, phi, Variance::mixed);
  REQUIRE_THROWS_AS(mixed.symplectic_partner(), ParameterError);
}

TEST_CASE("Fubini-Study distance") {
  const double hbar = 0.9;
  FockSpace space(1, 5, hbar);
  StateVector zero = StateVector::basis(space, 0);
  StateVector one = StateVector::basis(space, 1);

  REQUIRE(std::abs(fs_distance(zero, one) - M_PI * std::sqrt(hbar / 2.0)) < 1e-12);
  REQUIRE(fs_distance(zero, zero.scaled(Complex(-2.0, 1.0))) < 1e-12);

  Vec z = Vec::Zero(space.dim());
  z(0) = 1.0 / std::sqrt(2.0);
  z(1) = 1.0 / std::sqrt(2.0);
  StateVector plus(space, z);
  REQUIRE(std::abs(fs_distance(zero, plus) -
                   std::sqrt(2.0 * hbar) * std::acos(1.0 / std::sqrt(2.0))) < 1e-12);

  SECTION("triangle inequality on random triples") {
    std::mt19937_64 rng(53);
    for (int k = 0; k < 300; ++k) {
      StateVector a = random_state(space, rng);
      StateVector b = random_state(space, rng);
      StateVector c = random_state(space, rng);
      REQUIRE(fs_distance(a, c) <= fs_distance(a, b) + fs_distance(b, c) + 1e-12);
    }
  }
}

TEST_CASE("Killing reduction of the conformal tensors") {
  FockSpace space(2, 3, 0.7);
  std::mt19937_64 rng(59);
  StateVector phi = random_state(space, rng);

  for (Variance v : {Variance::covariant, Variance::contravariant, Variance::mixed}) {
    Tensor2 reduced = killing_reduce(metric(Picture::conformal, phi, v), phi);
    Tensor2 want = metric(Picture::homogeneous, phi, v);
    REQUIRE(max_abs(Mat(reduced.block - want.block)) < 1e-12);
    REQUIRE(reduced.picture == Picture::homogeneous);
  }

  SECTION("projector idempotence") {
    Mat p = killing_reduce(metric(Picture::conformal, phi, Variance::mixed), phi).block;
    REQUIRE(max_abs(Mat(p * p - p)) < 1e-13);
  }

  SECTION("only conformal input is accepted") {
    Tensor2 wrong = metric(Picture::hilbert, phi, Variance::covariant);
    REQUIRE_THROWS_AS(killing_reduce(wrong, phi), ParameterError);
  }
}

TEST_CASE("Christoffel symbols") {
  FockSpace space(1, 4, 1.0);
  std::mt19937_64 rng(61);
  StateVector phi = random_state(space, rng);
  const Vec& z = phi.z();
  const double s = phi.norm2();
  Christoffel gamma = christoffel(phi);

  SECTION("contraction with the coordinates collapses to -z^l") {
    for (int l = 0; l < space.dim(); ++l) {
      Complex acc = 0.0;
      for (int m = 0; m < space.dim(); ++m)
        for (int n = 0; n < space.dim(); ++n)
          acc += gamma.holo_holo[l](m, n) * z(m) * z(n);
      REQUIRE(std::abs(acc + z(l)) < 1e-13 * std::max(1.0, std::abs(z(l))));
    }
  }

  SECTION("finite-difference Levi-Civita reconstruction") {
    auto g_entry = [&](const Vec& at, int m, int n) {
      StateVector st(space, at);
      return metric(Picture::conformal, st, Variance::covariant).block(m, n);
    };
    for (int l = 0; l < space.dim(); ++l)
      for (int m = 0; m < space.dim(); ++m)
        for (int n = 0; n < space.dim(); ++n) {
          auto entry_nl = [&](const Vec& at) { return g_entry(at, n, l); };
          auto entry_ml = [&](const Vec& at) { return g_entry(at, m, l); };
          auto entry_mn = [&](const Vec& at) { return g_entry(at, m, n); };
          Complex hh = s / (2.0 * space.hbar()) *
                       (fd_wirtinger(entry_nl, z, m, false) +
                        fd_wirtinger(entry_ml, z, n, false));
          REQUIRE(std::abs(hh - gamma.holo_holo[l](m, n)) < 1e-6);
          Complex ha = s / (2.0 * space.hbar()) *
                       (fd_wirtinger(entry_ml, z, n, true) -
                        fd_wirtinger(entry_mn, z, l, true));
          REQUIRE(std::abs(ha - gamma.holo_anti[l](m, n)) < 1e-6);
          // mixed-lower-index symmetry
          REQUIRE(std::abs(gamma.anti_holo[l](m, n) - gamma.holo_anti[l](n, m)) == 0.0);
        }
  }
}

TEST_CASE("Christoffel regression table at |0> + |1> on the sphere") {
  FockSpace space(1, 3, 1.0);
  Vec z = Vec::Zero(space.dim());
  z(0) = 1.0;
  z(1) = 1.0;
  StateVector phi(space, z);  // |z|^2 = 2 = 2 hbar
  Christoffel g = christoffel(phi);

  REQUIRE(std::abs(g.holo_holo[0](0, 0) - Complex(-0.5)) < 1e-15);
  REQUIRE(std::abs(g.holo_holo[0](0, 1) - Complex(-0.25)) < 1e-15);
  REQUIRE(std::abs(g.holo_holo[0](1, 1) - Complex(0.0)) < 1e-15);
  REQUIRE(std::abs(g.holo_holo[1](0, 1) - Complex(-0.25)) < 1e-15);
  REQUIRE(std::abs(g.holo_holo[1](1, 1) - Complex(-0.5)) < 1e-15);
  REQUIRE(std::abs(g.holo_holo[2](2, 0) - Complex(-0.25)) < 1e-15);
  REQUIRE(std::abs(g.holo_anti[0](0, 0) - Complex(0.0)) < 1e-15);
  REQUIRE(std::abs(g.holo_anti[0](0, 1) - Complex(-0.25)) < 1e-15);
  REQUIRE(std::abs(g.holo_anti[0](1, 1) - Complex(0.25)) < 1e-15);
  REQUIRE(std::abs(g.holo_anti[1](1, 0) - Complex(-0.25)) < 1e-15);
  REQUIRE(std::abs(g.holo_anti[2](2, 1) - Complex(-0.25)) < 1e-15);
}

TEST_CASE("covariant-derivative identity") {
  FockSpace space(1, 5, 1.0);
  CoordinateOperators ops = coordinate_operators(space);

  SECTION("constant generator gives zero on both sides") {
    std::mt19937_64 rng(67);
    StateVector phi = random_state(space, rng);
    CovariantDerivativeReport r =
        covariant_derivative_check(Operator::identity(space), phi);
    REQUIRE(max_abs(r.lhs) < 1e-14);
    REQUIRE(max_abs(r.rhs) < 1e-14);
  }

  SECTION("alpha generator against the finite-difference route") {
    Vec z = Vec::Zero(space.dim());
    z(0) = 1.0;
    z(1) = 1.0;
    StateVector phi(space, z);
    CovariantDerivativeReport r = covariant_derivative_check(ops.alpha[0], phi);
    REQUIRE(r.identity_residual < 1e-12);

    Mat proj = metric(Picture::homogeneous, phi, Variance::mixed).block;
    Mat fd_deriv(space.dim(), space.dim());
    for (int l = 0; l < space.dim(); ++l)
      for (int o = 0; o < space.dim(); ++o) {
        auto comp = [&](const Vec& at) {
          StateVector st(space, at);
          return Complex(-kImag * eval_f(ops.alpha[0], st).grad_anti(o));
        };
        fd_deriv(l, o) = fd_wirtinger(comp, z, l, false);
      }
    Mat projected = proj * fd_deriv * proj.adjoint();
    REQUIRE(max_abs(Mat(projected - r.rhs)) < 1e-6);
  }

  SECTION("horizontality and block structure for random Hermitian generators") {
    std::mt19937_64 rng(71);
    for (int k = 0; k < 10; ++k) {
      Operator beta = random_hermitian(space, rng);
      StateVector phi = random_state(space, rng);
      CovariantDerivativeReport r = covariant_derivative_check(beta, phi);
      REQUIRE(r.identity_residual < 1e-12);
      REQUIRE(r.antisymmetry_residual < 1e-12);
      REQUIRE(r.holo_block_residual < 1e-12);
      REQUIRE(r.horizontal_z < 1e-12);
      REQUIRE(r.horizontal_tau < 1e-12);
      REQUIRE(r.horizontal_theta < 1e-12);
    }
  }
}

TEST_CASE("line-element forms agree for small displacements") {
  FockSpace space(1, 5, 1.0);
  std::mt19937_64 rng(73);
  for (int k = 0; k < 20; ++k) {
    StateVector phi = random_state(space, rng);
    Vec dz = 1e-5 * phi.radius() * random_displacement(space, rng);
    const Vec& z = phi.z();
    double s = phi.norm2();
    Complex dphi_phi = (dz.adjoint() * z)(0);
    double braket =
        2.0 * space.hbar() * (dz.squaredNorm() / s - std::norm(dphi_phi) / (s * s));
    Mat g = metric(Picture::homogeneous, phi, Variance::covariant).block;
    double coord = std::real(2.0 * (dz.transpose() * g * dz.conjugate())(0));
    REQUIRE(std::abs(braket - coord) < 1e-8 * braket);
  }
}

TEST_CASE("sphere decomposition of the flat metric") {
  FockSpace space(1, 5, 0.6);
  std::mt19937_64 rng(79);
  for (int k = 0; k < 20; ++k) {
    StateVector phi = random_state(space, rng);
    const Vec& z = phi.z();
    double s = phi.norm2();
    Vec v = random_displacement(space, rng);
    v -= z * ((z.adjoint() * v)(0) / s);  // remove both fiber directions
    Mat g = metric(Picture::homogeneous, phi, Variance::covariant).block;
    double reduced = std::real(2.0 * (v.transpose() * g * v.conjugate())(0));
    double expected = 2.0 * space.hbar() / s * v.squaredNorm();
    REQUIRE(std::abs(reduced - expected) < 1e-12 * std::max(1.0, expected));
  }
}
