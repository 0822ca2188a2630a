#pragma once

#include <functional>

#include "qgeom/fields.hpp"

namespace qgeom {

// Pull-back Jacobian of the coordinate map onto the noncommutative
// coordinates.  J is (2 dim) x (2d): rows are [n] then [nbar], columns are
// alpha^1..alpha^d then alphabar^1..alphabar^d, entries the gradients of the
// coordinate functions.  Jinv rows are the pull-backs of the coordinate
// vector fields, (-1/2i) X_alphabar^j and (1/2i) X_alpha^j; it is a left
// inverse only -- row-by-column sums against J give delta (reduced pictures)
// or (|z|^2/2 hbar) delta (hilbert picture), never the other composition.
struct Jacobian {
  Mat j;     // (2 dim) x (2d)
  Mat jinv;  // (2d) x (2 dim)
  Picture picture;
  StateVector base;

  Mat left_product() const { return jinv * j; }
};

inline Jacobian jacobian(const StateVector& phi, Picture picture) {
  const FockSpace& s = phi.space();
  const int dim = s.dim();
  const int d = s.modes();
  CoordinateOperators ops = coordinate_operators(s);
  Mat j = Mat::Zero(2 * dim, 2 * d);
  Mat jinv = Mat::Zero(2 * d, 2 * dim);
  for (int i = 0; i < d; ++i) {
    KahlerEval ea = eval(ops.alpha[i], phi, picture);
    KahlerEval eab = eval(ops.alpha_bar[i], phi, picture);
    j.block(0, i, dim, 1) = ea.grad_holo;
    j.block(dim, i, dim, 1) = ea.grad_anti;
    j.block(0, d + i, dim, 1) = eab.grad_holo;
    j.block(dim, d + i, dim, 1) = eab.grad_anti;

    TangentData xa = hamiltonian_field(ops.alpha[i], phi, picture, TangentKind::vector);
    TangentData xab = hamiltonian_field(ops.alpha_bar[i], phi, picture, TangentKind::vector);
    const Complex half_i = kImag / 2.0;  // -1/(2i)
    jinv.block(i, 0, 1, dim) = half_i * xab.comp_holo.transpose();
    jinv.block(i, dim, 1, dim) = half_i * xab.comp_anti.transpose();
    jinv.block(d + i, 0, 1, dim) = -half_i * xa.comp_holo.transpose();
    jinv.block(d + i, dim, 1, dim) = -half_i * xa.comp_anti.transpose();
  }
  return Jacobian{std::move(j), std::move(jinv), picture, phi};
}

namespace detail {

// Doubled-index bilinear form of a Hermitian (holo, anti) block:
// covariant [[0, F],[F^T, 0]] with F = i g for the symplectic form,
// F = g for the metric; contravariant analogously.
inline Mat doubled_form(const Mat& f) {
  Mat w = Mat::Zero(2 * f.rows(), 2 * f.cols());
  w.block(0, f.rows(), f.rows(), f.cols()) = f;
  w.block(f.rows(), 0, f.rows(), f.cols()) = f.transpose();
  return w;
}

inline Mat doubled_symplectic_cov(const Mat& g_cov) {
  Mat w = Mat::Zero(2 * g_cov.rows(), 2 * g_cov.cols());
  w.block(0, g_cov.rows(), g_cov.rows(), g_cov.cols()) = kImag * g_cov;
  w.block(g_cov.rows(), 0, g_cov.rows(), g_cov.cols()) = -kImag * g_cov.transpose();
  return w;
}

inline Mat doubled_symplectic_contra(const Mat& g_con) {
  Mat w = Mat::Zero(2 * g_con.rows(), 2 * g_con.cols());
  w.block(0, g_con.rows(), g_con.rows(), g_con.cols()) = -kImag * g_con;
  w.block(g_con.rows(), 0, g_con.rows(), g_con.cols()) = kImag * g_con.transpose();
  return w;
}

}  // namespace detail

// Pull-backs of the noncommutative symplectic tensor through the Jacobian
// sandwiches.  Expected: cov_holo_holo = 0, cov_holo_anti = (i/2) delta,
// contra_holo_holo = 0, contra_anti_holo = 2i delta.
struct OmegaPullbackReport {
  Mat cov_holo_holo;    // Jinv sandwich, (i, j) rows
  Mat cov_holo_anti;    // Jinv sandwich, (i, jbar)
  Mat contra_holo_holo; // J sandwich, (j, i)
  Mat contra_anti_holo; // J sandwich, (jbar, i)
};

inline OmegaPullbackReport omega_pullback(const StateVector& phi, Picture picture) {
  const int d = phi.space().modes();
  Jacobian jac = jacobian(phi, picture);
  Mat g_cov = metric(picture, phi, Variance::covariant).block;
  Mat g_con = metric(picture, phi, Variance::contravariant).block;
  Mat cov = jac.jinv * detail::doubled_symplectic_cov(g_cov) * jac.jinv.transpose();
  Mat con = jac.j.transpose() * detail::doubled_symplectic_contra(g_con) * jac.j;
  return OmegaPullbackReport{cov.block(0, 0, d, d), cov.block(0, d, d, d),
                             con.block(0, 0, d, d), con.block(d, 0, d, d)};
}

// Coordinate 1-form / Hamiltonian-field pairing table.  In the reduced
// pictures <df_alpha^i, X_alphabar^j> = -2i delta and the alpha-alpha block
// vanishes; through the hilbert-picture map the pairing is
// (-i |z|^2 / hbar) delta, which returns to -2i delta on the sphere
// |z|^2 = 2 hbar.
struct PairingReport {
  Mat alpha_alpha;        // <dF_alpha^i, X_alpha^j>
  Mat alpha_alphabar;     // <dF_alpha^i, X_alphabar^j>
  Mat alphabar_alpha;
  Mat alphabar_alphabar;
  Mat hilbert_alpha_alphabar;
  Mat sphere_restricted;  // hilbert pairing at the state rescaled to the sphere
};

inline PairingReport pairing_pullback(const StateVector& phi) {
  const FockSpace& s = phi.space();
  const int d = s.modes();
  CoordinateOperators ops = coordinate_operators(s);
  auto table = [&](const StateVector& at, Picture pic, bool bar_row, bool bar_col) {
    Mat out(d, d);
    for (int i = 0; i < d; ++i) {
      const Operator& row = bar_row ? ops.alpha_bar[i] : ops.alpha[i];
      KahlerEval e = eval(row, at, pic);
      for (int jj = 0; jj < d; ++jj) {
        const Operator& col = bar_col ? ops.alpha_bar[jj] : ops.alpha[jj];
        TangentData vec = hamiltonian_field(col, at, pic, TangentKind::vector);
        out(i, jj) = (e.grad_holo.transpose() * vec.comp_holo)(0) +
                     (e.grad_anti.transpose() * vec.comp_anti)(0);
      }
    }
    return out;
  };
  StateVector sphere = phi.on_sphere();
  return PairingReport{
      table(phi, Picture::homogeneous, false, false),
      table(phi, Picture::homogeneous, false, true),
      table(phi, Picture::homogeneous, true, false),
      table(phi, Picture::homogeneous, true, true),
      table(phi, Picture::hilbert, false, true),
      table(sphere, Picture::hilbert, false, true)};
}

namespace detail {

// Central Wirtinger finite differences of a scalar function of the state,
// step 1e-5 max(1, |z|).
struct WirtingerGradient {
  Vec holo;
  Vec anti;
};

inline WirtingerGradient fd_state_gradient(
    const std::function<Complex(const StateVector&)>& func, const StateVector& phi) {
  const Vec& z = phi.z();
  const double h = 1e-5 * std::max(1.0, phi.radius());
  WirtingerGradient g{Vec(z.size()), Vec(z.size())};
  for (int m = 0; m < z.size(); ++m) {
    auto at = [&](Complex dz) {
      Vec zp = z;
      zp(m) += dz;
      return func(StateVector(phi.space(), std::move(zp)));
    };
    Complex dx = (at(h) - at(-h)) / (2.0 * h);
    Complex dy = (at(kImag * h) - at(-kImag * h)) / (2.0 * h);
    g.holo(m) = 0.5 * (dx - kImag * dy);
    g.anti(m) = 0.5 * (dx + kImag * dy);
  }
  return g;
}

}  // namespace detail

// The metric negative control: candidate pull-backs of a would-be metric on
// the noncommutative side, built from Riemann-bracket sandwiches of the
// coordinate functions, fail to compose to the identity.  The composition
// uses the Kahler product of the candidate functions (their gradients taken
// by central differences; the candidates are not generator functions, so no
// analytic gradient is available).
struct MetricPullbackReport {
  Mat cov_holo_holo;        // candidate G_ij      = -1/4 {f_abar^i, f_abar^j}_g
  Mat cov_holo_anti;        // candidate G_ijbar   =  1/4 {f_abar^i, f_a^j}_g
  Mat contra_holo_holo;     // candidate G^{ji}    = {f_a^j, f_a^i}_g
  Mat contra_anti_holo;     // candidate G^{jbar i} = {f_abar^j, f_a^i}_g
  Mat cov_holo_anti_sandwich;     // same block through Jinv g Jinv
  Mat contra_anti_holo_sandwich;  // same block through J g^{-1} J
  Mat composition;          // Kahler-product composition, would-be delta_i^k
  double deviation_from_delta;
  Mat hilbert_cov_holo_anti;  // H-function route for the same block
  double route_disagreement;
};

inline MetricPullbackReport metric_pullback_failure(const StateVector& phi) {
  const FockSpace& s = phi.space();
  const int d = s.modes();
  const double hbar = s.hbar();
  CoordinateOperators ops = coordinate_operators(s);

  auto riemann_g = [&ops](const StateVector& at, bool bar_a, int i, bool bar_b, int j) {
    const Operator& a = bar_a ? ops.alpha_bar[i] : ops.alpha[i];
    const Operator& b = bar_b ? ops.alpha_bar[j] : ops.alpha[j];
    return bracket(a, b, at, BracketKind::riemann, Picture::homogeneous).value;
  };
  auto riemann_hilbert = [&ops](const StateVector& at, bool bar_a, int i, bool bar_b,
                                int j) {
    const Operator& a = bar_a ? ops.alpha_bar[i] : ops.alpha[i];
    const Operator& b = bar_b ? ops.alpha_bar[j] : ops.alpha[j];
    return bracket(a, b, at, BracketKind::riemann, Picture::hilbert).value;
  };

  Mat cov_hh(d, d), cov_ha(d, d), con_hh(d, d), con_ah(d, d), hil_ha(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      cov_hh(i, j) = -0.25 * riemann_g(phi, true, i, true, j);
      cov_ha(i, j) = 0.25 * riemann_g(phi, true, i, false, j);
      con_hh(i, j) = riemann_g(phi, false, j, false, i);
      con_ah(i, j) = riemann_g(phi, true, j, false, i);
      hil_ha(i, j) = 0.25 * riemann_hilbert(phi, true, i, false, j);
    }

  // two-route check of the displayed sandwiches
  Jacobian jac = jacobian(phi, Picture::homogeneous);
  Mat g_cov = metric(Picture::homogeneous, phi, Variance::covariant).block;
  Mat g_con = metric(Picture::homogeneous, phi, Variance::contravariant).block;
  Mat cov_sand = jac.jinv * detail::doubled_form(g_cov) * jac.jinv.transpose();
  Mat con_sand = jac.j.transpose() * detail::doubled_form(g_con) * jac.j;
  Mat cov_ha_sand = cov_sand.block(0, d, d, d);
  Mat con_ah_sand = con_sand.block(d, 0, d, d);

  // Kahler product of two candidate functions at phi
  Mat ginv = inverse_metric_block(Picture::homogeneous, phi);
  auto star = [&](const std::function<Complex(const StateVector&)>& fa,
                  const std::function<Complex(const StateVector&)>& fb) {
    auto ga = detail::fd_state_gradient(fa, phi);
    auto gb = detail::fd_state_gradient(fb, phi);
    return fa(phi) * fb(phi) + hbar * (ga.holo.transpose() * ginv * gb.anti)(0);
  };

  Mat comp = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j) {
        auto a1 = [&, i, j](const StateVector& at) {
          return Complex(-0.25) * riemann_g(at, true, i, true, j);
        };
        auto b1 = [&, j, k](const StateVector& at) {
          return riemann_g(at, false, j, false, k);
        };
        auto a2 = [&, i, j](const StateVector& at) {
          return Complex(0.25) * riemann_g(at, true, i, false, j);
        };
        auto b2 = [&, j, k](const StateVector& at) {
          return riemann_g(at, true, j, false, k);
        };
        comp(i, k) += star(a1, b1) + star(a2, b2);
      }
  double deviation = (comp - Mat::Identity(d, d)).cwiseAbs().maxCoeff();
  double disagreement = (hil_ha - cov_ha).cwiseAbs().maxCoeff();

  return MetricPullbackReport{std::move(cov_hh), std::move(cov_ha),
                              std::move(con_hh), std::move(con_ah),
                              std::move(cov_ha_sand), std::move(con_ah_sand),
                              std::move(comp), deviation,
                              std::move(hil_ha), disagreement};
}

// Project a displacement onto the tangent of the sphere |z|^2 = const:
// removes the radial part so that <phi|dphi> + <dphi|phi> = 0.
inline Vec sphere_tangent_projection(const StateVector& phi, const Vec& dz) {
  const Vec& z = phi.z();
  Complex overlap = (z.adjoint() * dz)(0);
  return dz - z * (std::real(overlap) / phi.norm2());
}

// Directional 1-form evaluations: the H route against the bra-ket form
// H_{d beta}, and the f route against f_{d beta}.  On the sphere and for
// sphere-tangent displacements all four agree.
struct OneFormReport {
  Complex dH_route;
  Complex H_dbeta_route;
  Complex df_route;
  Complex f_dbeta_route;
};

inline OneFormReport one_form_consistency(const Operator& beta, const StateVector& phi,
                                          const Vec& dz) {
  require_same_space(beta.space(), phi.space(), "one_form_consistency");
  if (dz.size() != phi.z().size())
    throw SpaceMismatchError("one_form_consistency: displacement size");
  const Vec& z = phi.z();
  const double hbar = phi.space().hbar();
  const double s = phi.norm2();

  KahlerEval eh = eval_H(beta, phi);
  KahlerEval ef = eval_f(beta, phi);
  Complex dH = (eh.grad_holo.transpose() * dz)(0) +
               (eh.grad_anti.transpose() * dz.conjugate())(0);
  Complex df = (ef.grad_holo.transpose() * dz)(0) +
               (ef.grad_anti.transpose() * dz.conjugate())(0);

  Complex braket = (dz.adjoint() * beta.matrix() * z)(0) +
                   (z.adjoint() * beta.matrix() * dz)(0);
  Complex d_norm = (dz.adjoint() * z)(0) + (z.adjoint() * dz)(0);
  Complex H_dbeta = braket / (2.0 * hbar);
  Complex f_dbeta = braket / s - ef.value * d_norm / s;

  return OneFormReport{dH, H_dbeta, df, f_dbeta};
}

}  // namespace qgeom
