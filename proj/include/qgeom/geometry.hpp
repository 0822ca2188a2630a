#pragma once

#include <vector>

#include "qgeom/kahler.hpp"

namespace qgeom {

enum class Variance { covariant, contravariant, mixed };

// Rank-2 tensor evaluated at a point, stored as the (holomorphic,
// antiholomorphic) block: block(m, n) is g_{m nbar}, g^{m nbar} or the
// projector g^n_m depending on variance.  The homogeneous Fubini-Study tensor
// annihilates the vertical (scaling and phase) directions and carries the
// degenerate flag; it is never inverted, its contravariant partner is the
// Killing-reduced block.
struct Tensor2 {
  Mat block;
  Variance variance;
  Picture picture;
  bool degenerate = false;

  // Associated symplectic form: omega_{m nbar} = i g_{m nbar},
  // omega^{m nbar} = -i g^{m nbar}.
  Tensor2 symplectic_partner() const {
    if (variance == Variance::mixed)
      throw ParameterError("symplectic_partner: mixed-variance tensor has none");
    Complex factor = variance == Variance::covariant ? kImag : -kImag;
    return Tensor2{factor * block, variance, picture, degenerate};
  }
};

inline Tensor2 metric(Picture picture, const StateVector& phi, Variance variance) {
  const int dim = phi.space().dim();
  const double hbar = phi.space().hbar();
  const Mat id = Mat::Identity(dim, dim);
  if (variance == Variance::contravariant)
    return Tensor2{inverse_metric_block(picture, phi), variance, picture,
                   picture == Picture::homogeneous};
  switch (picture) {
    case Picture::hilbert:
      return Tensor2{variance == Variance::mixed ? id : Mat(0.5 * id), variance,
                     picture, false};
    case Picture::conformal:
      return Tensor2{variance == Variance::mixed ? id : Mat((hbar / phi.norm2()) * id),
                     variance, picture, false};
    case Picture::homogeneous: {
      const Vec& z = phi.z();
      const double s = phi.norm2();
      Mat proj = id - z.conjugate() * z.transpose() / s;  // delta - zbar_m z^n / |z|^2
      if (variance == Variance::mixed) return Tensor2{proj, variance, picture, true};
      return Tensor2{(hbar / s) * proj, variance, picture, true};
    }
    case Picture::affine: {
      Vec w = phi.w_chart();
      const double s = w.squaredNorm();
      Mat block = variance == Variance::mixed
                      ? id
                      : Mat((hbar / s) * (id - w.conjugate() * w.transpose() / s));
      block.row(0).setZero();
      block.col(0).setZero();
      return Tensor2{block, variance, picture, false};
    }
  }
  throw ParameterError("metric: unknown picture");
}

// Geodesic (Fubini-Study) distance between rays,
//   s = sqrt(2 hbar) arccos sqrt(|<phi|psi>|^2 / (<phi|phi><psi|psi>)),
// maximal at pi sqrt(hbar/2) for orthogonal vectors.
inline double fs_distance(const StateVector& phi, const StateVector& psi) {
  require_same_space(phi.space(), psi.space(), "fs_distance");
  double overlap = std::norm(inner(phi, psi)) / (phi.norm2() * psi.norm2());
  overlap = std::clamp(overlap, 0.0, 1.0);
  return std::sqrt(2.0 * phi.space().hbar()) * std::acos(std::sqrt(overlap));
}

namespace detail {

// Components of the Killing fields of the conformal metric on the punctured
// space: the log-radial field (z^m, zbar^m) and the phase field
// (i z^m, -i zbar^m), in the requested variance (lowered with the conformal
// metric hbar/|z|^2 delta).
struct KillingField {
  Vec holo;
  Vec anti;
};

inline KillingField killing_field_components(const StateVector& phi, bool phase,
                                             bool covariant) {
  const Vec& z = phi.z();
  Vec holo = phase ? Vec(kImag * z) : z;
  Vec anti = phase ? Vec(-kImag * z.conjugate()) : Vec(z.conjugate());
  if (covariant) {
    double c = phi.space().hbar() / phi.norm2();
    // lowering swaps the holomorphic/antiholomorphic slots
    Vec low_holo = c * anti;
    Vec low_anti = c * holo;
    return KillingField{std::move(low_holo), std::move(low_anti)};
  }
  return KillingField{std::move(holo), std::move(anti)};
}

}  // namespace detail

// Killing reduction of a conformal-picture tensor to the ray space: subtracts
// the normalized projections onto the log-radial and phase Killing directions.
// Accepts the conformal metric, its inverse, or the mixed identity; the
// respective outputs are the closed-form homogeneous metric, inverse, and
// projector.
inline Tensor2 killing_reduce(const Tensor2& t, const StateVector& phi) {
  if (t.picture != Picture::conformal)
    throw ParameterError("killing_reduce: expects a conformal-picture tensor");
  Mat out = t.block;
  for (bool phase : {false, true}) {
    auto vec = detail::killing_field_components(phi, phase, false);
    auto cov = detail::killing_field_components(phi, phase, true);
    // 2 k_l k^l, the same normalization for both fields (= 2 hbar)
    Complex norm = 2.0 * (cov.holo.transpose() * vec.holo)(0);
    switch (t.variance) {
      case Variance::covariant:
        out -= (cov.holo * cov.anti.transpose()) / norm;
        break;
      case Variance::contravariant:
        out -= (vec.holo * vec.anti.transpose()) / norm;
        break;
      case Variance::mixed:
        out -= (cov.holo * vec.holo.transpose()) / norm;
        break;
    }
  }
  return Tensor2{std::move(out), t.variance, Picture::homogeneous, true};
}

// Christoffel symbols of the conformal metric on the punctured space, all
// holomorphic-upper blocks; the barred-upper blocks are complex conjugates.
//   holo_holo[l](m,n) = Gamma^l_{m n},  holo_anti[l](m,n) = Gamma^l_{m nbar},
//   anti_holo[l](m,n) = Gamma^l_{mbar n}.
struct Christoffel {
  std::vector<Mat> holo_holo;
  std::vector<Mat> holo_anti;
  std::vector<Mat> anti_holo;
};

inline Christoffel christoffel(const StateVector& phi) {
  const int dim = phi.space().dim();
  const Vec& z = phi.z();
  const double s = phi.norm2();
  Christoffel g;
  g.holo_holo.reserve(dim);
  g.holo_anti.reserve(dim);
  g.anti_holo.reserve(dim);
  for (int l = 0; l < dim; ++l) {
    Mat hh = Mat::Zero(dim, dim), ha = Mat::Zero(dim, dim), ah = Mat::Zero(dim, dim);
    for (int m = 0; m < dim; ++m)
      for (int n = 0; n < dim; ++n) {
        Complex zbar_m = std::conj(z(m)), zbar_n = std::conj(z(n));
        hh(m, n) = -((l == m ? zbar_n : 0.0) + (l == n ? zbar_m : 0.0)) / (2.0 * s);
        ha(m, n) = -((l == m ? z(n) : 0.0) - (m == n ? z(l) : 0.0)) / (2.0 * s);
        ah(m, n) = -((l == n ? z(m) : 0.0) - (m == n ? z(l) : 0.0)) / (2.0 * s);
      }
    g.holo_holo.push_back(std::move(hh));
    g.holo_anti.push_back(std::move(ha));
    g.anti_holo.push_back(std::move(ah));
  }
  return g;
}

// Mixed second derivatives d_m d_nbar f_beta as a matrix over (m, n).
inline Mat f_hessian_mixed(const Operator& beta, const StateVector& phi) {
  const Vec& z = phi.z();
  const double s = phi.norm2();
  KahlerEval e = eval_f(beta, phi);
  Vec bz = beta.matrix() * z;                      // (beta z)_n
  Vec zb = beta.matrix().transpose() * z.conjugate();  // (zbar beta)_m
  Mat h = beta.matrix().transpose() / s;
  h -= z.conjugate() * bz.transpose() / (s * s);
  h -= zb * z.transpose() / (s * s);
  h += 2.0 * e.value / (s * s) * (z.conjugate() * z.transpose());
  h -= e.value / s * Mat::Identity(z.size(), z.size());
  return h;
}

// The covariant-derivative identity on the reduced space: the projected
// derivative of the Hamiltonian covector equals -i d_m d_nbar f_beta, the
// purely holomorphic blocks vanish, and the covector itself is horizontal.
struct CovariantDerivativeReport {
  Mat lhs;  // projected derivative of the antiholomorphic covector block
  Mat rhs;  // -i d_m d_nbar f_beta
  double identity_residual;
  double antisymmetry_residual;
  double holo_block_residual;  // projected nabla_m X_n, expected zero
  double horizontal_z;         // z^n zeta_n
  double horizontal_tau;       // full log-radial pairing
  double horizontal_theta;     // full phase pairing
};

inline CovariantDerivativeReport covariant_derivative_check(const Operator& beta,
                                                            const StateVector& phi) {
  require_same_space(beta.space(), phi.space(), "covariant_derivative_check");
  const Vec& z = phi.z();
  const double s = phi.norm2();
  KahlerEval e = eval_f(beta, phi);
  Mat proj = metric(Picture::homogeneous, phi, Variance::mixed).block;

  Mat hess = f_hessian_mixed(beta, phi);
  Mat rhs = -kImag * hess;
  Mat lhs = proj * rhs * proj.adjoint();
  double identity_residual = (lhs - rhs).cwiseAbs().maxCoeff();

  // nabla_nbar X_m from the holomorphic covector block, projected on the
  // conjugate side; antisymmetric against nabla_m X_nbar
  Mat d2(z.size(), z.size());  // (o, m) = d_obar (i d_m f)
  for (int o = 0; o < z.size(); ++o)
    for (int m = 0; m < z.size(); ++m) d2(o, m) = kImag * hess(m, o);
  Mat mirrored = proj.conjugate() * d2 * proj.transpose();  // (nbar, m)
  double antisym = (lhs + mirrored.transpose()).cwiseAbs().maxCoeff();

  // holomorphic block: nabla_l X_o = d_l X_o - Gamma^s_{lo} X_s, projected
  Mat dd_holo = Mat::Zero(z.size(), z.size());  // d_l d_o f
  for (int l = 0; l < z.size(); ++l)
    for (int o = 0; o < z.size(); ++o)
      dd_holo(l, o) = -(std::conj(z(l)) * e.grad_holo(o) +
                        std::conj(z(o)) * e.grad_holo(l)) / s;
  Mat nabla_holo = kImag * dd_holo;
  for (int l = 0; l < z.size(); ++l)
    for (int o = 0; o < z.size(); ++o)
      nabla_holo(l, o) += kImag / (2.0 * s) *
                          (std::conj(z(o)) * e.grad_holo(l) +
                           std::conj(z(l)) * e.grad_holo(o));
  double holo_res = (proj * nabla_holo * proj.transpose()).cwiseAbs().maxCoeff();

  Vec cov_holo = kImag * e.grad_holo;
  Vec cov_anti = -kImag * e.grad_anti;
  Complex hz = (z.transpose() * cov_holo)(0);
  Complex hz_bar = (z.conjugate().transpose() * cov_anti)(0);
  Complex htau = hz + hz_bar;
  Complex htheta = kImag * hz - kImag * hz_bar;

  return CovariantDerivativeReport{std::move(lhs), std::move(rhs),
                                   identity_residual, antisym, holo_res,
                                   std::abs(hz), std::abs(htau), std::abs(htheta)};
}

}  // namespace qgeom
