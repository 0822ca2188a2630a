#pragma once

#include <algorithm>
#include <cmath>

#include "qgeom/operators.hpp"

namespace qgeom {

// Coordinate picture a quantity is expressed in:
//   hilbert      - z coordinates on the full space, trivial metric G = delta/2,
//                  generator functions H_beta = <phi|beta|phi> / (2 hbar);
//   homogeneous  - z coordinates as redundant coordinates on the ray space,
//                  degenerate Fubini-Study tensor, functions
//                  f_beta = <phi|beta|phi> / <phi|phi>;
//   affine       - w^[n] = z^[n]/z^[0] chart on the ray space, f functions;
//   conformal    - z coordinates with the rescaled metric (2 hbar/|z|^2) G
//                  (metric tensors only; input to the Killing reduction).
enum class Picture { hilbert, homogeneous, affine, conformal };

inline const char* picture_name(Picture p) {
  switch (p) {
    case Picture::hilbert: return "hilbert";
    case Picture::homogeneous: return "homogeneous";
    case Picture::affine: return "affine";
    case Picture::conformal: return "conformal";
  }
  return "?";
}

// Value and analytic Wirtinger gradients of a generator function at a state.
// Component vectors are indexed by the flat basis index; in the affine picture
// the [0] slot is not a coordinate and is held at zero.
struct KahlerEval {
  Complex value;
  Vec grad_holo;  // d/dz^[n]   (or d/dw^[n])
  Vec grad_anti;  // d/dz^[n-bar]
  Picture picture;
};

inline KahlerEval eval_H(const Operator& beta, const StateVector& phi) {
  require_same_space(beta.space(), phi.space(), "eval_H");
  const double hbar = phi.space().hbar();
  const Vec& z = phi.z();
  Complex value = (z.adjoint() * beta.matrix() * z)(0) / (2.0 * hbar);
  Vec holo = (beta.matrix().transpose() * z.conjugate()) / (2.0 * hbar);
  Vec anti = (beta.matrix() * z) / (2.0 * hbar);
  return KahlerEval{value, std::move(holo), std::move(anti), Picture::hilbert};
}

inline KahlerEval eval_f(const Operator& beta, const StateVector& phi,
                         Picture chart = Picture::homogeneous) {
  require_same_space(beta.space(), phi.space(), "eval_f");
  if (chart != Picture::homogeneous && chart != Picture::affine)
    throw ParameterError("eval_f: chart must be homogeneous or affine");
  Vec c = chart == Picture::affine ? phi.w_chart() : phi.z();
  const double s = c.squaredNorm();  // |z|^2, or 1 + |w|^2
  Vec bc = beta.matrix() * c;
  Complex value = (c.adjoint() * bc)(0) / s;
  Vec holo = (Vec(beta.matrix().transpose() * c.conjugate()) - value * c.conjugate()) / s;
  Vec anti = (bc - value * c) / s;
  if (chart == Picture::affine) {
    holo(0) = 0.0;  // w^[0] == 1 is not a coordinate
    anti(0) = 0.0;
  }
  return KahlerEval{value, std::move(holo), std::move(anti), chart};
}

inline KahlerEval eval(const Operator& beta, const StateVector& phi, Picture picture) {
  return picture == Picture::hilbert ? eval_H(beta, phi) : eval_f(beta, phi, picture);
}

// Contravariant metric block g^{m nbar} of the picture, as a matrix over
// (holomorphic row, antiholomorphic column).
inline Mat inverse_metric_block(Picture picture, const StateVector& phi) {
  const int dim = phi.space().dim();
  const double hbar = phi.space().hbar();
  switch (picture) {
    case Picture::hilbert:
      return 2.0 * Mat::Identity(dim, dim);
    case Picture::conformal:
      return (phi.norm2() / hbar) * Mat::Identity(dim, dim);
    case Picture::homogeneous: {
      const Vec& z = phi.z();
      return (phi.norm2() * Mat::Identity(dim, dim) - z * z.adjoint()) / hbar;
    }
    case Picture::affine: {
      Vec w = phi.w_chart();
      const double s = w.squaredNorm();
      Mat g = s * (Mat::Identity(dim, dim) + w * w.adjoint()) / hbar;
      g.row(0).setZero();
      g.col(0).setZero();
      return g;
    }
  }
  throw ParameterError("inverse_metric_block: unknown picture");
}

namespace detail {

// sum_{m,n} u_m M(m,n) v_n  -- plain bilinear contraction, no conjugation
inline Complex contract(const Vec& u, const Mat& m, const Vec& v) {
  return (u.transpose() * m * v)(0);
}

}  // namespace detail

inline double tolerance_scale(const Operator& beta, const Operator& gamma,
                              Complex value = 0.0) {
  return std::max({1.0, std::abs(value), beta.matrix().norm() * gamma.matrix().norm()});
}

// Kahler product of the generator functions at a state.  Reproduces the
// operator product under the observable <-> function isomorphism:
//   hilbert:               hbar dH_beta . G^{-1} . dH_gamma          = H_{beta gamma}
//   homogeneous / affine:  f_beta f_gamma + hbar df . g^{-1} . df    = f_{beta gamma}
inline Complex kahler_product(const Operator& beta, const Operator& gamma,
                              const StateVector& phi, Picture picture) {
  KahlerEval eb = eval(beta, phi, picture);
  KahlerEval eg = eval(gamma, phi, picture);
  Mat ginv = inverse_metric_block(picture, phi);
  const double hbar = phi.space().hbar();
  Complex grad_part = hbar * detail::contract(eb.grad_holo, ginv, eg.grad_anti);
  if (picture == Picture::hilbert) return grad_part;
  return eb.value * eg.value + grad_part;
}

enum class BracketKind { poisson, riemann, jordan };

// A bracket evaluated along both routes: `algebraic` through the operator
// algebra and `geometric` through gradient/tensor contractions.  `value`
// carries the defining (algebraic) route.
struct BracketValue {
  Complex value;
  Complex algebraic;
  Complex geometric;
  double residual;  // |algebraic - geometric| / tolerance_scale
};

inline BracketValue bracket(const Operator& beta, const Operator& gamma,
                            const StateVector& phi, BracketKind kind,
                            Picture picture) {
  const double hbar = phi.space().hbar();
  KahlerEval eb = eval(beta, phi, picture);
  KahlerEval eg = eval(gamma, phi, picture);
  Mat ginv = inverse_metric_block(picture, phi);
  Complex t1 = detail::contract(eb.grad_holo, ginv, eg.grad_anti);
  Complex t2 = detail::contract(eb.grad_anti, ginv.conjugate(), eg.grad_holo);

  Complex algebraic, geometric;
  switch (kind) {
    case BracketKind::poisson:
      algebraic = eval(commutator(beta, gamma), phi, picture).value / (kImag * hbar);
      geometric = -kImag * (t1 - t2);
      break;
    case BracketKind::riemann:
      algebraic = eval(anticommutator(beta, gamma), phi, picture).value / hbar;
      if (picture != Picture::hilbert)
        algebraic -= 2.0 / hbar * eb.value * eg.value;
      geometric = t1 + t2;
      break;
    case BracketKind::jordan:
      algebraic = eval(jordan(beta, gamma), phi, picture).value;
      geometric = 0.5 * hbar * (t1 + t2);
      if (picture != Picture::hilbert) geometric += eb.value * eg.value;
      break;
  }
  double residual = std::abs(algebraic - geometric) / tolerance_scale(beta, gamma, algebraic);
  return BracketValue{algebraic, algebraic, geometric, residual};
}

// Quantum covariance and the metric-strengthened uncertainty bound
//   (d beta)^2 (d gamma)^2 >= (hbar/2 {f,f}_omega)^2 + (hbar/2 {f,f}_g)^2.
struct CovarianceReport {
  double cov;
  double delta_beta;
  double delta_gamma;
  double lhs;
  double rhs;
};

inline CovarianceReport covariance_and_uncertainty(const Operator& beta,
                                                   const Operator& gamma,
                                                   const StateVector& phi) {
  if (!beta.is_hermitian() || !gamma.is_hermitian())
    throw HermiticityError("covariance_and_uncertainty: Hermitian operators required");
  const double hbar = phi.space().hbar();
  auto variance = [&](const Operator& b) {
    double second = std::real(eval_f(b * b, phi).value);
    double first = std::real(eval_f(b, phi).value);
    return std::max(0.0, second - first * first);
  };
  double var_b = variance(beta);
  double var_g = variance(gamma);
  Complex riem = bracket(beta, gamma, phi, BracketKind::riemann, Picture::homogeneous).value;
  Complex pois = bracket(beta, gamma, phi, BracketKind::poisson, Picture::homogeneous).value;
  double cov = 0.5 * hbar * std::real(riem);
  double sym = cov;
  double antisym = 0.5 * hbar * std::real(pois);
  return CovarianceReport{cov, std::sqrt(var_b), std::sqrt(var_g), var_b * var_g,
                          antisym * antisym + sym * sym};
}

}  // namespace qgeom
