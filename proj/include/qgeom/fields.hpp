#pragma once

#include "qgeom/geometry.hpp"

namespace qgeom {

enum class TangentKind { vector, covector };

// Holomorphic/antiholomorphic component pair of a (co)vector at a state.
// Affine-picture components keep the [0] slot at zero (w^[0] == 1 is not a
// coordinate).
struct TangentData {
  Vec comp_holo;
  Vec comp_anti;
  TangentKind kind;
  Picture picture;
  StateVector base;
};

// Hamiltonian field of the generator function of beta in the chosen picture:
// covector components (i dF, -i dbar F), vector components from the
// contravariant symplectic contraction X^m = omega^{m nbar} (dF)_nbar.
inline TangentData hamiltonian_field(const Operator& beta, const StateVector& phi,
                                     Picture picture, TangentKind kind) {
  if (picture == Picture::conformal)
    throw ParameterError("hamiltonian_field: no generator functions in the conformal picture");
  KahlerEval e = eval(beta, phi, picture);
  if (kind == TangentKind::covector)
    return TangentData{Vec(kImag * e.grad_holo), Vec(-kImag * e.grad_anti), kind,
                       picture, phi};
  Mat ginv = inverse_metric_block(picture, phi);
  Vec holo = -kImag * (ginv * e.grad_anti);
  Vec anti = kImag * (ginv.conjugate() * e.grad_holo);
  return TangentData{std::move(holo), std::move(anti), kind, picture, phi};
}

// Closed-form components of the Hamiltonian fields of the coordinate
// observables alpha_j (conjugated = false) and alpha_bar_j (true), assembled
// from shifted amplitudes and square-root occupation factors.  Out-of-range
// shifts contribute exactly zero.
inline TangentData explicit_alpha_field(int mode, bool conjugated,
                                        const StateVector& phi, Picture picture,
                                        TangentKind kind) {
  const FockSpace& s = phi.space();
  if (mode < 0 || mode >= s.modes())
    throw ParameterError("explicit_alpha_field: bad mode");
  if (picture == Picture::conformal)
    throw ParameterError("explicit_alpha_field: conformal picture has no fields");
  const double hbar = s.hbar();
  const bool affine = picture == Picture::affine;
  Vec c = affine ? phi.w_chart() : phi.z();
  const double nrm = c.squaredNorm();  // |z|^2 or 1 + |w|^2
  CoordinateOperators ops = coordinate_operators(s);
  Complex f_alpha = eval_f(ops.alpha[mode], phi).value;

  const int dim = s.dim();
  Vec holo = Vec::Zero(dim), anti = Vec::Zero(dim);
  for (int n = 0; n < dim; ++n) {
    const double n_j = s.occupation(n, mode);
    const int down = s.lowered(n, mode);
    const int up = s.raised(n, mode);
    const Complex c_down = down >= 0 ? c(down) : Complex(0.0);
    const Complex c_up = up >= 0 ? c(up) : Complex(0.0);
    if (kind == TangentKind::covector) {
      switch (picture) {
        case Picture::hilbert:
          holo(n) = kImag * std::sqrt(n_j / (2.0 * hbar)) * std::conj(c_down);
          anti(n) = -kImag * std::sqrt((n_j + 1.0) / (2.0 * hbar)) * c_up;
          break;
        default:  // homogeneous and affine share the quotient-rule form
          holo(n) = kImag / nrm *
                    (std::sqrt(2.0 * hbar * n_j) * std::conj(c_down) -
                     std::conj(c(n)) * f_alpha);
          anti(n) = -kImag / nrm *
                    (std::sqrt(2.0 * hbar * (n_j + 1.0)) * c_up - c(n) * f_alpha);
          break;
      }
    } else {
      switch (picture) {
        case Picture::hilbert:
          holo(n) = -kImag * std::sqrt(2.0 * (n_j + 1.0) / hbar) * c_up;
          anti(n) = kImag * std::sqrt(2.0 * n_j / hbar) * std::conj(c_down);
          break;
        case Picture::homogeneous:
          holo(n) = -kImag * std::sqrt(2.0 * (n_j + 1.0) / hbar) * c_up +
                    kImag / hbar * c(n) * f_alpha;
          anti(n) = kImag * std::sqrt(2.0 * n_j / hbar) * std::conj(c_down) -
                    kImag / hbar * std::conj(c(n)) * f_alpha;
          break;
        case Picture::affine: {
          const int e_j = s.raised(0, mode);  // flat index of the one-quantum state
          holo(n) = -kImag * std::sqrt(2.0 * (n_j + 1.0) / hbar) * c_up +
                    kImag * std::sqrt(2.0 / hbar) * c(e_j) * c(n);
          anti(n) = kImag * std::sqrt(2.0 * n_j / hbar) * std::conj(c_down);
          break;
        }
        default:
          break;
      }
    }
  }
  if (affine) {
    holo(0) = 0.0;
    anti(0) = 0.0;
  }
  if (conjugated) {
    // the alpha_bar_j components are the [n] <-> [nbar] conjugates
    Vec h = anti.conjugate();
    Vec a = holo.conjugate();
    return TangentData{std::move(h), std::move(a), kind, picture, phi};
  }
  return TangentData{std::move(holo), std::move(anti), kind, picture, phi};
}

// Split of the full-space Hamiltonian field into the horizontal lift plus the
// phase-fiber term:
//   X_{H_beta} = Xtilde_beta + (f_beta / 2 hbar) X_{r^2},   X_{r^2} = -2 d_theta,
// with the theta component of the horizontal lift available in closed form
//   -(|z|^2 / 2 hbar) [ (1/z^0) dbar_0 f + (1/zbar^0) d_0 f ].
struct XhfReport {
  TangentData lhs;         // X_{H_beta}, hilbert picture
  TangentData horizontal;  // Xtilde_beta, homogeneous picture
  Vec r2_term_holo;
  Vec r2_term_anti;
  Vec theta_term_holo;  // theta_component * d_theta components
  Vec theta_term_anti;
  Complex theta_component;         // from the coordinate transformation
  Complex theta_component_closed;  // closed form above
  double decomposition_residual;
  double theta_residual;
};

inline XhfReport xhf_decomposition(const Operator& beta, const StateVector& phi) {
  require_same_space(beta.space(), phi.space(), "xhf_decomposition");
  const Vec& z = phi.z();
  if (z(0) == Complex(0.0))
    throw ChartError("xhf_decomposition: z^[0] = 0");
  const double hbar = phi.space().hbar();
  const double s = phi.norm2();

  TangentData lhs = hamiltonian_field(beta, phi, Picture::hilbert, TangentKind::vector);
  TangentData tilde = hamiltonian_field(beta, phi, Picture::homogeneous, TangentKind::vector);
  KahlerEval ef = eval_f(beta, phi);

  // X_{r^2} has components (-2i z, +2i zbar)
  Vec r2_holo = (ef.value / (2.0 * hbar)) * Vec(-2.0 * kImag * z);
  Vec r2_anti = (ef.value / (2.0 * hbar)) * Vec(2.0 * kImag * z.conjugate());

  double dres = std::max(
      (lhs.comp_holo - tilde.comp_holo - r2_holo).cwiseAbs().maxCoeff(),
      (lhs.comp_anti - tilde.comp_anti - r2_anti).cwiseAbs().maxCoeff());

  // theta component of a vector field: V^theta = V^0/(2i z^0) - V^0bar/(2i zbar^0)
  Complex theta = tilde.comp_holo(0) / (2.0 * kImag * z(0)) -
                  tilde.comp_anti(0) / (2.0 * kImag * std::conj(z(0)));
  Complex theta_closed = -(s / (2.0 * hbar)) *
                         (ef.grad_anti(0) / z(0) + ef.grad_holo(0) / std::conj(z(0)));

  Vec th_holo = theta * Vec(kImag * z);
  Vec th_anti = theta * Vec(-kImag * z.conjugate());

  return XhfReport{std::move(lhs), std::move(tilde), std::move(r2_holo),
                   std::move(r2_anti), std::move(th_holo), std::move(th_anti),
                   theta, theta_closed, dres, std::abs(theta - theta_closed)};
}

// Pairing of a covector with a vector (no conjugation; both in one picture).
inline Complex pair(const TangentData& cov, const TangentData& vec) {
  if (cov.kind != TangentKind::covector || vec.kind != TangentKind::vector)
    throw ParameterError("pair: expects (covector, vector)");
  return (cov.comp_holo.transpose() * vec.comp_holo)(0) +
         (cov.comp_anti.transpose() * vec.comp_anti)(0);
}

// Pairings of a covector with the radial and phase directions of the bundle;
// both vanish on Hamiltonian covectors of the reduced pictures, the radial
// one in every picture.
inline Complex radial_pairing(const TangentData& cov) {
  const Vec& z = cov.base.z();
  double r = cov.base.radius();
  return ((z.transpose() * cov.comp_holo)(0) +
          (z.conjugate().transpose() * cov.comp_anti)(0)) / r;
}

inline Complex theta_pairing(const TangentData& cov) {
  const Vec& z = cov.base.z();
  return kImag * (z.transpose() * cov.comp_holo)(0) -
         kImag * (z.conjugate().transpose() * cov.comp_anti)(0);
}

}  // namespace qgeom
