#pragma once

#include <span>
#include <vector>

#include "qgeom/operators.hpp"

namespace qgeom {

// Derivatives with respect to the noncommutative coordinates, realized as
// scaled adjoint actions:
//   d/dx_i    =  (i/hbar)  [p_i, .]        d/dp_i      = -(i/hbar)  [x_i, .]
//   d/dalpha_i = -(1/2hbar)[alphabar_i, .] d/dalphabar_i = (1/2hbar)[alpha_i, .]
enum class NcCoordinate { x, p, alpha, alpha_bar };

inline Operator nc_partial(const Operator& beta, NcCoordinate wrt, int mode = 0) {
  const FockSpace& s = beta.space();
  if (mode < 0 || mode >= s.modes()) throw ParameterError("nc_partial: bad mode");
  const double hbar = s.hbar();
  CoordinateOperators c = coordinate_operators(s);
  switch (wrt) {
    case NcCoordinate::x:
      return commutator(c.p[mode], beta) * (kImag / hbar);
    case NcCoordinate::p:
      return commutator(c.x[mode], beta) * (-kImag / hbar);
    case NcCoordinate::alpha:
      return commutator(c.alpha_bar[mode], beta) * Complex(-1.0 / (2.0 * hbar));
    case NcCoordinate::alpha_bar:
      return commutator(c.alpha[mode], beta) * Complex(1.0 / (2.0 * hbar));
  }
  throw ParameterError("nc_partial: unknown coordinate");
}

// Hamiltonian field on the observable algebra, the inner derivation
// -(1/i hbar) ad_beta.
inline Operator nc_hamiltonian_field(const Operator& beta, const Operator& target) {
  return commutator(beta, target) * (-1.0 / (kImag * beta.space().hbar()));
}

// Operator Poisson bracket {beta, gamma} = (1/i hbar)[beta, gamma].
inline Operator nc_poisson(const Operator& beta, const Operator& gamma) {
  return commutator(beta, gamma) * (1.0 / (kImag * beta.space().hbar()));
}

enum class BarPattern { none, first, second, both };

// Constant components of the symplectic 2-tensor of the noncommutative
// coordinates: Omega_{i jbar} = (i/2) delta, Omega^{i jbar} = -2i delta,
// Omega^{ibar j} = 2i delta, diagonal-bar blocks zero.
inline Complex omega_component(Variance which, int i, int j, BarPattern bars,
                               int modes) {
  if (i < 0 || j < 0 || i >= modes || j >= modes)
    throw ParameterError("omega_component: coordinate index out of range");
  if (which == Variance::mixed)
    throw ParameterError("omega_component: covariant or contravariant only");
  if (bars == BarPattern::none || bars == BarPattern::both) return 0.0;
  Complex delta = i == j ? Complex(1.0) : Complex(0.0);
  if (which == Variance::covariant)
    return (bars == BarPattern::second ? kImag / 2.0 : -kImag / 2.0) * delta;
  return (bars == BarPattern::second ? -2.0 * kImag : 2.0 * kImag) * delta;
}

// Deviation of the classical-form bracket
//   sum_i (dbeta/dx_i dgamma/dp_i - dbeta/dp_i dgamma/dx_i)
// from the true operator Poisson bracket.  Nonzero beyond linear coordinates;
// for beta = x^2, gamma = p^2 the deviation is exactly -2 i hbar I on the
// faithful block.
struct ClassicalFormReport {
  Operator true_bracket;
  Operator classical_form;
  Operator deviation;
};

inline ClassicalFormReport classical_form_counterexample(const Operator& beta,
                                                         const Operator& gamma) {
  require_same_space(beta.space(), gamma.space(), "classical_form_counterexample");
  Operator classical = Operator::zero(beta.space());
  for (int i = 0; i < beta.space().modes(); ++i) {
    classical = classical + nc_partial(beta, NcCoordinate::x, i) *
                                nc_partial(gamma, NcCoordinate::p, i);
    classical = classical - nc_partial(beta, NcCoordinate::p, i) *
                                nc_partial(gamma, NcCoordinate::x, i);
  }
  Operator truth = nc_poisson(beta, gamma);
  return ClassicalFormReport{truth, classical, truth - classical};
}

// Explicitly ordered monomials in the coordinate operators.  The observable
// algebra has no canonical ordering for a generic beta(x, p); callers spell
// out the factor sequence.
struct CoordinatePower {
  NcCoordinate coord;
  int mode;
  int exponent;
};

inline Operator ordered_monomial(const FockSpace& space,
                                 std::span<const CoordinatePower> factors) {
  CoordinateOperators c = coordinate_operators(space);
  Operator out = Operator::identity(space);
  for (const CoordinatePower& f : factors) {
    if (f.mode < 0 || f.mode >= space.modes())
      throw ParameterError("ordered_monomial: bad mode");
    const std::vector<Operator>* bank = nullptr;
    switch (f.coord) {
      case NcCoordinate::x: bank = &c.x; break;
      case NcCoordinate::p: bank = &c.p; break;
      case NcCoordinate::alpha: bank = &c.alpha; break;
      case NcCoordinate::alpha_bar: bank = &c.alpha_bar; break;
    }
    out = out * matrix_power((*bank)[f.mode], f.exponent);
  }
  return out;
}

}  // namespace qgeom
