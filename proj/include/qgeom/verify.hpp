#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include "qgeom/flow.hpp"
#include "qgeom/nc.hpp"
#include "qgeom/pullback.hpp"
#include "qgeom/reconstruct.hpp"
#include "qgeom/sampling.hpp"

namespace qgeom {

struct VerifyConfig {
  int dim = 1;  // mode count
  int cutoff = 8;
  double hbar = 1.0;
  std::uint64_t seed = 42;
  int cases = 100;
  double tolerance = 1e-10;  // threshold of the standard identity class
  std::string suite = "all";
};

struct SuiteEntry {
  std::string name;
  std::string paper_ref;
  double residual;
  double threshold;
  std::string status;  // pass | fail | expected-nonzero
};

struct SuiteReport {
  std::string suite;
  VerifyConfig config;
  std::vector<SuiteEntry> entries;
  bool all_passed = true;
};

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct Check {
  std::string group;
  std::string name;
  std::string ref;
  double threshold;
  bool negative;  // a control whose residual must exceed the threshold
  std::function<double(const VerifyConfig&, std::mt19937_64&)> run;
};

inline double rel(Complex got, Complex want, double scale) {
  return std::abs(got - want) / std::max(1.0, scale);
}

// Wirtinger central differences of a complex-valued function of the state.
inline Complex fd_wirtinger(const std::function<Complex(const Vec&)>& func,
                            const Vec& z, int m, bool anti, double h) {
  auto at = [&](Complex dz) {
    Vec zp = z;
    zp(m) += dz;
    return func(zp);
  };
  Complex dx = (at(h) - at(-h)) / (2.0 * h);
  Complex dy = (at(kImag * h) - at(-kImag * h)) / (2.0 * h);
  return anti ? 0.5 * (dx + kImag * dy) : 0.5 * (dx - kImag * dy);
}

}  // namespace detail

namespace checks {

// ---- products and brackets -------------------------------------------------

inline double kahler_product_isomorphism(const VerifyConfig& c, std::mt19937_64& rng,
                                         Picture picture) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < c.cases; ++k) {
    Operator beta = random_operator(space, rng);
    Operator gamma = random_operator(space, rng);
    StateVector phi = random_state(space, rng, c.cutoff - 2);
    Complex lhs = kahler_product(beta, gamma, phi, picture);
    Complex rhs = eval(beta * gamma, phi, picture).value;
    worst = std::max(worst, detail::rel(lhs, rhs, tolerance_scale(beta, gamma, rhs)));
  }
  return worst;
}

inline double bracket_routes(const VerifyConfig& c, std::mt19937_64& rng,
                             BracketKind kind, Picture picture) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < c.cases; ++k) {
    Operator beta = random_hermitian(space, rng);
    Operator gamma = random_hermitian(space, rng);
    StateVector phi = random_state(space, rng, c.cutoff - 2);
    worst = std::max(worst, bracket(beta, gamma, phi, kind, picture).residual);
  }
  return worst;
}

inline double bracket_splitting(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < c.cases; ++k) {
    Operator beta = random_operator(space, rng);
    Operator gamma = random_operator(space, rng);
    StateVector phi = random_state(space, rng, c.cutoff - 2);
    for (Picture pic : {Picture::hilbert, Picture::homogeneous, Picture::affine}) {
      Complex kp = kahler_product(beta, gamma, phi, pic);
      Complex sum = bracket(beta, gamma, phi, BracketKind::jordan, pic).value +
                    0.5 * kImag * c.hbar *
                        bracket(beta, gamma, phi, BracketKind::poisson, pic).value;
      worst = std::max(worst, detail::rel(kp, sum, tolerance_scale(beta, gamma, kp)));
    }
  }
  return worst;
}

inline double bracket_reality(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < c.cases; ++k) {
    Operator beta = random_hermitian(space, rng);
    Operator gamma = random_hermitian(space, rng);
    StateVector phi = random_state(space, rng);
    double scale = tolerance_scale(beta, gamma);
    for (BracketKind kind : {BracketKind::poisson, BracketKind::riemann})
      worst = std::max(worst,
                       std::abs(std::imag(bracket(beta, gamma, phi, kind,
                                                  Picture::homogeneous).value)) / scale);
  }
  return worst;
}

inline double projective_invariance(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < c.cases; ++k) {
    Operator beta = random_operator(space, rng);
    StateVector phi = random_state(space, rng);
    StateVector scaled = phi.scaled(random_unit_complex(rng) + Complex(1.5, 0.0));
    Complex a = eval_f(beta, phi).value;
    Complex b = eval_f(beta, scaled).value;
    worst = std::max(worst, detail::rel(a, b, std::abs(a)));
  }
  return worst;
}

inline double h_f_relation(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < c.cases; ++k) {
    Operator beta = random_operator(space, rng);
    StateVector phi = random_state(space, rng);
    Complex h = eval_H(beta, phi).value;
    Complex f = eval_f(beta, phi).value;
    Complex want = phi.norm2() / (2.0 * c.hbar) * f;
    worst = std::max(worst, detail::rel(h, want, std::abs(h)));
  }
  return worst;
}

inline double uncertainty_sweep(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  const int pairs = std::max(c.cases, 200);
  for (int k = 0; k < pairs; ++k) {
    Operator beta = random_hermitian(space, rng);
    Operator gamma = random_hermitian(space, rng);
    StateVector phi = random_state(space, rng);
    CovarianceReport r = covariance_and_uncertainty(beta, gamma, phi);
    double scale = std::max(1.0, std::abs(r.lhs));
    worst = std::max(worst, std::max(0.0, r.rhs - r.lhs) / scale);
  }
  return worst;
}

inline double uncertainty_saturation(const VerifyConfig& c, std::mt19937_64&) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  CoordinateOperators ops = coordinate_operators(space);
  StateVector ground = StateVector::basis(space, 0).on_sphere();
  CovarianceReport r = covariance_and_uncertainty(ops.x[0], ops.p[0], ground);
  double dx_dp = r.delta_beta * r.delta_gamma;
  double res = std::abs(dx_dp - 0.5 * c.hbar);
  return std::max(res, std::abs(r.lhs - r.rhs));
}

// ---- geometry ---------------------------------------------------------------

inline double metric_degeneracy(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 20); ++k) {
    StateVector phi = random_state(space, rng);
    const Vec& z = phi.z();
    Mat cov = metric(Picture::homogeneous, phi, Variance::covariant).block;
    Mat con = metric(Picture::homogeneous, phi, Variance::contravariant).block;
    // vertical vectors pair through the holomorphic slots of the covariant
    // block, vertical covectors through the conjugated slots of the inverse
    worst = std::max({worst, (cov.transpose() * z).cwiseAbs().maxCoeff(),
                      (cov * z.conjugate()).cwiseAbs().maxCoeff(),
                      (con * z).cwiseAbs().maxCoeff(),
                      (con.transpose() * z.conjugate()).cwiseAbs().maxCoeff()});
  }
  return worst;
}

inline double affine_inverse_identity(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 20); ++k) {
    StateVector phi = random_state(space, rng);
    Mat cov = metric(Picture::affine, phi, Variance::covariant).block;
    Mat con = metric(Picture::affine, phi, Variance::contravariant).block;
    // g_{m lbar} g^{lbar n} contracts the antiholomorphic slots: the second
    // factor is the conjugate of the stored (holo, anti) block
    Mat prod = cov * con.conjugate();
    prod.row(0).setZero();
    Mat want = Mat::Identity(space.dim(), space.dim());
    want(0, 0) = 0.0;
    worst = std::max(worst, (prod - want).cwiseAbs().maxCoeff());
  }
  return worst;
}

inline double fs_orthogonal_distance(const VerifyConfig& c, std::mt19937_64&) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  StateVector a = StateVector::basis(space, 0);
  StateVector b = StateVector::basis(space, 1, Complex(0.3, -2.0));
  double want = M_PI * std::sqrt(c.hbar / 2.0);
  return std::abs(fs_distance(a, b) - want);
}

inline double fs_triangle(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  const int triples = std::max(c.cases, 1000);
  for (int k = 0; k < triples; ++k) {
    StateVector a = random_state(space, rng);
    StateVector b = random_state(space, rng);
    StateVector d = random_state(space, rng);
    double viol = fs_distance(a, d) - fs_distance(a, b) - fs_distance(b, d);
    worst = std::max(worst, viol);
  }
  return std::max(worst, 0.0);
}

inline double killing_reduction_closed_forms(const VerifyConfig& c,
                                             std::mt19937_64& rng,
                                             Variance variance) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 20); ++k) {
    StateVector phi = random_state(space, rng);
    Tensor2 conformal = metric(Picture::conformal, phi, variance);
    Tensor2 reduced = killing_reduce(conformal, phi);
    Tensor2 want = metric(Picture::homogeneous, phi, variance);
    worst = std::max(worst, (reduced.block - want.block).cwiseAbs().maxCoeff());
  }
  return worst;
}

inline double projector_idempotence(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 20); ++k) {
    StateVector phi = random_state(space, rng);
    Mat p = metric(Picture::homogeneous, phi, Variance::mixed).block;
    worst = std::max(worst, (p * p - p).cwiseAbs().maxCoeff());
  }
  return worst;
}

inline double christoffel_closed_vs_fd(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  StateVector phi = random_state(space, rng);
  const Vec z0 = phi.z();
  const int dim = space.dim();
  const double h = 1e-5 * std::max(1.0, phi.radius());
  const double s = phi.norm2();

  auto g_entry = [&space](const Vec& z, int m, int n) {
    StateVector at(space, z);
    return metric(Picture::conformal, at, Variance::covariant).block(m, n);
  };

  Christoffel closed = christoffel(phi);
  double worst = 0.0;
  // Gamma^l_{mn} = (sigma / 2 hbar) (d_m G_{n lbar} + d_n G_{m lbar})
  // Gamma^l_{m nbar} = (sigma / 2 hbar) (d_nbar G_{m lbar} - d_lbar G_{m nbar})
  for (int l = 0; l < dim; ++l)
    for (int m = 0; m < dim; ++m)
      for (int n = 0; n < dim; ++n) {
        auto entry_nl = [&](const Vec& z) { return g_entry(z, n, l); };
        auto entry_ml = [&](const Vec& z) { return g_entry(z, m, l); };
        auto entry_mn = [&](const Vec& z) { return g_entry(z, m, n); };
        Complex hh = s / (2.0 * c.hbar) *
                     (detail::fd_wirtinger(entry_nl, z0, m, false, h) +
                      detail::fd_wirtinger(entry_ml, z0, n, false, h));
        worst = std::max(worst, std::abs(hh - closed.holo_holo[l](m, n)));
        Complex ha = s / (2.0 * c.hbar) *
                     (detail::fd_wirtinger(entry_ml, z0, n, true, h) -
                      detail::fd_wirtinger(entry_mn, z0, l, true, h));
        worst = std::max(worst, std::abs(ha - closed.holo_anti[l](m, n)));
      }
  return worst;
}

inline double covariant_derivative_analytic(const VerifyConfig& c,
                                            std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 10); ++k) {
    Operator beta = random_hermitian(space, rng);
    StateVector phi = random_state(space, rng);
    CovariantDerivativeReport r = covariant_derivative_check(beta, phi);
    worst = std::max({worst, r.identity_residual, r.antisymmetry_residual,
                      r.holo_block_residual});
  }
  return worst;
}

inline double covariant_derivative_fd(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  Operator beta = random_hermitian(space, rng);
  StateVector phi = random_state(space, rng);
  const Vec z0 = phi.z();
  const int dim = space.dim();
  const double h = 1e-5 * std::max(1.0, phi.radius());
  Mat proj = metric(Picture::homogeneous, phi, Variance::mixed).block;
  Mat deriv(dim, dim);
  for (int l = 0; l < dim; ++l)
    for (int o = 0; o < dim; ++o) {
      auto comp = [&](const Vec& z) {
        StateVector at(space, z);
        return Complex(-kImag * eval_f(beta, at).grad_anti(o));
      };
      deriv(l, o) = detail::fd_wirtinger(comp, z0, l, false, h);
    }
  Mat lhs = proj * deriv * proj.adjoint();
  Mat rhs = -kImag * f_hessian_mixed(beta, phi);
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

inline double horizontality(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 20); ++k) {
    Operator beta = random_hermitian(space, rng);
    StateVector phi = random_state(space, rng);
    CovariantDerivativeReport r = covariant_derivative_check(beta, phi);
    worst = std::max({worst, r.horizontal_z, r.horizontal_tau, r.horizontal_theta});
  }
  return worst;
}

inline double ds2_forms_agree(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 50); ++k) {
    StateVector phi = random_state(space, rng);
    Vec dz = 1e-5 * phi.radius() * random_displacement(space, rng);
    const Vec& z = phi.z();
    double s = phi.norm2();
    // bra-ket form
    Complex dphi_phi = (dz.adjoint() * z)(0);
    double braket = 2.0 * c.hbar *
                    (dz.squaredNorm() / s - std::norm(dphi_phi) / (s * s));
    // coordinate form 2 g_{m nbar} dz^m dzbar^n
    Mat g = metric(Picture::homogeneous, phi, Variance::covariant).block;
    double coord = std::real(2.0 * (dz.transpose() * g * dz.conjugate())(0));
    worst = std::max(worst, std::abs(braket - coord) / std::max(braket, 1e-300));
  }
  return worst;
}

inline double sphere_metric_decomposition(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 50); ++k) {
    StateVector phi = random_state(space, rng);
    const Vec& z = phi.z();
    double s = phi.norm2();
    Vec v = random_displacement(space, rng);
    v -= z * ((z.adjoint() * v)(0) / s);  // horizontal: <z, v> = 0
    Mat g = metric(Picture::homogeneous, phi, Variance::covariant).block;
    double reduced = std::real(2.0 * (v.transpose() * g * v.conjugate())(0));
    double sphere_part = 2.0 * c.hbar / s * v.squaredNorm();
    worst = std::max(worst, std::abs(reduced - sphere_part) / std::max(1.0, sphere_part));
  }
  return worst;
}

// ---- Hamiltonian fields ------------------------------------------------------

inline double explicit_vs_generic_fields(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  CoordinateOperators ops = coordinate_operators(space);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 20); ++k) {
    StateVector phi = random_state(space, rng);
    for (int mode = 0; mode < space.modes(); ++mode)
      for (bool bar : {false, true})
        for (Picture pic : {Picture::hilbert, Picture::homogeneous, Picture::affine})
          for (TangentKind kind : {TangentKind::vector, TangentKind::covector}) {
            const Operator& gen = bar ? ops.alpha_bar[mode] : ops.alpha[mode];
            TangentData generic = hamiltonian_field(gen, phi, pic, kind);
            TangentData closed = explicit_alpha_field(mode, bar, phi, pic, kind);
            worst = std::max(
                {worst,
                 (generic.comp_holo - closed.comp_holo).cwiseAbs().maxCoeff(),
                 (generic.comp_anti - closed.comp_anti).cwiseAbs().maxCoeff()});
          }
  }
  return worst;
}

inline double xhf_decomposition_residual(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 20); ++k) {
    Operator beta = random_hermitian(space, rng);
    StateVector phi = random_state(space, rng);
    worst = std::max(worst, xhf_decomposition(beta, phi).decomposition_residual);
  }
  return worst;
}

inline double xhf_theta_component(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 20); ++k) {
    Operator beta = random_hermitian(space, rng);
    StateVector phi = random_state(space, rng);
    worst = std::max(worst, xhf_decomposition(beta, phi).theta_residual);
  }
  return worst;
}

inline double no_radial_component(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 20); ++k) {
    Operator beta = random_hermitian(space, rng);
    StateVector phi = random_state(space, rng);
    for (Picture pic : {Picture::hilbert, Picture::homogeneous}) {
      TangentData cov = hamiltonian_field(beta, phi, pic, TangentKind::covector);
      worst = std::max(worst, std::abs(radial_pairing(cov)));
      if (pic == Picture::homogeneous)
        worst = std::max(worst, std::abs(theta_pairing(cov)));
    }
  }
  return worst;
}

inline double flow_tangency(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 20); ++k) {
    Operator beta = random_hermitian(space, rng);
    StateVector phi = random_state(space, rng);
    TangentData field = hamiltonian_field(beta, phi, Picture::hilbert, TangentKind::vector);
    Vec want = (beta.matrix() * phi.z()) / (kImag * c.hbar);
    worst = std::max(worst, (field.comp_holo - want).cwiseAbs().maxCoeff() /
                                std::max(1.0, want.cwiseAbs().maxCoeff()));
  }
  return worst;
}

inline double dh_pairing_vs_bracket(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 20); ++k) {
    Operator beta = random_hermitian(space, rng);
    Operator gamma = random_hermitian(space, rng);
    StateVector phi = random_state(space, rng);
    KahlerEval eg = eval_H(gamma, phi);
    TangentData xb = hamiltonian_field(beta, phi, Picture::hilbert, TangentKind::vector);
    Complex pairing = (eg.grad_holo.transpose() * xb.comp_holo)(0) +
                      (eg.grad_anti.transpose() * xb.comp_anti)(0);
    Complex want = bracket(gamma, beta, phi, BracketKind::poisson, Picture::hilbert).value;
    worst = std::max(worst, detail::rel(pairing, want, tolerance_scale(beta, gamma, want)));
  }
  return worst;
}

// ---- noncommutative calculus ---------------------------------------------------

inline double nc_canonical_pairings(const VerifyConfig& c, std::mt19937_64&) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  CoordinateOperators ops = coordinate_operators(space);
  double worst = 0.0;
  Mat id = Mat::Identity(space.dim(), space.dim());
  for (int i = 0; i < space.modes(); ++i)
    for (int j = 0; j < space.modes(); ++j) {
      Mat want = i == j ? id : Mat(Mat::Zero(space.dim(), space.dim()));
      auto block = [&](const Operator& op, const Mat& expect) {
        Operator diff(space, Mat(op.matrix() - expect));
        return restricted_block(diff, 1).cwiseAbs().maxCoeff();
      };
      worst = std::max(worst, block(nc_partial(ops.alpha[j], NcCoordinate::alpha, i), want));
      worst = std::max(worst, block(nc_partial(ops.alpha_bar[j], NcCoordinate::alpha_bar, i), want));
      worst = std::max(worst, block(nc_partial(ops.x[j], NcCoordinate::x, i), want));
      worst = std::max(worst, block(nc_partial(ops.p[j], NcCoordinate::p, i), want));
      worst = std::max(worst, block(nc_partial(ops.alpha[j], NcCoordinate::alpha_bar, i),
                                    Mat(Mat::Zero(space.dim(), space.dim()))));
      worst = std::max(worst, block(nc_partial(ops.x[j], NcCoordinate::p, i),
                                    Mat(Mat::Zero(space.dim(), space.dim()))));
    }
  return worst;
}

inline double nc_leibniz(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 20); ++k) {
    Operator beta = random_operator(space, rng);
    Operator gamma = random_operator(space, rng);
    double scale = tolerance_scale(beta, gamma);
    for (NcCoordinate wrt : {NcCoordinate::x, NcCoordinate::p, NcCoordinate::alpha,
                             NcCoordinate::alpha_bar}) {
      Operator lhs = nc_partial(beta * gamma, wrt);
      Operator rhs = nc_partial(beta, wrt) * gamma + beta * nc_partial(gamma, wrt);
      worst = std::max(worst,
                       (lhs.matrix() - rhs.matrix()).cwiseAbs().maxCoeff() / scale);
    }
  }
  return worst;
}

inline double nc_commuting_derivations(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  const NcCoordinate all[] = {NcCoordinate::x, NcCoordinate::p, NcCoordinate::alpha,
                              NcCoordinate::alpha_bar};
  for (int k = 0; k < std::min(c.cases, 10); ++k) {
    Operator beta = random_operator(space, rng);
    double scale = std::max(1.0, beta.matrix().norm());
    for (NcCoordinate a : all)
      for (NcCoordinate b : all) {
        Operator ab = nc_partial(nc_partial(beta, a), b);
        Operator ba = nc_partial(nc_partial(beta, b), a);
        Operator diff(space, Mat(ab.matrix() - ba.matrix()));
        worst = std::max(worst, restricted_block(diff, 2).cwiseAbs().maxCoeff() / scale);
      }
  }
  return worst;
}

inline double nc_hamilton_form(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  CoordinateOperators ops = coordinate_operators(space);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 20); ++k) {
    Operator beta = random_operator(space, rng);
    double scale = std::max(1.0, beta.matrix().norm());
    for (int i = 0; i < space.modes(); ++i) {
      Mat d1 = nc_poisson(ops.x[i], beta).matrix() -
               nc_partial(beta, NcCoordinate::p, i).matrix();
      Mat d2 = nc_poisson(ops.p[i], beta).matrix() +
               nc_partial(beta, NcCoordinate::x, i).matrix();
      worst = std::max({worst, d1.cwiseAbs().maxCoeff() / scale,
                        d2.cwiseAbs().maxCoeff() / scale});
    }
  }
  return worst;
}

inline double nc_jacobi(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 10); ++k) {
    Operator a = random_operator(space, rng);
    Operator b = random_operator(space, rng);
    Operator d = random_operator(space, rng);
    Mat cyc = nc_poisson(a, nc_poisson(b, d)).matrix() +
              nc_poisson(b, nc_poisson(d, a)).matrix() +
              nc_poisson(d, nc_poisson(a, b)).matrix();
    double scale = std::max(1.0, a.matrix().norm() * b.matrix().norm() * d.matrix().norm());
    worst = std::max(worst, cyc.cwiseAbs().maxCoeff() / scale);
  }
  return worst;
}

inline double nc_born_jordan_identity(const VerifyConfig& c, std::mt19937_64&) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  CoordinateOperators ops = coordinate_operators(space);
  double worst = 0.0;
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      if (m + n > space.cutoff()) continue;
      Operator lhs = nc_poisson(matrix_power(ops.x[0], m), matrix_power(ops.p[0], n));
      Operator rhs = born_jordan(space, m - 1, n - 1) * Complex(double(m) * n);
      Operator diff(space, Mat(lhs.matrix() - rhs.matrix()));
      double scale = std::max(1.0, rhs.matrix().norm());
      worst = std::max(worst, restricted_block(diff, m + n).cwiseAbs().maxCoeff() / scale);
    }
  return worst;
}

inline double nc_f_picture_consistency(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 20); ++k) {
    Operator beta = random_operator(space, rng);
    Operator gamma = random_operator(space, rng);
    StateVector phi = random_state(space, rng, c.cutoff - 2);
    Complex lhs = eval_f(nc_poisson(beta, gamma), phi).value;
    Complex rhs = bracket(beta, gamma, phi, BracketKind::poisson, Picture::homogeneous).value;
    worst = std::max(worst, detail::rel(lhs, rhs, tolerance_scale(beta, gamma, rhs)));
  }
  return worst;
}

inline double nc_classical_deviation_value(const VerifyConfig& c, std::mt19937_64&) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  CoordinateOperators ops = coordinate_operators(space);
  Operator x2 = matrix_power(ops.x[0], 2);
  Operator p2 = matrix_power(ops.p[0], 2);
  ClassicalFormReport r = classical_form_counterexample(x2, p2);
  Mat want = -2.0 * kImag * c.hbar * Mat::Identity(space.dim(), space.dim());
  Operator diff(space, Mat(r.deviation.matrix() - want));
  return restricted_block(diff, 4).cwiseAbs().maxCoeff();
}

// ---- pull-backs -----------------------------------------------------------------

inline double jacobian_left_inverse(const VerifyConfig& c, std::mt19937_64& rng,
                                    Picture picture) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 20); ++k) {
    StateVector phi = random_state(space, rng, c.cutoff - 2);
    Jacobian jac = jacobian(phi, picture);
    double factor = picture == Picture::hilbert ? phi.norm2() / (2.0 * c.hbar) : 1.0;
    Mat want = factor * Mat::Identity(2 * space.modes(), 2 * space.modes());
    worst = std::max(worst, (jac.left_product() - want).cwiseAbs().maxCoeff());
  }
  return worst;
}

inline double omega_pullback_values(const VerifyConfig& c, std::mt19937_64& rng,
                                    bool covariant) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  const int d = space.modes();
  Mat id = Mat::Identity(d, d);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 50); ++k) {
    StateVector phi = random_state(space, rng, c.cutoff - 2);
    for (Picture pic : {Picture::homogeneous, Picture::affine}) {
      OmegaPullbackReport r = omega_pullback(phi, pic);
      if (covariant)
        worst = std::max({worst, r.cov_holo_holo.cwiseAbs().maxCoeff(),
                          (r.cov_holo_anti - 0.5 * kImag * id).cwiseAbs().maxCoeff()});
      else
        worst = std::max({worst, r.contra_holo_holo.cwiseAbs().maxCoeff(),
                          (r.contra_anti_holo - 2.0 * kImag * id).cwiseAbs().maxCoeff()});
    }
  }
  return worst;
}

inline double pairing_table(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  const int d = space.modes();
  Mat id = Mat::Identity(d, d);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 20); ++k) {
    StateVector phi = random_state(space, rng, c.cutoff - 2);
    PairingReport r = pairing_pullback(phi);
    Complex hil = -kImag * phi.norm2() / c.hbar;
    worst = std::max({worst, r.alpha_alpha.cwiseAbs().maxCoeff(),
                      r.alphabar_alphabar.cwiseAbs().maxCoeff(),
                      (r.alpha_alphabar + 2.0 * kImag * id).cwiseAbs().maxCoeff(),
                      (r.alphabar_alpha - 2.0 * kImag * id).cwiseAbs().maxCoeff(),
                      (r.hilbert_alpha_alphabar - hil * id).cwiseAbs().maxCoeff(),
                      (r.sphere_restricted + 2.0 * kImag * id).cwiseAbs().maxCoeff()});
  }
  return worst;
}

inline double one_form_routes(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 50); ++k) {
    Operator beta = random_hermitian(space, rng);
    StateVector phi = random_state(space, rng).on_sphere();
    Vec dz = sphere_tangent_projection(phi, random_displacement(space, rng));
    OneFormReport r = one_form_consistency(beta, phi, dz);
    double scale = std::max(1.0, std::abs(r.dH_route));
    worst = std::max({worst, std::abs(r.dH_route - r.H_dbeta_route) / scale,
                      std::abs(r.df_route - r.f_dbeta_route) / scale,
                      std::abs(r.dH_route - r.df_route) / scale});
  }
  return worst;
}

inline double table1_consistency(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 20); ++k) {
    Operator beta = random_operator(space, rng);
    Operator gamma = random_operator(space, rng);
    StateVector phi = random_state(space, rng, c.cutoff - 2).on_sphere();
    double scale = tolerance_scale(beta, gamma);
    // functions
    Complex fw = eval_f(beta, phi, Picture::affine).value;
    Complex fz = eval_f(beta, phi, Picture::homogeneous).value;
    Complex fh = eval_H(beta, phi).value;
    worst = std::max({worst, std::abs(fw - fz) / scale, std::abs(fz - fh) / scale});
    // products
    Complex pw = kahler_product(beta, gamma, phi, Picture::affine);
    Complex pz = kahler_product(beta, gamma, phi, Picture::homogeneous);
    Complex ph = kahler_product(beta, gamma, phi, Picture::hilbert);
    worst = std::max({worst, std::abs(pw - pz) / scale, std::abs(pz - ph) / scale});
    // Poisson brackets
    Complex bw = bracket(beta, gamma, phi, BracketKind::poisson, Picture::affine).value;
    Complex bz = bracket(beta, gamma, phi, BracketKind::poisson, Picture::homogeneous).value;
    Complex bh = bracket(beta, gamma, phi, BracketKind::poisson, Picture::hilbert).value;
    worst = std::max({worst, std::abs(bw - bz) / scale, std::abs(bz - bh) / scale});
    // Jacobian left inverses
    for (Picture pic : {Picture::affine, Picture::homogeneous, Picture::hilbert}) {
      Mat lp = jacobian(phi, pic).left_product();
      worst = std::max(worst, (lp - Mat::Identity(lp.rows(), lp.cols())).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

inline double pullback_naturality(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 20); ++k) {
    Operator beta = random_operator(space, rng);
    Operator gamma = random_operator(space, rng);
    StateVector phi = random_state(space, rng, c.cutoff - 2);
    Complex lhs = bracket(gamma, beta, phi, BracketKind::poisson, Picture::homogeneous).value;
    Complex rhs = eval_f(commutator(gamma, beta), phi).value / (kImag * c.hbar);
    worst = std::max(worst, detail::rel(lhs, rhs, tolerance_scale(beta, gamma, rhs)));
  }
  return worst;
}

// ---- flow ------------------------------------------------------------------------

inline double flow_harmonic_phases(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  CoordinateOperators ops = coordinate_operators(space);
  const double omega = 1.0;
  Operator h = ops.number[0] * Complex(c.hbar * omega) +
               Operator::identity(space) * Complex(0.5 * c.hbar * omega);
  StateVector phi0 = random_state(space, rng);
  const double period = 2.0 * M_PI / omega;
  Trajectory traj = integrate(h, phi0, period, 1e-3);
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.times.size(); i += traj.times.size() / 8) {
    double t = traj.times[i];
    for (int n = 0; n < space.dim(); ++n) {
      double omega_n = omega * (space.occupation(n, 0) + 0.5);
      Complex want = std::exp(-kImag * omega_n * t) * phi0.z()(n);
      worst = std::max(worst, std::abs(traj.states[i](n) - want));
    }
  }
  return worst;
}

inline double flow_rk4_vs_spectral(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(1, 5, c.hbar);  // six levels
  Operator h = random_hermitian(space, rng);
  StateVector phi0 = random_state(space, rng);
  Trajectory a = integrate(h, phi0, 1.0, 1e-3, IntegratorKind::rk4);
  Trajectory b = integrate(h, phi0, 1.0, 1e-3, IntegratorKind::split_exact);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.times.size(); i += 100)
    worst = std::max(worst, (a.states[i] - b.states[i]).cwiseAbs().maxCoeff());
  worst = std::max(worst, (a.states.back() - b.states.back()).cwiseAbs().maxCoeff());
  return worst;
}

inline double flow_heisenberg(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  CoordinateOperators ops = coordinate_operators(space);
  Operator h = ops.number[0] * Complex(c.hbar) +
               Operator::identity(space) * Complex(0.5 * c.hbar);
  StateVector phi0 = random_state(space, rng, c.cutoff - 2);
  Trajectory traj = integrate(h, phi0, 1.0, 1e-3);
  double worst = heisenberg_check(ops.x[0], traj).max_residual;
  worst = std::max(worst, heisenberg_check(h, traj).max_residual);
  worst = std::max(worst, heisenberg_check(Operator::identity(space), traj).max_residual);
  return worst;
}

inline double flow_action_angle(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  CoordinateOperators ops = coordinate_operators(space);
  Operator h = ops.number[0] * Complex(2.0 * c.hbar);  // diagonal generator
  StateVector phi0 = random_state(space, rng);
  Trajectory traj = integrate(h, phi0, 2.0, 1e-3);
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.times.size(); i += 200)
    for (int n = 0; n < space.dim(); ++n)
      worst = std::max(worst, std::abs(std::abs(traj.states[i](n)) -
                                       std::abs(phi0.z()(n))));
  return worst;
}

inline double flow_rescale_invariance(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  Operator h = random_hermitian(space, rng);
  Operator obs = random_hermitian(space, rng);
  StateVector phi0 = random_state(space, rng);
  StateVector phi0c = phi0.scaled(Complex(0.7, -1.9));
  Trajectory a = integrate(h, phi0, 0.5, 1e-3);
  Trajectory b = integrate(h, phi0c, 0.5, 1e-3);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.times.size(); i += 50) {
    StateVector sa(space, a.states[i]);
    StateVector sb(space, b.states[i]);
    worst = std::max(worst, std::abs(eval_f(obs, sa).value - eval_f(obs, sb).value) /
                                std::max(1.0, obs.matrix().norm()));
  }
  return worst;
}

// ---- reconstruction -----------------------------------------------------------

inline double reconstruct_direct_roundtrip(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 20); ++k) {
    StateVector phi = random_state(space, rng, c.cutoff - 1);
    std::map<int, Vec> data;
    for (int mode = 0; mode < space.modes(); ++mode)
      data[mode] = direct_covector_data(phi, mode);
    StateVector rec = reconstruct_direct(space, data);
    worst = std::max(worst, (rec.z() - phi.z()).cwiseAbs().maxCoeff() / phi.radius());
  }
  return worst;
}

inline double reconstruct_recursive_roundtrip(const VerifyConfig& c,
                                              std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  CoordinateOperators ops = coordinate_operators(space);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 20); ++k) {
    StateVector phi = random_state(space, rng);
    Complex f_ab = eval_f(ops.alpha_bar[0], phi).value;
    if (std::abs(f_ab) < 1e-6) continue;  // generic states only
    StateVector rec = reconstruct_recursive(space, 0, recursive_covector_data(phi, 0), f_ab);
    // recovered amplitudes are z / |z|^2
    Vec want = phi.z() / phi.norm2();
    worst = std::max(worst, (rec.z() - want).cwiseAbs().maxCoeff() /
                                want.cwiseAbs().maxCoeff());
  }
  return worst;
}

inline double reconstruct_cross_route(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  CoordinateOperators ops = coordinate_operators(space);
  double worst = 0.0;
  for (int k = 0; k < std::min(c.cases, 10); ++k) {
    StateVector phi = random_state(space, rng, c.cutoff - 1);
    Complex f_ab = eval_f(ops.alpha_bar[0], phi).value;
    if (std::abs(f_ab) < 1e-6) continue;
    std::map<int, Vec> data;
    for (int mode = 0; mode < space.modes(); ++mode)
      data[mode] = direct_covector_data(phi, mode);
    StateVector direct = canonical_ray(reconstruct_direct(space, data));
    StateVector recursive = canonical_ray(
        reconstruct_recursive(space, 0, recursive_covector_data(phi, 0), f_ab));
    worst = std::max(worst, (direct.z() - recursive.z()).cwiseAbs().maxCoeff());
  }
  return worst;
}

inline double reconstruct_singular_seed(const VerifyConfig& c, std::mt19937_64&) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  StateVector ground = StateVector::basis(space, 0);
  CoordinateOperators ops = coordinate_operators(space);
  Complex f_ab = eval_f(ops.alpha_bar[0], ground).value;  // = 0 on the ground state
  try {
    reconstruct_recursive(space, 0, recursive_covector_data(ground, 0), f_ab);
  } catch (const SingularSeedError&) {
    return 0.0;
  }
  return 1.0;  // error not raised
}

// ---- negative controls ----------------------------------------------------------

inline double control_metric_composition(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(1, 5, c.hbar);  // six levels, the generic-failure setting
  std::vector<double> deviations;
  const int states = 100;
  for (int k = 0; k < states; ++k) {
    StateVector phi = random_state(space, rng);
    deviations.push_back(metric_pullback_failure(phi).deviation_from_delta);
  }
  std::sort(deviations.begin(), deviations.end());
  return deviations[5];  // >= 95 of 100 states must sit above the threshold
}

inline double control_non_holomorphy(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(c.dim, c.cutoff, c.hbar);
  double smallest = 1e300;
  for (int k = 0; k < std::min(c.cases, 20); ++k) {
    StateVector phi = random_state(space, rng);
    Jacobian jac = jacobian(phi, Picture::affine);
    const int dim = space.dim();
    const int d = space.modes();
    // antiholomorphic rows of the alpha columns
    double biggest = jac.j.block(dim, 0, dim, d).cwiseAbs().maxCoeff();
    smallest = std::min(smallest, biggest);
  }
  return smallest;
}

inline double control_quartic_classical_form(const VerifyConfig& c,
                                             std::mt19937_64& rng) {
  FockSpace space(1, 12, c.hbar);  // room for a faithful block under quartic words
  std::uniform_int_distribution<int> split(1, 2);
  double smallest = 1e300;
  for (int k = 0; k < std::min(c.cases, 20); ++k) {
    // random quartic words in x and p with a random fixed ordering
    int a = split(rng);
    int b = split(rng);
    std::vector<CoordinatePower> fa{{NcCoordinate::x, 0, a},
                                    {NcCoordinate::p, 0, 4 - a - 1},
                                    {NcCoordinate::x, 0, 1}};
    std::vector<CoordinatePower> fb{{NcCoordinate::p, 0, b},
                                    {NcCoordinate::x, 0, 4 - b - 1},
                                    {NcCoordinate::p, 0, 1}};
    Operator beta = ordered_monomial(space, fa);
    Operator gamma = ordered_monomial(space, fb);
    ClassicalFormReport r = classical_form_counterexample(beta, gamma);
    Mat block = restricted_block(r.deviation, 8);
    smallest = std::min(smallest, block.cwiseAbs().maxCoeff());
  }
  return smallest;
}

inline double control_metric_route_disagreement(const VerifyConfig& c,
                                                std::mt19937_64& rng) {
  FockSpace space(1, 5, c.hbar);
  double smallest = 1e300;
  for (int k = 0; k < 10; ++k) {
    StateVector phi = random_state(space, rng);
    smallest = std::min(smallest, metric_pullback_failure(phi).route_disagreement);
  }
  return smallest;
}

inline double metric_candidate_two_routes(const VerifyConfig& c, std::mt19937_64& rng) {
  FockSpace space(1, 5, c.hbar);
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    StateVector phi = random_state(space, rng);
    MetricPullbackReport r = metric_pullback_failure(phi);
    worst = std::max({worst,
                      (r.cov_holo_anti - r.cov_holo_anti_sandwich).cwiseAbs().maxCoeff(),
                      (r.contra_anti_holo - r.contra_anti_holo_sandwich)
                          .cwiseAbs().maxCoeff()});
  }
  return worst;
}

}  // namespace checks

inline std::vector<detail::Check> all_checks(const VerifyConfig& cfg) {
  using namespace checks;
  const double tol = cfg.tolerance;
  const double exact = 1e-12;
  const double fd = 1e-6;
  std::vector<detail::Check> list;
  auto add = [&list](std::string group, std::string name, std::string ref,
                     double threshold, bool negative, auto fn) {
    list.push_back(detail::Check{std::move(group), std::move(name), std::move(ref),
                                 threshold, negative, std::move(fn)});
  };

  add("kahler", "kahler/product-hilbert",
      "Kahler product of H functions reproduces the operator product", tol, false,
      [](const VerifyConfig& c, std::mt19937_64& r) {
        return kahler_product_isomorphism(c, r, Picture::hilbert);
      });
  add("kahler", "kahler/product-homogeneous",
      "Kahler product of f functions, homogeneous coordinates", tol, false,
      [](const VerifyConfig& c, std::mt19937_64& r) {
        return kahler_product_isomorphism(c, r, Picture::homogeneous);
      });
  add("kahler", "kahler/product-affine",
      "Kahler product of f functions, affine chart", tol, false,
      [](const VerifyConfig& c, std::mt19937_64& r) {
        return kahler_product_isomorphism(c, r, Picture::affine);
      });
  for (Picture pic : {Picture::hilbert, Picture::homogeneous, Picture::affine}) {
    add("kahler", std::string("kahler/poisson-") + picture_name(pic),
        "Poisson bracket equals the scaled commutator expectation, both routes", tol,
        false, [pic](const VerifyConfig& c, std::mt19937_64& r) {
          return bracket_routes(c, r, BracketKind::poisson, pic);
        });
    add("kahler", std::string("kahler/riemann-") + picture_name(pic),
        "Riemann bracket equals the anticommutator form, both routes", tol, false,
        [pic](const VerifyConfig& c, std::mt19937_64& r) {
          return bracket_routes(c, r, BracketKind::riemann, pic);
        });
  }
  add("kahler", "kahler/splitting",
      "Kahler product splits into Jordan plus i hbar/2 Poisson parts", exact, false,
      bracket_splitting);
  add("kahler", "kahler/reality",
      "Poisson and Riemann brackets of Hermitian pairs are real", exact, false,
      bracket_reality);
  add("kahler", "kahler/projective-invariance",
      "f functions are invariant under complex rescaling of the state", exact, false,
      projective_invariance);
  add("kahler", "kahler/h-f-relation",
      "H equals (|z|^2 / 2 hbar) f at every state", exact, false, h_f_relation);
  add("kahler", "kahler/uncertainty-sweep",
      "metric-strengthened uncertainty inequality on random Hermitian pairs", tol,
      false, uncertainty_sweep);
  add("kahler", "kahler/uncertainty-saturation",
      "x, p on the ground state saturate the bound at hbar/2", exact, false,
      uncertainty_saturation);

  add("geometry", "geometry/metric-degeneracy",
      "homogeneous Fubini-Study tensor annihilates the vertical directions", exact,
      false, metric_degeneracy);
  add("geometry", "geometry/affine-inverse",
      "affine metric times its inverse is the identity on the chart", exact, false,
      affine_inverse_identity);
  add("geometry", "geometry/fs-distance-orthogonal",
      "geodesic distance between orthogonal rays is pi sqrt(hbar/2)", exact, false,
      fs_orthogonal_distance);
  add("geometry", "geometry/fs-triangle",
      "geodesic distance satisfies the triangle inequality", exact, false, fs_triangle);
  add("geometry", "geometry/killing-metric",
      "Killing reduction of the conformal metric gives the closed form", exact, false,
      [](const VerifyConfig& c, std::mt19937_64& r) {
        return killing_reduction_closed_forms(c, r, Variance::covariant);
      });
  add("geometry", "geometry/killing-inverse",
      "Killing reduction of the conformal inverse gives the closed form", exact, false,
      [](const VerifyConfig& c, std::mt19937_64& r) {
        return killing_reduction_closed_forms(c, r, Variance::contravariant);
      });
  add("geometry", "geometry/killing-projector",
      "Killing reduction of the mixed identity gives the vertical projector", exact,
      false, [](const VerifyConfig& c, std::mt19937_64& r) {
        return killing_reduction_closed_forms(c, r, Variance::mixed);
      });
  add("geometry", "geometry/projector-idempotent",
      "the vertical projector squares to itself", exact, false, projector_idempotence);
  add("geometry", "geometry/christoffel-fd",
      "closed-form Christoffel symbols match the finite-difference Levi-Civita form",
      fd, false, christoffel_closed_vs_fd);
  add("geometry", "geometry/covariant-derivative",
      "projected covector derivative equals -i d dbar f", tol, false,
      covariant_derivative_analytic);
  add("geometry", "geometry/covariant-derivative-fd",
      "finite-difference route of the projected covector derivative", fd, false,
      covariant_derivative_fd);
  add("geometry", "geometry/horizontality",
      "Hamiltonian covectors pair to zero with the fiber directions", exact, false,
      horizontality);
  add("geometry", "geometry/ds2-forms",
      "bra-ket and coordinate forms of the line element agree", 1e-8, false,
      ds2_forms_agree);
  add("geometry", "geometry/sphere-decomposition",
      "metric restricted to the sphere matches the radial split", exact, false,
      sphere_metric_decomposition);

  add("fields", "fields/explicit-vs-generic",
      "closed-form coordinate fields equal the symplectic contraction", exact, false,
      explicit_vs_generic_fields);
  add("fields", "fields/xhf-decomposition",
      "full-space field splits into horizontal lift plus fiber term", tol, false,
      xhf_decomposition_residual);
  add("fields", "fields/theta-component",
      "closed form of the phase component of the horizontal lift", tol, false,
      xhf_theta_component);
  add("fields", "fields/no-radial-component",
      "Hamiltonian fields have no radial pairing", exact, false, no_radial_component);
  add("fields", "fields/flow-tangency",
      "full-space field equals (1/i hbar) beta phi for Hermitian beta", exact, false,
      flow_tangency);
  add("fields", "fields/dh-pairing",
      "dH paired with a Hamiltonian field gives the Poisson bracket", tol, false,
      dh_pairing_vs_bracket);

  add("nc", "nc/canonical-pairings",
      "coordinate derivatives act canonically on the coordinates", exact, false,
      nc_canonical_pairings);
  add("nc", "nc/leibniz", "adjoint-action derivatives satisfy the Leibniz rule", exact,
      false, nc_leibniz);
  add("nc", "nc/commuting-derivations",
      "coordinate derivatives commute on the faithful block", exact, false,
      nc_commuting_derivations);
  add("nc", "nc/hamilton-form",
      "brackets with the coordinates give Hamilton-form derivatives", exact, false,
      nc_hamilton_form);
  add("nc", "nc/jacobi", "operator Poisson bracket satisfies the Jacobi identity",
      exact, false, nc_jacobi);
  add("nc", "nc/born-jordan",
      "bracket of coordinate powers is the Born-Jordan ordered derivative", exact,
      false, nc_born_jordan_identity);
  add("nc", "nc/f-picture-consistency",
      "operator bracket expectation equals the f-picture Poisson bracket", tol, false,
      nc_f_picture_consistency);
  add("nc", "nc/classical-deviation-value",
      "classical-form bracket of x^2, p^2 misses the true one by 2 i hbar", exact,
      false, nc_classical_deviation_value);

  add("pullback", "pullback/left-inverse-affine",
      "Jacobian left inverse is the identity, affine chart", tol, false,
      [](const VerifyConfig& c, std::mt19937_64& r) {
        return jacobian_left_inverse(c, r, Picture::affine);
      });
  add("pullback", "pullback/left-inverse-homogeneous",
      "Jacobian left inverse is the identity, homogeneous coordinates", tol, false,
      [](const VerifyConfig& c, std::mt19937_64& r) {
        return jacobian_left_inverse(c, r, Picture::homogeneous);
      });
  add("pullback", "pullback/left-inverse-hilbert",
      "Jacobian left inverse carries the |z|^2 / 2 hbar factor", tol, false,
      [](const VerifyConfig& c, std::mt19937_64& r) {
        return jacobian_left_inverse(c, r, Picture::hilbert);
      });
  add("pullback", "pullback/omega-covariant",
      "covariant symplectic pull-back blocks are 0 and (i/2) delta", tol, false,
      [](const VerifyConfig& c, std::mt19937_64& r) {
        return omega_pullback_values(c, r, true);
      });
  add("pullback", "pullback/omega-contravariant",
      "contravariant symplectic pull-back blocks are 0 and 2i delta", tol, false,
      [](const VerifyConfig& c, std::mt19937_64& r) {
        return omega_pullback_values(c, r, false);
      });
  add("pullback", "pullback/pairings",
      "coordinate 1-form pairings match, including the sphere restriction", tol, false,
      pairing_table);
  add("pullback", "pullback/one-form-routes",
      "directional derivatives of H and f agree with the bra-ket forms on the sphere",
      tol, false, one_form_routes);
  add("pullback", "pullback/table1-consistency",
      "all three pictures agree on the sphere", tol, false, table1_consistency);
  add("pullback", "pullback/naturality",
      "field application commutes with the coordinate map", tol, false,
      pullback_naturality);
  add("pullback", "pullback/metric-candidate-routes",
      "bracket and sandwich routes of the metric candidates agree", tol, false,
      metric_candidate_two_routes);

  add("flow", "flow/harmonic-phases",
      "harmonic trajectory carries the e^{-i omega_n t} phases", 1e-8, false,
      flow_harmonic_phases);
  add("flow", "flow/rk4-vs-spectral",
      "rk4 integration matches the spectral propagator", fd, false,
      flow_rk4_vs_spectral);
  add("flow", "flow/heisenberg",
      "numeric d/dt of H_K matches the commutator expectation", fd, false,
      flow_heisenberg);
  add("flow", "flow/action-angle",
      "coordinate magnitudes are conserved under a diagonal generator", tol, false,
      flow_action_angle);
  add("flow", "flow/rescale-invariance",
      "projected observables ignore a global rescaling of the initial state", tol,
      false, flow_rescale_invariance);

  add("reconstruct", "reconstruct/direct",
      "amplitudes recovered from the full-space covector data", tol, false,
      reconstruct_direct_roundtrip);
  add("reconstruct", "reconstruct/recursive",
      "amplitudes recovered by the f-seeded recursion", tol, false,
      reconstruct_recursive_roundtrip);
  add("reconstruct", "reconstruct/cross-route",
      "direct and recursive recoveries agree up to ray convention", tol, false,
      reconstruct_cross_route);
  add("reconstruct", "reconstruct/singular-seed",
      "vanishing lowering expectation raises the singular-seed error", 0.5, false,
      reconstruct_singular_seed);

  add("negative-controls", "negative-controls/metric-composition",
      "candidate metric pull-backs do not compose to the identity", 1e-3, true,
      control_metric_composition);
  add("negative-controls", "negative-controls/non-holomorphy",
      "antiholomorphic Jacobian entries of the coordinate map are nonzero", 1e-3, true,
      control_non_holomorphy);
  add("negative-controls", "negative-controls/quartic-classical-form",
      "classical-form bracket fails on generic quartic words", 1e-3, true,
      control_quartic_classical_form);
  add("negative-controls", "negative-controls/metric-route-disagreement",
      "H-route and f-route metric candidates disagree off the isomorphism", 1e-3, true,
      control_metric_route_disagreement);

  (void)cfg;
  return list;
}

// Run the selected suite; entries execute concurrently, each on its own
// deterministic stream, and the report is assembled sorted by entry name.
inline SuiteReport run_verification(const VerifyConfig& cfg) {
  std::vector<detail::Check> selected;
  for (detail::Check& c : all_checks(cfg))
    if (cfg.suite == "all" || cfg.suite == c.group) selected.push_back(std::move(c));
  if (selected.empty())
    throw ParameterError("run_verification: unknown suite '" + cfg.suite + "'");

  std::vector<std::future<SuiteEntry>> futures;
  futures.reserve(selected.size());
  for (const detail::Check& c : selected)
    futures.push_back(std::async(std::launch::async, [&cfg, &c]() {
      std::mt19937_64 rng(cfg.seed ^ detail::fnv1a(c.name));
      double residual = c.run(cfg, rng);
      bool ok = c.negative ? residual > c.threshold : residual <= c.threshold;
      std::string status = ok ? (c.negative ? "expected-nonzero" : "pass") : "fail";
      return SuiteEntry{c.name, c.ref, residual, c.threshold, status};
    }));

  SuiteReport report;
  report.suite = cfg.suite;
  report.config = cfg;
  for (auto& f : futures) report.entries.push_back(f.get());
  std::sort(report.entries.begin(), report.entries.end(),
            [](const SuiteEntry& a, const SuiteEntry& b) { return a.name < b.name; });
  for (const SuiteEntry& e : report.entries)
    if (e.status == "fail") report.all_passed = false;
  return report;
}

}  // namespace qgeom
