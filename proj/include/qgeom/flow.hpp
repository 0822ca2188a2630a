#pragma once

#include <ostream>
#include <utility>
#include <vector>

#include "qgeom/fields.hpp"

namespace qgeom {

enum class IntegratorKind { rk4, split_exact };

// Sampled solution of dz/dt = X_H(z), the Hamiltonian form of the evolution
// equation.  For Hermitian generators the flow is unitary: |z|^2 and the
// generator function stay constant up to integrator error.
struct Trajectory {
  std::vector<double> times;
  std::vector<Vec> states;
  Operator generator;
  IntegratorKind integrator;
  double step;     // sampling step
  double substep;  // internal rk4 step after adaptive halving
};

namespace detail {

inline Vec flow_rhs(const Operator& h, const FockSpace& space, const Vec& z) {
  // X_H^m = -2i delta^{mn} dbar_n H = (1/i hbar) (H z)^m
  return Vec(-kImag / space.hbar() * (h.matrix() * z));
}

inline Vec rk4_step(const Operator& h, const FockSpace& space, const Vec& z,
                    double dt) {
  Vec k1 = flow_rhs(h, space, z);
  Vec k2 = flow_rhs(h, space, Vec(z + 0.5 * dt * k1));
  Vec k3 = flow_rhs(h, space, Vec(z + 0.5 * dt * k2));
  Vec k4 = flow_rhs(h, space, Vec(z + dt * k3));
  return Vec(z + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

}  // namespace detail

// Integrate the Hamiltonian flow from phi0 to t_end, sampling every `step`.
// rk4 integrates the coordinate ODE, with the internal substep halved until
// the norm drift over the run is below 1e-8; split_exact applies the spectral
// propagator exp(-i H dt / hbar) and serves as ground truth.
inline Trajectory integrate(const Operator& hamiltonian, const StateVector& phi0,
                            double t_end, double step,
                            IntegratorKind kind = IntegratorKind::rk4) {
  require_same_space(hamiltonian.space(), phi0.space(), "integrate");
  if (!hamiltonian.is_hermitian())
    throw HermiticityError("integrate: Hamiltonian must be Hermitian");
  if (!(step > 0.0) || !(t_end >= 0.0))
    throw ParameterError("integrate: step and t_end must be positive");
  const FockSpace& space = phi0.space();
  const int samples = static_cast<int>(std::round(t_end / step));

  Trajectory traj{{}, {}, hamiltonian, kind, step, step};

  if (kind == IntegratorKind::split_exact) {
    Eigen::SelfAdjointEigenSolver<Mat> es(hamiltonian.matrix());
    const Mat& u = es.eigenvectors();
    Vec coeff = u.adjoint() * phi0.z();
    for (int k = 0; k <= samples; ++k) {
      double t = k * step;
      Vec phased(coeff.size());
      for (int e = 0; e < coeff.size(); ++e)
        phased(e) = std::exp(-kImag * t / space.hbar() * es.eigenvalues()(e)) * coeff(e);
      traj.times.push_back(t);
      traj.states.push_back(Vec(u * phased));
    }
    return traj;
  }

  const double norm0 = phi0.norm2();
  for (int halvings = 0;; ++halvings) {
    traj.times.clear();
    traj.states.clear();
    Vec z = phi0.z();
    traj.times.push_back(0.0);
    traj.states.push_back(z);
    const int sub = 1 << halvings;
    const double dt = step / sub;
    for (int k = 1; k <= samples; ++k) {
      for (int i = 0; i < sub; ++i) z = detail::rk4_step(hamiltonian, space, z, dt);
      traj.times.push_back(k * step);
      traj.states.push_back(z);
    }
    traj.substep = dt;
    double drift = std::abs(z.squaredNorm() - norm0) / norm0;
    if (drift < 1e-8 || halvings >= 20) break;
  }
  return traj;
}

// Residual of the Heisenberg equation of motion along a sampled trajectory:
// numeric d/dt of H_K against <phi|[K, H]|phi> / (2 i hbar^2).
struct HeisenbergReport {
  double max_residual;
};

inline HeisenbergReport heisenberg_check(const Operator& k_op, const Trajectory& traj) {
  require_same_space(k_op.space(), traj.generator.space(), "heisenberg_check");
  const std::size_t n = traj.times.size();
  if (n < 3) throw ParameterError("heisenberg_check: need at least 3 samples");
  const FockSpace& space = k_op.space();
  const double hbar = space.hbar();
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    StateVector phi(space, traj.states[i]);
    values[i] = std::real(eval_H(k_op, phi).value);
  }
  const double dt = traj.step;
  const Mat comm = k_op.matrix() * traj.generator.matrix() -
                   traj.generator.matrix() * k_op.matrix();
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    double deriv;
    if (i >= 2 && i + 2 < n) {
      deriv = (-values[i + 2] + 8.0 * values[i + 1] - 8.0 * values[i - 1] +
               values[i - 2]) / (12.0 * dt);
    } else {
      deriv = (values[i + 1] - values[i - 1]) / (2.0 * dt);
    }
    const Vec& z = traj.states[i];
    Complex expected = (z.adjoint() * comm * z)(0) / (2.0 * kImag * hbar * hbar);
    worst = std::max(worst, std::abs(deriv - std::real(expected)));
  }
  return HeisenbergReport{worst};
}

// CSV export: t, Re z^[n], Im z^[n] for every basis index, then the named
// observables as normalized expectations.
inline void write_trajectory_csv(
    std::ostream& os, const Trajectory& traj,
    const std::vector<std::pair<std::string, Operator>>& observables = {}) {
  const FockSpace& space = traj.generator.space();
  os << "t";
  for (int k = 0; k < space.dim(); ++k) os << ",re_z" << k << ",im_z" << k;
  for (const auto& [name, op] : observables) os << "," << name;
  os << "\n";
  os.precision(17);
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    os << traj.times[i];
    for (int k = 0; k < space.dim(); ++k)
      os << "," << traj.states[i](k).real() << "," << traj.states[i](k).imag();
    for (const auto& [name, op] : observables) {
      StateVector phi(space, traj.states[i]);
      os << "," << std::real(eval_f(op, phi).value);
    }
    os << "\n";
  }
}

}  // namespace qgeom
