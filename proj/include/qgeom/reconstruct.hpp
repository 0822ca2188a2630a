#pragma once

#include <map>

#include "qgeom/fields.hpp"

namespace qgeom {

// State recovery from Hamiltonian-covector data of the lowering coordinates.
//
// Direct route: the full-space covector of alphabar_j has antiholomorphic
// components  -i sqrt(n_j / 2 hbar) z^{[n] - e_j},  so each entry with
// n_j >= 1 is a rescaled amplitude.  One mode determines every amplitude
// whose occupation in that mode sits below the cutoff; the top slice of the
// truncated index set carries no data and is set to zero.
//
// Recursive route: the reduced-picture components mix in f_alphabar_j; the
// amplitudes follow by ascending n_j from the seed at n_j = 0, at the price
// of dividing by f_alphabar_j.

inline Vec direct_covector_data(const StateVector& phi, int mode) {
  return explicit_alpha_field(mode, true, phi, Picture::hilbert,
                              TangentKind::covector).comp_anti;
}

inline Vec recursive_covector_data(const StateVector& phi, int mode) {
  return explicit_alpha_field(mode, true, phi, Picture::homogeneous,
                              TangentKind::covector).comp_anti;
}

inline StateVector reconstruct_direct(const FockSpace& space,
                                      const std::map<int, Vec>& data_by_mode,
                                      double consistency_tol = 1e-8) {
  if (data_by_mode.empty())
    throw ParameterError("reconstruct_direct: no data supplied");
  const double hbar = space.hbar();
  Vec z = Vec::Zero(space.dim());
  std::vector<bool> known(space.dim(), false);
  double scale = 0.0;
  for (const auto& [mode, data] : data_by_mode) {
    if (mode < 0 || mode >= space.modes())
      throw ParameterError("reconstruct_direct: bad mode");
    if (data.size() != space.dim())
      throw SpaceMismatchError("reconstruct_direct: data size != space dimension");
    scale = std::max(scale, data.cwiseAbs().maxCoeff());
    for (int n = 0; n < space.dim(); ++n) {
      int n_j = space.occupation(n, mode);
      if (n_j == 0) continue;  // sqrt(0) slot, no information
      int target = space.lowered(n, mode);
      Complex amp = data(n) / (-kImag * std::sqrt(n_j / (2.0 * hbar)));
      if (known[target]) {
        if (std::abs(amp - z(target)) > consistency_tol * std::max(1.0, scale))
          throw InconsistencyError(
              "reconstruct_direct: overlapping mode data disagree");
      } else {
        z(target) = amp;
        known[target] = true;
      }
    }
  }
  if (z.squaredNorm() == 0.0)
    throw InconsistencyError("reconstruct_direct: data determine no nonzero amplitude");
  return StateVector(space, std::move(z));
}

inline StateVector reconstruct_recursive(const FockSpace& space, int mode,
                                         const Vec& data, Complex f_value) {
  if (mode < 0 || mode >= space.modes())
    throw ParameterError("reconstruct_recursive: bad mode");
  if (data.size() != space.dim())
    throw SpaceMismatchError("reconstruct_recursive: data size != space dimension");
  if (std::abs(f_value) < 1e-12)
    throw SingularSeedError(
        "reconstruct_recursive: f_alphabar vanishes, recursion seed undefined");
  const double hbar = space.hbar();
  Vec z = Vec::Zero(space.dim());
  // ascend n_j: every lowered index is visited first in flat order
  for (int n = 0; n < space.dim(); ++n) {
    int n_j = space.occupation(n, mode);
    Complex below = n_j > 0 ? z(space.lowered(n, mode)) : Complex(0.0);
    z(n) = -kImag / f_value * (data(n) + kImag * std::sqrt(2.0 * hbar * n_j) * below);
  }
  if (z.squaredNorm() == 0.0)
    throw InconsistencyError("reconstruct_recursive: zero reconstruction");
  return StateVector(space, std::move(z));
}

// Fix the ray convention before comparisons: first nonzero amplitude in flat
// index order made real positive, |z|^2 = 2 hbar.
inline StateVector canonical_ray(const StateVector& phi) {
  const Vec& z = phi.z();
  Complex lead = 0.0;
  for (int k = 0; k < z.size(); ++k)
    if (std::abs(z(k)) > 1e-14 * phi.radius()) {
      lead = z(k);
      break;
    }
  if (lead == Complex(0.0)) throw ZeroStateError("canonical_ray: no leading amplitude");
  StateVector rotated = phi.scaled(std::abs(lead) / lead);
  return rotated.on_sphere();
}

}  // namespace qgeom
