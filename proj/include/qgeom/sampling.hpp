#pragma once

#include <random>

#include "qgeom/operators.hpp"

namespace qgeom {

// Seeded, reproducible samples for tests and the verification suite.
// All draws use std::mt19937_64 so a fixed seed yields a fixed report.

inline Complex random_unit_complex(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return Complex(u(rng), u(rng));
}

// Random state with support restricted to total occupation <= max_total_occ
// (< 0: no restriction).  Identities built from ladder polynomials of degree g
// hold exactly on states sampled with max_total_occ = cutoff - g.
inline StateVector random_state(const FockSpace& space, std::mt19937_64& rng,
                                int max_total_occ = -1) {
  Vec z = Vec::Zero(space.dim());
  for (int k = 0; k < space.dim(); ++k) {
    if (max_total_occ >= 0 && space.total_occupation(k) > max_total_occ) continue;
    z(k) = random_unit_complex(rng);
  }
  if (z.squaredNorm() == 0.0) z(0) = 1.0;
  return StateVector(space, std::move(z));
}

inline Operator random_operator(const FockSpace& space, std::mt19937_64& rng) {
  Mat m(space.dim(), space.dim());
  for (int r = 0; r < space.dim(); ++r)
    for (int c = 0; c < space.dim(); ++c) m(r, c) = random_unit_complex(rng);
  return Operator(space, std::move(m));
}

inline Operator random_hermitian(const FockSpace& space, std::mt19937_64& rng) {
  Mat m = random_operator(space, rng).matrix();
  return Operator(space, Mat(0.5 * (m + m.adjoint())), true);
}

// Random displacement vector of magnitude ~ |z|.
inline Vec random_displacement(const FockSpace& space, std::mt19937_64& rng) {
  Vec dz(space.dim());
  for (int k = 0; k < space.dim(); ++k) dz(k) = random_unit_complex(rng);
  return dz;
}

}  // namespace qgeom
