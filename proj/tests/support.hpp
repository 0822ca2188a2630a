#pragma once

// Shared test oracles, independent of the analytic paths they check.

#include <functional>

#include "qgeom/qgeom.hpp"

namespace testsupport {

using qgeom::Complex;
using qgeom::Vec;
using qgeom::Mat;

// Central-difference Wirtinger derivative of func at z in slot m.
inline Complex fd_wirtinger(const std::function<Complex(const Vec&)>& func,
                            const Vec& z, int m, bool anti,
                            double step = 1e-5) {
  auto at = [&](Complex dz) {
    Vec zp = z;
    zp(m) += dz;
    return func(zp);
  };
  const Complex i{0.0, 1.0};
  Complex dx = (at(step) - at(-step)) / (2.0 * step);
  Complex dy = (at(i * step) - at(-i * step)) / (2.0 * step);
  return anti ? 0.5 * (dx + i * dy) : 0.5 * (dx - i * dy);
}

inline double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }
inline double max_abs(const Vec& v) { return v.cwiseAbs().maxCoeff(); }

inline Mat identity_like(const qgeom::FockSpace& s) {
  return Mat::Identity(s.dim(), s.dim());
}

}  // namespace testsupport
