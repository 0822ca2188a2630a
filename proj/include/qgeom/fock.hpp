#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "qgeom/errors.hpp"

namespace qgeom {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

inline constexpr Complex kImag{0.0, 1.0};

// Truncated multi-mode Fock space.  Basis states are occupation multi-indices
// (n_1,...,n_d) with 0 <= n_i <= cutoff, flattened with mode 1 fastest, so for
// d = 1 the flat index equals the occupation number.  Cheap value type; states
// and operators carry a copy.
class FockSpace {
 public:
  FockSpace(int modes, int cutoff, double hbar = 1.0)
      : modes_(modes), cutoff_(cutoff), hbar_(hbar) {
    if (modes_ < 1 || modes_ > 3) throw ParameterError("mode count must be in 1..3");
    if (cutoff_ < 2) throw ParameterError("occupation cutoff must be at least 2");
    if (!(hbar_ > 0.0)) throw ParameterError("hbar must be positive");
    dim_ = 1;
    for (int i = 0; i < modes_; ++i) dim_ *= cutoff_ + 1;
  }

  int modes() const { return modes_; }
  int cutoff() const { return cutoff_; }
  double hbar() const { return hbar_; }
  int dim() const { return dim_; }

  int stride(int mode) const {
    int s = 1;
    for (int i = 0; i < mode; ++i) s *= cutoff_ + 1;
    return s;
  }

  int occupation(int flat, int mode) const {
    return (flat / stride(mode)) % (cutoff_ + 1);
  }

  std::array<int, 3> occupations(int flat) const {
    std::array<int, 3> n{0, 0, 0};
    for (int i = 0; i < modes_; ++i) n[i] = occupation(flat, i);
    return n;
  }

  int flat(const std::array<int, 3>& n) const {
    int idx = 0;
    for (int i = 0; i < modes_; ++i) idx += n[i] * stride(i);
    return idx;
  }

  int total_occupation(int flat) const {
    int t = 0;
    for (int i = 0; i < modes_; ++i) t += occupation(flat, i);
    return t;
  }

  // Shifted index [n] with n_mode raised/lowered by one; -1 when the shift
  // leaves the truncated index set (the sqrt(0) terms of the ladder algebra).
  int raised(int flat, int mode) const {
    return occupation(flat, mode) == cutoff_ ? -1 : flat + stride(mode);
  }
  int lowered(int flat, int mode) const {
    return occupation(flat, mode) == 0 ? -1 : flat - stride(mode);
  }

  bool operator==(const FockSpace& o) const {
    return modes_ == o.modes_ && cutoff_ == o.cutoff_ && hbar_ == o.hbar_;
  }
  bool operator!=(const FockSpace& o) const { return !(*this == o); }

 private:
  int modes_;
  int cutoff_;
  double hbar_;
  int dim_;
};

inline void require_same_space(const FockSpace& a, const FockSpace& b,
                               const char* what) {
  if (a != b) throw SpaceMismatchError(std::string(what) + ": FockSpace mismatch");
}

// Homogeneous coordinates z^[n] of a Hilbert-space point.  Amplitudes carry
// units of sqrt(hbar).  Never the zero vector.
class StateVector {
 public:
  StateVector(FockSpace space, Vec amplitudes)
      : space_(space), z_(std::move(amplitudes)) {
    if (z_.size() != space_.dim())
      throw SpaceMismatchError("StateVector: amplitude count != space dimension");
    if (!z_.allFinite()) throw ParameterError("StateVector: non-finite amplitude");
    if (z_.squaredNorm() <= 0.0)
      throw ZeroStateError("StateVector: zero vector is not a physical state");
  }

  static StateVector basis(const FockSpace& space, int flat, Complex amplitude = 1.0) {
    Vec z = Vec::Zero(space.dim());
    z(flat) = amplitude;
    return StateVector(space, std::move(z));
  }

  const FockSpace& space() const { return space_; }
  const Vec& z() const { return z_; }
  Complex amplitude(int flat) const { return z_(flat); }

  double norm2() const { return z_.squaredNorm(); }  // |z|^2
  double radius() const { return std::sqrt(norm2()); }

  StateVector scaled(Complex c) const { return StateVector(space_, Vec(c * z_)); }

  // Rescale so that |z|^2 matches the given value (default: the sphere 2*hbar).
  StateVector normalized_to(double target_norm2) const {
    return scaled(std::sqrt(target_norm2 / norm2()));
  }
  StateVector on_sphere() const { return normalized_to(2.0 * space_.hbar()); }

  // Largest total occupation carrying a nonzero amplitude.
  int support_cut() const {
    int cut = 0;
    for (int k = 0; k < z_.size(); ++k)
      if (z_(k) != Complex(0.0)) cut = std::max(cut, space_.total_occupation(k));
    return cut;
  }

  // Affine chart w^[n] = z^[n]/z^[0] (so w^[0] == 1).  Requires z^[0] != 0.
  Vec w_chart() const {
    if (z_(0) == Complex(0.0))
      throw ChartError("affine chart undefined where z^[0] = 0");
    return Vec(z_ / z_(0));
  }

 private:
  FockSpace space_;
  Vec z_;
};

inline Complex inner(const StateVector& a, const StateVector& b) {
  require_same_space(a.space(), b.space(), "inner");
  return a.z().adjoint() * b.z();  // <a|b>, antilinear in a
}

}  // namespace qgeom
