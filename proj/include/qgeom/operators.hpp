#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "qgeom/fock.hpp"

namespace qgeom {

// Dense complex matrix acting on the truncated space.
class Operator {
 public:
  Operator(FockSpace space, Mat matrix,
           std::optional<bool> hermitian_hint = std::nullopt)
      : space_(space), m_(std::move(matrix)), hermitian_hint_(hermitian_hint) {
    if (m_.rows() != space_.dim() || m_.cols() != space_.dim())
      throw SpaceMismatchError("Operator: matrix shape != space dimension");
    if (hermitian_hint_ && *hermitian_hint_ && !is_hermitian())
      throw HermiticityError("Operator: hinted Hermitian but M != M^dagger");
  }

  static Operator zero(const FockSpace& space) {
    return Operator(space, Mat::Zero(space.dim(), space.dim()));
  }
  static Operator identity(const FockSpace& space) {
    return Operator(space, Mat::Identity(space.dim(), space.dim()), true);
  }

  const FockSpace& space() const { return space_; }
  const Mat& matrix() const { return m_; }
  std::optional<bool> hermitian_hint() const { return hermitian_hint_; }

  bool is_hermitian(double tol = 1e-12) const {
    double scale = std::max(1.0, m_.norm());
    return (m_ - m_.adjoint()).norm() <= tol * scale;
  }

  Operator adjoint() const { return Operator(space_, m_.adjoint()); }

  Operator operator+(const Operator& o) const {
    require_same_space(space_, o.space_, "operator+");
    return Operator(space_, m_ + o.m_);
  }
  Operator operator-(const Operator& o) const {
    require_same_space(space_, o.space_, "operator-");
    return Operator(space_, m_ - o.m_);
  }
  Operator operator*(const Operator& o) const {
    require_same_space(space_, o.space_, "operator*");
    return Operator(space_, m_ * o.m_);
  }
  Operator operator*(Complex c) const { return Operator(space_, Mat(c * m_)); }
  friend Operator operator*(Complex c, const Operator& o) { return o * c; }
  Operator operator-() const { return Operator(space_, Mat(-m_)); }

 private:
  FockSpace space_;
  Mat m_;
  std::optional<bool> hermitian_hint_;
};

inline Operator commutator(const Operator& a, const Operator& b) {
  require_same_space(a.space(), b.space(), "commutator");
  return Operator(a.space(), a.matrix() * b.matrix() - b.matrix() * a.matrix());
}

inline Operator anticommutator(const Operator& a, const Operator& b) {
  require_same_space(a.space(), b.space(), "anticommutator");
  return Operator(a.space(), a.matrix() * b.matrix() + b.matrix() * a.matrix());
}

// Jordan product (beta, gamma)_J = [beta, gamma]_+ / 2, the symmetric part of
// the operator product.
inline Operator jordan(const Operator& a, const Operator& b) {
  return anticommutator(a, b) * Complex(0.5);
}

enum class AlgebraOp { product, commutator, anticommutator, jordan, adjoint };

inline Operator op_algebra(const Operator& a, const Operator& b, AlgebraOp kind) {
  require_same_space(a.space(), b.space(), "op_algebra");
  switch (kind) {
    case AlgebraOp::product: return a * b;
    case AlgebraOp::commutator: return commutator(a, b);
    case AlgebraOp::anticommutator: return anticommutator(a, b);
    case AlgebraOp::jordan: return jordan(a, b);
    case AlgebraOp::adjoint: return a.adjoint();
  }
  throw ParameterError("op_algebra: unknown kind");
}

inline Operator matrix_power(const Operator& a, int k) {
  if (k < 0) throw ParameterError("matrix_power: negative exponent");
  Operator out = Operator::identity(a.space());
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

// The coordinate observables of the space.  alpha_i lowers mode i with
// amplitude sqrt(2 hbar n_i); a_i is the conventional annihilator with
// sqrt(n_i).  x = (alpha + alpha_bar)/2, p = (alpha - alpha_bar)/(2i),
// N = alpha_bar alpha / (2 hbar).
struct CoordinateOperators {
  std::vector<Operator> a;
  std::vector<Operator> alpha;
  std::vector<Operator> alpha_bar;
  std::vector<Operator> x;
  std::vector<Operator> p;
  std::vector<Operator> number;
  Operator identity;
};

inline CoordinateOperators coordinate_operators(const FockSpace& space) {
  const int dim = space.dim();
  const double hbar = space.hbar();
  std::vector<Operator> a, alpha, alpha_bar, x, p, number;
  for (int i = 0; i < space.modes(); ++i) {
    Mat low = Mat::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
      int n_i = space.occupation(k, i);
      int down = space.lowered(k, i);
      if (down >= 0) low(down, k) = std::sqrt(static_cast<double>(n_i));
    }
    Mat al = std::sqrt(2.0 * hbar) * low;
    a.emplace_back(space, low);
    alpha.emplace_back(space, al);
    alpha_bar.emplace_back(space, Mat(al.adjoint()));
    x.emplace_back(space, Mat(0.5 * (al + al.adjoint())), true);
    p.emplace_back(space, Mat((al - al.adjoint()) / (2.0 * kImag)), true);
    number.emplace_back(space, Mat(al.adjoint() * al / (2.0 * hbar)), true);
  }
  return CoordinateOperators{std::move(a),      std::move(alpha), std::move(alpha_bar),
                             std::move(x),      std::move(p),     std::move(number),
                             Operator::identity(space)};
}

// Born-Jordan ordered monomial BJ(x^a p^b), defined through the x-spread sum
//   (1/(a+1)) sum_{k=0..a} x^{a-k} p^b x^k.
// The total ladder degree a+b must fit within the cutoff so the product keeps
// a faithful window of states.
inline Operator born_jordan(const FockSpace& space, int a_exp, int b_exp,
                            int mode = 0) {
  if (a_exp < 0 || b_exp < 0) throw ParameterError("born_jordan: negative exponent");
  if (mode < 0 || mode >= space.modes()) throw ParameterError("born_jordan: bad mode");
  if (a_exp + b_exp > space.cutoff())
    throw TruncationError("born_jordan: ladder degree exceeds faithful budget");
  CoordinateOperators c = coordinate_operators(space);
  const Operator& x = c.x[mode];
  const Operator& p = c.p[mode];
  Operator pb = matrix_power(p, b_exp);
  Operator sum = Operator::zero(space);
  for (int k = 0; k <= a_exp; ++k)
    sum = sum + matrix_power(x, a_exp - k) * pb * matrix_power(x, k);
  return sum * Complex(1.0 / (a_exp + 1));
}

// Submatrix over basis indices whose every per-mode occupation stays at least
// `margin` below the cutoff.  Operator-polynomial identities of ladder degree
// g hold exactly on the block with margin g.
inline Mat restricted_block(const Operator& op, int margin) {
  const FockSpace& s = op.space();
  std::vector<int> keep;
  for (int k = 0; k < s.dim(); ++k) {
    bool ok = true;
    for (int i = 0; i < s.modes(); ++i)
      if (s.occupation(k, i) > s.cutoff() - margin) ok = false;
    if (ok) keep.push_back(k);
  }
  Mat out(keep.size(), keep.size());
  for (std::size_t r = 0; r < keep.size(); ++r)
    for (std::size_t c = 0; c < keep.size(); ++c)
      out(r, c) = op.matrix()(keep[r], keep[c]);
  return out;
}

}  // namespace qgeom
