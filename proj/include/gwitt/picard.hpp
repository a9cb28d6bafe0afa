#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gwitt/diagram.hpp"
#include "gwitt/z2.hpp"

namespace gwitt {

/// Formal line-bundle generators over a base carrying a complete flag
/// V_1 < ... < V_n = V. BaseDet(i) is det V_i (BaseDet(n) = det V);
/// TautDet(j) is the determinant of the rank-j tautological bundle.
struct Generator {
  enum class Kind { BaseDet, TautDet };
  Kind kind;
  int index;

  static constexpr Generator base(int i) noexcept { return {Kind::BaseDet, i}; }
  static constexpr Generator taut(int j) noexcept { return {Kind::TautDet, j}; }

  friend bool operator==(const Generator&, const Generator&) = default;
};

std::string to_string(const Generator& g);

/// Integer (or mod 2) combination of generators for ambient rank n.
///
/// Coefficients live in a dense Eigen vector of length 2n: BaseDet(1..n)
/// first, then TautDet(1..n). A zero coefficient is simply not part of the
/// support, so equality is coefficientwise and forms are canonical.
template <typename Scalar>
class LineClass {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit LineClass(int ambient) : n_(ambient), coeffs_(Vector::Zero(2 * checked(ambient))) {}

  static LineClass of(int ambient, Generator g, Scalar c = Scalar(1)) {
    LineClass cls(ambient);
    cls.add(g, c);
    return cls;
  }
  static LineClass base(int ambient, int i, Scalar c = Scalar(1)) {
    return of(ambient, Generator::base(i), c);
  }
  static LineClass taut(int ambient, int j, Scalar c = Scalar(1)) {
    return of(ambient, Generator::taut(j), c);
  }

  int ambient() const noexcept { return n_; }
  const Vector& coefficients() const noexcept { return coeffs_; }

  Scalar coeff(Generator g) const { return coeffs_(slot(g)); }
  LineClass& add(Generator g, Scalar c) {
    coeffs_(slot(g)) += c;
    return *this;
  }
  LineClass& set(Generator g, Scalar c) {
    coeffs_(slot(g)) = c;
    return *this;
  }

  bool is_zero() const { return (coeffs_.array() == Scalar(0)).all(); }

  /// True when no TautDet generator is in the support.
  bool is_base_only() const { return (coeffs_.tail(n_).array() == Scalar(0)).all(); }

  /// Non-zero terms, BaseDet ascending then TautDet ascending.
  std::vector<std::pair<Generator, Scalar>> terms() const {
    std::vector<std::pair<Generator, Scalar>> out;
    for (Eigen::Index s = 0; s < coeffs_.size(); ++s) {
      if (coeffs_(s) == Scalar(0)) continue;
      const int idx = static_cast<int>(s % n_) + 1;
      out.emplace_back(s < n_ ? Generator::base(idx) : Generator::taut(idx), coeffs_(s));
    }
    return out;
  }

  /// Replaces every occurrence of `from` by `to`.
  LineClass substitute(Generator from, const LineClass& to) const {
    same_ambient(to);
    LineClass out = *this;
    const Scalar c = out.coeff(from);
    out.set(from, Scalar(0));
    out.coeffs_ += c * to.coeffs_;
    return out;
  }

  LineClass& operator+=(const LineClass& o) {
    same_ambient(o);
    coeffs_ += o.coeffs_;
    return *this;
  }
  LineClass& operator-=(const LineClass& o) {
    same_ambient(o);
    coeffs_ -= o.coeffs_;
    return *this;
  }
  friend LineClass operator+(LineClass a, const LineClass& b) { return a += b; }
  friend LineClass operator-(LineClass a, const LineClass& b) { return a -= b; }
  friend LineClass operator-(LineClass a) {
    a.coeffs_ = -a.coeffs_;
    return a;
  }
  friend LineClass operator*(Scalar c, LineClass a) {
    a.coeffs_ *= c;
    return a;
  }

  friend bool operator==(const LineClass& a, const LineClass& b) {
    return a.n_ == b.n_ && (a.coeffs_.array() == b.coeffs_.array()).all();
  }

 private:
  static int checked(int ambient) {
    if (ambient < 1) throw std::invalid_argument("LineClass: ambient rank must be positive");
    return ambient;
  }
  Eigen::Index slot(Generator g) const {
    if (g.index < 1 || g.index > n_) {
      throw std::out_of_range("LineClass: " + to_string(g) + " outside ambient rank " +
                              std::to_string(n_));
    }
    return (g.kind == Generator::Kind::BaseDet ? 0 : n_) + (g.index - 1);
  }
  void same_ambient(const LineClass& o) const {
    if (o.n_ != n_) throw std::invalid_argument("LineClass: ambient ranks differ");
  }

  int n_;
  Vector coeffs_;
};

using PicClass = LineClass<std::int64_t>;
using PicClassMod2 = LineClass<Z2>;

template <typename Scalar>
std::string to_string(const LineClass<Scalar>& cls) {
  const auto terms = cls.terms();
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [g, c] : terms) {
    long long v;
    if constexpr (std::is_same_v<Scalar, Z2>) {
      v = c.value();
    } else {
      v = static_cast<long long>(c);
    }
    if (!out.empty()) out += v < 0 ? " - " : " + ";
    else if (v < 0) out += "-";
    const long long mag = v < 0 ? -v : v;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += to_string(g);
  }
  return out;
}

/// Coefficientwise reduction mod 2.
PicClassMod2 mod2(const PicClass& cls);

/// V/V^1 = BaseDet(n) - BaseDet(n-1); for n = 1 this is BaseDet(1).
template <typename Scalar>
LineClass<Scalar> quotient_line(int n) {
  LineClass<Scalar> cls = LineClass<Scalar>::base(n, n);
  if (n > 1) cls.add(Generator::base(n - 1), Scalar(-1));
  return cls;
}

/// Sets every BaseDet coefficient to zero (trivial flag V_i = O^i).
template <typename Scalar>
LineClass<Scalar> trivialize(LineClass<Scalar> cls) {
  for (int i = 1; i <= cls.ambient(); ++i) cls.set(Generator::base(i), Scalar(0));
  return cls;
}

/// Rewrites TautDet(d_i) as BaseDet(d_i) wherever e_i = 0.
template <typename Scalar>
LineClass<Scalar> normalize_on_flag(LineClass<Scalar> cls, const JumpTuples& tuples) {
  for (int i = 1; i <= tuples.k(); ++i) {
    if (tuples.e_at(i) == 0) {
      const int j = tuples.d_at(i);
      cls = cls.substitute(Generator::taut(j), LineClass<Scalar>::base(cls.ambient(), j));
    }
  }
  return cls;
}

/// Pull-back along Flag(d, e) -> Grass(d, V): fixes BaseDet, sends TautDet(d)
/// to TautDet(d_k) and normalizes. Throws if `cls` has TautDet(j != d) support.
template <typename Scalar>
LineClass<Scalar> pullback_to_flag(const LineClass<Scalar>& cls, int d, const JumpTuples& tuples) {
  for (int j = 1; j <= cls.ambient(); ++j) {
    if (j != d && !(cls.coeff(Generator::taut(j)) == Scalar(0))) {
      throw std::invalid_argument("pullback_to_flag: class is not defined on Grass(d, V)");
    }
  }
  const int dk = tuples.dvec.back();
  auto moved = cls.substitute(Generator::taut(d), LineClass<Scalar>::taut(cls.ambient(), dk));
  return normalize_on_flag(moved, tuples);
}

/// Relative canonical class of Grass(d, V) -> X: -d det V + n Det_d.
PicClass rel_canonical_grass(int d, int n);

/// Relative canonical class of Flag(dvec, evec) -> X, normalized.
PicClass rel_canonical_flag(const JumpTuples& tuples, int n);

/// Relative canonical class of the resolution Flag(Lambda) -> Grass(d, V)
/// with V of rank d + e.
PicClass rel_canonical_ff(const JumpTuples& tuples, int d, int e);

/// sum_i (d_i - d_{i-1}) e_i
int relative_dimension(const JumpTuples& tuples);

/// rho * det V + t * Det_d, mod 2, for an even diagram.
PicClassMod2 twist_class(const FramedDiagram& diagram);

/// Parity conditions under which the unit form of Flag(Lambda) can be pushed
/// forward to Grass(d, V). Holds for every even diagram, not only those.
bool pushforward_admissible(const FramedDiagram& diagram);

/// Whether a class on Flag(Lambda) lies in the image of Pic(Grass)/2, i.e.
/// has no TautDet support other than TautDet(d_k).
bool in_pullback_image(const PicClassMod2& cls, const JumpTuples& tuples);

/// can(ff) + ff^*(Twist) == 0 in Pic(Flag)/2. Throws on non-even input.
bool verify_cond_even(const FramedDiagram& diagram);

/// Relative canonical classes of the maps in the cellular decomposition of
/// Grass(d, V) along Grass(d, V^1), with V/V^1 expanded in BaseDet terms.
struct CellCanonicals {
  PicClass iota;        ///< Grass(d, V^1) -> Grass(d, V)
  PicClass pi;          ///< blow-up -> Grass(d, V)
  PicClass iota_tilde;  ///< exceptional divisor -> blow-up
  PicClass pi_tilde;    ///< exceptional divisor -> Grass(d, V^1)
};

CellCanonicals cell_canonicals(int d, int n);

/// pi o iota_tilde = iota o pi_tilde, so the canonical classes satisfy
/// can(iota_tilde) + can(pi) == can(pi_tilde) + can(iota).
bool cell_square_commutes(const CellCanonicals& c);

/// Twists L' on Grass(d, V^1) and L'' on Grass(d-1, V^1) paired with a twist
/// L on Grass(d, V) in the localization sequence.
struct LesTwists {
  PicClassMod2 sub;    ///< L' = can(iota) + iota^*(L)
  PicClassMod2 open;   ///< L'' = (alpha^*)^{-1} upsilon^*(L)
};

/// `twist` must be supported on BaseDet generators and TautDet(d); d, e >= 2.
LesTwists les_twists(int d, int e, const PicClassMod2& twist);

}  // namespace gwitt
