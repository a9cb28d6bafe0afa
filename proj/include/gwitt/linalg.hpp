#pragma once

// Exact linear algebra over the integers and over prime fields, on Eigen
// matrices with an integral scalar. Nothing here touches floating point.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace gwitt::linalg {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<std::int64_t>;
using IntVector = Vector<std::int64_t>;

namespace detail {

template <typename Scalar>
Scalar checked_axpy(Scalar y, Scalar q, Scalar x) {
  Scalar prod;
  Scalar out;
  if (__builtin_mul_overflow(q, x, &prod) || __builtin_sub_overflow(y, prod, &out)) {
    throw std::overflow_error("integer elimination overflowed");
  }
  return out;
}

// row_i <- row_i - q * row_j
template <typename Mat, typename Scalar>
void row_axpy(Mat& m, Eigen::Index i, Eigen::Index j, Scalar q) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) m(i, c) = checked_axpy(m(i, c), q, m(j, c));
}

// col_i <- col_i - q * col_j
template <typename Mat, typename Scalar>
void col_axpy(Mat& m, Eigen::Index i, Eigen::Index j, Scalar q) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) m(r, i) = checked_axpy(m(r, i), q, m(r, j));
}

template <typename Scalar>
Scalar abs_value(Scalar x) {
  return x < 0 ? -x : x;
}

}  // namespace detail

/// U * A * V == D with U, V unimodular and D diagonal, each diagonal entry
/// dividing the next.
template <typename Scalar>
struct SmithForm {
  Matrix<Scalar> U;
  Matrix<Scalar> D;
  Matrix<Scalar> V;
  Eigen::Index rank = 0;

  std::vector<Scalar> invariants() const {
    std::vector<Scalar> out;
    for (Eigen::Index i = 0; i < rank; ++i) out.push_back(D(i, i));
    return out;
  }

  /// All non-zero invariant factors are 1, i.e. the cokernel of A is free on
  /// the complement of its image.
  bool image_saturated() const {
    for (Eigen::Index i = 0; i < rank; ++i) {
      if (D(i, i) != 1) return false;
    }
    return true;
  }
};

template <typename Derived>
SmithForm<typename Derived::Scalar> smith_form(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  static_assert(std::is_integral_v<Scalar>, "smith_form needs an integral scalar");
  using Eigen::Index;

  SmithForm<Scalar> s;
  s.D = a;
  const Index m = s.D.rows();
  const Index n = s.D.cols();
  s.U = Matrix<Scalar>::Identity(m, m);
  s.V = Matrix<Scalar>::Identity(n, n);

  auto swap_rows = [&](Index i, Index j) {
    if (i == j) return;
    s.D.row(i).swap(s.D.row(j));
    s.U.row(i).swap(s.U.row(j));
  };
  auto swap_cols = [&](Index i, Index j) {
    if (i == j) return;
    s.D.col(i).swap(s.D.col(j));
    s.V.col(i).swap(s.V.col(j));
  };

  for (Index t = 0; t < std::min(m, n); ++t) {
    // pivot: smallest non-zero magnitude in the trailing block
    Index pr = -1, pc = -1;
    for (Index r = t; r < m; ++r) {
      for (Index c = t; c < n; ++c) {
        if (s.D(r, c) != 0 &&
            (pr < 0 || detail::abs_value(s.D(r, c)) < detail::abs_value(s.D(pr, pc)))) {
          pr = r;
          pc = c;
        }
      }
    }
    if (pr < 0) break;
    swap_rows(t, pr);
    swap_cols(t, pc);

    for (bool dirty = true; dirty;) {
      dirty = false;
      for (Index r = t + 1; r < m; ++r) {
        if (s.D(r, t) == 0) continue;
        const Scalar q = s.D(r, t) / s.D(t, t);
        detail::row_axpy(s.D, r, t, q);
        detail::row_axpy(s.U, r, t, q);
        if (s.D(r, t) != 0) {
          swap_rows(t, r);
          dirty = true;
        }
      }
      for (Index c = t + 1; c < n; ++c) {
        if (s.D(t, c) == 0) continue;
        const Scalar q = s.D(t, c) / s.D(t, t);
        detail::col_axpy(s.D, c, t, q);
        detail::col_axpy(s.V, c, t, q);
        if (s.D(t, c) != 0) {
          swap_cols(t, c);
          dirty = true;
        }
      }
      if (dirty) continue;
      // divisibility of the trailing block by the pivot
      for (Index r = t + 1; r < m && !dirty; ++r) {
        for (Index c = t + 1; c < n; ++c) {
          if (s.D(r, c) % s.D(t, t) != 0) {
            detail::row_axpy(s.D, t, r, Scalar(-1));
            detail::row_axpy(s.U, t, r, Scalar(-1));
            dirty = true;
            break;
          }
        }
      }
    }
    if (s.D(t, t) < 0) {
      s.D.row(t) *= Scalar(-1);
      s.U.row(t) *= Scalar(-1);
    }
    s.rank = t + 1;
  }
  return s;
}

/// Columns form a Z-basis of {x : A x = 0}. The basis is saturated: it spans
/// the kernel as a lattice, not just as a rational subspace.
template <typename Derived>
Matrix<typename Derived::Scalar> integer_kernel(const Eigen::MatrixBase<Derived>& a) {
  const auto s = smith_form(a);
  return s.V.rightCols(a.cols() - s.rank);
}

/// Whether y lies in the Z-span of the columns of the matrix `s` was built from.
template <typename Scalar, typename Derived>
bool in_integer_image(const SmithForm<Scalar>& s, const Eigen::MatrixBase<Derived>& y) {
  const Vector<Scalar> z = s.U * y;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    if (i < s.rank) {
      if (z(i) % s.D(i, i) != 0) return false;
    } else if (z(i) != 0) {
      return false;
    }
  }
  return true;
}

template <typename Derived>
Eigen::Index integer_rank(const Eigen::MatrixBase<Derived>& a) {
  return smith_form(a).rank;
}

/// Rank of A reduced modulo a prime p.
template <typename Derived>
Eigen::Index rank_mod_p(const Eigen::MatrixBase<Derived>& a, std::int64_t p) {
  if (p < 2) throw std::invalid_argument("rank_mod_p: modulus must be a prime >= 2");
  IntMatrix m = a.template cast<std::int64_t>();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = ((m(r, c) % p) + p) % p;
  }
  auto inverse = [p](std::int64_t x) {
    std::int64_t result = 1, base = x, exp = p - 2;
    while (exp > 0) {
      if (exp & 1) result = result * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    return result;
  };
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < m.cols() && rank < m.rows(); ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < m.rows(); ++r) {
      if (m(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    m.row(rank).swap(m.row(pivot));
    const std::int64_t inv = inverse(m(rank, c));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, c) == 0) continue;
      const std::int64_t f = m(r, c) * inv % p;
      for (Eigen::Index k = 0; k < m.cols(); ++k) {
        m(r, k) = ((m(r, k) - f * m(rank, k)) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace gwitt::linalg
