#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

namespace gwitt {

/// A Young diagram sitting in the upper-left corner of a d x e frame.
///
/// Rows are stored 0-based with trailing zeros explicit, so `rows().size()`
/// is always `d()`. Construction validates `e >= r_0 >= ... >= r_{d-1} >= 0`
/// and throws std::invalid_argument otherwise.
class FramedDiagram {
 public:
  FramedDiagram(int d, int e, std::vector<int> rows);

  static FramedDiagram empty(int d, int e);
  static FramedDiagram full(int d, int e);

  int d() const noexcept { return d_; }
  int e() const noexcept { return e_; }
  std::span<const int> rows() const noexcept { return rows_; }
  /// 0-based row access.
  int row(int i) const { return rows_.at(static_cast<std::size_t>(i)); }

  int area() const noexcept;
  /// Number of non-zero rows.
  int rho() const noexcept;
  /// Number of trailing zero rows, d - rho.
  int zeta() const noexcept { return d_ - rho(); }

  bool is_empty() const noexcept { return rho() == 0; }
  bool is_full() const noexcept;

  friend bool operator==(const FramedDiagram&, const FramedDiagram&) = default;

  /// Canonical order: frame first, then rows lexicographically *descending*,
  /// so the largest diagram comes first.
  friend std::strong_ordering operator<=>(const FramedDiagram& a, const FramedDiagram& b);

 private:
  int d_;
  int e_;
  std::vector<int> rows_;
};

/// The pair of k-tuples (d_1..d_k), (e_1..e_k) encoding a framed diagram.
/// Indices here are 0-based vectors; d_0 = 0 is implicit.
struct JumpTuples {
  std::vector<int> dvec;
  std::vector<int> evec;

  int k() const noexcept { return static_cast<int>(dvec.size()); }
  /// d_{i} with the convention d_0 = 0 (argument is 1-based).
  int d_at(int i) const { return i == 0 ? 0 : dvec.at(static_cast<std::size_t>(i - 1)); }
  int e_at(int i) const { return evec.at(static_cast<std::size_t>(i - 1)); }

  friend bool operator==(const JumpTuples&, const JumpTuples&) = default;
};

JumpTuples jump_tuples(const FramedDiagram& diagram);

/// Inverse of jump_tuples. Throws std::invalid_argument if the tuples do not
/// describe a diagram in the d x e frame.
FramedDiagram from_jump_tuples(const JumpTuples& tuples, int d, int e);

/// Checks the tuple invariants 0 < d_1 < ... < d_k = d, 0 <= e_1 < ... < e_k <= e.
bool valid_jump_tuples(const JumpTuples& tuples, int d, int e) noexcept;

/// Evenness in the given frame: every boundary segment strictly inside the
/// frame has even length.
bool is_even(const FramedDiagram& diagram);
bool is_even(const JumpTuples& tuples, int e);

/// Class of half the perimeter, (r_1 + rho) mod 2. Independent of the frame.
int twist_t(const FramedDiagram& diagram) noexcept;

/// Every diagram in the d x e frame, in canonical order.
std::vector<FramedDiagram> enumerate_all(int d, int e);

/// Every even diagram in the d x e frame, in canonical order. Generated from
/// jump tuples with the evenness conditions pruning the search.
std::vector<FramedDiagram> enumerate_even(int d, int e);

/// 2 * C(floor(d/2) + floor(e/2), floor(e/2)).
long long even_count_formula(int d, int e);

long long binomial(int n, int k);

/// Transposed diagram in the e x d frame.
FramedDiagram dual(const FramedDiagram& diagram);

/// Frame-changing maps between even diagrams. Each throws
/// std::invalid_argument on a non-even input and returns nullopt where the
/// map is zero on that basis element.
///
/// bar_iota:  d x (e-1)  ->  d x e,      add one column when zeta is even.
/// bar_kappa: d x e      ->  (d-1) x e,  drop an empty last row.
/// bar_bord:  (d-1) x e  ->  d x (e-1),  strip a column and append a zero row
///                                       when the last row is odd.
std::optional<FramedDiagram> bar_iota(const FramedDiagram& source);
std::optional<FramedDiagram> bar_kappa(const FramedDiagram& source);
std::optional<FramedDiagram> bar_bord(const FramedDiagram& source);

}  // namespace gwitt
