#include "gwitt/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gwitt {

namespace {

bool is_even_number(int x) noexcept { return x % 2 == 0; }

void require_even(const FramedDiagram& diagram, const char* op) {
  if (!is_even(diagram)) {
    throw std::invalid_argument(std::string(op) + ": diagram is not even in its frame");
  }
}

// Depth-first search over jump tuples. `tuples` holds a proper prefix
// (d_k < d); only steps allowed by conditions (i) and (ii) are taken, and
// (iii)/(iv) are checked once d_k reaches d.
void extend_even(int d, int e, JumpTuples& tuples, std::vector<FramedDiagram>& out) {
  const int k = tuples.k();
  const int last_d = k == 0 ? 0 : tuples.dvec.back();
  const int first_e = k == 0 ? 0 : tuples.evec.back() + 1;
  for (int next_e = first_e; next_e <= e; ++next_e) {
    if (k > 0 && !is_even_number(next_e - tuples.evec.back())) continue;
    for (int next_d = last_d + 1; next_d <= d; ++next_d) {
      const bool final_step = next_d == d;
      // (i): every gap except the last one is even.
      if (!final_step && k > 0 && !is_even_number(next_d - last_d)) continue;
      tuples.dvec.push_back(next_d);
      tuples.evec.push_back(next_e);
      if (final_step) {
        if (is_even(tuples, e)) out.push_back(from_jump_tuples(tuples, d, e));
      } else {
        extend_even(d, e, tuples, out);
      }
      tuples.dvec.pop_back();
      tuples.evec.pop_back();
    }
  }
}

void extend_all(int d, int e, std::vector<int>& prefix, std::vector<FramedDiagram>& out) {
  if (static_cast<int>(prefix.size()) == d) {
    out.emplace_back(d, e, prefix);
    return;
  }
  const int bound = prefix.empty() ? e : prefix.back();
  for (int value = bound; value >= 0; --value) {
    prefix.push_back(value);
    extend_all(d, e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

FramedDiagram::FramedDiagram(int d, int e, std::vector<int> rows)
    : d_(d), e_(e), rows_(std::move(rows)) {
  if (d < 1 || e < 1) {
    throw std::invalid_argument("FramedDiagram: frame dimensions must be positive");
  }
  if (static_cast<int>(rows_.size()) != d) {
    throw std::invalid_argument("FramedDiagram: expected " + std::to_string(d) + " rows, got " +
                                std::to_string(rows_.size()));
  }
  int previous = e;
  for (int r : rows_) {
    if (r < 0 || r > previous) {
      throw std::invalid_argument(
          "FramedDiagram: rows must be weakly decreasing within [0, e]");
    }
    previous = r;
  }
}

FramedDiagram FramedDiagram::empty(int d, int e) {
  return FramedDiagram(d, e, std::vector<int>(static_cast<std::size_t>(std::max(d, 0)), 0));
}

FramedDiagram FramedDiagram::full(int d, int e) {
  return FramedDiagram(d, e, std::vector<int>(static_cast<std::size_t>(std::max(d, 0)), e));
}

int FramedDiagram::area() const noexcept { return std::accumulate(rows_.begin(), rows_.end(), 0); }

int FramedDiagram::rho() const noexcept {
  return static_cast<int>(std::count_if(rows_.begin(), rows_.end(), [](int r) { return r > 0; }));
}

bool FramedDiagram::is_full() const noexcept { return rows_.back() == e_; }

std::strong_ordering operator<=>(const FramedDiagram& a, const FramedDiagram& b) {
  if (auto c = a.d_ <=> b.d_; c != 0) return c;
  if (auto c = a.e_ <=> b.e_; c != 0) return c;
  return std::lexicographical_compare_three_way(b.rows_.begin(), b.rows_.end(), a.rows_.begin(),
                                                a.rows_.end());
}

JumpTuples jump_tuples(const FramedDiagram& diagram) {
  JumpTuples tuples;
  const int d = diagram.d();
  for (int i = 0; i < d; ++i) {
    // position i (0-based) closes a block when the next row drops or it is the last row
    if (i == d - 1 || diagram.row(i) > diagram.row(i + 1)) {
      tuples.dvec.push_back(i + 1);
      tuples.evec.push_back(diagram.e() - diagram.row(i));
    }
  }
  return tuples;
}

bool valid_jump_tuples(const JumpTuples& tuples, int d, int e) noexcept {
  const int k = tuples.k();
  if (d < 1 || e < 1 || k < 1 || tuples.evec.size() != tuples.dvec.size()) return false;
  if (tuples.dvec.back() != d || tuples.dvec.front() <= 0) return false;
  if (tuples.evec.front() < 0 || tuples.evec.back() > e) return false;
  for (int i = 1; i < k; ++i) {
    if (tuples.dvec[i] <= tuples.dvec[i - 1]) return false;
    if (tuples.evec[i] <= tuples.evec[i - 1]) return false;
  }
  return true;
}

FramedDiagram from_jump_tuples(const JumpTuples& tuples, int d, int e) {
  if (!valid_jump_tuples(tuples, d, e)) {
    throw std::invalid_argument("from_jump_tuples: tuples violate the frame invariants");
  }
  std::vector<int> rows;
  rows.reserve(static_cast<std::size_t>(d));
  int previous_d = 0;
  for (int i = 0; i < tuples.k(); ++i) {
    const int value = e - tuples.evec[i];
    rows.insert(rows.end(), static_cast<std::size_t>(tuples.dvec[i] - previous_d), value);
    previous_d = tuples.dvec[i];
  }
  return FramedDiagram(d, e, std::move(rows));
}

bool is_even(const JumpTuples& t, int e) {
  const int k = t.k();
  for (int i = 1; i <= k - 2; ++i) {
    if (!is_even_number(t.d_at(i + 1) - t.d_at(i))) return false;
  }
  for (int i = 1; i <= k - 1; ++i) {
    if (!is_even_number(t.e_at(i + 1) - t.e_at(i))) return false;
  }
  if (0 < t.e_at(1) && t.e_at(1) < e && !is_even_number(t.d_at(1))) return false;
  if (0 < t.e_at(k) && t.e_at(k) < e && !is_even_number(t.d_at(k) - t.d_at(k - 1))) return false;
  return true;
}

bool is_even(const FramedDiagram& diagram) { return is_even(jump_tuples(diagram), diagram.e()); }

int twist_t(const FramedDiagram& diagram) noexcept { return (diagram.row(0) + diagram.rho()) % 2; }

std::vector<FramedDiagram> enumerate_all(int d, int e) {
  if (d < 1 || e < 1) throw std::invalid_argument("enumerate_all: frame dimensions must be positive");
  std::vector<FramedDiagram> out;
  std::vector<int> prefix;
  extend_all(d, e, prefix, out);
  return out;
}

std::vector<FramedDiagram> enumerate_even(int d, int e) {
  if (d < 1 || e < 1) throw std::invalid_argument("enumerate_even: frame dimensions must be positive");
  std::vector<FramedDiagram> out;
  JumpTuples tuples;
  extend_even(d, e, tuples, out);
  std::sort(out.begin(), out.end());
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

long long even_count_formula(int d, int e) { return 2 * binomial(d / 2 + e / 2, e / 2); }

FramedDiagram dual(const FramedDiagram& diagram) {
  std::vector<int> columns(static_cast<std::size_t>(diagram.e()), 0);
  for (int c = 0; c < diagram.e(); ++c) {
    columns[static_cast<std::size_t>(c)] = static_cast<int>(
        std::count_if(diagram.rows().begin(), diagram.rows().end(), [c](int r) { return r > c; }));
  }
  return FramedDiagram(diagram.e(), diagram.d(), std::move(columns));
}

std::optional<FramedDiagram> bar_iota(const FramedDiagram& source) {
  require_even(source, "bar_iota");
  if (!is_even_number(source.zeta())) return std::nullopt;
  std::vector<int> rows(source.rows().begin(), source.rows().end());
  for (int& r : rows) ++r;
  return FramedDiagram(source.d(), source.e() + 1, std::move(rows));
}

std::optional<FramedDiagram> bar_kappa(const FramedDiagram& source) {
  if (source.d() < 2) throw std::invalid_argument("bar_kappa: needs at least two rows");
  require_even(source, "bar_kappa");
  if (source.rows().back() != 0) return std::nullopt;
  std::vector<int> rows(source.rows().begin(), source.rows().end() - 1);
  return FramedDiagram(source.d() - 1, source.e(), std::move(rows));
}

std::optional<FramedDiagram> bar_bord(const FramedDiagram& source) {
  if (source.e() < 2) throw std::invalid_argument("bar_bord: needs at least two columns");
  require_even(source, "bar_bord");
  if (is_even_number(source.rows().back())) return std::nullopt;
  std::vector<int> rows(source.rows().begin(), source.rows().end());
  for (int& r : rows) --r;
  rows.push_back(0);
  return FramedDiagram(source.d() + 1, source.e() - 1, std::move(rows));
}

}  // namespace gwitt
