#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "gwitt/diagram.hpp"
#include "gwitt/witt_modules.hpp"

namespace gwitt {

struct WittEntry {
  FramedDiagram diagram;
  GradedDegree degree;
};

/// Generators of the total Witt group of Grass(d, V) over a base with a
/// complete flag, one per even diagram, in canonical order.
struct WittBasis {
  int d = 0;
  int e = 0;
  std::vector<WittEntry> entries;
};

/// Throws std::logic_error if some entry fails verify_cond_even.
WittBasis total_witt_basis(int d, int e);

enum class GeneratorClass { Blocks, RowPlusBlocks, ColumnPlusBlocks, RowColumnPlusBlocks };

std::string_view to_string(GeneratorClass c) noexcept;

/// Rows pair up with equal even values; an odd count ends in an empty row.
bool is_block_union(std::span<const int> rows);

/// Strips a full row and/or a full column and tests the rest for 2x2 blocks.
/// Throws std::invalid_argument on a non-even diagram and std::logic_error if
/// no or several decompositions apply.
GeneratorClass classify(const FramedDiagram& diagram);

/// (shift, det_twist) carried by every generator of class `c` when the base
/// twist is trivial.
std::pair<int, int> class_degree(GeneratorClass c, int d, int e);

struct RankKey {
  int shift = 0;
  int twist = 0;
  std::vector<int> base;  ///< BaseDet indices in the base twist; empty for trivial base

  friend auto operator<=>(const RankKey&, const RankKey&) = default;
};

using RankTable = std::map<RankKey, long long>;

RankTable rank_table(int d, int e, bool trivial_base);
long long table_total(const RankTable& table);

/// 2 * binom(d' + e', e') with d' = floor(d/2), e' = floor(e/2).
long long expected_rank(int d, int e);

/// True iff d and e are both even. Throws std::logic_error when the bord
/// matrix around (d, e) disagrees.
bool bord_vanishes(int d, int e);

struct DualityReport {
  int d = 0;
  int e = 0;
  bool bijective = false;
  bool degrees_preserved = false;  ///< shift and det_twist
  bool area_preserved = false;
  std::vector<FramedDiagram> failures;

  bool ok() const { return bijective && degrees_preserved && area_preserved; }
};

DualityReport duality_check(int d, int e);

/// Dimensions and map ranks around the middle frame (d, e).
struct RankLedger {
  std::size_t dim_sub = 0;     ///< F(d, e-1)
  std::size_t dim_middle = 0;  ///< F(d, e)
  std::size_t dim_open = 0;    ///< F(d-1, e)
  std::size_t rank_iota = 0;
  std::size_t rank_kappa = 0;
  std::size_t rank_bord = 0;

  /// Each dimension splits as image of the incoming map plus rank of the outgoing one.
  bool consistent() const {
    return dim_middle == rank_iota + rank_kappa && dim_open == rank_kappa + rank_bord &&
           dim_sub == rank_bord + rank_iota;
  }
};

struct InductionCertificate {
  int d = 0;
  int e = 0;
  ExactnessReport exactness;
  bool bord_zero = false;
  /// bord = 0, so 0 -> F(d,e-1) -> F(d,e) -> F(d-1,e) -> 0 is short exact
  /// and split by the basis partition.
  bool split_short_exact = false;
  DegreeTransportReport transport;
  RankLedger ledger;

  bool ok() const {
    return exactness.exact() && exactness.verdicts_agree() && transport.ok() &&
           ledger.consistent() && split_short_exact == bord_zero;
  }
};

InductionCertificate induction_report(int d, int e);

}  // namespace gwitt
