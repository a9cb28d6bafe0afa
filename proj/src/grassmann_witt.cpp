#include "gwitt/grassmann_witt.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gwitt/picard.hpp"

namespace gwitt {

namespace {

int mod(int x, int m) { return ((x % m) + m) % m; }

std::size_t map_rank(const BasisMap& map) {
  return static_cast<std::size_t>((map.matrix.array() != 0).count());
}

}  // namespace

WittBasis total_witt_basis(int d, int e) {
  if (d < 1 || e < 1) throw std::invalid_argument("total_witt_basis: need d, e >= 1");
  WittBasis basis{d, e, {}};
  const GradedBasis graded(d, e);
  for (std::size_t i = 0; i < graded.size(); ++i) {
    const auto& diagram = std::get<FramedDiagram>(graded.element(i));
    if (!verify_cond_even(diagram)) {
      throw std::logic_error("total_witt_basis: canonical class is not a square twist for " +
                             to_string(graded.element(i)));
    }
    basis.entries.push_back(WittEntry{diagram, graded.degree_of(i)});
  }
  return basis;
}

std::string_view to_string(GeneratorClass c) noexcept {
  switch (c) {
    case GeneratorClass::Blocks:
      return "Blocks";
    case GeneratorClass::RowPlusBlocks:
      return "RowPlusBlocks";
    case GeneratorClass::ColumnPlusBlocks:
      return "ColumnPlusBlocks";
    case GeneratorClass::RowColumnPlusBlocks:
      return "RowColumnPlusBlocks";
  }
  return "?";
}

bool is_block_union(std::span<const int> rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] % 2 != 0) return false;
  }
  for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
    if (rows[i] != rows[i + 1]) return false;
  }
  return rows.size() % 2 == 0 || rows.back() == 0;
}

GeneratorClass classify(const FramedDiagram& diagram) {
  if (!is_even(diagram)) throw std::invalid_argument("classify: diagram is not even");
  const int d = diagram.d();
  const int e = diagram.e();
  const auto rows = diagram.rows();

  auto matches = [&](bool strip_row, bool strip_column) {
    if (strip_row && (e % 2 != (strip_column ? 1 : 0))) return false;
    if (strip_column && (d % 2 != (strip_row ? 1 : 0))) return false;
    if (strip_row && rows.front() != e) return false;
    std::vector<int> rest(rows.begin() + (strip_row ? 1 : 0), rows.end());
    if (strip_column) {
      if (std::any_of(rest.begin(), rest.end(), [](int r) { return r < 1; })) return false;
      for (int& r : rest) --r;
    }
    return is_block_union(rest);
  };

  std::vector<GeneratorClass> found;
  if (matches(false, false)) found.push_back(GeneratorClass::Blocks);
  if (matches(true, false)) found.push_back(GeneratorClass::RowPlusBlocks);
  if (matches(false, true)) found.push_back(GeneratorClass::ColumnPlusBlocks);
  if (matches(true, true)) found.push_back(GeneratorClass::RowColumnPlusBlocks);
  if (found.size() != 1) {
    throw std::logic_error("classify: " + std::to_string(found.size()) +
                           " decompositions for an even diagram");
  }
  return found.front();
}

std::pair<int, int> class_degree(GeneratorClass c, int d, int e) {
  switch (c) {
    case GeneratorClass::Blocks:
      return {0, 0};
    case GeneratorClass::RowPlusBlocks:
      return {mod(e, 4), 1};
    case GeneratorClass::ColumnPlusBlocks:
      return {mod(d, 4), 1};
    case GeneratorClass::RowColumnPlusBlocks:
      return {mod(d + e - 1, 4), 0};
  }
  throw std::logic_error("class_degree: unknown class");
}

RankTable rank_table(int d, int e, bool trivial_base) {
  if (d < 1 || e < 1) throw std::invalid_argument("rank_table: need d, e >= 1");
  RankTable table;
  const GradedBasis basis(d, e);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const GradedDegree& deg = basis.degree_of(i);
    RankKey key{deg.shift, deg.det_twist, {}};
    if (!trivial_base) {
      for (const auto& [g, c] : deg.base.terms()) key.base.push_back(g.index);
    }
    ++table[key];
  }
  return table;
}

long long table_total(const RankTable& table) {
  long long total = 0;
  for (const auto& [key, rank] : table) total += rank;
  return total;
}

long long expected_rank(int d, int e) { return 2 * binomial(d / 2 + e / 2, e / 2); }

bool bord_vanishes(int d, int e) {
  if (d < 2 || e < 2) throw std::invalid_argument("bord_vanishes: need d, e >= 2");
  const bool predicted = d % 2 == 0 && e % 2 == 0;
  if (map_matrix(MapKind::bord, d, e).is_zero() != predicted) {
    throw std::logic_error("bord_vanishes: bord matrix around F(" + std::to_string(d) + "," +
                           std::to_string(e) + ") contradicts the parity criterion");
  }
  return predicted;
}

DualityReport duality_check(int d, int e) {
  if (d < 1 || e < 1) throw std::invalid_argument("duality_check: need d, e >= 1");
  DualityReport report;
  report.d = d;
  report.e = e;
  const auto source = enumerate_even(d, e);
  const auto target = enumerate_even(e, d);

  std::vector<FramedDiagram> images;
  report.degrees_preserved = true;
  report.area_preserved = true;
  for (const auto& diagram : source) {
    const FramedDiagram image = dual(diagram);
    const bool area_ok = image.area() == diagram.area();
    const auto src = degree(diagram);
    bool degree_ok = false;
    if (is_even(image)) {
      const auto dst = degree(image);
      degree_ok = src.shift == dst.shift && src.det_twist == dst.det_twist;
    }
    if (!area_ok || !degree_ok) report.failures.push_back(diagram);
    report.area_preserved &= area_ok;
    report.degrees_preserved &= degree_ok;
    images.push_back(image);
  }
  std::sort(images.begin(), images.end());
  report.bijective = images == target;
  return report;
}

InductionCertificate induction_report(int d, int e) {
  if (d < 2 || e < 2) throw std::invalid_argument("induction_report: need d, e >= 2");
  InductionCertificate cert;
  cert.d = d;
  cert.e = e;
  cert.exactness = verify_exactness(d, e);
  cert.transport = verify_degree_transport(d, e);

  const BasisMap iota = map_matrix(MapKind::iota, d, e);
  const BasisMap kappa = map_matrix(MapKind::kappa, d, e);
  const BasisMap bord = map_matrix(MapKind::bord, d, e);
  cert.ledger = RankLedger{iota.source.size(), iota.target.size(), kappa.target.size(),
                           map_rank(iota),     map_rank(kappa),    map_rank(bord)};
  cert.bord_zero = bord.is_zero();
  cert.split_short_exact = cert.bord_zero && cert.exactness.exact() &&
                           cert.ledger.rank_iota == cert.ledger.dim_sub &&
                           cert.ledger.rank_kappa == cert.ledger.dim_open;
  return cert;
}

}  // namespace gwitt
