#include <doctest.h>

#include <map>
#include <stdexcept>

#include "gwitt/grassmann_witt.hpp"
#include "oracles.hpp"

using namespace gwitt;

namespace {

std::map<std::pair<int, int>, long long> simple(const RankTable& table) {
  std::map<std::pair<int, int>, long long> out;
  for (const auto& [key, rank] : table) out[{key.shift, key.twist}] += rank;
  return out;
}

using Simple = std::map<std::pair<int, int>, long long>;

}  // namespace

TEST_CASE("total Witt basis") {
  const auto one = total_witt_basis(1, 1);
  REQUIRE(one.entries.size() == 2);
  CHECK(one.entries[0].degree == GradedDegree(1, PicClassMod2::base(2, 2), 0));
  CHECK(one.entries[1].degree.shift == 0);
  CHECK(one.entries[1].degree.det_twist == 0);
  CHECK_THROWS_AS(total_witt_basis(0, 1), std::invalid_argument);
}

TEST_CASE("rank tables") {
  CHECK(simple(rank_table(2, 2, true)) == Simple{{{0, 0}, 2}, {{2, 1}, 2}});
  CHECK(simple(rank_table(1, 1, true)) == Simple{{{0, 0}, 1}, {{1, 0}, 1}});
  CHECK(simple(rank_table(4, 4, true)) == Simple{{{0, 0}, 6}, {{0, 1}, 6}});
  CHECK(simple(rank_table(4, 5, true)) == Simple{{{0, 0}, 6}, {{0, 1}, 6}});
  // the row-and-column generators of the 5x5 frame sit in twist 0
  CHECK(simple(rank_table(5, 5, true)) == Simple{{{0, 0}, 6}, {{1, 0}, 6}});

  const auto full = rank_table(2, 2, false);
  CHECK(full.size() == 3);
  CHECK(full.at(RankKey{2, 1, {4}}) == 1);
  CHECK(full.at(RankKey{2, 1, {}}) == 1);
  for (const auto& [key, rank] : rank_table(3, 4, true)) CHECK(key.base.empty());
}

TEST_CASE("rank formula") {
  for (int d = 1; d <= 8; ++d) {
    for (int e = 1; e <= 8; ++e) {
      const long long total = table_total(rank_table(d, e, true));
      CHECK(total == expected_rank(d, e));
      CHECK(total == 2 * oracle::pascal(d / 2 + e / 2, e / 2));
      CHECK(table_total(rank_table(d, e, false)) == total);
    }
  }
}

TEST_CASE("classification examples") {
  CHECK(classify(FramedDiagram::empty(3, 3)) == GeneratorClass::Blocks);
  CHECK(classify(FramedDiagram(2, 2, {2, 0})) == GeneratorClass::RowPlusBlocks);
  CHECK(classify(FramedDiagram(2, 2, {1, 1})) == GeneratorClass::ColumnPlusBlocks);
  CHECK(classify(FramedDiagram::full(2, 2)) == GeneratorClass::Blocks);
  CHECK(classify(FramedDiagram::full(1, 1)) == GeneratorClass::RowColumnPlusBlocks);
  CHECK(classify(FramedDiagram::full(3, 5)) == GeneratorClass::RowColumnPlusBlocks);
  CHECK_THROWS_AS(classify(FramedDiagram(3, 3, {2, 1, 1})), std::invalid_argument);

  const std::vector<int> blocks{4, 4, 2, 2, 0};
  CHECK(is_block_union(blocks));
  const std::vector<int> unpaired{4, 2};
  CHECK_FALSE(is_block_union(unpaired));
  const std::vector<int> odd_tail{2, 2, 2};
  CHECK_FALSE(is_block_union(odd_tail));
}

TEST_CASE("class census") {
  for (int d = 1; d <= 8; ++d) {
    for (int e = 1; e <= 8; ++e) {
      std::map<GeneratorClass, long long> counts;
      for (const auto& entry : total_witt_basis(d, e).entries) {
        const auto cls = classify(entry.diagram);
        ++counts[cls];
        const auto [shift, twist] = class_degree(cls, d, e);
        CHECK(entry.degree.shift == shift);
        CHECK(entry.degree.det_twist == twist);
      }
      CHECK(counts[GeneratorClass::Blocks] == oracle::pascal(d / 2 + e / 2, e / 2));
      if (e % 2) CHECK(counts[GeneratorClass::RowPlusBlocks] == 0);
      if (d % 2) CHECK(counts[GeneratorClass::ColumnPlusBlocks] == 0);
      if (d % 2 == 0 || e % 2 == 0) CHECK(counts[GeneratorClass::RowColumnPlusBlocks] == 0);

      const auto table = simple(rank_table(d, e, true));
      CHECK(table.count({2, 0}) == 0);
      CHECK(table.count({1, 1}) == 0);
      CHECK(table.count({3, 1}) == 0);
    }
  }
}

TEST_CASE("connecting map vanishing") {
  CHECK(bord_vanishes(2, 2));
  CHECK_FALSE(bord_vanishes(3, 3));
  CHECK_FALSE(bord_vanishes(2, 3));
  for (int d = 2; d <= 8; ++d) {
    for (int e = 2; e <= 8; ++e) {
      CHECK(bord_vanishes(d, e) == map_matrix(MapKind::bord, d, e).is_zero());
    }
  }
  CHECK_THROWS_AS(bord_vanishes(1, 2), std::invalid_argument);
}

TEST_CASE("duality") {
  for (int d = 1; d <= 8; ++d) {
    for (int e = 1; e <= 8; ++e) {
      const auto report = duality_check(d, e);
      CHECK(report.ok());
      CHECK(report.failures.empty());
    }
  }
  // the transpose exchanges row and column classes
  for (const auto& diagram : enumerate_even(4, 6)) {
    const auto a = classify(diagram);
    const auto b = classify(dual(diagram));
    if (a == GeneratorClass::RowPlusBlocks) CHECK(b == GeneratorClass::ColumnPlusBlocks);
    if (a == GeneratorClass::Blocks) CHECK(b == GeneratorClass::Blocks);
  }
}

TEST_CASE("induction certificates") {
  const auto c22 = induction_report(2, 2);
  CHECK(c22.ok());
  CHECK(c22.bord_zero);
  CHECK(c22.split_short_exact);

  const auto c33 = induction_report(3, 3);
  CHECK(c33.ok());
  CHECK_FALSE(c33.bord_zero);
  CHECK_FALSE(c33.split_short_exact);

  const auto c45 = induction_report(4, 5);
  CHECK(c45.ok());
  CHECK(c45.ledger.dim_middle == 12);
  CHECK(c45.ledger.dim_sub == 12);
  CHECK(c45.ledger.dim_open == 6);
  CHECK(c45.ledger.rank_iota + c45.ledger.rank_kappa == 12);

  for (int d = 2; d <= 6; ++d) {
    for (int e = 2; e <= 6; ++e) CHECK(induction_report(d, e).ok());
  }
  CHECK_THROWS_AS(induction_report(1, 3), std::invalid_argument);
}
