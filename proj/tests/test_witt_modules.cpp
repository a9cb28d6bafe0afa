#include <doctest.h>

#include <stdexcept>

#include "gwitt/witt_modules.hpp"
#include "oracles.hpp"

using namespace gwitt;

namespace {

const FramedDiagram& diagram_at(const GradedBasis& basis, std::size_t i) {
  return std::get<FramedDiagram>(basis.element(i));
}

}  // namespace

TEST_CASE("degree of a diagram") {
  const auto empty = degree(FramedDiagram::empty(2, 2));
  CHECK(empty == GradedDegree(0, PicClassMod2(4), 0));
  CHECK(degree(FramedDiagram(2, 2, {1, 1})) == GradedDegree(2, PicClassMod2(4), 1));
  CHECK(degree(FramedDiagram::full(5, 5)) == GradedDegree(1, PicClassMod2::base(10, 10), 0));
  CHECK(degree(FramedDiagram::full(1, 1)) == GradedDegree(1, PicClassMod2::base(2, 2), 0));
  CHECK_THROWS_AS(degree(FramedDiagram(2, 2, {1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(GradedDegree(0, PicClassMod2::taut(3, 1), 0), std::invalid_argument);
  CHECK(GradedDegree(-3, PicClassMod2(2), 3) == GradedDegree(1, PicClassMod2(2), 1));
}

TEST_CASE("degrees follow from area, row count and perimeter") {
  for (int d = 1; d <= 7; ++d) {
    for (int e = 1; e <= 7; ++e) {
      const GradedBasis basis(d, e);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& diagram = diagram_at(basis, i);
        const auto& deg = basis.degree_of(i);
        const std::vector<int> rows(diagram.rows().begin(), diagram.rows().end());
        CHECK(deg.shift == diagram.area() % 4);
        CHECK(deg.det_twist == oracle::half_perimeter_parity(rows));
        CHECK(deg.base.coeff(Generator::base(d + e)) == Z2(diagram.rho()));
        CHECK(trivialize(deg.base).is_zero());
      }
    }
  }
}

TEST_CASE("bases") {
  CHECK(GradedBasis(2, 2).size() == 4);
  const GradedBasis one(1, 1);
  REQUIRE(one.size() == 2);
  CHECK(diagram_at(one, 0) == FramedDiagram::full(1, 1));
  CHECK(diagram_at(one, 1) == FramedDiagram::empty(1, 1));

  for (auto [d, e] : {std::pair{0, 3}, std::pair{4, 0}}) {
    const GradedBasis boundary(d, e);
    CHECK(boundary.is_boundary());
    REQUIRE(boundary.size() == 2);
    CHECK(boundary.element(0) == BasisElement(PointGenerator{0}));
    CHECK(boundary.element(1) == BasisElement(PointGenerator{1}));
    CHECK(boundary.degree_of(1).det_twist == 1);
  }
  CHECK_THROWS_AS(GradedBasis(0, 0), std::invalid_argument);
  CHECK(GradedBasis(3, 3).index_of(FramedDiagram::empty(3, 3)).has_value());
  CHECK_FALSE(GradedBasis(3, 3).index_of(FramedDiagram(3, 3, {2, 1, 1})).has_value());
}

TEST_CASE("map matrices") {
  SUBCASE("bord vanishes on 2x2") {
    const auto bord = map_matrix(MapKind::bord, 2, 2);
    CHECK(bord.source.d() == 1);
    CHECK(bord.target.e() == 1);
    CHECK(bord.is_zero());
  }
  SUBCASE("iota on 2x2") {
    const auto iota = map_matrix(MapKind::iota, 2, 2);
    REQUIRE(iota.source.size() == 2);
    const auto img_full = iota.image_of(0);
    const auto img_empty = iota.image_of(1);
    REQUIRE(img_full);
    REQUIRE(img_empty);
    CHECK(iota.target.element(*img_full) == BasisElement(FramedDiagram::full(2, 2)));
    CHECK(iota.target.element(*img_empty) == BasisElement(FramedDiagram(2, 2, {1, 1})));
  }
  SUBCASE("kappa out of a single row") {
    const auto kappa = map_matrix(MapKind::kappa, 1, 4);
    CHECK(kappa.target.is_boundary());
    const auto empty = *kappa.source.index_of(FramedDiagram::empty(1, 4));
    const auto full = *kappa.source.index_of(FramedDiagram::full(1, 4));
    CHECK(kappa.target.element(*kappa.image_of(empty)) == BasisElement(PointGenerator{0}));
    CHECK_FALSE(kappa.image_of(full).has_value());
  }
  SUBCASE("iota into a single column") {
    for (int d = 1; d <= 5; ++d) {
      const auto iota = map_matrix(MapKind::iota, d, 1);
      CHECK(iota.source.is_boundary());
      const auto hit = iota.image_of(static_cast<std::size_t>(d % 2));
      REQUIRE(hit);
      CHECK(iota.target.element(*hit) == BasisElement(FramedDiagram::full(d, 1)));
      CHECK_FALSE(iota.image_of(static_cast<std::size_t>((d + 1) % 2)).has_value());
    }
  }
  SUBCASE("bord at the boundary") {
    const auto row = map_matrix(MapKind::bord, 1, 3);
    CHECK(row.target.element(*row.image_of(1)) == BasisElement(FramedDiagram::empty(1, 2)));
    CHECK_FALSE(row.image_of(0).has_value());

    const auto column = map_matrix(MapKind::bord, 4, 1);
    const auto full = *column.source.index_of(FramedDiagram::full(3, 1));
    CHECK(column.target.element(*column.image_of(full)) == BasisElement(PointGenerator{1}));
  }
  CHECK_THROWS_AS(map_matrix(MapKind::iota, 0, 2), std::invalid_argument);
  CHECK(parse_map_kind("kappa") == MapKind::kappa);
  CHECK_FALSE(parse_map_kind("phi").has_value());
}

TEST_CASE("composites vanish and matrices are partial bijections") {
  for (int d = 1; d <= 8; ++d) {
    for (int e = 1; e <= 8; ++e) {
      const auto iota = map_matrix(MapKind::iota, d, e);
      const auto kappa = map_matrix(MapKind::kappa, d, e);
      const auto bord = map_matrix(MapKind::bord, d, e);
      CHECK((kappa.matrix * iota.matrix).isZero());
      CHECK((bord.matrix * kappa.matrix).isZero());
      CHECK((iota.matrix * bord.matrix).isZero());
      for (const auto* m : {&iota, &kappa, &bord}) {
        CHECK((m->matrix.colwise().sum().array() <= 1).all());
        CHECK((m->matrix.rowwise().sum().array() <= 1).all());
        CHECK((m->matrix.array() >= 0).all());
      }
    }
  }
}

TEST_CASE("exactness of the cyclic sequence") {
  const auto r22 = verify_exactness(2, 2);
  CHECK(r22.exact());
  CHECK(r22.verdicts_agree());
  CHECK(r22.positions[0].position == "F(2,2)");
  CHECK(r22.positions[1].position == "F(1,2)");
  CHECK(r22.positions[2].position == "F(2,1)");

  CHECK(verify_exactness(3, 3).exact());
  CHECK_FALSE(map_matrix(MapKind::bord, 3, 3).is_zero());

  for (int d = 1; d <= 7; ++d) {
    for (int e = 1; e <= 7; ++e) {
      const auto over_z = verify_exactness(d, e);
      CHECK(over_z.exact());
      CHECK(over_z.verdicts_agree());
      for (const auto& v : over_z.positions) {
        CHECK(v.image_rank == v.kernel_rank);
        CHECK(v.witnesses.empty());
      }
      for (std::int64_t p : {2, 3, 5}) {
        const auto mod_p = verify_exactness(d, e, p);
        CHECK(mod_p.exact() == over_z.exact());
        CHECK(mod_p.verdicts_agree());
      }
    }
  }
}

TEST_CASE("degree transport") {
  const auto iota_empty = transported_degree(MapKind::iota, GradedDegree(3), 2, 2);
  CHECK(iota_empty == degree(FramedDiagram(2, 2, {1, 1})));

  for (int d = 2; d <= 6; ++d) {
    for (int e = 2; e <= 6; ++e) {
      const auto report = verify_degree_transport(d, e);
      CHECK(report.ok());
      CHECK(report.notes.empty());
      for (const auto& c : report.checks) CHECK(c.full_check);
      CHECK(verify_degree_transport(d, e, true).ok());
      CHECK(maps_homogeneous_trivial_base(d, e));
    }
  }

  // kappa keeps the shift
  const auto kappa = map_matrix(MapKind::kappa, 2, 2);
  const auto src = *kappa.source.index_of(FramedDiagram(2, 2, {2, 0}));
  const auto tgt = *kappa.image_of(src);
  CHECK(kappa.source.degree_of(src).shift == kappa.target.degree_of(tgt).shift);
}

TEST_CASE("degree transport near the boundary compares twists only") {
  for (int n = 2; n <= 6; ++n) {
    for (auto [d, e] : {std::pair{1, n}, std::pair{n, 1}}) {
      const auto report = verify_degree_transport(d, e);
      CHECK(report.ok());
      CHECK_FALSE(report.notes.empty());
    }
  }
}

TEST_CASE("exactness checkers reject broken sequences") {
  const auto iota = map_matrix(MapKind::iota, 3, 3);
  const auto kappa = map_matrix(MapKind::kappa, 3, 3);
  const auto good = check_position(iota, kappa);
  CHECK(good.structural);
  CHECK(good.linear);

  SUBCASE("extra kernel") {
    auto broken = kappa;
    Eigen::Index col = -1;
    for (Eigen::Index c = 0; c < broken.matrix.cols() && col < 0; ++c) {
      if (broken.matrix.col(c).any()) col = c;
    }
    REQUIRE(col >= 0);
    broken.matrix.col(col).setZero();
    const auto v = check_position(iota, broken);
    CHECK_FALSE(v.structural);
    CHECK_FALSE(v.linear);
    CHECK(v.witnesses.size() == 1);
    CHECK(v.kernel_rank == v.image_rank + 1);
  }
  SUBCASE("non-zero composite") {
    auto broken = kappa;
    const auto hit = *iota.image_of(0);
    broken.matrix.col(static_cast<Eigen::Index>(hit)).setZero();
    broken.matrix(0, static_cast<Eigen::Index>(hit)) = 1;
    CHECK_FALSE(check_position(iota, broken).linear);
  }
  SUBCASE("image of index two") {
    auto doubled = iota;
    doubled.matrix *= 2;
    const auto over_z = check_position(doubled, kappa);
    CHECK_FALSE(over_z.structural);
    CHECK_FALSE(over_z.linear);
    CHECK_FALSE(check_position(doubled, kappa, 2).linear);
    CHECK(check_position(doubled, kappa, 3).linear);
  }
  CHECK_THROWS_AS(check_position(kappa, kappa), std::invalid_argument);
}
