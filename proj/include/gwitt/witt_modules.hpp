#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gwitt/diagram.hpp"
#include "gwitt/linalg.hpp"
#include "gwitt/picard.hpp"

namespace gwitt {

/// Grading of a generator: shift in Z/4, base twist in Pic(X)/2 and the
/// coefficient of Det_d in Z/2.
struct GradedDegree {
  int shift = 0;
  PicClassMod2 base;
  int det_twist = 0;

  explicit GradedDegree(int ambient) : base(ambient) {}
  GradedDegree(int shift_, PicClassMod2 base_, int det_twist_);

  GradedDegree trivialized() const;

  friend bool operator==(const GradedDegree&, const GradedDegree&) = default;
};

std::string to_string(const GradedDegree& degree);

/// (|Lambda| mod 4, rho * det V, t(Lambda)). Throws on a non-even diagram.
GradedDegree degree(const FramedDiagram& diagram);

/// One of the two copies pt_0, pt_1 of the unit of the base that stand in
/// for F(0, e) and F(d, 0). The index is the ambient Det_d twist.
struct PointGenerator {
  int index = 0;
  friend bool operator==(const PointGenerator&, const PointGenerator&) = default;
};

using BasisElement = std::variant<FramedDiagram, PointGenerator>;

std::string to_string(const BasisElement& element);

/// Ordered basis of F(d, e) with degrees. Frames with d = 0 or e = 0 (not
/// both) are boundary frames carrying {pt_0, pt_1}.
class GradedBasis {
 public:
  GradedBasis(int d, int e);

  int d() const noexcept { return d_; }
  int e() const noexcept { return e_; }
  int ambient() const noexcept { return d_ + e_; }
  bool is_boundary() const noexcept { return d_ == 0 || e_ == 0; }

  std::size_t size() const noexcept { return elements_.size(); }
  const BasisElement& element(std::size_t i) const { return elements_.at(i); }
  const GradedDegree& degree_of(std::size_t i) const { return degrees_.at(i); }
  const std::vector<BasisElement>& elements() const noexcept { return elements_; }

  std::optional<std::size_t> index_of(const BasisElement& element) const;

 private:
  int d_;
  int e_;
  std::vector<BasisElement> elements_;
  std::vector<GradedDegree> degrees_;
};

GradedBasis build_basis(int d, int e);

enum class MapKind { iota, kappa, bord };

std::string_view to_string(MapKind which) noexcept;
std::optional<MapKind> parse_map_kind(std::string_view name) noexcept;

/// A map between free modules on labelled bases; `matrix` is
/// target-rows x source-columns.
struct BasisMap {
  MapKind which;
  GradedBasis source;
  GradedBasis target;
  linalg::IntMatrix matrix;

  /// Index of the target basis element hit by source column `col`, if any.
  std::optional<std::size_t> image_of(std::size_t col) const;
  bool is_zero() const { return (matrix.array() == 0).all(); }
};

/// Maps of the cyclic sequence around the middle frame (d, e):
///   iota:  F(d, e-1) -> F(d, e)
///   kappa: F(d, e)   -> F(d-1, e)
///   bord:  F(d-1, e) -> F(d, e-1)
/// Boundary frames use the point-generator rules. Throws std::invalid_argument
/// unless d, e >= 1.
BasisMap map_matrix(MapKind which, int d, int e);

/// Verdicts for exactness at one module of the cyclic sequence.
struct PositionVerdict {
  std::string position;  ///< e.g. "F(3,3)"
  MapKind incoming = MapKind::iota;
  MapKind outgoing = MapKind::kappa;
  bool structural = false;  ///< basis-partition check
  bool linear = false;      ///< integer (or mod p) linear algebra check
  std::size_t dimension = 0;
  std::size_t image_rank = 0;
  std::size_t kernel_rank = 0;
  /// Basis elements in exactly one of {hit by incoming, killed by outgoing}.
  std::vector<BasisElement> witnesses;
};

struct ExactnessReport {
  int d = 0;
  int e = 0;
  std::optional<std::int64_t> prime;  ///< nullopt: over Z
  std::array<PositionVerdict, 3> positions;

  bool exact() const;
  bool verdicts_agree() const;
};

/// Exactness at the module where `incoming` ends and `outgoing` starts. Works
/// for any integer matrices, not only the 0/1 maps of the sequence.
PositionVerdict check_position(const BasisMap& incoming, const BasisMap& outgoing,
                               std::optional<std::int64_t> prime = std::nullopt);

/// Exactness of F(d,e-1) -> F(d,e) -> F(d-1,e) -> F(d,e-1) at all three spots.
/// With `prime`, the linear-algebra check runs over F_p instead of Z.
ExactnessReport verify_exactness(int d, int e, std::optional<std::int64_t> prime = std::nullopt);

/// Degree a basis image must carry under the transport rule of `which`,
/// with V/V^1 = BaseDet(d+e) - BaseDet(d+e-1). The result lives in ambient
/// rank d + e.
GradedDegree transported_degree(MapKind which, const GradedDegree& source, int d, int e);

struct TransportCheck {
  MapKind which;
  BasisElement source;
  BasisElement target;
  GradedDegree expected;
  GradedDegree actual;
  bool full_check;  ///< false when a point generator is involved: only det_twist compared
  bool ok;
};

struct DegreeTransportReport {
  int d = 0;
  int e = 0;
  bool trivial_base = false;
  std::vector<TransportCheck> checks;
  std::vector<std::string> notes;

  bool ok() const;
};

DegreeTransportReport verify_degree_transport(int d, int e, bool trivial_base = false);

/// With the base trivialized, each of the three maps around (d, e) shifts the
/// (shift, det_twist) grading by one constant amount on every basis element it
/// does not kill. Checked directly from the degrees, without the rule table.
bool maps_homogeneous_trivial_base(int d, int e);

}  // namespace gwitt
