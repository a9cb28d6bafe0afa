#include "gwitt/witt_modules.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gwitt {

namespace {

int mod(int x, int m) { return ((x % m) + m) % m; }

PicClassMod2 lift(const PicClassMod2& cls, int ambient) {
  PicClassMod2 out(ambient);
  for (const auto& [g, c] : cls.terms()) out.set(g, c);
  return out;
}

std::string frame_name(int d, int e) {
  return "F(" + std::to_string(d) + "," + std::to_string(e) + ")";
}

bool is_point(const BasisElement& element) {
  return std::holds_alternative<PointGenerator>(element);
}

// Every column and every row carries at most one entry, and it is 1.
bool partial_bijection(const linalg::IntMatrix& m) {
  if (!((m.array() == 0) || (m.array() == 1)).all()) return false;
  return (m.colwise().sum().array() <= 1).all() && (m.rowwise().sum().array() <= 1).all();
}

}  // namespace

PositionVerdict check_position(const BasisMap& incoming, const BasisMap& outgoing,
                               std::optional<std::int64_t> prime) {
  if (incoming.target.d() != outgoing.source.d() || incoming.target.e() != outgoing.source.e()) {
    throw std::invalid_argument("check_position: maps do not meet in a common module");
  }
  PositionVerdict v;
  const GradedBasis& middle = incoming.target;
  v.position = frame_name(middle.d(), middle.e());
  v.incoming = incoming.which;
  v.outgoing = outgoing.which;
  v.dimension = middle.size();

  // structural: image basis of `incoming` == kernel basis of `outgoing`
  const auto& in = incoming.matrix;
  const auto& out = outgoing.matrix;
  const bool bijective = partial_bijection(in) && partial_bijection(out);
  bool partition_ok = bijective;
  for (std::size_t i = 0; i < middle.size(); ++i) {
    const auto idx = static_cast<Eigen::Index>(i);
    const bool hit = (in.row(idx).array() != 0).any();
    const bool killed = (out.col(idx).array() == 0).all();
    if (hit != killed) {
      partition_ok = false;
      v.witnesses.push_back(middle.element(i));
    }
  }
  v.structural = partition_ok;

  const linalg::IntMatrix composite = out * in;
  if (prime) {
    const std::int64_t p = *prime;
    const bool composite_zero =
        (composite.unaryExpr([p](std::int64_t x) { return x % p; }).array() == 0).all();
    const auto rank_in = linalg::rank_mod_p(in, p);
    const auto rank_out = linalg::rank_mod_p(out, p);
    v.image_rank = static_cast<std::size_t>(rank_in);
    v.kernel_rank = middle.size() - static_cast<std::size_t>(rank_out);
    v.linear = composite_zero && v.image_rank == v.kernel_rank;
  } else {
    const linalg::IntMatrix kernel = linalg::integer_kernel(out);
    const auto smith = linalg::smith_form(in);
    v.image_rank = static_cast<std::size_t>(smith.rank);
    v.kernel_rank = static_cast<std::size_t>(kernel.cols());
    bool contained = (composite.array() == 0).all();
    for (Eigen::Index c = 0; c < kernel.cols() && contained; ++c) {
      contained = linalg::in_integer_image(smith, kernel.col(c));
    }
    v.linear = contained;
  }
  return v;
}

GradedDegree::GradedDegree(int shift_, PicClassMod2 base_, int det_twist_)
    : shift(mod(shift_, 4)), base(std::move(base_)), det_twist(mod(det_twist_, 2)) {
  if (!base.is_base_only()) {
    throw std::invalid_argument("GradedDegree: base twist must only involve BaseDet generators");
  }
}

GradedDegree GradedDegree::trivialized() const {
  return GradedDegree(shift, trivialize(base), det_twist);
}

std::string to_string(const GradedDegree& degree) {
  std::ostringstream os;
  os << "(" << degree.shift << ", " << to_string(degree.base) << ", " << degree.det_twist << ")";
  return os.str();
}

GradedDegree degree(const FramedDiagram& diagram) {
  if (!is_even(diagram)) throw std::invalid_argument("degree: diagram is not even");
  const int n = diagram.d() + diagram.e();
  return GradedDegree(diagram.area(), PicClassMod2::base(n, n, Z2(diagram.rho())),
                      twist_t(diagram));
}

std::string to_string(const BasisElement& element) {
  if (const auto* pt = std::get_if<PointGenerator>(&element)) {
    return "pt_" + std::to_string(pt->index);
  }
  const auto& diagram = std::get<FramedDiagram>(element);
  std::string out = "(";
  for (std::size_t i = 0; i < diagram.rows().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(diagram.rows()[i]);
  }
  return out + ")";
}

GradedBasis::GradedBasis(int d, int e) : d_(d), e_(e) {
  if (d < 0 || e < 0 || (d == 0 && e == 0)) {
    throw std::invalid_argument("build_basis: need d, e >= 0, not both zero");
  }
  if (is_boundary()) {
    for (int i = 0; i < 2; ++i) {
      elements_.emplace_back(PointGenerator{i});
      degrees_.emplace_back(0, PicClassMod2(ambient()), i);
    }
    return;
  }
  for (auto& diagram : enumerate_even(d, e)) {
    degrees_.push_back(degree(diagram));
    elements_.emplace_back(std::move(diagram));
  }
}

std::optional<std::size_t> GradedBasis::index_of(const BasisElement& element) const {
  const auto it = std::find(elements_.begin(), elements_.end(), element);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

GradedBasis build_basis(int d, int e) { return GradedBasis(d, e); }

std::string_view to_string(MapKind which) noexcept {
  switch (which) {
    case MapKind::iota:
      return "iota";
    case MapKind::kappa:
      return "kappa";
    case MapKind::bord:
      return "bord";
  }
  return "?";
}

std::optional<MapKind> parse_map_kind(std::string_view name) noexcept {
  if (name == "iota") return MapKind::iota;
  if (name == "kappa") return MapKind::kappa;
  if (name == "bord") return MapKind::bord;
  return std::nullopt;
}

std::optional<std::size_t> BasisMap::image_of(std::size_t col) const {
  const auto c = static_cast<Eigen::Index>(col);
  for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
    if (matrix(r, c) != 0) return static_cast<std::size_t>(r);
  }
  return std::nullopt;
}

BasisMap map_matrix(MapKind which, int d, int e) {
  if (d < 1 || e < 1) {
    throw std::invalid_argument("map_matrix: the middle frame needs d, e >= 1");
  }
  auto frames = [&]() -> std::pair<std::pair<int, int>, std::pair<int, int>> {
    switch (which) {
      case MapKind::iota:
        return {{d, e - 1}, {d, e}};
      case MapKind::kappa:
        return {{d, e}, {d - 1, e}};
      case MapKind::bord:
        return {{d - 1, e}, {d, e - 1}};
    }
    throw std::logic_error("map_matrix: unknown map");
  }();
  BasisMap map{which, GradedBasis(frames.first.first, frames.first.second),
               GradedBasis(frames.second.first, frames.second.second), {}};
  map.matrix = linalg::IntMatrix::Zero(static_cast<Eigen::Index>(map.target.size()),
                                       static_cast<Eigen::Index>(map.source.size()));

  auto image = [&](const BasisElement& src) -> std::optional<BasisElement> {
    const auto* diagram = std::get_if<FramedDiagram>(&src);
    const int index = diagram ? -1 : std::get<PointGenerator>(src).index;
    switch (which) {
      case MapKind::iota:
        if (e == 1) {
          // iota_*(pt_d) = gen(full d x 1), iota_*(pt_{d+1}) = 0
          if (index == d % 2) return FramedDiagram::full(d, 1);
          return std::nullopt;
        }
        return bar_iota(*diagram);
      case MapKind::kappa:
        if (d == 1) {
          // kappa(gen(empty)) = pt_0, the full row maps to zero
          if (diagram->is_empty()) return PointGenerator{0};
          return std::nullopt;
        }
        return bar_kappa(*diagram);
      case MapKind::bord:
        if (d == 1 && e == 1) {
          if (index == 1) return PointGenerator{0};
          return std::nullopt;
        }
        if (d == 1) {
          // bord(pt_1) = gen(empty), bord(pt_0) = 0
          if (index == 1) return FramedDiagram::empty(1, e - 1);
          return std::nullopt;
        }
        if (e == 1) {
          // bord(full (d-1) x 1) = pt_{d+1}
          if (diagram->is_full()) return PointGenerator{(d + 1) % 2};
          return std::nullopt;
        }
        return bar_bord(*diagram);
    }
    return std::nullopt;
  };

  for (std::size_t c = 0; c < map.source.size(); ++c) {
    const auto target = image(map.source.element(c));
    if (!target) continue;
    const auto r = map.target.index_of(*target);
    if (!r) throw std::logic_error("map_matrix: image " + to_string(*target) + " is not a basis element");
    map.matrix(static_cast<Eigen::Index>(*r), static_cast<Eigen::Index>(c)) = 1;
  }
  return map;
}

bool ExactnessReport::exact() const {
  return std::all_of(positions.begin(), positions.end(),
                     [](const PositionVerdict& v) { return v.structural && v.linear; });
}

bool ExactnessReport::verdicts_agree() const {
  return std::all_of(positions.begin(), positions.end(),
                     [](const PositionVerdict& v) { return v.structural == v.linear; });
}

ExactnessReport verify_exactness(int d, int e, std::optional<std::int64_t> prime) {
  const BasisMap iota = map_matrix(MapKind::iota, d, e);
  const BasisMap kappa = map_matrix(MapKind::kappa, d, e);
  const BasisMap bord = map_matrix(MapKind::bord, d, e);
  ExactnessReport report;
  report.d = d;
  report.e = e;
  report.prime = prime;
  report.positions = {check_position(iota, kappa, prime), check_position(kappa, bord, prime),
                      check_position(bord, iota, prime)};
  return report;
}

GradedDegree transported_degree(MapKind which, const GradedDegree& source, int d, int e) {
  const int n = d + e;
  const PicClassMod2 q = quotient_line<Z2>(n);
  const PicClassMod2 base = lift(source.base, n);
  const int t = source.det_twist;
  switch (which) {
    case MapKind::iota:
      return GradedDegree(source.shift + d, base + Z2(d) * q, t + 1);
    case MapKind::kappa:
      return GradedDegree(source.shift, base + Z2(t) * q, t);
    case MapKind::bord:
      return GradedDegree(source.shift - d + 1, base + Z2(t - d) * q, t - 1);
  }
  throw std::logic_error("transported_degree: unknown map");
}

bool DegreeTransportReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const TransportCheck& c) { return c.ok; });
}

DegreeTransportReport verify_degree_transport(int d, int e, bool trivial_base) {
  DegreeTransportReport report;
  report.d = d;
  report.e = e;
  report.trivial_base = trivial_base;
  const int n = d + e;
  bool skipped_points = false;
  for (MapKind which : {MapKind::iota, MapKind::kappa, MapKind::bord}) {
    const BasisMap map = map_matrix(which, d, e);
    for (std::size_t c = 0; c < map.source.size(); ++c) {
      const auto r = map.image_of(c);
      if (!r) continue;
      GradedDegree expected = transported_degree(which, map.source.degree_of(c), d, e);
      const GradedDegree& target = map.target.degree_of(*r);
      GradedDegree actual(target.shift, lift(target.base, n), target.det_twist);
      if (trivial_base) {
        expected = expected.trivialized();
        actual = actual.trivialized();
      }
      const bool full = !is_point(map.source.element(c)) && !is_point(map.target.element(*r));
      skipped_points |= !full;
      const bool ok = full ? expected == actual : expected.det_twist == actual.det_twist;
      report.checks.push_back(TransportCheck{which, map.source.element(c), map.target.element(*r),
                                             std::move(expected), std::move(actual), full, ok});
    }
  }
  if (skipped_points) {
    report.notes.emplace_back(
        "boundary frame: shift and base twist of point generators are not assigned; only the "
        "Det_d twist is compared on maps touching pt_0/pt_1");
  }
  return report;
}

bool maps_homogeneous_trivial_base(int d, int e) {
  for (MapKind which : {MapKind::iota, MapKind::kappa, MapKind::bord}) {
    const BasisMap map = map_matrix(which, d, e);
    std::set<std::pair<int, int>> offsets;
    for (std::size_t c = 0; c < map.source.size(); ++c) {
      const auto r = map.image_of(c);
      if (!r || is_point(map.source.element(c)) || is_point(map.target.element(*r))) continue;
      const auto& s = map.source.degree_of(c);
      const auto& t = map.target.degree_of(*r);
      offsets.emplace(mod(t.shift - s.shift, 4), mod(t.det_twist - s.det_twist, 2));
    }
    if (offsets.size() > 1) return false;
  }
  return true;
}

}  // namespace gwitt
