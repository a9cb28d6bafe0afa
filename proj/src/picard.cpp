#include "gwitt/picard.hpp"

#include <algorithm>

namespace gwitt {

std::string to_string(const Generator& g) {
  return (g.kind == Generator::Kind::BaseDet ? "BaseDet(" : "TautDet(") + std::to_string(g.index) +
         ")";
}

PicClassMod2 mod2(const PicClass& cls) {
  PicClassMod2 out(cls.ambient());
  for (const auto& [g, c] : cls.terms()) out.set(g, Z2(c));
  return out;
}

PicClass rel_canonical_grass(int d, int n) {
  if (d <= 0 || d >= n) throw std::invalid_argument("rel_canonical_grass: need 0 < d < n");
  PicClass cls = PicClass::base(n, n, -d);
  cls.add(Generator::taut(d), n);
  return cls;
}

PicClass rel_canonical_flag(const JumpTuples& t, int n) {
  if (t.k() < 1 || t.dvec.back() + t.evec.back() > n ||
      !valid_jump_tuples(t, t.dvec.back(), std::max(1, n - t.dvec.back()))) {
    throw std::invalid_argument("rel_canonical_flag: invalid jump tuples for ambient rank");
  }
  const int k = t.k();
  PicClass cls(n);
  for (int i = 1; i <= k; ++i) {
    cls.add(Generator::base(t.d_at(i) + t.e_at(i)), -t.d_at(i) + t.d_at(i - 1));
  }
  for (int i = 1; i <= k - 1; ++i) {
    cls.add(Generator::taut(t.d_at(i)), t.d_at(i) - t.d_at(i - 1) + t.e_at(i) - t.e_at(i + 1));
  }
  cls.add(Generator::taut(t.d_at(k)), t.d_at(k) - t.d_at(k - 1) + t.e_at(k));
  return normalize_on_flag(cls, t);
}

PicClass rel_canonical_ff(const JumpTuples& t, int d, int e) {
  if (!valid_jump_tuples(t, d, e)) {
    throw std::invalid_argument("rel_canonical_ff: invalid jump tuples for the frame");
  }
  const int n = d + e;
  const int k = t.k();
  PicClass cls(n);
  for (int i = 1; i <= k; ++i) {
    cls.add(Generator::base(t.d_at(i) + t.e_at(i)), -t.d_at(i) + t.d_at(i - 1));
  }
  cls.add(Generator::base(n), t.d_at(k));
  for (int i = 1; i <= k - 1; ++i) {
    cls.add(Generator::taut(t.d_at(i)), t.d_at(i) - t.d_at(i - 1) + t.e_at(i) - t.e_at(i + 1));
  }
  cls.add(Generator::taut(t.d_at(k)), -t.d_at(k - 1) + t.e_at(k) - e);
  return normalize_on_flag(cls, t);
}

int relative_dimension(const JumpTuples& t) {
  int dim = 0;
  for (int i = 1; i <= t.k(); ++i) dim += (t.d_at(i) - t.d_at(i - 1)) * t.e_at(i);
  return dim;
}

PicClassMod2 twist_class(const FramedDiagram& diagram) {
  if (!is_even(diagram)) throw std::invalid_argument("twist_class: diagram is not even");
  const int n = diagram.d() + diagram.e();
  PicClassMod2 cls = PicClassMod2::base(n, n, Z2(diagram.rho()));
  cls.add(Generator::taut(diagram.d()), Z2(twist_t(diagram)));
  return cls;
}

bool pushforward_admissible(const FramedDiagram& diagram) {
  const JumpTuples t = jump_tuples(diagram);
  const int k = t.k();
  const int e = diagram.e();
  // (a)
  for (int i = 2; i <= k - 1; ++i) {
    if ((t.d_at(i) - t.d_at(i - 1) + t.e_at(i + 1) - t.e_at(i)) % 2 != 0) return false;
  }
  // (b), vacuous for k = 1
  if (k >= 2 && 0 < t.e_at(1) && t.e_at(1) < e && (t.d_at(1) + t.e_at(2) - t.e_at(1)) % 2 != 0) {
    return false;
  }
  return true;
}

bool in_pullback_image(const PicClassMod2& cls, const JumpTuples& tuples) {
  const int dk = tuples.dvec.back();
  for (int j = 1; j <= cls.ambient(); ++j) {
    if (j != dk && cls.coeff(Generator::taut(j)) != Z2(0)) return false;
  }
  return true;
}

bool verify_cond_even(const FramedDiagram& diagram) {
  const PicClassMod2 twist = twist_class(diagram);
  const JumpTuples t = jump_tuples(diagram);
  const PicClassMod2 can = mod2(rel_canonical_ff(t, diagram.d(), diagram.e()));
  return (can + pullback_to_flag(twist, diagram.d(), t)).is_zero();
}

CellCanonicals cell_canonicals(int d, int n) {
  if (d < 2 || n - d < 2) throw std::invalid_argument("cell_canonicals: need d >= 2 and e >= 2");
  const PicClass q = quotient_line<std::int64_t>(n);
  const auto det = [n](int j, std::int64_t c) { return PicClass::taut(n, j, c); };
  return CellCanonicals{
      .iota = det(d, -1) + d * q,
      .pi = det(d - 1, d - 1) + det(d, 1 - d) + (d - 1) * q,
      .iota_tilde = q + det(d - 1, 1) + det(d, -1),
      .pi_tilde = det(d - 1, d) + det(d, 1 - d),
  };
}

bool cell_square_commutes(const CellCanonicals& c) {
  return c.iota_tilde + c.pi == c.pi_tilde + c.iota;
}

LesTwists les_twists(int d, int e, const PicClassMod2& twist) {
  if (d < 2 || e < 2) throw std::invalid_argument("les_twists: need d, e >= 2");
  const int n = d + e;
  if (twist.ambient() != n) throw std::invalid_argument("les_twists: ambient rank must be d + e");
  for (int j = 1; j <= n; ++j) {
    if (j != d && twist.coeff(Generator::taut(j)) != Z2(0)) {
      throw std::invalid_argument("les_twists: twist must live on Grass(d, V)");
    }
  }
  const PicClassMod2 q = quotient_line<Z2>(n);
  const Z2 t = twist.coeff(Generator::taut(d));

  PicClassMod2 sub = twist + PicClassMod2::taut(n, d) + Z2(d) * q;

  PicClassMod2 open = twist;
  open.set(Generator::taut(d), Z2(0));
  open.add(Generator::taut(d - 1), t);
  open += t * q;
  return LesTwists{std::move(sub), std::move(open)};
}

}  // namespace gwitt
