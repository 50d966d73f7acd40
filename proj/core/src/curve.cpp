#include "roquette/curve.hpp"

#include <cstdlib>
#include <stdexcept>

#include "roquette/errors.hpp"
#include "roquette/poly.hpp"
#include "roquette/series.hpp"

namespace roquette {

CurvePoint CurvePoint::affine(const FieldElement& x, const FieldElement& y) {
  if (&x.field() != &y.field()) throw MismatchError("point coordinates from different fields");
  CurvePoint pt;
  pt.xy_.emplace(x, y);
  return pt;
}

const FieldElement& CurvePoint::x() const {
  if (!xy_) throw std::logic_error("point at infinity has no affine coordinates");
  return xy_->first;
}

const FieldElement& CurvePoint::y() const {
  if (!xy_) throw std::logic_error("point at infinity has no affine coordinates");
  return xy_->second;
}

std::string CurvePoint::to_string() const {
  if (is_infinity()) return "inf";
  return "(" + x().to_string() + ", " + y().to_string() + ")";
}

int frobenius_sign(std::uint32_t p) { return p % 4 == 1 ? 1 : -1; }

RoquetteCurve::RoquetteCurve(std::shared_ptr<const RoquetteGroup> group) : group_(std::move(group)) {
  if (!group_) throw std::invalid_argument("curve needs a group");
}

FieldElement RoquetteCurve::rhs(const FieldElement& x) const { return x.pow(prime()) - x; }

bool RoquetteCurve::on_curve(const CurvePoint& pt) const {
  if (pt.is_infinity()) return true;
  if (pt.x().field().characteristic() != prime()) return false;
  return pt.y() * pt.y() == rhs(pt.x());
}

std::vector<CurvePoint> RoquetteCurve::points(int k) const {
  const Field& f = Field::get(prime(), k);
  std::vector<CurvePoint> out{CurvePoint::infinity()};
  for (std::uint64_t i = 0; i < f.order(); ++i) {
    const FieldElement x = f.element_at(i);
    const FieldElement fx = rhs(x);
    if (fx.is_zero()) {
      out.push_back(CurvePoint::affine(x, fx));
      continue;
    }
    if (auto r = sqrt(fx)) {
      out.push_back(CurvePoint::affine(x, *r));
      out.push_back(CurvePoint::affine(x, -*r));
    }
  }
  return out;
}

std::uint64_t RoquetteCurve::count_points(int k) const {
  const Field& f = Field::get(prime(), k);
  std::uint64_t n = 1;
  for (std::uint64_t i = 0; i < f.order(); ++i) {
    const FieldElement fx = rhs(f.element_at(i));
    if (fx.is_zero())
      n += 1;
    else if (is_square(fx))
      n += 2;
  }
  return n;
}

CurvePoint RoquetteCurve::act(const GroupElement& g, const CurvePoint& pt, const Field& field) const {
  if (field.characteristic() != prime() || field.degree() % 2 != 0)
    throw std::invalid_argument("action needs a field containing F_{p^2}, got " + field.to_string());
  const std::uint32_t p = prime();
  const FieldElement a = field.from_int(g.a()), b = field.from_int(g.b()), c = field.from_int(g.c()),
                     d = field.from_int(g.d());
  if (pt.is_infinity()) {
    if (g.c() == 0) return CurvePoint::infinity();
    // The fibre above a/c in P^1(F_p) is a single ramification point.
    return CurvePoint::affine(a / c, field.zero());
  }
  if (&pt.x().field() != &field) throw MismatchError("point is not over " + field.to_string());
  if (!on_curve(pt)) throw std::invalid_argument("point " + pt.to_string() + " is not on the curve");
  const FieldElement den = c * pt.x() + d;
  if (den.is_zero()) {
    ensure(pt.y().is_zero(), "cx + d vanishes only at ramification points");
    return CurvePoint::infinity();
  }
  const FieldElement lambda = embed(group_->lambda(g), field);
  const FieldElement x_new = (a * pt.x() + b) / den;
  const FieldElement y_new = lambda * pt.y() / den.pow((p + 1) / 2);
  return CurvePoint::affine(x_new, y_new);
}

CurvePoint RoquetteCurve::act(const GroupElement& g, const CurvePoint& pt) const {
  return act(g, pt, pt.is_infinity() ? group_->fp2() : pt.x().field());
}

std::vector<FixedPoint> RoquetteCurve::fixed_points(const GroupElement& g, int precision) const {
  const RoquetteGroup& grp = *group_;
  if (g == grp.identity()) throw std::invalid_argument("identity has no isolated fixed points");
  const std::uint32_t p = prime();
  const Field& fp2 = grp.fp2();
  const Field& fp4 = Field::get(p, 4);

  std::vector<FieldElement> xs;
  if (g.matrix == PglElement{1, 0, 0, 1}) {
    // Scalar matrix part: only the fibres of P^1(F_p) can be fixed.
    for (std::uint32_t r = 0; r < p; ++r) xs.push_back(fp2.from_int(r));
  } else {
    const FieldElement a = fp2.from_int(g.a()), b = fp2.from_int(g.b()), c = fp2.from_int(g.c()),
                       d = fp2.from_int(g.d());
    xs = roots(Poly(fp2, {-b, d - a, c}));
  }

  std::vector<FixedPoint> fixed;
  auto consider = [&](const CurvePoint& pt) {
    if (act(g, pt, fp4) == pt) fixed.push_back({pt, 1});
  };
  if (g.c() == 0) consider(CurvePoint::infinity());
  for (const auto& x2 : xs) {
    const FieldElement x = embed(x2, fp4);
    const FieldElement fx = rhs(x);
    if (fx.is_zero()) {
      consider(CurvePoint::affine(x, fx));
      continue;
    }
    const auto y = sqrt(fx);
    ensure(y.has_value(), "every element of F_{p^2} is a square in F_{p^4}");
    consider(CurvePoint::affine(x, *y));
    consider(CurvePoint::affine(x, -*y));
  }

  if (grp.element_order(g) % p == 0) {
    ensure(fixed.size() == 1, "a wild automorphism has exactly one fixed point");
    ensure(fixed.front().point.is_ramification(), "the wild fixed point is a ramification point");
    fixed.front().multiplicity = wild_multiplicity(grp, g, precision);
  }
  return fixed;
}

int RoquetteCurve::fixed_scheme_degree(const GroupElement& g, int precision) const {
  int total = 0;
  for (const auto& fp : fixed_points(g, precision)) total += fp.multiplicity;
  return total;
}

HasseWeilReport RoquetteCurve::hasse_weil_sharpness() const {
  HasseWeilReport r;
  r.p = prime();
  const auto p = static_cast<std::int64_t>(r.p);
  r.count_fp = count_points(1);
  r.count_fp2 = count_points(2);
  r.deviation = static_cast<std::int64_t>(r.count_fp2) - (1 + p * p);
  r.bound = p * (p - 1);
  r.sharp = std::llabs(r.deviation) == r.bound;
  r.epsilon = r.deviation < 0 ? 1 : -1;
  r.epsilon_from_congruence = frobenius_sign(r.p);
  return r;
}

}  // namespace roquette
