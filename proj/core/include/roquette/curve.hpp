#pragma once

// The Roquette curve y^2 = x^p - x: points, the action of G, fixed points and
// point counts.
//
// Point maps compose covariantly: act(g*h, P) == act(g, act(h, P)). The
// pullback of x under g is (ax + b)/(cx + d), so g sends (x, y) to
// ((ax + b)/(cx + d), lambda * y / (cx + d)^((p+1)/2)).

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "roquette/ff.hpp"
#include "roquette/group.hpp"

namespace roquette {

class CurvePoint {
 public:
  static CurvePoint infinity() { return CurvePoint(); }
  static CurvePoint affine(const FieldElement& x, const FieldElement& y);

  bool is_infinity() const { return !xy_.has_value(); }
  /// Throws std::logic_error at infinity.
  const FieldElement& x() const;
  const FieldElement& y() const;
  /// Infinity or a point with y = 0.
  bool is_ramification() const { return is_infinity() || y().is_zero(); }

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
  std::string to_string() const;

 private:
  CurvePoint() = default;
  std::optional<std::pair<FieldElement, FieldElement>> xy_;
};

struct FixedPoint {
  CurvePoint point;
  int multiplicity = 1;
};

struct HasseWeilReport {
  std::uint32_t p = 0;
  std::uint64_t count_fp = 0;
  std::uint64_t count_fp2 = 0;
  std::int64_t deviation = 0;  // #C(F_{p^2}) - (1 + p^2)
  std::int64_t bound = 0;      // 2g * p = p(p - 1)
  bool sharp = false;
  /// +1 when Frobenius over F_{p^2} acts as +p (minimal curve), -1 for -p.
  int epsilon = 0;
  /// The sign predicted by p mod 4.
  int epsilon_from_congruence = 0;
};

/// Sign of the Frobenius scalar over F_{p^2}: +1 iff p = 1 mod 4.
int frobenius_sign(std::uint32_t p);

class RoquetteCurve {
 public:
  explicit RoquetteCurve(std::shared_ptr<const RoquetteGroup> group);

  std::uint32_t prime() const { return group_->prime(); }
  int genus() const { return static_cast<int>(prime() - 1) / 2; }
  const RoquetteGroup& group() const { return *group_; }
  std::shared_ptr<const RoquetteGroup> group_ptr() const { return group_; }

  /// x^p - x.
  FieldElement rhs(const FieldElement& x) const;
  bool on_curve(const CurvePoint& pt) const;

  /// Infinity followed by affine points in lexicographic order of x, the
  /// canonical root of each fibre before its negative.
  std::vector<CurvePoint> points(int k) const;
  std::uint64_t count_points(int k) const;

  /// Image of pt; affine coordinates must lie in `field`, which must contain
  /// F_{p^2}. Throws std::invalid_argument for points off the curve.
  CurvePoint act(const GroupElement& g, const CurvePoint& pt, const Field& field) const;
  /// As above with the field of pt (F_{p^2} for infinity).
  CurvePoint act(const GroupElement& g, const CurvePoint& pt) const;

  /// Fixed points of a non-identity g with their intersection multiplicities.
  /// Affine points are expressed over F_{p^4}. `precision` seeds the series
  /// computation at a wild fixed point (0 = default).
  std::vector<FixedPoint> fixed_points(const GroupElement& g, int precision = 0) const;
  /// Degree of the fixed-point scheme: the sum of multiplicities.
  int fixed_scheme_degree(const GroupElement& g, int precision = 0) const;

  HasseWeilReport hasse_weil_sharpness() const;

 private:
  std::shared_ptr<const RoquetteGroup> group_;
};

}  // namespace roquette
