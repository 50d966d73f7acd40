#pragma once

// Truncated Laurent series over a finite field and the local computation of
// fixed-point multiplicities at the point at infinity of y^2 = x^p - x.

#include <optional>
#include <string>
#include <vector>

#include "roquette/ff.hpp"
#include "roquette/group.hpp"

namespace roquette {

/// sum_{n >= valuation} c_n s^n + O(s^precision).
///
/// Leading coefficient is nonzero unless the series is zero to its
/// precision; a zero series has valuation() == precision().
class TruncatedSeries {
 public:
  /// O(s^precision).
  static TruncatedSeries zero(const Field& field, int precision);
  /// c * s^n + O(s^precision).
  static TruncatedSeries monomial(const FieldElement& c, int n, int precision);
  /// coeffs[i] is the coefficient of s^(valuation + i).
  TruncatedSeries(const Field& field, int valuation, std::vector<FieldElement> coeffs, int precision);

  const Field& field() const { return *field_; }
  int valuation() const { return valuation_; }
  int precision() const { return precision_; }
  /// Number of known coefficients past the leading one.
  int relative_precision() const { return precision_ - valuation_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of s^n; throws ResourceLimitError when n >= precision().
  FieldElement coeff(int n) const;
  const FieldElement& leading() const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const FieldElement& c);

  /// Multiplicative inverse; throws std::domain_error on a zero series.
  TruncatedSeries inverse() const;
  /// Square root with the canonical square root of the leading coefficient.
  /// Throws std::domain_error for odd valuation or a non-square leading
  /// coefficient.
  TruncatedSeries sqrt() const;
  TruncatedSeries pow(int n) const;
  /// s^n * this.
  TruncatedSeries shifted(int n) const;
  /// Drops known terms at or above `precision`.
  TruncatedSeries truncated(int precision) const;
  /// this(inner); inner must have valuation >= 1.
  TruncatedSeries compose(const TruncatedSeries& inner) const;

  std::string to_string() const;

 private:
  void normalize();

  const Field* field_;
  int valuation_;
  std::vector<FieldElement> coeffs_;
  int precision_;
};

/// The standard chart at infinity: x = s^-2 and y = s^-p * w(s) with
/// w = sqrt(1 - s^(2p-2)), w(0) = 1.
struct InfinityChart {
  TruncatedSeries x;
  TruncatedSeries y;
};
InfinityChart chart_at_infinity(const Field& field, int precision);

/// Default working precision for the local computations: 2p + 4.
int default_series_precision(std::uint32_t p);

/// v(g^*(s) - s) at infinity for a non-identity g whose matrix has c = 0.
/// The branch of the square root defining g^*(s) is selected by matching
/// g^*(y) = lambda * y / d^((p+1)/2). Returns nullopt when the precision is
/// insufficient to decide.
std::optional<int> multiplicity_at_infinity(const RoquetteGroup& group, const GroupElement& g, int precision);

/// Intersection multiplicity of the graph of a wild element (p divides its
/// order) with the diagonal at its unique fixed point. The element is first
/// conjugated within G so that it fixes infinity; precision starts at
/// `precision` (0 = default) and doubles up to 64p.
int wild_multiplicity(const RoquetteGroup& group, const GroupElement& g, int precision = 0);

}  // namespace roquette
