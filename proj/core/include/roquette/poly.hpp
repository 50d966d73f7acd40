#pragma once

// Dense univariate polynomials over a finite field.

#include <string>
#include <utility>
#include <vector>

#include "roquette/ff.hpp"

namespace roquette {

class Poly {
 public:
  explicit Poly(const Field& field) : field_(&field) {}
  /// Coefficients constant term first; trailing zeros are trimmed.
  Poly(const Field& field, std::vector<FieldElement> coeffs);

  static Poly constant(const FieldElement& c);
  /// c * x^n.
  static Poly monomial(const FieldElement& c, int n);
  /// x - r.
  static Poly linear_root(const FieldElement& r);

  const Field& field() const { return *field_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  FieldElement coeff(int i) const;
  const FieldElement& leading() const { return c_.back(); }
  const std::vector<FieldElement>& coeffs() const { return c_; }

  Poly monic() const;
  FieldElement eval(const FieldElement& x) const;
  Poly derivative() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const FieldElement& s);
  friend Poly operator/(const Poly& a, const Poly& b);
  friend Poly operator%(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  std::string to_string() const;

 private:
  void trim();

  const Field* field_;
  std::vector<FieldElement> c_;
};

/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic gcd (zero when both inputs are zero).
Poly gcd(Poly a, Poly b);

struct XgcdResult {
  Poly g;  // monic gcd
  Poly s;
  Poly t;  // s*a + t*b == g
};
XgcdResult xgcd(const Poly& a, const Poly& b);

Poly pow_mod(Poly base, std::uint64_t e, const Poly& modulus);

/// Distinct roots of f in f.field(), lexicographically sorted.
std::vector<FieldElement> roots(const Poly& f);

}  // namespace roquette
