#pragma once

// Prime fields F_p and extensions F_{p^k} in a polynomial basis over F_p.
//
// Every extension is built directly over F_p as F_p[z]/(m(z)) where m is the
// first monic irreducible polynomial of degree k in lexicographic order of its
// coefficient vector (c_0, c_1, ..., c_{k-1}), constant term most significant.
// Field descriptors are interned: Field::get(p, k) always returns the same
// object, so descriptor identity is address identity.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace roquette {

inline constexpr int kMaxFieldDegree = 24;

bool is_prime(std::uint64_t n);

class FieldElement;

class Field {
 public:
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  /// Descriptor of F_{p^k}. Throws std::invalid_argument for composite p,
  /// p < 5, k outside [1, kMaxFieldDegree] or p^k >= 2^62.
  static const Field& get(std::uint32_t p, int k);

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return k_; }
  std::uint64_t order() const { return order_; }
  bool is_prime_field() const { return k_ == 1; }

  /// Coefficients of the defining polynomial, constant term first; size k+1, monic.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  /// True when this field contains a copy of `sub` (same p, degree divides).
  bool contains(const Field& sub) const { return p_ == sub.p_ && k_ % sub.k_ == 0; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t v) const;
  /// The class of z in F_p[z]/(m(z)).
  FieldElement generator() const;
  /// Coefficients constant-term first; each is reduced mod p.
  FieldElement from_coeffs(std::span<const std::int64_t> coeffs) const;
  /// Element at position `index` of the lexicographic enumeration
  /// (c_0 most significant digit base p).
  FieldElement element_at(std::uint64_t index) const;

  /// First non-square in lexicographic enumeration order.
  FieldElement nonresidue() const;

  std::string to_string() const;

 private:
  Field(std::uint32_t p, int k, std::vector<std::uint32_t> modulus);
  friend class FieldRegistry;

  std::uint32_t p_;
  int k_;
  std::uint64_t order_;
  std::vector<std::uint32_t> modulus_;
  std::array<std::uint16_t, kMaxFieldDegree> nonresidue_{};
};

class FieldElement {
 public:
  using Coeffs = std::array<std::uint16_t, kMaxFieldDegree>;

  FieldElement(const Field& field, const Coeffs& coeffs) : field_(&field), c_(coeffs) {}

  const Field& field() const { return *field_; }
  std::uint32_t coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  const Coeffs& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the element lies in the prime subfield.
  bool in_prime_field() const;
  /// The value in {0..p-1} of an element of the prime subfield.
  std::uint32_t to_prime() const;
  /// Position in the lexicographic enumeration of the field.
  std::uint64_t index() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  FieldElement scaled(std::int64_t s) const;
  FieldElement pow(std::uint64_t n) const;
  /// Throws std::domain_error on zero.
  FieldElement inv() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }
  /// Lexicographic on coefficients, constant term most significant.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    return a.c_ <=> b.c_;
  }

  std::string to_string() const;

 private:
  const Field* field_;
  Coeffs c_;
};

/// Legendre symbol of an element of a prime field: -1, 0 or +1.
/// Throws std::invalid_argument for extension-field input.
int legendre(const FieldElement& a);

bool is_square(const FieldElement& a);

/// Canonical square root: the lexicographically smaller of {r, -r}.
/// Tonelli-Shanks over F_{p^k}.
std::optional<FieldElement> sqrt(const FieldElement& a);

/// Square root by scanning the whole field; canonical choice as in sqrt().
/// Throws ResourceLimitError when the field has more than `max_order` elements.
std::optional<FieldElement> sqrt_exhaustive(const FieldElement& a,
                                            std::uint64_t max_order = 1'000'000);

/// a^{p^i}.
FieldElement frobenius(const FieldElement& a, int i = 1);

/// Image of `a` under the fixed embedding of a.field() into `target`. The
/// generator goes to the lexicographically first root of the source modulus
/// in the target field. Throws std::invalid_argument unless the source degree
/// divides the target degree.
FieldElement embed(const FieldElement& a, const Field& target);

}  // namespace roquette

template <>
struct std::hash<roquette::FieldElement> {
  std::size_t operator()(const roquette::FieldElement& a) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto c : a.coeffs()) h = (h ^ c) * 1099511628211ull;
    return h;
  }
};
