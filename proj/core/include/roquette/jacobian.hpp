#pragma once

// Divisor classes on the Jacobian of y^2 = x^p - x over F_{p^k} in Mumford
// form, Cantor's composition and reduction, the action of G on classes, and
// the l-torsion representations with their traces.
//
// A class is written (u, v) for the divisor sum(P_i) - deg(u) * inf, with u
// monic, deg v < deg u <= g and u | v^2 - f. The identity is (1, 0).

#include <cstdint>
#include <memory>
#include <random>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "roquette/curve.hpp"
#include "roquette/group.hpp"
#include "roquette/poly.hpp"

namespace roquette {

using BigInt = boost::multiprecision::cpp_int;

struct MumfordDivisor {
  Poly u;
  Poly v;

  const Field& field() const { return u.field(); }
  bool is_identity() const { return u.is_one(); }
  friend bool operator==(const MumfordDivisor&, const MumfordDivisor&) = default;
  std::string to_string() const;
};

}  // namespace roquette

template <>
struct std::hash<roquette::MumfordDivisor> {
  std::size_t operator()(const roquette::MumfordDivisor& d) const noexcept {
    std::size_t h = 0;
    std::hash<roquette::FieldElement> eh;
    for (const auto& c : d.u.coeffs()) h = h * 31 + eh(c);
    h = h * 1000003u + static_cast<std::size_t>(d.u.degree() + 1);
    for (const auto& c : d.v.coeffs()) h = h * 31 + eh(c);
    return h;
  }
};

namespace roquette {

class Jacobian {
 public:
  /// J(F) for a field F of characteristic p. Throws std::invalid_argument on
  /// a characteristic mismatch.
  Jacobian(std::shared_ptr<const RoquetteGroup> group, const Field& field);

  const Field& field() const { return *field_; }
  std::uint32_t prime() const { return group_->prime(); }
  int genus() const { return static_cast<int>(prime() - 1) / 2; }
  const RoquetteGroup& group() const { return *group_; }
  /// x^p - x over field().
  const Poly& f() const { return f_; }

  MumfordDivisor identity() const;
  /// True when (u, v) is a reduced Mumford pair over field().
  bool is_valid(const MumfordDivisor& d) const;
  /// Throws std::invalid_argument unless (u, v) is a reduced Mumford pair.
  MumfordDivisor make(Poly u, Poly v) const;
  /// Class of P - inf; P must be over field().
  MumfordDivisor from_point(const CurvePoint& pt) const;

  MumfordDivisor add(const MumfordDivisor& a, const MumfordDivisor& b) const;
  MumfordDivisor neg(const MumfordDivisor& a) const;
  MumfordDivisor dbl(const MumfordDivisor& a) const { return add(a, a); }
  MumfordDivisor scalar_mul(const MumfordDivisor& a, const BigInt& n) const;

  /// A uniformly random F-rational point of the curve other than infinity.
  CurvePoint random_point(std::mt19937_64& rng) const;
  /// Sum of g random rational points minus g * inf.
  MumfordDivisor random_divisor(std::mt19937_64& rng) const;

  /// Image of the class under g. The field must contain F_{p^2}.
  MumfordDivisor act(const GroupElement& g, const MumfordDivisor& d) const;

  /// Every reduced pair over field(), by brute force over all (u, v).
  /// Throws ResourceLimitError when more than `limit` candidate pairs arise.
  std::vector<MumfordDivisor> enumerate_all(std::uint64_t limit = 50'000'000) const;

 private:
  void check(const MumfordDivisor& d) const;
  MumfordDivisor reduce(Poly u, Poly v) const;

  std::shared_ptr<const RoquetteGroup> group_;
  const Field* field_;
  Poly f_;
};

/// #J(F_{p^{2m}}) = (1 - (eps p)^m)^{2g} with eps = frobenius_sign(p).
BigInt jacobian_order(std::uint32_t p, int m);

/// J(F_{p^{2m}}) = J[n] for n = |1 - (eps p)^m|.
BigInt jacobian_exponent(std::uint32_t p, int m);

/// Multiplicative order of eps * p modulo l.
int ell_field_index(std::uint32_t p, std::uint32_t ell);

/// A square matrix over F_l.
class ModLMatrix {
 public:
  ModLMatrix(std::uint32_t ell, int n);
  static ModLMatrix identity(std::uint32_t ell, int n);

  std::uint32_t ell() const { return ell_; }
  int size() const { return n_; }
  std::uint32_t& operator()(int r, int c) { return e_[static_cast<std::size_t>(r * n_ + c)]; }
  std::uint32_t operator()(int r, int c) const { return e_[static_cast<std::size_t>(r * n_ + c)]; }

  std::uint32_t trace() const;
  std::uint32_t det() const;
  friend ModLMatrix operator*(const ModLMatrix& a, const ModLMatrix& b);
  friend bool operator==(const ModLMatrix&, const ModLMatrix&) = default;

 private:
  std::uint32_t ell_;
  int n_;
  std::vector<std::uint32_t> e_;
};

struct TorsionBasis {
  std::uint32_t ell = 0;
  /// The classes live over F_{p^{2m}}.
  int m = 0;
  Jacobian jacobian;
  std::vector<MumfordDivisor> basis;
  /// Every element of J[l] with its coordinates in the basis.
  std::unordered_map<MumfordDivisor, std::vector<std::uint8_t>> coordinates;
  /// Random classes drawn before the basis was complete.
  int samples = 0;

  std::uint64_t span_size() const { return coordinates.size(); }
};

/// Smallest odd primes l != p with l^{2g} <= bound, taken in increasing order
/// until their product exceeds 2(p - 1). Empty when no such prefix exists.
std::vector<std::uint32_t> default_ell_list(std::uint32_t p, std::uint64_t bound);

/// Reason `ell` cannot be used at `p`, or empty when it can.
std::string ell_infeasibility(std::uint32_t p, std::uint32_t ell, std::uint64_t bound);

/// A basis of J[l] over F_{p^{2m}} together with the enumerated span.
/// Throws std::invalid_argument when l is not a prime different from p and
/// ResourceLimitError when l^{2g} exceeds `bound`, the field is too large or
/// `max_samples` random classes fail to span.
TorsionBasis torsion_basis(std::shared_ptr<const RoquetteGroup> group, std::uint32_t ell, std::uint64_t bound,
                           std::mt19937_64& rng, int max_samples = 2000);

/// Column j holds the coordinates of g * basis[j]. Throws InvariantViolation
/// when an image leaves J[l].
ModLMatrix rep_matrix(const GroupElement& g, const TorsionBasis& tb);

/// Trace of the l-torsion representation on each class, in [0, l).
std::vector<std::uint32_t> rho_ell_traces(const TorsionBasis& tb, const ConjugacyClasses& classes);

/// The integers in (-P/2, P/2], P the product of the moduli, congruent to the
/// given residues. Requires distinct prime moduli and P > 2 * max_abs;
/// throws std::invalid_argument otherwise.
std::vector<std::int64_t> crt_reconstruct(const std::vector<std::uint32_t>& moduli,
                                          const std::vector<std::vector<std::uint32_t>>& residues,
                                          std::int64_t max_abs);

}  // namespace roquette
