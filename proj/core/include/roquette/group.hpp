#pragma once

// The automorphism group G of the Roquette curve y^2 = x^p - x.
//
// G~ is the fibre product of GL_2(F_p) with the cyclic group of all lambda in
// F_{p^2} whose square lies in F_p^x, over det(A) = lambda^2. G is the quotient
// of G~ by the scalars {(mu*I, (mu|p)*mu)}. A GroupElement stores the unique
// coset representative whose matrix has first nonzero row-major entry 1;
// lambda is stored as a discrete logarithm to the fixed generator gamma of
// the square-root group (the first element of order 2(p-1) in lexicographic
// order of F_{p^2}).

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

#include "roquette/ff.hpp"

namespace roquette {

/// All lambda in F_{p^2}^x with lambda^2 in F_p^x, lexicographically sorted.
std::vector<FieldElement> sqrt_roots_group(std::uint32_t p);

struct GroupElement {
  std::uint16_t p = 0;
  /// Row-major (a, b, c, d), entries in [0, p).
  std::array<std::uint16_t, 4> matrix{};
  /// lambda = gamma^lambda_log, lambda_log in [0, 2(p-1)).
  std::uint16_t lambda_log = 0;

  std::uint32_t a() const { return matrix[0]; }
  std::uint32_t b() const { return matrix[1]; }
  std::uint32_t c() const { return matrix[2]; }
  std::uint32_t d() const { return matrix[3]; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Normalized matrix of an element of PGL_2(F_p).
using PglElement = std::array<std::uint16_t, 4>;

struct ConjClass {
  GroupElement representative;
  std::vector<GroupElement> members;
  std::uint64_t element_order = 0;

  std::size_t size() const { return members.size(); }
};

class RoquetteGroup;

/// Partition of G into conjugacy classes, in order of first appearance in the
/// group enumeration.
class ConjugacyClasses {
 public:
  ConjugacyClasses(std::uint32_t p, std::uint64_t group_order, std::vector<ConjClass> classes,
                   std::vector<int> class_of_key);

  std::uint32_t prime() const { return p_; }
  std::uint64_t group_order() const { return group_order_; }
  std::size_t count() const { return classes_.size(); }
  const std::vector<ConjClass>& classes() const { return classes_; }
  const ConjClass& operator[](std::size_t i) const { return classes_[i]; }

  /// Index of the class containing g.
  std::size_t class_of(const GroupElement& g) const;
  /// Index of the identity class.
  std::size_t identity_class() const;

 private:
  std::uint32_t p_;
  std::uint64_t group_order_;
  std::vector<ConjClass> classes_;
  std::vector<int> class_of_key_;
};

class RoquetteGroup {
 public:
  /// Throws std::invalid_argument unless p is a prime >= 5.
  explicit RoquetteGroup(std::uint32_t p);

  std::uint32_t prime() const { return p_; }
  /// 2p(p^2 - 1).
  std::uint64_t order() const;
  const Field& fp2() const { return *fp2_; }

  /// gamma^e as an element of F_{p^2}.
  const FieldElement& lambda_value(std::uint32_t log) const;
  FieldElement lambda(const GroupElement& g) const { return lambda_value(g.lambda_log); }
  /// The square-root group generator gamma.
  const FieldElement& lambda_generator() const { return lambda_value(1); }

  /// Image in G of (A, lambda) in G~. Throws std::invalid_argument when A is
  /// singular or lambda^2 != det(A).
  GroupElement make(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d,
                    const FieldElement& lambda) const;
  /// Re-normalizes a (possibly non-canonical) representative.
  GroupElement canonicalize(const GroupElement& g) const;
  bool is_canonical(const GroupElement& g) const;

  GroupElement identity() const;
  /// The hyperelliptic involution, class of (I, -1).
  GroupElement iota() const;
  /// Class of ([[1, u], [0, 1]], sign).
  GroupElement unipotent(std::uint32_t u, int lambda_sign = 1) const;

  GroupElement mul(const GroupElement& g, const GroupElement& h) const;
  GroupElement inv(const GroupElement& g) const;
  GroupElement pow(const GroupElement& g, std::uint64_t n) const;
  /// h g h^{-1}.
  GroupElement conjugate(const GroupElement& g, const GroupElement& h) const;
  std::uint64_t element_order(const GroupElement& g) const;

  /// Every element of G exactly once, ordered by normalized matrix (row-major
  /// lexicographic) and then by lambda_log.
  const std::vector<GroupElement>& elements() const { return elements_; }
  /// Position of g in elements().
  std::size_t index_of(const GroupElement& g) const;

  /// Every pair (A, lambda) of G~, unreduced, as raw (matrix, lambda_log).
  std::vector<GroupElement> tilde_elements() const;

  /// Computed once and shared by every caller.
  std::shared_ptr<const ConjugacyClasses> conjugacy_classes() const;

  /// The cyclic p-Sylow subgroup generated by unipotent(1).
  std::vector<GroupElement> sylow_p() const;

  PglElement proj_to_pgl(const GroupElement& g) const;
  /// Elements mapping to the identity of PGL_2(F_p).
  std::vector<GroupElement> kernel_of_projection() const;
  /// Distinct images of the projection.
  std::vector<PglElement> pgl_image() const;
  /// True when PGL_2(F_p) acts sharply 3-transitively on P^1(F_p), checked by
  /// mapping (0, 1, inf) through every image element.
  bool pgl_sharply_three_transitive() const;

  /// Dense key used for O(1) lookup tables: depends only on p.
  std::size_t key(const GroupElement& g) const;
  std::size_t key_space() const;

 private:
  std::shared_ptr<const ConjugacyClasses> compute_conjugacy_classes() const;
  std::uint32_t mod(std::int64_t v) const;
  std::uint32_t inv_fp(std::uint32_t v) const { return inv_table_[v]; }
  GroupElement normalize(std::array<std::uint32_t, 4> m, std::uint32_t lambda_log) const;
  void check_prime(const GroupElement& g) const;

  std::uint32_t p_;
  std::uint32_t lambda_order_;  // 2(p-1)
  const Field* fp2_;
  std::vector<FieldElement> lambda_powers_;
  std::vector<std::uint32_t> prime_log_;  // F_p^x -> exponent of gamma
  std::vector<std::uint32_t> inv_table_;
  std::vector<int> legendre_table_;
  std::vector<GroupElement> elements_;
  std::vector<std::int32_t> index_of_key_;
  mutable std::once_flag classes_once_;
  mutable std::shared_ptr<const ConjugacyClasses> classes_;
};

}  // namespace roquette

template <>
struct std::hash<roquette::GroupElement> {
  std::size_t operator()(const roquette::GroupElement& g) const noexcept {
    std::size_t h = g.lambda_log;
    for (auto e : g.matrix) h = h * 65537u + e;
    return h;
  }
};
