#pragma once

// Class functions on G, the character of G on H^1 obtained from the Lefschetz
// fixed-point formula, and the checks that certify a Schur index obstruction.
// All arithmetic is in exact rationals.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "roquette/curve.hpp"
#include "roquette/group.hpp"

namespace roquette {

using Rational = boost::rational<std::int64_t>;

class ClassFunction {
 public:
  /// One value per class of `classes`, in class order.
  ClassFunction(std::shared_ptr<const ConjugacyClasses> classes, std::vector<Rational> values);

  static ClassFunction constant(std::shared_ptr<const ConjugacyClasses> classes, Rational value);
  static ClassFunction trivial(std::shared_ptr<const ConjugacyClasses> classes);
  /// |G| at the identity, 0 elsewhere.
  static ClassFunction regular(std::shared_ptr<const ConjugacyClasses> classes);

  const ConjugacyClasses& classes() const { return *classes_; }
  const std::shared_ptr<const ConjugacyClasses>& classes_ptr() const { return classes_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](std::size_t cls) const { return values_[cls]; }
  const Rational& at(const GroupElement& g) const { return values_[classes_->class_of(g)]; }
  /// Value at the identity.
  const Rational& degree() const { return values_[classes_->identity_class()]; }

  bool is_integer_valued() const;
  /// Throws std::domain_error when a value is not an integer.
  std::vector<std::int64_t> integer_values() const;

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.classes_ == b.classes_ && a.values_ == b.values_;
  }

 private:
  std::shared_ptr<const ConjugacyClasses> classes_;
  std::vector<Rational> values_;
};

/// chi(1) = 2g and chi(g) = 2 - (degree of the fixed-point scheme of g).
ClassFunction lefschetz_character(const RoquetteCurve& curve, int precision = 0);

/// (1/|G|) sum over classes of size * a * b. Both functions are assumed real.
/// Throws MismatchError unless both share the same class list.
Rational inner_product(const ClassFunction& a, const ClassFunction& b);

struct SylowRestriction {
  /// Common value of chi on the non-identity elements of the p-Sylow subgroup.
  Rational n_chi;
  Rational trivial_mult;
  /// Shared by every non-trivial character of the cyclic p-Sylow subgroup.
  Rational nontrivial_mult;
};

/// Multiplicities of the characters of the p-Sylow subgroup N in res_N(chi),
/// from the closed forms (chi(1) + (p-1) n)/p and (chi(1) - n)/p. Throws
/// InvariantViolation when chi is not constant on N minus the identity.
SylowRestriction sylow_restriction(const RoquetteGroup& group, const ClassFunction& chi);

/// (1/|G|) sum over g in G of chi(g^2).
Rational fs_indicator(const RoquetteGroup& group, const ClassFunction& chi);

/// All g with chi(g) = chi(1), in group enumeration order.
std::vector<GroupElement> kernel_of_character(const RoquetteGroup& group, const ClassFunction& chi);

/// True when chi(g * iota) = -chi(g) for every g.
bool iota_twist_consistent(const RoquetteGroup& group, const ClassFunction& chi);

enum class SchurWitness { Two, Unknown };
enum class LiftVerdict { Obstructed, NotDetermined };

std::string to_string(SchurWitness w);
std::string to_string(LiftVerdict v);

struct ObstructionVerdict {
  bool integer_valued = false;
  bool irreducible = false;
  Rational fs_indicator{0};
  SchurWitness schur_index_witness = SchurWitness::Unknown;
  bool rationality_class_nontrivial = false;
  LiftVerdict lifts = LiftVerdict::NotDetermined;

  friend bool operator==(const ObstructionVerdict&, const ObstructionVerdict&) = default;
};

/// An irreducible Z-valued character of quaternionic type has Schur index 2
/// over Q, so chi itself is not the character of a rational representation.
/// When chi is not integer-valued the remaining evaluation is skipped.
ObstructionVerdict schur_obstruction_verdict(const RoquetteGroup& group, const ClassFunction& chi);

}  // namespace roquette
