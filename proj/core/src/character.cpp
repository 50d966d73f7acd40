#include "roquette/character.hpp"

#include <optional>
#include <stdexcept>

#include "roquette/errors.hpp"

namespace roquette {

ClassFunction::ClassFunction(std::shared_ptr<const ConjugacyClasses> classes, std::vector<Rational> values)
    : classes_(std::move(classes)), values_(std::move(values)) {
  if (!classes_) throw std::invalid_argument("class function needs a class list");
  if (values_.size() != classes_->count())
    throw std::invalid_argument("class function has " + std::to_string(values_.size()) + " values for " +
                                std::to_string(classes_->count()) + " classes");
}

ClassFunction ClassFunction::constant(std::shared_ptr<const ConjugacyClasses> classes, Rational value) {
  const std::size_t n = classes ? classes->count() : 0;
  return ClassFunction(std::move(classes), std::vector<Rational>(n, value));
}

ClassFunction ClassFunction::trivial(std::shared_ptr<const ConjugacyClasses> classes) {
  return constant(std::move(classes), Rational(1));
}

ClassFunction ClassFunction::regular(std::shared_ptr<const ConjugacyClasses> classes) {
  ClassFunction r = constant(classes, Rational(0));
  r.values_[classes->identity_class()] = Rational(static_cast<std::int64_t>(classes->group_order()));
  return r;
}

bool ClassFunction::is_integer_valued() const {
  for (const auto& v : values_)
    if (v.denominator() != 1) return false;
  return true;
}

std::vector<std::int64_t> ClassFunction::integer_values() const {
  std::vector<std::int64_t> out;
  out.reserve(values_.size());
  for (const auto& v : values_) {
    if (v.denominator() != 1) throw std::domain_error("class function is not integer-valued");
    out.push_back(v.numerator());
  }
  return out;
}

ClassFunction lefschetz_character(const RoquetteCurve& curve, int precision) {
  const RoquetteGroup& group = curve.group();
  auto classes = group.conjugacy_classes();
  std::vector<Rational> values;
  values.reserve(classes->count());
  for (const auto& cls : classes->classes()) {
    if (cls.representative == group.identity())
      values.emplace_back(2 * curve.genus());
    else
      values.emplace_back(2 - curve.fixed_scheme_degree(cls.representative, precision));
  }
  return ClassFunction(std::move(classes), std::move(values));
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.classes_ptr() != b.classes_ptr()) throw MismatchError("class functions on different class lists");
  Rational sum(0);
  const auto& classes = a.classes();
  for (std::size_t i = 0; i < a.size(); ++i)
    sum += Rational(static_cast<std::int64_t>(classes[i].size())) * a[i] * b[i];
  return sum / static_cast<std::int64_t>(classes.group_order());
}

SylowRestriction sylow_restriction(const RoquetteGroup& group, const ClassFunction& chi) {
  const auto p = static_cast<std::int64_t>(group.prime());
  const auto sylow = group.sylow_p();
  ensure(static_cast<std::int64_t>(sylow.size()) == p, "the p-Sylow subgroup has order p");
  std::optional<Rational> n;
  for (const auto& s : sylow) {
    if (s == group.identity()) continue;
    const Rational v = chi.at(s);
    if (!n) n = v;
    ensure(*n == v, "chi is constant on the non-identity elements of the p-Sylow subgroup");
  }
  SylowRestriction r;
  r.n_chi = *n;
  r.trivial_mult = (chi.degree() + Rational(p - 1) * r.n_chi) / p;
  r.nontrivial_mult = (chi.degree() - r.n_chi) / p;
  return r;
}

Rational fs_indicator(const RoquetteGroup& group, const ClassFunction& chi) {
  Rational sum(0);
  for (const auto& g : group.elements()) sum += chi.at(group.mul(g, g));
  return sum / static_cast<std::int64_t>(group.order());
}

std::vector<GroupElement> kernel_of_character(const RoquetteGroup& group, const ClassFunction& chi) {
  std::vector<GroupElement> kernel;
  for (const auto& g : group.elements())
    if (chi.at(g) == chi.degree()) kernel.push_back(g);
  return kernel;
}

bool iota_twist_consistent(const RoquetteGroup& group, const ClassFunction& chi) {
  const GroupElement iota = group.iota();
  for (const auto& cls : chi.classes().classes())
    if (chi.at(group.mul(cls.representative, iota)) != -chi.at(cls.representative)) return false;
  return true;
}

std::string to_string(SchurWitness w) { return w == SchurWitness::Two ? "2" : "unknown"; }

std::string to_string(LiftVerdict v) { return v == LiftVerdict::Obstructed ? "obstructed" : "not determined"; }

ObstructionVerdict schur_obstruction_verdict(const RoquetteGroup& group, const ClassFunction& chi) {
  ObstructionVerdict v;
  v.integer_valued = chi.is_integer_valued();
  v.irreducible = inner_product(chi, chi) == Rational(1);
  v.fs_indicator = fs_indicator(group, chi);
  if (v.irreducible)
    ensure(v.fs_indicator == Rational(-1) || v.fs_indicator == Rational(0) || v.fs_indicator == Rational(1),
           "an irreducible character has indicator in {-1, 0, 1}");
  if (!v.integer_valued) return v;
  if (v.irreducible && v.fs_indicator == Rational(-1)) {
    v.schur_index_witness = SchurWitness::Two;
    v.rationality_class_nontrivial = true;
    v.lifts = LiftVerdict::Obstructed;
  }
  return v;
}

}  // namespace roquette
