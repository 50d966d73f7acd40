#include "roquette/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "roquette/errors.hpp"

namespace roquette {

Poly::Poly(const Field& field, std::vector<FieldElement> coeffs) : field_(&field), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (&c.field() != field_) throw MismatchError("polynomial coefficient from a different field");
  trim();
}

Poly Poly::constant(const FieldElement& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const FieldElement& c, int n) {
  std::vector<FieldElement> coeffs(static_cast<std::size_t>(n) + 1, c.field().zero());
  coeffs.back() = c;
  return Poly(c.field(), std::move(coeffs));
}

Poly Poly::linear_root(const FieldElement& r) { return Poly(r.field(), {-r, r.field().one()}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElement Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return field_->zero();
  return c_[static_cast<std::size_t>(i)];
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inv();
}

FieldElement Poly::eval(const FieldElement& x) const {
  FieldElement acc = field_->zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  std::vector<FieldElement> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(c_[static_cast<std::size_t>(i)].scaled(i));
  return Poly(*field_, std::move(d));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (field_ != o.field_) throw MismatchError("polynomial field mismatch");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_->zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (field_ != o.field_) throw MismatchError("polynomial field mismatch");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_->zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.field_ != b.field_) throw MismatchError("polynomial field mismatch");
  if (a.is_zero() || b.is_zero()) return Poly(*a.field_);
  std::vector<FieldElement> r(a.c_.size() + b.c_.size() - 1, a.field_->zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(*a.field_, std::move(r));
}

Poly operator*(Poly a, const FieldElement& s) {
  for (auto& c : a.c_) c *= s;
  a.trim();
  return a;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<FieldElement> rem = a.coeffs();
  std::vector<FieldElement> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), f.zero());
  const FieldElement lead_inv = b.leading().inv();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const FieldElement q = rem[static_cast<std::size_t>(i)] * lead_inv;
    quo[static_cast<std::size_t>(i - db)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db), f.zero());
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

XgcdResult xgcd(const Poly& a, const Poly& b) {
  const Field& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f.one()), s1(f);
  Poly t0(f), t1 = Poly::constant(f.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const FieldElement scale = r0.leading().inv();
  return {r0 * scale, s0 * scale, t0 * scale};
}

Poly pow_mod(Poly base, std::uint64_t e, const Poly& modulus) {
  Poly result = Poly::constant(modulus.field().one()) % modulus;
  base = base % modulus;
  while (e) {
    if (e & 1) result = (result * base) % modulus;
    e >>= 1;
    if (e) base = (base * base) % modulus;
  }
  return result;
}

namespace {

void split_roots(const Poly& f, std::vector<FieldElement>& out) {
  if (f.degree() <= 0) return;
  if (f.degree() == 1) {
    out.push_back(-f.monic().coeff(0));
    return;
  }
  const Field& field = f.field();
  const Poly x = Poly::monomial(field.one(), 1);
  // (x + delta)^((q-1)/2) - 1 separates roots by the quadratic character of r + delta.
  for (std::uint64_t i = 0; i < field.order(); ++i) {
    const Poly shifted = x + Poly::constant(field.element_at(i));
    Poly h = pow_mod(shifted, (field.order() - 1) / 2, f) - Poly::constant(field.one());
    Poly g = gcd(f, h);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split_roots(g, out);
      split_roots(f / g, out);
      return;
    }
  }
  throw InvariantViolation("root splitting failed");
}

}  // namespace

std::vector<FieldElement> roots(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  const Field& field = f.field();
  const Poly x = Poly::monomial(field.one(), 1);
  Poly split = f.monic();
  if (split.degree() <= 0) return {};
  // Product of (x - r) over the distinct roots.
  Poly xq = pow_mod(x, field.order(), split);
  split = gcd(split, xq - x);
  std::vector<FieldElement> out;
  split_roots(split, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const auto& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || !c.is_one()) os << c.to_string();
    if (i > 0) os << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace roquette
