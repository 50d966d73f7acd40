#include "roquette/ff.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "roquette/errors.hpp"
#include "roquette/poly.hpp"

namespace roquette {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Dense polynomials over F_p as coefficient vectors, constant term first.
// Only used to find the defining modulus before any Field exists.
using RawPoly = std::vector<std::uint64_t>;

void raw_trim(RawPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

RawPoly raw_mod(RawPoly a, const RawPoly& m, std::uint64_t p) {
  raw_trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t q = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - q) * m[i]) % p;
    raw_trim(a);
  }
  return a;
}

RawPoly raw_mulmod(const RawPoly& a, const RawPoly& b, const RawPoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  RawPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return raw_mod(std::move(r), m, p);
}

RawPoly raw_gcd(RawPoly a, RawPoly b, std::uint64_t p) {
  raw_trim(a);
  raw_trim(b);
  while (!b.empty()) {
    RawPoly r = raw_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^d) mod m by repeated p-th powers.
RawPoly raw_frobenius_x(const RawPoly& m, std::uint64_t p, int d) {
  RawPoly x = raw_mod({0, 1}, m, p);
  for (int step = 0; step < d; ++step) {
    RawPoly result{1}, base = x;
    std::uint64_t e = p;
    while (e) {
      if (e & 1) result = raw_mulmod(result, base, m, p);
      base = raw_mulmod(base, base, m, p);
      e >>= 1;
    }
    x = std::move(result);
  }
  return x;
}

// Rabin's test: x^(p^k) == x mod m and gcd(x^(p^(k/r)) - x, m) == 1 for primes r | k.
bool raw_is_irreducible(const RawPoly& m, std::uint64_t p) {
  const int k = static_cast<int>(m.size()) - 1;
  if (k == 1) return true;
  auto minus_x = [p](RawPoly a) {
    if (a.size() < 2) a.resize(2, 0);
    a[1] = (a[1] + p - 1) % p;
    raw_trim(a);
    return a;
  };
  if (!minus_x(raw_frobenius_x(m, p, k)).empty()) return false;
  for (int r = 2; r <= k; ++r) {
    if (k % r != 0 || !is_prime(static_cast<std::uint64_t>(r))) continue;
    RawPoly g = raw_gcd(m, minus_x(raw_frobenius_x(m, p, k / r)), p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> first_irreducible(std::uint32_t p, int k) {
  if (k == 1) return {0, 1};
  // Enumerate (c_0, ..., c_{k-1}) with c_0 most significant.
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(k), 0);
  while (true) {
    RawPoly m(digits.begin(), digits.end());
    m.push_back(1);
    if (m[0] != 0 && raw_is_irreducible(m, p)) return {m.begin(), m.end()};
    int pos = k - 1;
    while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == p) {
      digits[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) throw InvariantViolation("no irreducible polynomial found");
  }
}

struct EmbeddingKey {
  const Field* source;
  const Field* target;
  auto operator<=>(const EmbeddingKey&) const = default;
};

}  // namespace

class FieldRegistry {
 public:
  static FieldRegistry& instance() {
    static FieldRegistry registry;
    return registry;
  }

  const Field& get(std::uint32_t p, int k) {
    {
      std::lock_guard lock(mutex_);
      auto it = fields_.find({p, k});
      if (it != fields_.end()) return *it->second;
    }
    // Built outside the lock; the first insertion wins.
    std::unique_ptr<Field> field(new Field(p, k, first_irreducible(p, k)));
    std::lock_guard lock(mutex_);
    auto [it, inserted] = fields_.try_emplace({p, k}, std::move(field));
    return *it->second;
  }

  const std::vector<FieldElement>& embedding(const Field& source, const Field& target) {
    {
      std::lock_guard lock(mutex_);
      auto it = embeddings_.find({&source, &target});
      if (it != embeddings_.end()) return it->second;
    }
    std::vector<FieldElement> modulus;
    for (auto c : source.modulus()) modulus.push_back(target.from_int(c));
    auto rs = roots(Poly(target, std::move(modulus)));
    ensure(!rs.empty(), "source modulus has no root in target field " + target.to_string());
    // Powers of the image of z: the image of z^i.
    std::vector<FieldElement> images;
    FieldElement acc = target.one();
    for (int i = 0; i < source.degree(); ++i) {
      images.push_back(acc);
      acc *= rs.front();
    }
    std::lock_guard lock(mutex_);
    auto [it, inserted] = embeddings_.try_emplace({&source, &target}, std::move(images));
    return it->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::uint32_t, int>, std::unique_ptr<Field>> fields_;
  std::map<EmbeddingKey, std::vector<FieldElement>> embeddings_;
};

// ---------------------------------------------------------------------------
// Field

Field::Field(std::uint32_t p, int k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), order_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < k; ++i) order_ *= p;
  for (std::uint64_t i = 0; i < order_; ++i) {
    FieldElement e = element_at(i);
    if (!e.is_zero() && !is_square(e)) {
      nonresidue_ = e.coeffs();
      break;
    }
  }
}

const Field& Field::get(std::uint32_t p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (p < 5) throw std::invalid_argument("field characteristic must be at least 5");
  if (p > 65521) throw std::invalid_argument("field characteristic too large");
  if (k < 1 || k > kMaxFieldDegree)
    throw std::invalid_argument("extension degree " + std::to_string(k) + " out of range");
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    if (q > (std::uint64_t{1} << 62) / p) throw std::invalid_argument("field order exceeds 2^62");
    q *= p;
  }
  return FieldRegistry::instance().get(p, k);
}

FieldElement Field::zero() const { return FieldElement(*this, {}); }

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(std::int64_t v) const {
  FieldElement::Coeffs c{};
  const auto p = static_cast<std::int64_t>(p_);
  c[0] = static_cast<std::uint16_t>(((v % p) + p) % p);
  return FieldElement(*this, c);
}

FieldElement Field::generator() const {
  if (k_ == 1) return zero();  // modulus x: z == 0
  FieldElement::Coeffs c{};
  c[1] = 1;
  return FieldElement(*this, c);
}

FieldElement Field::from_coeffs(std::span<const std::int64_t> coeffs) const {
  FieldElement acc = zero();
  FieldElement power = one();
  const FieldElement z = generator();
  for (auto v : coeffs) {
    acc += power.scaled(v);
    power *= z;
  }
  return acc;
}

FieldElement Field::element_at(std::uint64_t index) const {
  FieldElement::Coeffs c{};
  for (int i = k_ - 1; i >= 0; --i) {
    c[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(index % p_);
    index /= p_;
  }
  return FieldElement(*this, c);
}

FieldElement Field::nonresidue() const { return FieldElement(*this, nonresidue_); }

std::string Field::to_string() const {
  std::ostringstream os;
  os << "F_" << p_;
  if (k_ > 1) os << "^" << k_;
  return os.str();
}

// ---------------------------------------------------------------------------
// FieldElement

namespace {

void require_same(const FieldElement& a, const FieldElement& b) {
  if (&a.field() != &b.field())
    throw MismatchError("field mismatch: " + a.field().to_string() + " vs " + b.field().to_string());
}

}  // namespace

bool FieldElement::is_zero() const {
  for (int i = 0; i < field_->degree(); ++i)
    if (c_[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

bool FieldElement::is_one() const {
  if (c_[0] != 1) return false;
  for (int i = 1; i < field_->degree(); ++i)
    if (c_[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

bool FieldElement::in_prime_field() const {
  for (int i = 1; i < field_->degree(); ++i)
    if (c_[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

std::uint32_t FieldElement::to_prime() const {
  if (!in_prime_field()) throw std::invalid_argument("element is not in the prime field");
  return c_[0];
}

std::uint64_t FieldElement::index() const {
  std::uint64_t idx = 0;
  for (int i = 0; i < field_->degree(); ++i) idx = idx * field_->characteristic() + c_[static_cast<std::size_t>(i)];
  return idx;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  const auto p = field_->characteristic();
  for (int i = 0; i < field_->degree(); ++i) {
    auto& c = r.c_[static_cast<std::size_t>(i)];
    c = static_cast<std::uint16_t>(c == 0 ? 0 : p - c);
  }
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  require_same(*this, o);
  const auto p = field_->characteristic();
  for (int i = 0; i < field_->degree(); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    std::uint32_t s = std::uint32_t{c_[idx]} + o.c_[idx];
    c_[idx] = static_cast<std::uint16_t>(s >= p ? s - p : s);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  require_same(*this, o);
  const auto p = field_->characteristic();
  for (int i = 0; i < field_->degree(); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    std::uint32_t s = std::uint32_t{c_[idx]} + p - o.c_[idx];
    c_[idx] = static_cast<std::uint16_t>(s >= p ? s - p : s);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  require_same(*this, o);
  const int k = field_->degree();
  const std::uint64_t p = field_->characteristic();
  if (k == 1) {
    c_[0] = static_cast<std::uint16_t>(std::uint64_t{c_[0]} * o.c_[0] % p);
    return *this;
  }
  std::array<std::uint64_t, 2 * kMaxFieldDegree> acc{};
  for (int i = 0; i < k; ++i) {
    const std::uint64_t ai = c_[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (int j = 0; j < k; ++j) acc[static_cast<std::size_t>(i + j)] += ai * o.c_[static_cast<std::size_t>(j)];
  }
  const auto& m = field_->modulus();
  for (int i = 2 * k - 2; i >= k; --i) {
    const std::uint64_t t = acc[static_cast<std::size_t>(i)] % p;
    if (t == 0) continue;
    // z^i = z^(i-k) * z^k and z^k = -sum_{j<k} m_j z^j.
    for (int j = 0; j < k; ++j) acc[static_cast<std::size_t>(i - k + j)] += (p - m[static_cast<std::size_t>(j)]) * t;
  }
  for (int i = 0; i < k; ++i) c_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(acc[static_cast<std::size_t>(i)] % p);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  require_same(*this, o);
  return *this *= o.inv();
}

FieldElement FieldElement::scaled(std::int64_t s) const {
  return *this * field_->from_int(s);
}

FieldElement FieldElement::pow(std::uint64_t n) const {
  FieldElement result = field_->one();
  FieldElement base = *this;
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero in " + field_->to_string());
  return pow(field_->order() - 2);
}

std::string FieldElement::to_string() const {
  const int k = field_->degree();
  if (k == 1) return std::to_string(c_[0]);
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < k; ++i) os << (i ? "," : "") << c_[static_cast<std::size_t>(i)];
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Free functions

int legendre(const FieldElement& a) {
  if (!a.field().is_prime_field()) throw std::invalid_argument("legendre symbol needs a prime-field element");
  if (a.is_zero()) return 0;
  return a.pow((a.field().characteristic() - 1) / 2).is_one() ? 1 : -1;
}

bool is_square(const FieldElement& a) {
  if (a.is_zero()) return true;
  return a.pow((a.field().order() - 1) / 2).is_one();
}

namespace {

FieldElement canonical_root(const FieldElement& r) {
  FieldElement n = -r;
  return n < r ? n : r;
}

}  // namespace

std::optional<FieldElement> sqrt(const FieldElement& a) {
  if (a.is_zero()) return a;
  if (!is_square(a)) return std::nullopt;
  const Field& f = a.field();
  // q - 1 = 2^s * t with t odd.
  std::uint64_t t = f.order() - 1;
  int s = 0;
  while ((t & 1) == 0) {
    t >>= 1;
    ++s;
  }
  FieldElement x = a.pow((t + 1) / 2);
  FieldElement b = a.pow(t);
  FieldElement z = f.nonresidue().pow(t);
  int m = s;
  while (!b.is_one()) {
    int i = 0;
    FieldElement b2 = b;
    while (!b2.is_one()) {
      b2 *= b2;
      ++i;
    }
    ensure(i < m, "Tonelli-Shanks loop");
    FieldElement w = z;
    for (int j = 0; j < m - i - 1; ++j) w *= w;
    x *= w;
    z = w * w;
    b *= z;
    m = i;
  }
  ensure(x * x == a, "square root verification");
  return canonical_root(x);
}

std::optional<FieldElement> sqrt_exhaustive(const FieldElement& a, std::uint64_t max_order) {
  const Field& f = a.field();
  if (f.order() > max_order)
    throw ResourceLimitError("exhaustive square root over " + f.to_string() + " exceeds size threshold");
  for (std::uint64_t i = 0; i < f.order(); ++i) {
    FieldElement r = f.element_at(i);
    if (r * r == a) return canonical_root(r);
  }
  return std::nullopt;
}

FieldElement frobenius(const FieldElement& a, int i) {
  const int k = a.field().degree();
  i = ((i % k) + k) % k;
  FieldElement r = a;
  for (int step = 0; step < i; ++step) r = r.pow(a.field().characteristic());
  return r;
}

FieldElement embed(const FieldElement& a, const Field& target) {
  const Field& source = a.field();
  if (!target.contains(source))
    throw std::invalid_argument("cannot embed " + source.to_string() + " into " + target.to_string());
  if (&source == &target) return a;
  if (source.is_prime_field()) return target.from_int(a.coeff(0));
  const auto& images = FieldRegistry::instance().embedding(source, target);
  FieldElement r = target.zero();
  for (int i = 0; i < source.degree(); ++i) {
    if (a.coeff(i) != 0) r += images[static_cast<std::size_t>(i)].scaled(a.coeff(i));
  }
  return r;
}

}  // namespace roquette
