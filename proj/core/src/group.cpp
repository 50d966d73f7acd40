#include "roquette/group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "roquette/errors.hpp"

namespace roquette {

std::vector<FieldElement> sqrt_roots_group(std::uint32_t p) {
  const Field& f = Field::get(p, 2);
  std::vector<FieldElement> out;
  for (std::uint64_t i = 1; i < f.order(); ++i) {
    FieldElement l = f.element_at(i);
    FieldElement sq = l * l;
    if (sq.in_prime_field()) out.push_back(l);
  }
  return out;
}

// ---------------------------------------------------------------------------
// ConjugacyClasses

ConjugacyClasses::ConjugacyClasses(std::uint32_t p, std::uint64_t group_order, std::vector<ConjClass> classes,
                                   std::vector<int> class_of_key)
    : p_(p), group_order_(group_order), classes_(std::move(classes)), class_of_key_(std::move(class_of_key)) {}

std::size_t ConjugacyClasses::class_of(const GroupElement& g) const {
  if (g.p != p_) throw MismatchError("group element for p=" + std::to_string(g.p) + " in class list for p=" + std::to_string(p_));
  const std::size_t lambda_order = 2 * (p_ - 1);
  std::size_t key = 0;
  for (auto e : g.matrix) key = key * p_ + e;
  key = key * lambda_order + g.lambda_log;
  if (key >= class_of_key_.size() || class_of_key_[key] < 0) throw std::invalid_argument("element is not canonical");
  return static_cast<std::size_t>(class_of_key_[key]);
}

std::size_t ConjugacyClasses::identity_class() const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].element_order == 1) return i;
  throw InvariantViolation("no identity class");
}

// ---------------------------------------------------------------------------
// RoquetteGroup

RoquetteGroup::RoquetteGroup(std::uint32_t p) : p_(p), lambda_order_(2 * (p - 1)), fp2_(&Field::get(p, 2)) {
  inv_table_.assign(p, 0);
  legendre_table_.assign(p, 0);
  for (std::uint32_t x = 1; x < p; ++x) {
    for (std::uint32_t y = 1; y < p; ++y)
      if (static_cast<std::uint64_t>(x) * y % p == 1) inv_table_[x] = y;
  }
  for (std::uint32_t x = 1; x < p; ++x) legendre_table_[x * x % p] = 1;
  for (std::uint32_t x = 1; x < p; ++x)
    if (legendre_table_[x] == 0) legendre_table_[x] = -1;

  const auto roots = sqrt_roots_group(p);
  ensure(roots.size() == lambda_order_, "square-root group has order 2(p-1)");
  const FieldElement* gamma = nullptr;
  for (const auto& l : roots) {
    FieldElement acc = l;
    std::uint32_t ord = 1;
    while (!acc.is_one()) {
      acc *= l;
      ++ord;
    }
    if (ord == lambda_order_) {
      gamma = &l;
      break;
    }
  }
  ensure(gamma != nullptr, "square-root group is cyclic");
  FieldElement acc = fp2_->one();
  for (std::uint32_t e = 0; e < lambda_order_; ++e) {
    lambda_powers_.push_back(acc);
    acc *= *gamma;
  }
  prime_log_.assign(p, 0);
  for (std::uint32_t e = 0; e < lambda_order_; ++e) {
    const auto& v = lambda_powers_[e];
    if (v.in_prime_field()) prime_log_[v.to_prime()] = e;
  }

  index_of_key_.assign(key_space(), -1);
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c)
        for (std::uint32_t d = 0; d < p; ++d) {
          const std::array<std::uint32_t, 4> m{a, b, c, d};
          auto first = std::find_if(m.begin(), m.end(), [](auto v) { return v != 0; });
          if (first == m.end() || *first != 1) continue;
          const std::uint32_t det = mod(static_cast<std::int64_t>(a) * d - static_cast<std::int64_t>(b) * c);
          if (det == 0) continue;
          const std::uint32_t half = prime_log_[det] / 2;
          for (std::uint32_t e : {half, half + (p - 1)}) {
            GroupElement g{static_cast<std::uint16_t>(p),
                           {static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                            static_cast<std::uint16_t>(c), static_cast<std::uint16_t>(d)},
                           static_cast<std::uint16_t>(e)};
            index_of_key_[key(g)] = static_cast<std::int32_t>(elements_.size());
            elements_.push_back(g);
          }
        }
  ensure(elements_.size() == order(), "enumeration yields 2p(p^2-1) elements");
}

std::uint64_t RoquetteGroup::order() const {
  const std::uint64_t p = p_;
  return 2 * p * (p * p - 1);
}

std::uint32_t RoquetteGroup::mod(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(p_);
  return static_cast<std::uint32_t>(((v % p) + p) % p);
}

const FieldElement& RoquetteGroup::lambda_value(std::uint32_t log) const {
  return lambda_powers_[log % lambda_order_];
}

std::size_t RoquetteGroup::key(const GroupElement& g) const {
  std::size_t k = 0;
  for (auto e : g.matrix) k = k * p_ + e;
  return k * lambda_order_ + g.lambda_log;
}

std::size_t RoquetteGroup::key_space() const {
  const std::size_t p = p_;
  return p * p * p * p * lambda_order_;
}

void RoquetteGroup::check_prime(const GroupElement& g) const {
  if (g.p != p_)
    throw MismatchError("group element for p=" + std::to_string(g.p) + " used with group for p=" + std::to_string(p_));
}

GroupElement RoquetteGroup::normalize(std::array<std::uint32_t, 4> m, std::uint32_t lambda_log) const {
  auto first = std::find_if(m.begin(), m.end(), [](auto v) { return v != 0; });
  ensure(first != m.end(), "matrix part is nonzero");
  const std::uint32_t mu = inv_fp(*first);
  // Multiply by the kernel element (mu*I, (mu|p)*mu).
  const std::uint32_t kernel_lambda = legendre_table_[mu] == 1 ? mu : p_ - mu;
  GroupElement g;
  g.p = static_cast<std::uint16_t>(p_);
  for (std::size_t i = 0; i < 4; ++i) g.matrix[i] = static_cast<std::uint16_t>(static_cast<std::uint64_t>(m[i]) * mu % p_);
  g.lambda_log = static_cast<std::uint16_t>((lambda_log + prime_log_[kernel_lambda]) % lambda_order_);
  return g;
}

GroupElement RoquetteGroup::make(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d,
                                 const FieldElement& lambda) const {
  if (&lambda.field() != fp2_) throw MismatchError("lambda must lie in F_{p^2}");
  a %= p_;
  b %= p_;
  c %= p_;
  d %= p_;
  const std::uint32_t det = mod(static_cast<std::int64_t>(a) * d - static_cast<std::int64_t>(b) * c);
  if (det == 0) throw std::invalid_argument("matrix is singular");
  if (lambda * lambda != fp2_->from_int(det)) throw std::invalid_argument("lambda^2 != det(A)");
  auto it = std::find(lambda_powers_.begin(), lambda_powers_.end(), lambda);
  ensure(it != lambda_powers_.end(), "lambda lies in the square-root group");
  return normalize({a, b, c, d}, static_cast<std::uint32_t>(it - lambda_powers_.begin()));
}

GroupElement RoquetteGroup::canonicalize(const GroupElement& g) const {
  check_prime(g);
  return normalize({g.a(), g.b(), g.c(), g.d()}, g.lambda_log);
}

bool RoquetteGroup::is_canonical(const GroupElement& g) const {
  return g.p == p_ && index_of_key_[key(g)] >= 0;
}

GroupElement RoquetteGroup::identity() const { return make(1, 0, 0, 1, fp2_->one()); }

GroupElement RoquetteGroup::iota() const { return make(1, 0, 0, 1, -fp2_->one()); }

GroupElement RoquetteGroup::unipotent(std::uint32_t u, int lambda_sign) const {
  return make(1, u, 0, 1, lambda_sign >= 0 ? fp2_->one() : -fp2_->one());
}

GroupElement RoquetteGroup::mul(const GroupElement& g, const GroupElement& h) const {
  check_prime(g);
  check_prime(h);
  const std::uint64_t a = g.a(), b = g.b(), c = g.c(), d = g.d();
  const std::uint64_t a2 = h.a(), b2 = h.b(), c2 = h.c(), d2 = h.d();
  return normalize({static_cast<std::uint32_t>((a * a2 + b * c2) % p_), static_cast<std::uint32_t>((a * b2 + b * d2) % p_),
                    static_cast<std::uint32_t>((c * a2 + d * c2) % p_), static_cast<std::uint32_t>((c * b2 + d * d2) % p_)},
                   (g.lambda_log + h.lambda_log) % lambda_order_);
}

GroupElement RoquetteGroup::inv(const GroupElement& g) const {
  check_prime(g);
  const std::uint32_t det = mod(static_cast<std::int64_t>(g.a()) * g.d() - static_cast<std::int64_t>(g.b()) * g.c());
  const std::uint32_t det_inv = inv_fp(det);
  const std::array<std::uint32_t, 4> m{
      static_cast<std::uint32_t>(static_cast<std::uint64_t>(g.d()) * det_inv % p_),
      static_cast<std::uint32_t>(static_cast<std::uint64_t>(mod(-static_cast<std::int64_t>(g.b()))) * det_inv % p_),
      static_cast<std::uint32_t>(static_cast<std::uint64_t>(mod(-static_cast<std::int64_t>(g.c()))) * det_inv % p_),
      static_cast<std::uint32_t>(static_cast<std::uint64_t>(g.a()) * det_inv % p_)};
  return normalize(m, (lambda_order_ - g.lambda_log) % lambda_order_);
}

GroupElement RoquetteGroup::pow(const GroupElement& g, std::uint64_t n) const {
  GroupElement result = identity();
  GroupElement base = g;
  while (n) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n) base = mul(base, base);
  }
  return result;
}

GroupElement RoquetteGroup::conjugate(const GroupElement& g, const GroupElement& h) const {
  return mul(mul(h, g), inv(h));
}

std::uint64_t RoquetteGroup::element_order(const GroupElement& g) const {
  const GroupElement e = identity();
  GroupElement acc = g;
  std::uint64_t n = 1;
  while (acc != e) {
    acc = mul(acc, g);
    ++n;
    ensure(n <= order(), "element order bounded by |G|");
  }
  return n;
}

std::size_t RoquetteGroup::index_of(const GroupElement& g) const {
  check_prime(g);
  const auto idx = index_of_key_[key(g)];
  if (idx < 0) throw std::invalid_argument("element is not canonical");
  return static_cast<std::size_t>(idx);
}

std::vector<GroupElement> RoquetteGroup::tilde_elements() const {
  std::vector<GroupElement> out;
  for (std::uint32_t a = 0; a < p_; ++a)
    for (std::uint32_t b = 0; b < p_; ++b)
      for (std::uint32_t c = 0; c < p_; ++c)
        for (std::uint32_t d = 0; d < p_; ++d) {
          const std::uint32_t det = mod(static_cast<std::int64_t>(a) * d - static_cast<std::int64_t>(b) * c);
          if (det == 0) continue;
          for (std::uint32_t e = 0; e < lambda_order_; ++e) {
            if ((2 * e) % lambda_order_ != prime_log_[det]) continue;
            out.push_back(GroupElement{static_cast<std::uint16_t>(p_),
                                       {static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                                        static_cast<std::uint16_t>(c), static_cast<std::uint16_t>(d)},
                                       static_cast<std::uint16_t>(e)});
          }
        }
  return out;
}

std::shared_ptr<const ConjugacyClasses> RoquetteGroup::conjugacy_classes() const {
  std::call_once(classes_once_, [this] { classes_ = compute_conjugacy_classes(); });
  return classes_;
}

std::shared_ptr<const ConjugacyClasses> RoquetteGroup::compute_conjugacy_classes() const {
  std::vector<GroupElement> inverses;
  inverses.reserve(elements_.size());
  for (const auto& h : elements_) inverses.push_back(inv(h));

  std::vector<int> class_of_index(elements_.size(), -1);
  std::vector<ConjClass> classes;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (class_of_index[i] >= 0) continue;
    const int cls = static_cast<int>(classes.size());
    ConjClass cc;
    cc.representative = elements_[i];
    cc.element_order = element_order(elements_[i]);
    for (std::size_t j = 0; j < elements_.size(); ++j) {
      const GroupElement x = mul(mul(elements_[j], elements_[i]), inverses[j]);
      const std::size_t xi = index_of(x);
      if (class_of_index[xi] < 0) {
        class_of_index[xi] = cls;
        cc.members.push_back(x);
      }
    }
    std::sort(cc.members.begin(), cc.members.end(),
              [this](const GroupElement& l, const GroupElement& r) { return index_of(l) < index_of(r); });
    ensure(order() % cc.size() == 0, "class size divides |G|");
    classes.push_back(std::move(cc));
  }
  std::vector<int> class_of_key(key_space(), -1);
  for (std::size_t i = 0; i < elements_.size(); ++i) class_of_key[key(elements_[i])] = class_of_index[i];
  return std::make_shared<const ConjugacyClasses>(p_, order(), std::move(classes), std::move(class_of_key));
}

std::vector<GroupElement> RoquetteGroup::sylow_p() const {
  std::vector<GroupElement> n;
  const GroupElement u = unipotent(1);
  GroupElement acc = identity();
  do {
    n.push_back(acc);
    acc = mul(acc, u);
  } while (acc != identity());
  return n;
}

PglElement RoquetteGroup::proj_to_pgl(const GroupElement& g) const {
  check_prime(g);
  return g.matrix;  // canonical scaling already normalizes the projective class
}

std::vector<GroupElement> RoquetteGroup::kernel_of_projection() const {
  const PglElement one = proj_to_pgl(identity());
  std::vector<GroupElement> out;
  for (const auto& g : elements_)
    if (proj_to_pgl(g) == one) out.push_back(g);
  return out;
}

std::vector<PglElement> RoquetteGroup::pgl_image() const {
  std::set<PglElement> image;
  for (const auto& g : elements_) image.insert(proj_to_pgl(g));
  return {image.begin(), image.end()};
}

bool RoquetteGroup::pgl_sharply_three_transitive() const {
  // Points of P^1(F_p) are 0..p-1 and p for infinity.
  const std::uint32_t inf = p_;
  auto apply = [&](const PglElement& m, std::uint32_t x) -> std::uint32_t {
    const std::uint64_t a = m[0], b = m[1], c = m[2], d = m[3];
    if (x == inf) return c == 0 ? inf : static_cast<std::uint32_t>(a * inv_fp(static_cast<std::uint32_t>(c)) % p_);
    const std::uint32_t num = static_cast<std::uint32_t>((a * x + b) % p_);
    const std::uint32_t den = static_cast<std::uint32_t>((c * x + d) % p_);
    if (den == 0) return inf;
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(num) * inv_fp(den) % p_);
  };
  std::set<std::array<std::uint32_t, 3>> triples;
  const auto image = pgl_image();
  for (const auto& m : image) {
    std::array<std::uint32_t, 3> t{apply(m, 0), apply(m, 1), apply(m, inf)};
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) return false;
    triples.insert(t);
  }
  const std::uint64_t p = p_;
  return triples.size() == image.size() && image.size() == (p + 1) * p * (p - 1);
}

}  // namespace roquette
