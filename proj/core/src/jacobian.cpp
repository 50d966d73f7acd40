#include "roquette/jacobian.hpp"

#include <stdexcept>

#include "roquette/errors.hpp"

namespace roquette {

std::string MumfordDivisor::to_string() const { return "(" + u.to_string() + ", " + v.to_string() + ")"; }

namespace {

// Monic polynomial of degree d whose lower coefficients are the base-q digits
// of index.
Poly monic_from_index(const Field& f, int d, std::uint64_t index) {
  std::vector<FieldElement> c;
  c.reserve(static_cast<std::size_t>(d + 1));
  for (int i = 0; i < d; ++i) {
    c.push_back(f.element_at(index % f.order()));
    index /= f.order();
  }
  c.push_back(f.one());
  return Poly(f, std::move(c));
}

Poly poly_from_index(const Field& f, int d, std::uint64_t index) {
  std::vector<FieldElement> c;
  c.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    c.push_back(f.element_at(index % f.order()));
    index /= f.order();
  }
  return Poly(f, std::move(c));
}

// sum_j P_j * num^j * den^(N - j).
Poly homogenize(const Poly& poly, const Poly& num, const Poly& den, int n) {
  const Field& f = poly.field();
  std::vector<Poly> num_pow{Poly::constant(f.one())}, den_pow{Poly::constant(f.one())};
  for (int i = 1; i <= n; ++i) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  Poly out(f);
  for (int j = 0; j <= poly.degree(); ++j)
    out += num_pow[static_cast<std::size_t>(j)] * den_pow[static_cast<std::size_t>(n - j)] * poly.coeff(j);
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, int e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

std::uint32_t pow_mod_u32(std::uint64_t b, std::uint64_t e, std::uint32_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

// ---------------------------------------------------------------------------

Jacobian::Jacobian(std::shared_ptr<const RoquetteGroup> group, const Field& field)
    : group_(std::move(group)), field_(&field), f_(field) {
  if (!group_) throw std::invalid_argument("jacobian needs a group");
  if (field.characteristic() != group_->prime())
    throw std::invalid_argument("field " + field.to_string() + " has the wrong characteristic");
  f_ = Poly::monomial(field.one(), static_cast<int>(prime())) - Poly::monomial(field.one(), 1);
}

MumfordDivisor Jacobian::identity() const { return {Poly::constant(field_->one()), Poly(*field_)}; }

bool Jacobian::is_valid(const MumfordDivisor& d) const {
  if (&d.u.field() != field_ || &d.v.field() != field_) return false;
  if (d.u.is_zero() || !d.u.leading().is_one()) return false;
  if (d.u.degree() > genus() || d.v.degree() >= d.u.degree()) return false;
  if (!((d.v * d.v - f_) % d.u).is_zero()) return false;
  // Reduced: a point and its involute never both occur, so ramified points
  // appear at most once.
  return gcd(gcd(d.u, d.v), d.u.derivative()).degree() <= 0;
}

void Jacobian::check(const MumfordDivisor& d) const {
  if (&d.u.field() != field_ || &d.v.field() != field_)
    throw MismatchError("divisor is not over " + field_->to_string());
}

MumfordDivisor Jacobian::make(Poly u, Poly v) const {
  MumfordDivisor d{std::move(u), std::move(v)};
  if (!is_valid(d)) throw std::invalid_argument("not a reduced Mumford pair: " + d.to_string());
  return d;
}

MumfordDivisor Jacobian::from_point(const CurvePoint& pt) const {
  if (pt.is_infinity()) return identity();
  if (&pt.x().field() != field_) throw MismatchError("point is not over " + field_->to_string());
  if (!(pt.y() * pt.y() == f_.eval(pt.x()))) throw std::invalid_argument("point is not on the curve");
  return {Poly::linear_root(pt.x()), Poly::constant(pt.y())};
}

MumfordDivisor Jacobian::reduce(Poly u, Poly v) const {
  const int g = genus();
  while (u.degree() > g) {
    u = ((f_ - v * v) / u).monic();
    v = (-v) % u;
  }
  u = u.monic();
  v = v % u;
  return {std::move(u), std::move(v)};
}

MumfordDivisor Jacobian::add(const MumfordDivisor& a, const MumfordDivisor& b) const {
  check(a);
  check(b);
  if (a.is_identity()) return b;
  if (b.is_identity()) return a;
  const XgcdResult r1 = xgcd(a.u, b.u);
  const XgcdResult r2 = xgcd(r1.g, a.v + b.v);
  const Poly& d = r2.g;
  const Poly s1 = r2.s * r1.s, s2 = r2.s * r1.t, s3 = r2.t;
  Poly u = (a.u * b.u) / (d * d);
  Poly v = ((s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + f_)) / d) % u;
  return reduce(std::move(u), std::move(v));
}

MumfordDivisor Jacobian::neg(const MumfordDivisor& a) const {
  check(a);
  return {a.u, (-a.v) % a.u};
}

MumfordDivisor Jacobian::scalar_mul(const MumfordDivisor& a, const BigInt& n) const {
  check(a);
  if (n < 0) return scalar_mul(neg(a), -n);
  MumfordDivisor r = identity();
  if (n == 0) return r;
  for (auto i = static_cast<long>(boost::multiprecision::msb(n)); i >= 0; --i) {
    r = dbl(r);
    if (boost::multiprecision::bit_test(n, static_cast<unsigned>(i))) r = add(r, a);
  }
  return r;
}

CurvePoint Jacobian::random_point(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint64_t> pick(0, field_->order() - 1);
  for (;;) {
    const FieldElement x = field_->element_at(pick(rng));
    const FieldElement fx = f_.eval(x);
    if (fx.is_zero()) return CurvePoint::affine(x, fx);
    if (auto y = sqrt(fx)) return CurvePoint::affine(x, (rng() & 1) ? -*y : *y);
  }
}

MumfordDivisor Jacobian::random_divisor(std::mt19937_64& rng) const {
  MumfordDivisor d = identity();
  for (int i = 0; i < genus(); ++i) d = add(d, from_point(random_point(rng)));
  return d;
}

MumfordDivisor Jacobian::act(const GroupElement& g, const MumfordDivisor& dv) const {
  check(dv);
  if (field_->degree() % 2 != 0)
    throw std::invalid_argument("the action is defined over F_{p^2}; " + field_->to_string() + " is too small");
  const Field& F = *field_;
  const std::uint32_t p = prime();
  const FieldElement a = F.from_int(g.a()), b = F.from_int(g.b()), c = F.from_int(g.c()), d = F.from_int(g.d());

  Poly u = dv.u, v = dv.v;
  const int n0 = u.degree();
  if (g.c() != 0) {
    // A ramified point over -d/c goes to infinity; its image is accounted
    // for by the parity term below.
    const FieldElement r = -d / c;
    if (u.eval(r).is_zero()) {
      u = u / Poly::linear_root(r);
      v = v % u;
    }
  }

  // Points x_i go to A(x_i); with B = A^{-1}, x_i = B(X) = (dX - b)/(a - cX).
  const Poly num(F, {-b, d});
  const Poly den(F, {a, -c});
  const int n = u.degree();
  Poly u_new = homogenize(u, num, den, n);
  ensure(u_new.degree() == n, "no remaining point is sent to infinity");
  u_new = u_new.monic();

  // y_i goes to lambda * y_i * (a - cX)^e / det^e with e = (p + 1)/2.
  const int e = static_cast<int>(p + 1) / 2;
  const FieldElement det = a * d - b * c;
  const FieldElement scale = embed(group_->lambda(g), F) / det.pow(static_cast<std::uint64_t>(e));
  Poly v_new = (homogenize(v, num, den, e) * scale) % u_new;
  MumfordDivisor img{std::move(u_new), std::move(v_new)};
  ensure(((img.v * img.v - f_) % img.u).is_zero(), "image pair satisfies v^2 = f mod u");

  if (g.c() != 0 && n0 % 2 == 1) img = add(img, {Poly::linear_root(a / c), Poly(F)});
  return img;
}

std::vector<MumfordDivisor> Jacobian::enumerate_all(std::uint64_t limit) const {
  const std::uint64_t q = field_->order();
  std::uint64_t total = 0;
  for (int d = 0; d <= genus(); ++d) {
    total += checked_pow(q, 2 * d, limit);
    if (total > limit) throw ResourceLimitError("exhaustive class enumeration exceeds " + std::to_string(limit));
  }
  std::vector<MumfordDivisor> out;
  for (int d = 0; d <= genus(); ++d) {
    const std::uint64_t qd = checked_pow(q, d, limit);
    for (std::uint64_t iu = 0; iu < qd; ++iu) {
      const Poly u = monic_from_index(*field_, d, iu);
      const Poly target = f_ % u;
      for (std::uint64_t iv = 0; iv < qd; ++iv) {
        Poly v = poly_from_index(*field_, d, iv);
        MumfordDivisor cand{u, std::move(v)};
        if (((cand.v * cand.v) % u) == target && is_valid(cand)) out.push_back(std::move(cand));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

BigInt jacobian_exponent(std::uint32_t p, int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  BigInt fr = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(m));
  if (frobenius_sign(p) < 0 && m % 2 == 1) fr = -fr;
  BigInt n = 1 - fr;
  return n < 0 ? BigInt(-n) : n;
}

BigInt jacobian_order(std::uint32_t p, int m) {
  return boost::multiprecision::pow(jacobian_exponent(p, m), p - 1);
}

int ell_field_index(std::uint32_t p, std::uint32_t ell) {
  if (!is_prime(ell) || ell == p) throw std::invalid_argument("l must be a prime different from p");
  const std::int64_t s = frobenius_sign(p) * static_cast<std::int64_t>(p % ell);
  const std::uint32_t base = static_cast<std::uint32_t>(((s % ell) + ell) % ell);
  std::uint32_t x = base;
  int m = 1;
  while (x != 1 % ell) {
    x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * base % ell);
    ++m;
  }
  return m;
}

// ---------------------------------------------------------------------------

ModLMatrix::ModLMatrix(std::uint32_t ell, int n) : ell_(ell), n_(n), e_(static_cast<std::size_t>(n * n), 0) {}

ModLMatrix ModLMatrix::identity(std::uint32_t ell, int n) {
  ModLMatrix m(ell, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1 % ell;
  return m;
}

std::uint32_t ModLMatrix::trace() const {
  std::uint64_t t = 0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return static_cast<std::uint32_t>(t % ell_);
}

std::uint32_t ModLMatrix::det() const {
  std::vector<std::uint64_t> a(e_.begin(), e_.end());
  const auto at = [&](int r, int c) -> std::uint64_t& { return a[static_cast<std::size_t>(r * n_ + c)]; };
  std::uint64_t det = 1;
  for (int col = 0; col < n_; ++col) {
    int piv = col;
    while (piv < n_ && at(piv, col) == 0) ++piv;
    if (piv == n_) return 0;
    if (piv != col) {
      for (int c = 0; c < n_; ++c) std::swap(at(piv, c), at(col, c));
      det = (ell_ - det) % ell_;
    }
    det = det * at(col, col) % ell_;
    const std::uint64_t inv = pow_mod_u32(at(col, col), ell_ - 2, ell_);
    for (int r = col + 1; r < n_; ++r) {
      const std::uint64_t factor = at(r, col) * inv % ell_;
      if (!factor) continue;
      for (int c = col; c < n_; ++c) at(r, c) = (at(r, c) + (ell_ - factor) * at(col, c)) % ell_;
    }
  }
  return static_cast<std::uint32_t>(det);
}

ModLMatrix operator*(const ModLMatrix& a, const ModLMatrix& b) {
  if (a.ell_ != b.ell_ || a.n_ != b.n_) throw MismatchError("matrix shapes or moduli differ");
  ModLMatrix r(a.ell_, a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int j = 0; j < a.n_; ++j) {
      std::uint64_t s = 0;
      for (int k = 0; k < a.n_; ++k) s += static_cast<std::uint64_t>(a(i, k)) * b(k, j);
      r(i, j) = static_cast<std::uint32_t>(s % a.ell_);
    }
  return r;
}

// ---------------------------------------------------------------------------

std::string ell_infeasibility(std::uint32_t p, std::uint32_t ell, std::uint64_t bound) {
  const int two_g = static_cast<int>(p) - 1;
  const std::uint64_t size = checked_pow(ell, two_g, bound);
  if (size > bound)
    return std::to_string(ell) + "^" + std::to_string(two_g) + " exceeds the torsion bound " + std::to_string(bound);
  const int m = ell_field_index(p, ell);
  if (2 * m > kMaxFieldDegree)
    return "F_{p^" + std::to_string(2 * m) + "} exceeds the field degree cap " + std::to_string(kMaxFieldDegree);
  return {};
}

std::vector<std::uint32_t> default_ell_list(std::uint32_t p, std::uint64_t bound) {
  std::vector<std::uint32_t> out;
  std::uint64_t product = 1;
  const std::uint64_t target = 2 * (static_cast<std::uint64_t>(p) - 1);
  for (std::uint32_t ell = 3; checked_pow(ell, static_cast<int>(p) - 1, bound) <= bound; ell += 2) {
    if (!is_prime(ell) || ell == p) continue;
    if (!ell_infeasibility(p, ell, bound).empty()) continue;
    out.push_back(ell);
    product *= ell;
    if (product > target) return out;
  }
  return {};
}

TorsionBasis torsion_basis(std::shared_ptr<const RoquetteGroup> group, std::uint32_t ell, std::uint64_t bound,
                           std::mt19937_64& rng, int max_samples) {
  if (!group) throw std::invalid_argument("torsion basis needs a group");
  const std::uint32_t p = group->prime();
  if (!is_prime(ell)) throw std::invalid_argument(std::to_string(ell) + " is not prime");
  if (ell == p) throw std::invalid_argument("l must differ from p");
  if (auto why = ell_infeasibility(p, ell, bound); !why.empty()) throw ResourceLimitError(why);

  const int m = ell_field_index(p, ell);
  const int two_g = static_cast<int>(p) - 1;
  const Field& field = Field::get(p, 2 * m);
  TorsionBasis tb{ell, m, Jacobian(group, field), {}, {}, 0};
  const Jacobian& J = tb.jacobian;

  BigInt cofactor = jacobian_exponent(p, m);
  int valuation = 0;
  while (cofactor % ell == 0) {
    cofactor /= ell;
    ++valuation;
  }
  ensure(valuation >= 1, "l divides the exponent of J over F_{p^{2m}}");

  const std::uint64_t full = checked_pow(ell, two_g, bound);
  tb.coordinates.emplace(J.identity(), std::vector<std::uint8_t>(static_cast<std::size_t>(two_g), 0));
  while (tb.coordinates.size() < full) {
    if (tb.samples >= max_samples)
      throw ResourceLimitError("J[" + std::to_string(ell) + "] not spanned after " + std::to_string(max_samples) +
                               " random classes");
    ++tb.samples;
    MumfordDivisor d = J.scalar_mul(J.random_divisor(rng), cofactor);
    if (d.is_identity()) continue;
    for (MumfordDivisor next = J.scalar_mul(d, ell); !next.is_identity(); next = J.scalar_mul(d, ell)) d = next;
    if (tb.coordinates.count(d)) continue;

    const std::size_t idx = tb.basis.size();
    ensure(static_cast<int>(idx) < two_g, "J[l] has rank 2g");
    tb.basis.push_back(d);
    std::vector<std::pair<MumfordDivisor, std::vector<std::uint8_t>>> old(tb.coordinates.begin(),
                                                                         tb.coordinates.end());
    MumfordDivisor kd = d;
    for (std::uint32_t k = 1; k < ell; ++k) {
      for (const auto& [s, coords] : old) {
        auto c = coords;
        c[idx] = static_cast<std::uint8_t>(k);
        const bool fresh = tb.coordinates.emplace(J.add(s, kd), std::move(c)).second;
        ensure(fresh, "the new basis vector is independent of the previous ones");
      }
      kd = J.add(kd, d);
    }
    ensure(kd.is_identity(), "basis vectors have order l");
  }
  ensure(static_cast<int>(tb.basis.size()) == two_g, "J[l] has rank 2g");
  return tb;
}

ModLMatrix rep_matrix(const GroupElement& g, const TorsionBasis& tb) {
  const int n = static_cast<int>(tb.basis.size());
  ModLMatrix mat(tb.ell, n);
  for (int j = 0; j < n; ++j) {
    const auto it = tb.coordinates.find(tb.jacobian.act(g, tb.basis[static_cast<std::size_t>(j)]));
    ensure(it != tb.coordinates.end(), "J[l] is stable under G");
    for (int i = 0; i < n; ++i) mat(i, j) = it->second[static_cast<std::size_t>(i)];
  }
  return mat;
}

std::vector<std::uint32_t> rho_ell_traces(const TorsionBasis& tb, const ConjugacyClasses& classes) {
  std::vector<std::uint32_t> out;
  out.reserve(classes.count());
  for (const auto& cls : classes.classes()) out.push_back(rep_matrix(cls.representative, tb).trace());
  return out;
}

std::vector<std::int64_t> crt_reconstruct(const std::vector<std::uint32_t>& moduli,
                                          const std::vector<std::vector<std::uint32_t>>& residues,
                                          std::int64_t max_abs) {
  if (moduli.empty() || moduli.size() != residues.size())
    throw std::invalid_argument("need one residue vector per modulus");
  const std::size_t n = residues.front().size();
  std::int64_t product = 1;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (!is_prime(moduli[i])) throw std::invalid_argument("moduli must be prime");
    if (residues[i].size() != n) throw std::invalid_argument("residue vectors differ in length");
    if (product % moduli[i] == 0) throw std::invalid_argument("moduli must be distinct");
    if (product > (std::int64_t{1} << 40)) throw std::invalid_argument("modulus product too large");
    product *= moduli[i];
  }
  if (product <= 2 * max_abs)
    throw std::invalid_argument("modulus product " + std::to_string(product) + " does not exceed " +
                                std::to_string(2 * max_abs));

  std::vector<std::int64_t> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::int64_t x = 0, mod = 1;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      const std::int64_t l = moduli[i];
      const std::int64_t r = residues[i][k] % l;
      // x + mod * t = r (mod l)
      const std::int64_t inv = pow_mod_u32(static_cast<std::uint64_t>(mod % l), static_cast<std::uint64_t>(l - 2),
                                           static_cast<std::uint32_t>(l));
      const std::int64_t t = (((r - x) % l + l) % l) * inv % l;
      x += mod * t;
      mod *= l;
    }
    if (2 * x > product) x -= product;
    out[k] = x;
  }
  return out;
}

}  // namespace roquette
