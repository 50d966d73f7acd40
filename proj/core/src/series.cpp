#include "roquette/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "roquette/errors.hpp"

namespace roquette {

TruncatedSeries::TruncatedSeries(const Field& field, int valuation, std::vector<FieldElement> coeffs, int precision)
    : field_(&field), valuation_(valuation), coeffs_(std::move(coeffs)), precision_(precision) {
  for (const auto& c : coeffs_)
    if (&c.field() != field_) throw MismatchError("series coefficient from a different field");
  normalize();
}

TruncatedSeries TruncatedSeries::zero(const Field& field, int precision) { return TruncatedSeries(field, precision, {}, precision); }

TruncatedSeries TruncatedSeries::monomial(const FieldElement& c, int n, int precision) {
  return TruncatedSeries(c.field(), n, {c}, precision);
}

void TruncatedSeries::normalize() {
  const int len = std::max(0, precision_ - valuation_);
  coeffs_.resize(static_cast<std::size_t>(len), field_->zero());
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const FieldElement& c) { return !c.is_zero(); });
  valuation_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) valuation_ = precision_;
}

FieldElement TruncatedSeries::coeff(int n) const {
  if (n >= precision_) throw ResourceLimitError("series coefficient beyond precision");
  if (n < valuation_) return field_->zero();
  return coeffs_[static_cast<std::size_t>(n - valuation_)];
}

const FieldElement& TruncatedSeries::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of a zero series");
  return coeffs_.front();
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {

void require_same(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (&a.field() != &b.field()) throw MismatchError("series over different fields");
}

}  // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same(a, b);
  const int prec = std::min(a.precision_, b.precision_);
  const int val = std::min({a.valuation_, b.valuation_, prec});
  std::vector<FieldElement> c;
  c.reserve(static_cast<std::size_t>(prec - val));
  for (int n = val; n < prec; ++n) c.push_back(a.coeff(n) + b.coeff(n));
  return TruncatedSeries(*a.field_, val, std::move(c), prec);
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same(a, b);
  const int prec = std::min(a.valuation_ + b.precision_, b.valuation_ + a.precision_);
  if (a.is_zero() || b.is_zero()) return TruncatedSeries::zero(*a.field_, prec);
  const int val = a.valuation_ + b.valuation_;
  const int len = std::max(0, prec - val);
  std::vector<FieldElement> c(static_cast<std::size_t>(len), a.field_->zero());
  for (int i = 0; i < len && i < static_cast<int>(a.coeffs_.size()); ++i) {
    const auto& ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai.is_zero()) continue;
    for (int j = 0; i + j < len && j < static_cast<int>(b.coeffs_.size()); ++j)
      c[static_cast<std::size_t>(i + j)] += ai * b.coeffs_[static_cast<std::size_t>(j)];
  }
  return TruncatedSeries(*a.field_, val, std::move(c), prec);
}

TruncatedSeries operator*(const TruncatedSeries& a, const FieldElement& s) {
  TruncatedSeries r = a;
  for (auto& c : r.coeffs_) c *= s;
  r.normalize();
  return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of a series that is zero to precision");
  const int rel = relative_precision();
  std::vector<FieldElement> b(static_cast<std::size_t>(rel), field_->zero());
  const FieldElement b0 = coeffs_[0].inv();
  b[0] = b0;
  for (int n = 1; n < rel; ++n) {
    FieldElement acc = field_->zero();
    for (int i = 1; i <= n; ++i) acc += coeffs_[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(n - i)];
    b[static_cast<std::size_t>(n)] = -(b0 * acc);
  }
  return TruncatedSeries(*field_, -valuation_, std::move(b), -valuation_ + rel);
}

TruncatedSeries TruncatedSeries::sqrt() const {
  if (is_zero()) return zero(*field_, precision_ / 2);
  if (valuation_ % 2 != 0) throw std::domain_error("square root of a series with odd valuation");
  auto r0 = roquette::sqrt(coeffs_[0]);
  if (!r0) throw std::domain_error("leading coefficient is not a square");
  const int rel = relative_precision();
  std::vector<FieldElement> r(static_cast<std::size_t>(rel), field_->zero());
  r[0] = *r0;
  const FieldElement inv_two_r0 = (*r0 + *r0).inv();
  for (int n = 1; n < rel; ++n) {
    FieldElement acc = coeffs_[static_cast<std::size_t>(n)];
    for (int i = 1; i < n; ++i) acc -= r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(n - i)];
    r[static_cast<std::size_t>(n)] = acc * inv_two_r0;
  }
  return TruncatedSeries(*field_, valuation_ / 2, std::move(r), valuation_ / 2 + rel);
}

TruncatedSeries TruncatedSeries::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  TruncatedSeries result = monomial(field_->one(), 0, std::max(1, relative_precision()));
  TruncatedSeries base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

TruncatedSeries TruncatedSeries::shifted(int n) const {
  TruncatedSeries r = *this;
  r.valuation_ += n;
  r.precision_ += n;
  return r;
}

TruncatedSeries TruncatedSeries::truncated(int precision) const {
  return TruncatedSeries(*field_, valuation_, coeffs_, std::min(precision, precision_));
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
  require_same(*this, inner);
  if (inner.is_zero() || inner.valuation_ < 1)
    throw std::invalid_argument("composition needs an inner series of positive valuation");
  if (is_zero()) return zero(*field_, precision_ * inner.valuation_);
  // this = s^v * F0 with F0 a unit power series known to relative precision rel.
  const int rel = relative_precision();
  TruncatedSeries acc = zero(*field_, rel * inner.valuation_);
  for (int i = rel - 1; i >= 0; --i) {
    acc = acc * inner;
    acc = acc + monomial(coeffs_[static_cast<std::size_t>(i)], 0, acc.precision_);
  }
  return inner.pow(valuation_) * acc;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    os << coeffs_[i].to_string() << "*s^" << (valuation_ + static_cast<int>(i)) << " + ";
  }
  os << "O(s^" << precision_ << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

int default_series_precision(std::uint32_t p) { return 2 * static_cast<int>(p) + 4; }

InfinityChart chart_at_infinity(const Field& field, int precision) {
  const int p = static_cast<int>(field.characteristic());
  std::vector<FieldElement> c(static_cast<std::size_t>(precision), field.zero());
  c[0] = field.one();
  if (2 * p - 2 < precision) c[static_cast<std::size_t>(2 * p - 2)] = -field.one();
  const TruncatedSeries w = TruncatedSeries(field, 0, std::move(c), precision).sqrt();
  return {TruncatedSeries::monomial(field.one(), -2, precision), w.shifted(-p)};
}

std::optional<int> multiplicity_at_infinity(const RoquetteGroup& group, const GroupElement& g, int precision) {
  if (g.c() != 0) throw std::invalid_argument("element does not fix infinity");
  if (g == group.identity()) throw std::invalid_argument("identity has no isolated fixed points");
  const Field& f = group.fp2();
  const std::uint32_t p = group.prime();
  const FieldElement a = f.from_int(g.a()), b = f.from_int(g.b()), d = f.from_int(g.d());
  const FieldElement alpha = a / d, beta = b / d;

  // g^*(x) = alpha x + beta, so t = g^*(s) satisfies t^-2 = alpha s^-2 + beta.
  const TruncatedSeries s2 = TruncatedSeries::monomial(f.one(), 2, precision + 2);
  const TruncatedSeries denom(f, 0, {alpha, f.zero(), beta}, precision);
  const TruncatedSeries t = (s2 * denom.inverse()).sqrt();

  const InfinityChart chart = chart_at_infinity(f, precision);
  const FieldElement y_scale = group.lambda(g) / d.pow((p + 1) / 2);
  const TruncatedSeries target = chart.y * y_scale;

  std::optional<TruncatedSeries> branch;
  int matches = 0;
  for (const TruncatedSeries& candidate : {t, -t}) {
    if ((chart.y.compose(candidate) - target).is_zero()) {
      branch = candidate;
      ++matches;
    }
  }
  if (matches == 2) return std::nullopt;
  ensure(matches == 1, "one branch of g^*(s) matches g^*(y)");

  const TruncatedSeries s = TruncatedSeries::monomial(f.one(), 1, branch->precision());
  const TruncatedSeries diff = *branch - s;
  if (diff.is_zero()) return std::nullopt;
  return diff.valuation();
}

int wild_multiplicity(const RoquetteGroup& group, const GroupElement& g, int precision) {
  const std::uint32_t p = group.prime();
  if (group.element_order(g) % p != 0) throw std::invalid_argument("element is not wild");
  const GroupElement* conj = nullptr;
  GroupElement candidate;
  for (const auto& h : group.elements()) {
    candidate = group.conjugate(g, h);
    if (candidate.c() == 0) {
      conj = &candidate;
      break;
    }
  }
  ensure(conj != nullptr, "wild element is conjugate into the upper triangular subgroup");
  ensure(conj->a() == 1 && conj->d() == 1 && conj->b() != 0, "wild element is conjugate to a unipotent matrix");
  ensure(conj->lambda_log == 0 || conj->lambda_log == p - 1, "wild element has lambda = +-1 in unipotent form");
  // c x^2 + (d - a) x - b reduces to the nonzero constant -b: no affine fixed points.
  ensure(conj->c() == 0 && conj->d() == conj->a() && conj->b() != 0, "unipotent element fixes only infinity");

  const int cap = 64 * static_cast<int>(p);
  for (int n = precision > 0 ? precision : default_series_precision(p); n <= cap; n *= 2) {
    if (auto m = multiplicity_at_infinity(group, *conj, n)) return *m;
  }
  throw ResourceLimitError("wild multiplicity undetermined at precision " + std::to_string(cap));
}

}  // namespace roquette
