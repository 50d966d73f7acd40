#include <gtest/gtest.h>

#include <map>
#include <memory>
#include <unordered_set>
#include <random>

#include "roquette/character.hpp"
#include "roquette/errors.hpp"
#include "roquette/jacobian.hpp"

using namespace roquette;

namespace {

std::shared_ptr<const RoquetteGroup> group(std::uint32_t p) {
  static std::map<std::uint32_t, std::shared_ptr<const RoquetteGroup>> cache;
  auto& g = cache[p];
  if (!g) g = std::make_shared<const RoquetteGroup>(p);
  return g;
}

const TorsionBasis& basis_5_3() {
  static const TorsionBasis tb = [] {
    std::mt19937_64 rng(11);
    return torsion_basis(group(5), 3, 10'000, rng);
  }();
  return tb;
}

}  // namespace

TEST(Cantor, InverseAndInvolute) {
  const Jacobian j(group(5), Field::get(5, 4));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const auto d = j.random_divisor(rng);
    ASSERT_TRUE(j.is_valid(d));
    ASSERT_TRUE(j.add(d, j.neg(d)).is_identity());
    const auto pt = j.random_point(rng);
    const auto involute = CurvePoint::affine(pt.x(), -pt.y());
    ASSERT_TRUE(j.add(j.from_point(pt), j.from_point(involute)).is_identity());
  }
}

TEST(Cantor, GroupLawsOnRandomTriples) {
  for (auto [p, k] : {std::pair{5u, 2}, {5u, 4}, {7u, 2}}) {
    const Jacobian j(group(p), Field::get(p, k));
    std::mt19937_64 rng(p * 100 + k);
    for (int i = 0; i < 60; ++i) {
      const auto a = j.random_divisor(rng), b = j.random_divisor(rng), c = j.random_divisor(rng);
      ASSERT_EQ(j.add(a, b), j.add(b, a));
      ASSERT_EQ(j.add(j.add(a, b), c), j.add(a, j.add(b, c)));
      ASSERT_EQ(j.add(a, j.identity()), a);
      ASSERT_EQ(j.scalar_mul(a, 3), j.add(a, j.dbl(a)));
      ASSERT_EQ(j.scalar_mul(a, -2), j.neg(j.dbl(a)));
      ASSERT_TRUE(j.is_valid(j.add(a, b)));
    }
  }
}

TEST(Cantor, FieldMismatchRejected) {
  const Jacobian j2(group(5), Field::get(5, 2));
  const Jacobian j4(group(5), Field::get(5, 4));
  std::mt19937_64 rng(3);
  EXPECT_THROW(j2.add(j2.random_divisor(rng), j4.random_divisor(rng)), MismatchError);
  EXPECT_THROW(Jacobian(group(5), Field::get(7, 2)), std::invalid_argument);
}

TEST(Cantor, MakeValidates) {
  const Jacobian j(group(5), Field::get(5, 2));
  const Field& f = j.field();
  // x^5 - x vanishes at 0, so (x, 0) is a valid class; (x, 1) is not.
  EXPECT_NO_THROW(j.make(Poly::linear_root(f.zero()), Poly(f)));
  EXPECT_THROW(j.make(Poly::linear_root(f.zero()), Poly::constant(f.one())), std::invalid_argument);
  // (x^2, 0) would double a ramification point.
  EXPECT_THROW(j.make(Poly::monomial(f.one(), 2), Poly(f)), std::invalid_argument);
}

TEST(JacobianOrder, Formula) {
  EXPECT_EQ(jacobian_order(5, 1), BigInt(256));
  EXPECT_EQ(jacobian_order(5, 2), BigInt(331776));
  EXPECT_EQ(jacobian_order(7, 1), BigInt(262144));  // (1 + 7)^6
  EXPECT_EQ(jacobian_exponent(5, 6), BigInt(15624));
}

TEST(JacobianOrder, ExhaustiveEnumerationOverF25) {
  const Jacobian j(group(5), Field::get(5, 2));
  const auto all = j.enumerate_all();
  EXPECT_EQ(BigInt(all.size()), jacobian_order(5, 1));
  // Closed under addition with a fixed element.
  std::unordered_set<MumfordDivisor> set(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); i += 5) ASSERT_TRUE(set.count(j.add(all[i], all[(i * 7) % all.size()])));
}

TEST(JacobianOrder, CurveCountConsistency) {
  // #C(F_{p^2}) = p^2 + 1 - 2g eps p.
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    const RoquetteCurve c(group(p));
    const std::int64_t pp = p;
    EXPECT_EQ(static_cast<std::int64_t>(c.count_points(2)), pp * pp + 1 - (pp - 1) * frobenius_sign(p) * pp);
  }
}

TEST(JacobianOrder, LagrangeOverF625) {
  const Jacobian j(group(5), Field::get(5, 4));
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) ASSERT_TRUE(j.scalar_mul(j.random_divisor(rng), jacobian_order(5, 2)).is_identity());
}

TEST(JacobianAction, IdentityIotaAdditivityHomomorphism) {
  for (auto [p, k] : {std::pair{5u, 2}, {5u, 4}, {7u, 2}}) {
    const auto g = group(p);
    const Jacobian j(g, Field::get(p, k));
    std::mt19937_64 rng(p + k);
    const auto& el = g->elements();
    std::uniform_int_distribution<std::size_t> pick(0, el.size() - 1);
    for (int i = 0; i < 40; ++i) {
      const auto a = j.random_divisor(rng), b = j.random_divisor(rng);
      const auto &x = el[pick(rng)], &y = el[pick(rng)];
      ASSERT_EQ(j.act(g->identity(), a), a);
      ASSERT_EQ(j.act(g->iota(), a), j.neg(a));
      ASSERT_EQ(j.act(x, j.add(a, b)), j.add(j.act(x, a), j.act(x, b)));
      ASSERT_EQ(j.act(g->mul(x, y), a), j.act(x, j.act(y, a)));
      ASSERT_TRUE(j.is_valid(j.act(x, a)));
    }
  }
}

TEST(JacobianAction, MatchesPointAction) {
  const auto g = group(5);
  const RoquetteCurve c(g);
  const Jacobian j(g, Field::get(5, 2));
  // g(P - inf) = gP - g(inf).
  for (const auto& e : g->elements())
    for (const auto& pt : c.points(2)) {
      const auto lhs = j.act(e, j.from_point(pt));
      const auto rhs = j.add(j.from_point(c.act(e, pt)), j.neg(j.from_point(c.act(e, CurvePoint::infinity()))));
      ASSERT_EQ(lhs, rhs);
    }
}

TEST(EllIndex, Values) {
  EXPECT_EQ(ell_field_index(5, 3), 2);
  EXPECT_EQ(ell_field_index(5, 7), 6);
  EXPECT_EQ(ell_field_index(7, 3), 2);
  EXPECT_THROW(ell_field_index(5, 5), std::invalid_argument);
}

TEST(DefaultEllList, Values) {
  EXPECT_EQ(default_ell_list(5, 10'000), (std::vector<std::uint32_t>{3, 7}));
  EXPECT_TRUE(default_ell_list(7, 10'000).empty());
  EXPECT_EQ(default_ell_list(7, 20'000), (std::vector<std::uint32_t>{3, 5}));
  EXPECT_TRUE(default_ell_list(11, 10'000).empty());
}

TEST(TorsionBasis, EllThreeAtP5) {
  const auto& tb = basis_5_3();
  EXPECT_EQ(tb.m, 2);
  EXPECT_EQ(tb.jacobian.field().degree(), 4);
  EXPECT_EQ(tb.basis.size(), 4u);
  EXPECT_EQ(tb.span_size(), 81u);
  for (const auto& b : tb.basis) {
    EXPECT_FALSE(b.is_identity());
    EXPECT_TRUE(tb.jacobian.scalar_mul(b, 3).is_identity());
  }
}

TEST(TorsionBasis, Errors) {
  std::mt19937_64 rng(0);
  EXPECT_THROW(torsion_basis(group(5), 5, 10'000, rng), std::invalid_argument);
  EXPECT_THROW(torsion_basis(group(5), 9, 10'000, rng), std::invalid_argument);
  EXPECT_THROW(torsion_basis(group(5), 11, 10'000, rng), ResourceLimitError);
}

TEST(RepMatrix, HomomorphismExhaustiveAtP5Ell3) {
  const auto g = group(5);
  const auto& tb = basis_5_3();
  const auto& el = g->elements();
  std::vector<ModLMatrix> mats;
  for (const auto& e : el) mats.push_back(rep_matrix(e, tb));
  EXPECT_EQ(mats[g->index_of(g->identity())], ModLMatrix::identity(3, 4));
  ModLMatrix minus(3, 4);
  for (int i = 0; i < 4; ++i) minus(i, i) = 2;
  EXPECT_EQ(rep_matrix(g->iota(), tb), minus);
  for (std::size_t a = 0; a < el.size(); ++a) {
    ASSERT_NE(mats[a].det(), 0u);
    for (std::size_t b = 0; b < el.size(); ++b) ASSERT_EQ(mats[g->index_of(g->mul(el[a], el[b]))], mats[a] * mats[b]);
  }
  for (std::size_t a = 0; a < el.size(); ++a) {
    ModLMatrix pw = ModLMatrix::identity(3, 4);
    for (std::uint64_t i = 0; i < g->element_order(el[a]); ++i) pw = pw * mats[a];
    ASSERT_EQ(pw, ModLMatrix::identity(3, 4));
    ASSERT_EQ(mats[a].trace(), mats[g->index_of(g->inv(el[a]))].trace());
  }
}

TEST(RepMatrix, TracesCongruentToLefschetz) {
  const auto g = group(5);
  const RoquetteCurve c(g);
  const auto chi = lefschetz_character(c);
  const auto tr = rho_ell_traces(basis_5_3(), chi.classes());
  const auto values = chi.integer_values();
  for (std::size_t i = 0; i < values.size(); ++i) EXPECT_EQ(static_cast<std::int64_t>(tr[i]), ((values[i] % 3) + 3) % 3);
}

TEST(ModLMatrix, Determinant) {
  ModLMatrix m(7, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 3;
  m(1, 1) = 4;
  EXPECT_EQ(m.det(), 5u);  // -2 mod 7
  ModLMatrix s(7, 2);
  s(0, 1) = 1;
  s(1, 0) = 1;
  EXPECT_EQ(s.det(), 6u);
}

TEST(Crt, Examples) {
  EXPECT_EQ(crt_reconstruct({3, 7}, {{2}, {3}}, 4), (std::vector<std::int64_t>{-4}));
  EXPECT_EQ(crt_reconstruct({3, 7}, {{1, 0, 2}, {1, 0, 6}}, 4), (std::vector<std::int64_t>{1, 0, -1}));
  EXPECT_THROW(crt_reconstruct({3}, {{2}}, 4), std::invalid_argument);
  EXPECT_THROW(crt_reconstruct({3, 3}, {{2}, {2}}, 1), std::invalid_argument);
  EXPECT_THROW(crt_reconstruct({3, 9}, {{2}, {2}}, 1), std::invalid_argument);
}
