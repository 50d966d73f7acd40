// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Independent of the unit-test framework so it can run on its own.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "roquette/character.hpp"
#include "roquette/curve.hpp"
#include "roquette/jacobian.hpp"
#include "roquette/report.hpp"
#include "roquette/series.hpp"

using namespace roquette;

namespace {

const std::vector<std::uint32_t> kPrimes{5, 7, 11, 13};

std::shared_ptr<const RoquetteGroup> group(std::uint32_t p) {
  static std::map<std::uint32_t, std::shared_ptr<const RoquetteGroup>> cache;
  auto& g = cache[p];
  if (!g) g = std::make_shared<const RoquetteGroup>(p);
  return g;
}

// Collects failed expectations for one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    std::ostringstream s;
    s << what << ": got " << got << ", want " << want;
    expect(got == want, s.str());
  }
  bool ok() const { return failures_.empty(); }
  int count() const { return count_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  int count_ = 0;
  std::vector<std::string> failures_;
};

struct Criterion {
  int number;
  std::string title;
  /// Wall-clock budget in seconds; 0 for none.
  double budget;
  std::function<void(Checker&)> body;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string rat(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

void group_orders(Checker& ck) {
  for (auto p : kPrimes) {
    const RoquetteGroup g(p);
    ck.expect_eq(g.elements().size(), 2ull * p * (p * p - 1ull), "|G| by enumeration at p=" + std::to_string(p));
    ck.expect_eq(g.order(), 2ull * p * (p * p - 1ull), "order() at p=" + std::to_string(p));
  }
  ck.expect_eq(RoquetteGroup(5).elements().size(), 240u, "|G| at p=5");
  ck.expect_eq(RoquetteGroup(7).elements().size(), 672u, "|G| at p=7");
  ck.expect_eq(RoquetteGroup(11).elements().size(), 2640u, "|G| at p=11");
  ck.expect_eq(RoquetteGroup(13).elements().size(), 4368u, "|G| at p=13");
}

void point_counts(Checker& ck) {
  const std::map<std::uint32_t, std::uint64_t> fp2{{5, 6}, {7, 92}, {11, 232}, {13, 14}};
  for (auto p : kPrimes) {
    const RoquetteCurve c(group(p));
    const auto ps = std::to_string(p);
    ck.expect_eq(c.count_points(1), p + 1ull, "#C(F_p) at p=" + ps);
    ck.expect_eq(c.points(1).size(), p + 1ull, "|points(1)| at p=" + ps);
    const auto n2 = c.count_points(2);
    ck.expect_eq(n2, fp2.at(p), "#C(F_p^2) at p=" + ps);
    ck.expect_eq(c.points(2).size(), fp2.at(p), "|points(2)| at p=" + ps);
    const std::int64_t dev = static_cast<std::int64_t>(n2) - static_cast<std::int64_t>(1 + p * p);
    ck.expect_eq(dev < 0 ? -dev : dev, static_cast<std::int64_t>(p * (p - 1)), "Hasse-Weil deviation at p=" + ps);
    const auto hw = c.hasse_weil_sharpness();
    ck.expect(hw.sharp, "hasse_weil_sharpness() at p=" + ps);
  }
}

void character_suite(Checker& ck) {
  for (auto p : kPrimes) {
    const auto g = group(p);
    const RoquetteCurve c(g);
    const auto chi = lefschetz_character(c);
    const auto ps = " at p=" + std::to_string(p);
    const std::int64_t d = p - 1;
    ck.expect_eq(rat(chi.degree()), rat(Rational(d)), "chi(1)" + ps);
    ck.expect_eq(rat(chi.at(g->iota())), rat(Rational(-d)), "chi(iota)" + ps);
    for (const auto& s : g->sylow_p())
      if (s != g->identity()) ck.expect_eq(rat(chi.at(s)), std::string("-1"), "chi on order-p element" + ps);
    ck.expect(chi.is_integer_valued(), "integer values" + ps);
    ck.expect_eq(rat(inner_product(chi, chi)), std::string("1"), "<chi, chi>" + ps);
    const auto sy = sylow_restriction(*g, chi);
    ck.expect_eq(rat(sy.trivial_mult), std::string("0"), "trivial multiplicity on the p-Sylow" + ps);
    ck.expect_eq(rat(sy.nontrivial_mult), std::string("1"), "nontrivial multiplicity on the p-Sylow" + ps);
    ck.expect_eq(rat(fs_indicator(*g, chi)), std::string("-1"), "Frobenius-Schur indicator" + ps);
    const auto ker = kernel_of_character(*g, chi);
    ck.expect(ker.size() == 1 && ker[0] == g->identity(), "kernel is trivial" + ps);
  }
}

void wild_multiplicities(Checker& ck) {
  for (std::uint32_t p : {5u, 7u}) {
    const auto g = group(p);
    for (std::uint32_t u = 1; u < p; ++u) {
      const auto ps = " at p=" + std::to_string(p) + ", u=" + std::to_string(u);
      ck.expect_eq(wild_multiplicity(*g, g->unipotent(u, 1)), 3, "lambda=+1" + ps);
      ck.expect_eq(wild_multiplicity(*g, g->unipotent(u, -1)), 1, "lambda=-1" + ps);
    }
  }
  for (auto p : kPrimes) {
    const auto g = group(p);
    ck.expect(iota_twist_consistent(*g, lefschetz_character(RoquetteCurve(g))),
              "chi(g iota) = -chi(g) at p=" + std::to_string(p));
  }
}

const VerificationReport& report_p5() {
  static const VerificationReport r = [] {
    PipelineOptions o;
    o.ells = std::vector<std::uint32_t>{3, 7};
    return run_pipeline(5, o);
  }();
  return r;
}

void ell_witness(Checker& ck) {
  const auto& r = report_p5();
  ck.expect(r.ell.status == CheckStatus::Pass, "l-witness status: " + r.ell.reason);
  ck.expect_eq(r.ell.witnesses.size(), 2u, "number of witnesses");
  if (r.ell.witnesses.size() != 2) return;
  const auto& w3 = r.ell.witnesses[0];
  const auto& w7 = r.ell.witnesses[1];
  ck.expect_eq(w3.ell, 3u, "first l");
  ck.expect_eq(w3.span_size, 81u, "|J[3]|");
  ck.expect_eq(w3.field_degree, 4, "field of J[3] is F_{5^k} with k");
  ck.expect_eq(w7.ell, 7u, "second l");
  ck.expect_eq(w7.span_size, 2401u, "|J[7]|");
  ck.expect_eq(w7.field_degree, 12, "field of J[7] is F_{5^k} with k");

  // Residues against chi computed independently here.
  const auto g = group(5);
  const auto chi = lefschetz_character(RoquetteCurve(g));
  const auto values = chi.integer_values();
  for (const auto* w : {&w3, &w7}) {
    ck.expect_eq(w->traces.size(), values.size(), "trace count for l=" + std::to_string(w->ell));
    for (std::size_t i = 0; i < std::min(values.size(), w->traces.size()); ++i) {
      const auto l = static_cast<std::int64_t>(w->ell);
      const auto want = static_cast<std::uint32_t>(((values[i] % l) + l) % l);
      ck.expect_eq(w->traces[i], want, "tr rho_" + std::to_string(w->ell) + " on class " + std::to_string(i));
    }
  }
  const auto crt = crt_reconstruct({3, 7}, {w3.traces, w7.traces}, 4);
  ck.expect(crt == values, "CRT of the traces equals chi");
  ck.expect(r.ell.crt_matches && r.ell.crt == values, "report CRT equals chi");
}

void jacobian_oracle(Checker& ck) {
  const auto g = group(5);
  const Jacobian j25(g, Field::get(5, 2));
  const auto all = j25.enumerate_all();
  ck.expect_eq(all.size(), 256u, "#J(F_25) by enumeration");
  ck.expect_eq(jacobian_order(5, 1), BigInt(256), "(1 - (eps p))^{2g} at p=5, m=1");
  BigInt four = 1 - 5;
  ck.expect_eq(jacobian_order(5, 1), BigInt(four * four * four * four), "(1-5)^4");

  const Jacobian j(g, Field::get(5, 4));
  const BigInt n = jacobian_order(5, 2);
  std::mt19937_64 rng(2024);
  int killed = 0;
  for (int i = 0; i < 100; ++i)
    if (j.scalar_mul(j.random_divisor(rng), n).is_identity()) ++killed;
  ck.expect_eq(killed, 100, "random classes over F_625 killed by #J");
}

void verdicts(Checker& ck) {
  for (auto p : kPrimes) {
    const auto r = p == 5 ? report_p5() : run_pipeline(p);
    const auto ps = " at p=" + std::to_string(p);
    const auto& v = r.verdict;
    ck.expect(v.integer_valued, "integer_valued" + ps);
    ck.expect(v.irreducible, "irreducible" + ps);
    ck.expect_eq(rat(v.fs_indicator), std::string("-1"), "nu" + ps);
    ck.expect(v.schur_index_witness == SchurWitness::Two, "schur_index_witness = 2" + ps);
    ck.expect(v.lifts == LiftVerdict::Obstructed, "lifts = obstructed" + ps);
    ck.expect_eq(r.final_verdict, std::string("obstructed"), "final verdict" + ps);
    for (const auto& c : r.checks)
      ck.expect(c.status != CheckStatus::Fail, "check " + c.id + " did not fail" + ps);
  }
  for (const auto& id : check_ids()) {
    VerificationReport r = report_p5();
    inject_failure(r, id);
    ck.expect_eq(r.final_verdict, std::string("not determined"), "verdict after failing " + id);
    ck.expect_eq(exit_code(r), 1, "exit code after failing " + id);
  }
}

std::uint64_t point_key(const CurvePoint& pt, std::uint64_t q) {
  return pt.is_infinity() ? ~0ull : pt.x().index() * q + pt.y().index();
}

void property_summary(Checker& ck) {
  // Field axioms on random triples over F_{7^3}.
  {
    const Field& f = Field::get(7, 3);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::uint64_t> pick(0, f.order() - 1);
    bool ok = true;
    for (int i = 0; i < 2000; ++i) {
      const auto a = f.element_at(pick(rng)), b = f.element_at(pick(rng)), c = f.element_at(pick(rng));
      ok &= (a + b) * c == a * c + b * c && (a * b) * c == a * (b * c) && a + (-a) == f.zero();
      if (!a.is_zero()) ok &= a * a.inv() == f.one();
    }
    ck.expect(ok, "field axioms over F_343");
  }
  // Group axioms and normal-form idempotence at p = 7.
  {
    const auto g = group(7);
    bool ok = true;
    for (const auto& a : g->elements()) {
      ok &= g->canonicalize(a) == a && g->is_canonical(a);
      ok &= g->mul(a, g->inv(a)) == g->identity() && g->mul(g->identity(), a) == a;
    }
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, g->elements().size() - 1);
    for (int i = 0; i < 3000; ++i) {
      const auto &a = g->elements()[pick(rng)], &b = g->elements()[pick(rng)], &c = g->elements()[pick(rng)];
      ok &= g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c));
    }
    ck.expect(ok, "group axioms and normal form at p=7");
  }
  // Closure and action law, exhaustive at p = 5 on C(F_625).
  {
    const RoquetteCurve c(group(5));
    const auto& g = c.group();
    const Field& f4 = Field::get(5, 4);
    const auto pts = c.points(4);
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < pts.size(); ++i) index[point_key(pts[i], f4.order())] = i;
    const auto& el = g.elements();
    std::vector<std::vector<std::uint16_t>> perm(el.size(), std::vector<std::uint16_t>(pts.size()));
    bool closed = true;
    for (std::size_t e = 0; e < el.size() && closed; ++e)
      for (std::size_t i = 0; i < pts.size() && closed; ++i) {
        const auto it = index.find(point_key(c.act(el[e], pts[i], f4), f4.order()));
        closed = it != index.end();
        if (closed) perm[e][i] = static_cast<std::uint16_t>(it->second);
      }
    ck.expect(closed, "action preserves C(F_625)");
    bool law = closed;
    for (std::size_t a = 0; a < el.size() && law; ++a)
      for (std::size_t b = 0; b < el.size() && law; ++b) {
        const auto& pab = perm[g.index_of(g.mul(el[a], el[b]))];
        for (std::size_t i = 0; i < pts.size(); ++i) law &= pab[i] == perm[a][perm[b][i]];
      }
    ck.expect(law, "(gh)P = g(hP) for all g, h, P at p=5");
  }
  // Cantor group laws over F_625.
  {
    const Jacobian j(group(5), Field::get(5, 4));
    std::mt19937_64 rng(5);
    bool ok = true;
    for (int i = 0; i < 100; ++i) {
      const auto a = j.random_divisor(rng), b = j.random_divisor(rng), c = j.random_divisor(rng);
      ok &= j.add(a, b) == j.add(b, a) && j.add(j.add(a, b), c) == j.add(a, j.add(b, c));
      ok &= j.add(a, j.identity()) == a && j.add(a, j.neg(a)).is_identity();
    }
    ck.expect(ok, "Cantor group laws over F_625");
  }
  // Deterministic JSON for a fixed seed.
  {
    PipelineOptions o;
    o.ells = std::vector<std::uint32_t>{3, 7};
    const auto text = emit_json(run_pipeline(5, o));
    ck.expect(text == emit_json(report_p5()), "JSON is byte-identical across runs");
    ck.expect(report_from_json(text) == report_p5(), "JSON round-trips");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "group orders 240, 672, 2640, 4368 by enumeration", 10, group_orders},
      {2, "point counts over F_p and F_p^2, Hasse-Weil sharp", 10, point_counts},
      {3, "character suite at p = 5, 7, 11, 13", 60, character_suite},
      {4, "wild multiplicities 3 and 1, iota twist", 0, wild_multiplicities},
      {5, "l-independence witness at p=5 (l = 3, 7)", 600, ell_witness},
      {6, "Jacobian oracle: #J(F_25) = 256, #J kills random classes", 0, jacobian_oracle},
      {7, "verdict obstructed for every p, fault injection flips it", 0, verdicts},
      {8, "property summary", 0, property_summary},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Checker ck;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(ck);
    } catch (const std::exception& e) {
      ck.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(t0);
    if (c.budget > 0) ck.expect(secs < c.budget, "over the " + std::to_string(static_cast<int>(c.budget)) + " s budget");
    std::printf("[%s] criterion %d: %s (%d checks, %.2f s)\n", ck.ok() ? "PASS" : "FAIL", c.number, c.title.c_str(),
                ck.count(), secs);
    for (const auto& f : ck.failures()) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    if (!ck.ok()) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
