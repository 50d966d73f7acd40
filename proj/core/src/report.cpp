#include "roquette/report.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "roquette/curve.hpp"
#include "roquette/errors.hpp"
#include "roquette/jacobian.hpp"
#include "roquette/series.hpp"

namespace roquette {

using Json = nlohmann::ordered_json;

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "fail";
}

CheckStatus check_status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "skipped") return CheckStatus::Skipped;
  throw std::invalid_argument("unknown check status '" + s + "'");
}

const CheckResult* VerificationReport::find_check(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids{
      "group_order",      "pgl_projection",   "order_p_conjugate", "points_fp",       "points_fp2",
      "hasse_weil_sharp", "frobenius_sign",   "action_law",        "character_degree", "character_iota",
      "character_order_p", "wild_multiplicity", "iota_twist",       "integrality",      "irreducibility",
      "sylow_restriction", "fs_indicator",     "faithfulness",      "ell_independence", "schur_witness",
  };
  return ids;
}

namespace {

std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

CheckStatus pass_if(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

class Stopwatch {
 public:
  explicit Stopwatch(std::vector<TimingEntry>* out) : out_(out), start_(std::chrono::steady_clock::now()) {}
  void lap(const std::string& stage) {
    const auto now = std::chrono::steady_clock::now();
    if (out_)
      out_->push_back({stage, std::chrono::duration_cast<std::chrono::microseconds>(now - start_).count()});
    start_ = now;
  }

 private:
  std::vector<TimingEntry>* out_;
  std::chrono::steady_clock::time_point start_;
};

const std::vector<std::string>& inference_text() {
  static const std::vector<std::string> text{
      "Frobenius over F_{p^2} acts on the Jacobian as the scalar eps*p, as the point counts confirm; the "
      "isogeny of J with a power of a supersingular elliptic curve (Tate) is cited, not computed.",
      "The l-torsion traces agree with chi modulo every computed l and reconstruct chi over Z, the finite-level "
      "form of l-independence of the Tate-module character.",
      "An irreducible Z-valued character with Frobenius-Schur indicator -1 is of quaternionic type, so its Schur "
      "index over R, and hence over Q, is at least 2; the quaternion endomorphism algebra ramified at p and "
      "infinity gives exactly 2.",
      "chi occurs with multiplicity one, which is not divisible by the Schur index, so chi is not the character "
      "of a rational representation and its class modulo characters of rational representations is nonzero.",
      "Specialization identifies the prime-to-p completions of the fundamental groups of a lift and of X = (C x "
      "P)/G; a lift would make the extension of G by the curve's fundamental group prime-to-p discretely "
      "finitely presented, forcing that class to vanish. Hence X does not lift to characteristic 0.",
  };
  return text;
}

}  // namespace

void validate_options(std::uint32_t p, const PipelineOptions& o) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("p must be a prime >= 5, got " + std::to_string(p));
  if (p > o.max_prime)
    throw ResourceLimitError("p = " + std::to_string(p) + " exceeds the configured maximum " +
                             std::to_string(o.max_prime));
  if (o.precision < 0) throw std::invalid_argument("precision must be non-negative");
  if (o.ell_bound == 0) throw std::invalid_argument("the torsion bound must be positive");
  if (o.inject_failure) {
    const auto& ids = check_ids();
    if (std::find(ids.begin(), ids.end(), *o.inject_failure) == ids.end())
      throw std::invalid_argument("unknown check '" + *o.inject_failure + "'");
  }
  if (o.ells) {
    if (o.ells->empty()) throw std::invalid_argument("the l list is empty");
    std::set<std::uint32_t> seen;
    std::uint64_t product = 1;
    for (auto ell : *o.ells) {
      if (!is_prime(ell)) throw std::invalid_argument(std::to_string(ell) + " is not prime");
      if (ell == p) throw std::invalid_argument("l must differ from p");
      if (!seen.insert(ell).second) throw std::invalid_argument("l = " + std::to_string(ell) + " repeated");
      if (auto why = ell_infeasibility(p, ell, o.ell_bound); !why.empty()) throw ResourceLimitError(why);
      product *= ell;
    }
    if (product <= 2 * (static_cast<std::uint64_t>(p) - 1))
      throw std::invalid_argument("the product of the l list must exceed 2(p - 1) = " + std::to_string(2 * (p - 1)));
  }
}

std::string derive_final_verdict(const VerificationReport& r) {
  for (const auto& c : r.checks)
    if (c.status == CheckStatus::Fail) return to_string(LiftVerdict::NotDetermined);
  return to_string(r.verdict.lifts);
}

void inject_failure(VerificationReport& r, const std::string& id) {
  for (auto& c : r.checks) {
    if (c.id != id) continue;
    c.status = CheckStatus::Fail;
    c.detail += " [failure injected]";
    r.final_verdict = derive_final_verdict(r);
    return;
  }
  throw std::invalid_argument("unknown check '" + id + "'");
}

int exit_code(const VerificationReport& r) { return r.final_verdict == to_string(LiftVerdict::Obstructed) ? 0 : 1; }

VerificationReport run_pipeline(std::uint32_t p, const PipelineOptions& o) {
  validate_options(p, o);
  VerificationReport r;
  r.p = p;
  r.seed = o.seed;
  r.ell_bound = o.ell_bound;
  r.precision = o.precision > 0 ? o.precision : default_series_precision(p);
  Stopwatch clock(o.timings ? &r.timings : nullptr);
  auto add = [&](const std::string& id, bool ok, std::string claim, std::string detail) {
    r.checks.push_back({id, pass_if(ok), std::move(claim), std::move(detail)});
  };
  const auto pp = static_cast<std::int64_t>(p);

  // Group.
  auto group = std::make_shared<const RoquetteGroup>(p);
  const auto classes = group->conjugacy_classes();
  {
    GroupSummary& gs = r.group;
    gs.order = group->elements().size();
    gs.expected_order = 2 * p * (static_cast<std::uint64_t>(p) * p - 1);
    gs.class_count = classes->count();
    std::map<std::uint64_t, std::uint64_t> stats;
    for (const auto& cls : classes->classes()) {
      stats[cls.element_order] += cls.size();
      if (cls.element_order == p) ++gs.order_p_classes;
    }
    for (auto [ord, cnt] : stats) gs.order_statistics.push_back({ord, cnt});
    gs.pgl_kernel_size = group->kernel_of_projection().size();
    gs.pgl_sharply_3_transitive = group->pgl_sharply_three_transitive();
    add("group_order", gs.order == gs.expected_order, "Aut(C) has order 2p(p^2 - 1)",
        "enumerated " + std::to_string(gs.order) + " elements, expected " + std::to_string(gs.expected_order));
    const std::uint64_t image = group->pgl_image().size();
    add("pgl_projection", gs.pgl_kernel_size == 2 && image == gs.expected_order / 2 && gs.pgl_sharply_3_transitive,
        "G -> PGL_2(F_p) is onto with kernel {1, iota}; PGL_2(F_p) is sharply 3-transitive on P^1(F_p)",
        "kernel size " + std::to_string(gs.pgl_kernel_size) + ", image size " + std::to_string(image) + ", sharply 3-transitive: " +
            (gs.pgl_sharply_3_transitive ? "yes" : "no"));
    add("order_p_conjugate", gs.order_p_classes == 1, "all elements of order p are conjugate",
        std::to_string(gs.order_p_classes) + " class(es) of elements of order p");
  }
  clock.lap("group");

  // Curve.
  const RoquetteCurve curve(group);
  {
    CurveSummary& cs = r.curve;
    const HasseWeilReport hw = curve.hasse_weil_sharpness();
    cs.genus = curve.genus();
    cs.points_fp = hw.count_fp;
    cs.expected_fp = p + 1;
    cs.points_fp2 = hw.count_fp2;
    cs.expected_fp2 = p % 4 == 1 ? p + 1 : 2 * static_cast<std::uint64_t>(p) * p - p + 1;
    cs.deviation = hw.deviation;
    cs.bound = hw.bound;
    cs.sharp = hw.sharp;
    cs.epsilon = hw.epsilon;
    cs.epsilon_from_congruence = hw.epsilon_from_congruence;
    add("points_fp", cs.points_fp == cs.expected_fp, "#C(F_p) = p + 1",
        std::to_string(cs.points_fp) + " points, expected " + std::to_string(cs.expected_fp));
    add("points_fp2", cs.points_fp2 == cs.expected_fp2,
        "#C(F_{p^2}) = p + 1 if p = 1 mod 4 and 2p^2 - p + 1 if p = 3 mod 4",
        std::to_string(cs.points_fp2) + " points, expected " + std::to_string(cs.expected_fp2));
    add("hasse_weil_sharp", cs.sharp, "C is minimal or maximal over F_{p^2}: |#C(F_{p^2}) - (1 + p^2)| = 2g p",
        "deviation " + std::to_string(cs.deviation) + ", bound " + std::to_string(cs.bound));
    add("frobenius_sign", cs.epsilon == cs.epsilon_from_congruence,
        "Frobenius over F_{p^2} is eps*p with eps = +1 exactly when p = 1 mod 4",
        "eps from counts " + std::to_string(cs.epsilon) + ", from p mod 4 " +
            std::to_string(cs.epsilon_from_congruence));

    // Each element becomes a permutation of C(F_{p^2}); the law is then checked
    // by composing permutations.
    const auto pts = curve.points(2);
    const std::uint64_t q = group->fp2().order();
    const auto point_key = [q](const CurvePoint& pt) {
      return pt.is_infinity() ? ~std::uint64_t{0} : pt.x().index() * q + pt.y().index();
    };
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < pts.size(); ++i) index.emplace(point_key(pts[i]), i);
    const auto& el = group->elements();
    std::vector<std::vector<std::uint32_t>> perm(el.size(), std::vector<std::uint32_t>(pts.size()));
    bool closed = true, law = true;
    for (std::size_t e = 0; e < el.size() && closed; ++e) {
      for (std::size_t i = 0; i < pts.size() && closed; ++i) {
        const auto it = index.find(point_key(curve.act(el[e], pts[i], group->fp2())));
        closed = it != index.end();
        if (closed) perm[e][i] = static_cast<std::uint32_t>(it->second);
      }
    }
    std::vector<GroupElement> probes{group->unipotent(1), group->iota()};
    for (std::size_t i = 0; i < el.size(); i += std::max<std::size_t>(1, el.size() / 16)) probes.push_back(el[i]);
    for (std::size_t e = 0; e < el.size() && closed; ++e) {
      for (const auto& h : probes) {
        const auto& ph = perm[group->index_of(h)];
        const auto& pgh = perm[group->index_of(group->mul(el[e], h))];
        for (std::size_t i = 0; i < pts.size(); ++i) {
          law = law && pgh[i] == perm[e][ph[i]];
          ++cs.action_pairs_checked;
        }
      }
    }
    add("action_law", closed && law, "G acts on C over F_{p^2} and (gh)P = g(hP)",
        std::to_string(cs.action_pairs_checked) + " (g, h, P) triples checked; C(F_{p^2}) preserved: " +
            (closed ? "yes" : "no"));
  }
  clock.lap("curve");

  // Character.
  const ClassFunction chi = lefschetz_character(curve, r.precision);
  clock.lap("lefschetz");
  {
    CharacterSummary& ch = r.character;
    for (std::size_t i = 0; i < classes->count(); ++i) {
      const auto& cls = (*classes)[i];
      ch.classes.push_back({cls.representative.matrix, cls.representative.lambda_log, cls.element_order,
                            static_cast<std::uint64_t>(cls.size()), chi[i]});
    }
    ch.inner_product = inner_product(chi, chi);
    const SylowRestriction sr = sylow_restriction(*group, chi);
    ch.n_chi = sr.n_chi;
    ch.sylow_trivial = sr.trivial_mult;
    ch.sylow_nontrivial = sr.nontrivial_mult;
    ch.fs_indicator = fs_indicator(*group, chi);
    ch.kernel_size = kernel_of_character(*group, chi).size();
    ch.iota_twist = iota_twist_consistent(*group, chi);
    bool wild_ok = true;
    for (std::uint32_t u = 1; u < p; ++u)
      for (int sign : {1, -1}) {
        const int m = wild_multiplicity(*group, group->unipotent(u, sign), r.precision);
        ch.wild.push_back({u, sign, m});
        wild_ok = wild_ok && m == (sign == 1 ? 3 : 1);
      }

    add("character_degree", chi.degree() == Rational(pp - 1), "chi(1) = 2g = p - 1",
        "chi(1) = " + rational_text(chi.degree()));
    add("character_iota", chi.at(group->iota()) == Rational(1 - pp), "iota acts as -1 on H^1: chi(iota) = -(p - 1)",
        "chi(iota) = " + rational_text(chi.at(group->iota())));
    add("character_order_p", chi.at(group->unipotent(1)) == Rational(-1), "chi = -1 on elements of order p",
        "chi(u) = " + rational_text(chi.at(group->unipotent(1))));
    add("wild_multiplicity", wild_ok,
        "the unique fixed point of an element of order p (resp. 2p) has multiplicity 3 (resp. 1)",
        std::to_string(ch.wild.size()) + " unipotent elements checked at precision " + std::to_string(r.precision));
    add("iota_twist", ch.iota_twist, "chi(g iota) = -chi(g) for all g", ch.iota_twist ? "holds on every class" : "fails");
    add("integrality", chi.is_integer_valued(), "chi takes values in Z",
        chi.is_integer_valued() ? "all class values are integers" : "non-integer value found");
    add("irreducibility", ch.inner_product == Rational(1), "chi is absolutely irreducible: <chi, chi> = 1",
        "<chi, chi> = " + rational_text(ch.inner_product));
    add("sylow_restriction", ch.sylow_trivial == Rational(0) && ch.sylow_nontrivial == Rational(1),
        "res_N chi contains each non-trivial character of the p-Sylow subgroup N once and the trivial one not at "
        "all (using the sum of a non-trivial character over N minus 1 being -1)",
        "n_chi = " + rational_text(ch.n_chi) + ", multiplicities (" + rational_text(ch.sylow_trivial) + ", " +
            rational_text(ch.sylow_nontrivial) + ")");
    add("fs_indicator", ch.fs_indicator == Rational(-1), "chi is of quaternionic type: Frobenius-Schur indicator -1",
        "indicator " + rational_text(ch.fs_indicator));
    add("faithfulness", ch.kernel_size == 1, "the action of G on H^1 is faithful",
        "kernel of chi has " + std::to_string(ch.kernel_size) + " element(s)");
  }
  clock.lap("character");

  // l-independence witness.
  {
    EllSummary& es = r.ell;
    es.moduli = o.ells ? *o.ells : default_ell_list(p, o.ell_bound);
    if (es.moduli.empty()) {
      es.status = CheckStatus::Skipped;
      es.reason = "skipped (scale): no odd primes l != p with l^" + std::to_string(p - 1) + " <= " +
                  std::to_string(o.ell_bound) + " have product above 2(p - 1)";
    } else if (!chi.is_integer_valued()) {
      es.status = CheckStatus::Fail;
      es.reason = "chi is not integer-valued";
    } else {
      std::mt19937_64 rng(o.seed);
      const auto values = chi.integer_values();
      std::vector<std::vector<std::uint32_t>> residues;
      bool all_congruent = true;
      for (auto ell : es.moduli) {
        const TorsionBasis tb = torsion_basis(group, ell, o.ell_bound, rng);
        EllWitness w;
        w.ell = ell;
        w.m = tb.m;
        w.field_degree = 2 * tb.m;
        w.jacobian_order = jacobian_order(p, tb.m).str();
        w.span_size = tb.span_size();
        w.expected_span = 1;
        for (std::uint32_t i = 0; i + 1 < p; ++i) w.expected_span *= ell;
        w.samples = tb.samples;
        w.traces = rho_ell_traces(tb, *classes);
        w.congruent = w.span_size == w.expected_span;
        for (std::size_t i = 0; i < values.size(); ++i) {
          const auto l = static_cast<std::int64_t>(ell);
          w.congruent = w.congruent && static_cast<std::int64_t>(w.traces[i]) == ((values[i] % l) + l) % l;
        }
        all_congruent = all_congruent && w.congruent;
        residues.push_back(w.traces);
        es.witnesses.push_back(std::move(w));
        clock.lap("ell_" + std::to_string(ell));
      }
      es.crt = crt_reconstruct(es.moduli, residues, pp - 1);
      es.crt_matches = es.crt == values;
      es.status = pass_if(all_congruent && es.crt_matches);
    }
    std::ostringstream detail;
    if (es.status == CheckStatus::Skipped) {
      detail << es.reason;
    } else {
      detail << "l in {";
      for (std::size_t i = 0; i < es.moduli.size(); ++i) detail << (i ? ", " : "") << es.moduli[i];
      detail << "}: traces congruent to chi " << (std::all_of(es.witnesses.begin(), es.witnesses.end(),
                                                             [](const EllWitness& w) { return w.congruent; })
                                                     ? "on every class"
                                                     : "NOT on every class")
             << "; CRT reconstruction " << (es.crt_matches ? "equals" : "differs from") << " chi";
    }
    r.checks.push_back({"ell_independence", es.status,
                        "the l-torsion representations have integer traces independent of l, equal to chi",
                        detail.str()});
  }

  // Verdict.
  r.verdict = schur_obstruction_verdict(*group, chi);
  add("schur_witness", r.verdict.schur_index_witness == SchurWitness::Two,
      "integer-valued, irreducible and quaternionic: Schur index 2 over Q",
      "integer-valued " + std::string(r.verdict.integer_valued ? "yes" : "no") + ", irreducible " +
          (r.verdict.irreducible ? "yes" : "no") + ", indicator " + rational_text(r.verdict.fs_indicator));
  clock.lap("verdict");

  r.inferences = inference_text();
  r.final_verdict = derive_final_verdict(r);
  if (o.inject_failure) inject_failure(r, *o.inject_failure);
  return r;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

Json rational_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return Json::array({r.numerator(), r.denominator()});
}

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_array() && j.size() == 2) return Rational(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
  throw std::invalid_argument("expected an integer or a [num, den] pair");
}

std::string witness_text(SchurWitness w) { return to_string(w); }

SchurWitness witness_from(const std::string& s) {
  if (s == "2") return SchurWitness::Two;
  if (s == "unknown") return SchurWitness::Unknown;
  throw std::invalid_argument("unknown Schur witness '" + s + "'");
}

LiftVerdict lifts_from(const std::string& s) {
  if (s == "obstructed") return LiftVerdict::Obstructed;
  if (s == "not determined") return LiftVerdict::NotDetermined;
  throw std::invalid_argument("unknown lift verdict '" + s + "'");
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["schema_version"] = r.schema_version;
  j["tool_version"] = r.tool_version;
  j["prime"] = r.p;
  j["options"] = {{"seed", r.seed}, {"ell_bound", r.ell_bound}, {"precision", r.precision}};

  const GroupSummary& g = r.group;
  Json stats = Json::array();
  for (const auto& s : g.order_statistics) stats.push_back({{"order", s.order}, {"count", s.count}});
  j["group"] = {{"order", g.order},
                {"expected_order", g.expected_order},
                {"class_count", g.class_count},
                {"order_statistics", stats},
                {"pgl_kernel_size", g.pgl_kernel_size},
                {"pgl_sharply_3_transitive", g.pgl_sharply_3_transitive},
                {"order_p_classes", g.order_p_classes}};

  const CurveSummary& c = r.curve;
  j["curve"] = {{"genus", c.genus},
                {"points_fp", c.points_fp},
                {"expected_fp", c.expected_fp},
                {"points_fp2", c.points_fp2},
                {"expected_fp2", c.expected_fp2},
                {"hasse_weil",
                 {{"deviation", c.deviation},
                  {"bound", c.bound},
                  {"sharp", c.sharp},
                  {"epsilon", c.epsilon},
                  {"epsilon_from_congruence", c.epsilon_from_congruence}}},
                {"action_pairs_checked", c.action_pairs_checked}};

  const CharacterSummary& ch = r.character;
  Json rows = Json::array();
  for (const auto& row : ch.classes)
    rows.push_back({{"matrix", row.matrix},
                    {"lambda_log", row.lambda_log},
                    {"element_order", row.element_order},
                    {"size", row.size},
                    {"value", rational_json(row.value)}});
  Json wild = Json::array();
  for (const auto& w : ch.wild) wild.push_back({{"u", w.u}, {"lambda_sign", w.lambda_sign}, {"multiplicity", w.multiplicity}});
  j["character"] = {{"classes", rows},
                    {"inner_product", rational_json(ch.inner_product)},
                    {"sylow",
                     {{"n_chi", rational_json(ch.n_chi)},
                      {"trivial_multiplicity", rational_json(ch.sylow_trivial)},
                      {"nontrivial_multiplicity", rational_json(ch.sylow_nontrivial)}}},
                    {"fs_indicator", rational_json(ch.fs_indicator)},
                    {"kernel_size", ch.kernel_size},
                    {"iota_twist", ch.iota_twist},
                    {"wild_multiplicities", wild}};

  const EllSummary& e = r.ell;
  Json wits = Json::array();
  for (const auto& w : e.witnesses)
    wits.push_back({{"ell", w.ell},
                    {"m", w.m},
                    {"field_degree", w.field_degree},
                    {"jacobian_order", w.jacobian_order},
                    {"span_size", w.span_size},
                    {"expected_span", w.expected_span},
                    {"samples", w.samples},
                    {"traces", w.traces},
                    {"congruent", w.congruent}});
  j["ell_witness"] = {{"status", to_string(e.status)}, {"reason", e.reason},      {"moduli", e.moduli},
                      {"witnesses", wits},              {"crt", e.crt},            {"crt_matches", e.crt_matches}};

  Json checks = Json::array();
  for (const auto& ck : r.checks)
    checks.push_back({{"id", ck.id}, {"status", to_string(ck.status)}, {"claim", ck.claim}, {"detail", ck.detail}});
  j["checks"] = checks;
  j["inferences"] = r.inferences;

  const ObstructionVerdict& v = r.verdict;
  j["verdict"] = {{"integer_valued", v.integer_valued},
                  {"irreducible", v.irreducible},
                  {"fs_indicator", rational_json(v.fs_indicator)},
                  {"schur_index_witness", witness_text(v.schur_index_witness)},
                  {"rationality_class_nontrivial", v.rationality_class_nontrivial},
                  {"lifts", to_string(v.lifts)},
                  {"final", r.final_verdict}};
  if (!r.timings.empty()) {
    Json t = Json::array();
    for (const auto& te : r.timings) t.push_back({{"stage", te.stage}, {"microseconds", te.microseconds}});
    j["timings"] = t;
  }
  return j;
}

VerificationReport from_json(const Json& j) {
  VerificationReport r;
  r.schema_version = j.at("schema_version").get<std::string>();
  r.tool_version = j.at("tool_version").get<std::string>();
  r.p = j.at("prime").get<std::uint32_t>();
  r.seed = j.at("options").at("seed").get<std::uint64_t>();
  r.ell_bound = j.at("options").at("ell_bound").get<std::uint64_t>();
  r.precision = j.at("options").at("precision").get<int>();

  const Json& g = j.at("group");
  r.group.order = g.at("order").get<std::uint64_t>();
  r.group.expected_order = g.at("expected_order").get<std::uint64_t>();
  r.group.class_count = g.at("class_count").get<std::uint64_t>();
  for (const auto& s : g.at("order_statistics"))
    r.group.order_statistics.push_back({s.at("order").get<std::uint64_t>(), s.at("count").get<std::uint64_t>()});
  r.group.pgl_kernel_size = g.at("pgl_kernel_size").get<std::uint64_t>();
  r.group.pgl_sharply_3_transitive = g.at("pgl_sharply_3_transitive").get<bool>();
  r.group.order_p_classes = g.at("order_p_classes").get<std::uint64_t>();

  const Json& c = j.at("curve");
  r.curve.genus = c.at("genus").get<int>();
  r.curve.points_fp = c.at("points_fp").get<std::uint64_t>();
  r.curve.expected_fp = c.at("expected_fp").get<std::uint64_t>();
  r.curve.points_fp2 = c.at("points_fp2").get<std::uint64_t>();
  r.curve.expected_fp2 = c.at("expected_fp2").get<std::uint64_t>();
  const Json& hw = c.at("hasse_weil");
  r.curve.deviation = hw.at("deviation").get<std::int64_t>();
  r.curve.bound = hw.at("bound").get<std::int64_t>();
  r.curve.sharp = hw.at("sharp").get<bool>();
  r.curve.epsilon = hw.at("epsilon").get<int>();
  r.curve.epsilon_from_congruence = hw.at("epsilon_from_congruence").get<int>();
  r.curve.action_pairs_checked = c.at("action_pairs_checked").get<std::uint64_t>();

  const Json& ch = j.at("character");
  for (const auto& row : ch.at("classes"))
    r.character.classes.push_back({row.at("matrix").get<std::array<std::uint16_t, 4>>(),
                                   row.at("lambda_log").get<std::uint16_t>(),
                                   row.at("element_order").get<std::uint64_t>(), row.at("size").get<std::uint64_t>(),
                                   rational_from(row.at("value"))});
  r.character.inner_product = rational_from(ch.at("inner_product"));
  r.character.n_chi = rational_from(ch.at("sylow").at("n_chi"));
  r.character.sylow_trivial = rational_from(ch.at("sylow").at("trivial_multiplicity"));
  r.character.sylow_nontrivial = rational_from(ch.at("sylow").at("nontrivial_multiplicity"));
  r.character.fs_indicator = rational_from(ch.at("fs_indicator"));
  r.character.kernel_size = ch.at("kernel_size").get<std::uint64_t>();
  r.character.iota_twist = ch.at("iota_twist").get<bool>();
  for (const auto& w : ch.at("wild_multiplicities"))
    r.character.wild.push_back(
        {w.at("u").get<std::uint32_t>(), w.at("lambda_sign").get<int>(), w.at("multiplicity").get<int>()});

  const Json& e = j.at("ell_witness");
  r.ell.status = check_status_from_string(e.at("status").get<std::string>());
  r.ell.reason = e.at("reason").get<std::string>();
  r.ell.moduli = e.at("moduli").get<std::vector<std::uint32_t>>();
  for (const auto& w : e.at("witnesses"))
    r.ell.witnesses.push_back({w.at("ell").get<std::uint32_t>(), w.at("m").get<int>(), w.at("field_degree").get<int>(),
                               w.at("jacobian_order").get<std::string>(), w.at("span_size").get<std::uint64_t>(),
                               w.at("expected_span").get<std::uint64_t>(), w.at("samples").get<int>(),
                               w.at("traces").get<std::vector<std::uint32_t>>(), w.at("congruent").get<bool>()});
  r.ell.crt = e.at("crt").get<std::vector<std::int64_t>>();
  r.ell.crt_matches = e.at("crt_matches").get<bool>();

  for (const auto& ck : j.at("checks"))
    r.checks.push_back({ck.at("id").get<std::string>(), check_status_from_string(ck.at("status").get<std::string>()),
                        ck.at("claim").get<std::string>(), ck.at("detail").get<std::string>()});
  r.inferences = j.at("inferences").get<std::vector<std::string>>();

  const Json& v = j.at("verdict");
  r.verdict.integer_valued = v.at("integer_valued").get<bool>();
  r.verdict.irreducible = v.at("irreducible").get<bool>();
  r.verdict.fs_indicator = rational_from(v.at("fs_indicator"));
  r.verdict.schur_index_witness = witness_from(v.at("schur_index_witness").get<std::string>());
  r.verdict.rationality_class_nontrivial = v.at("rationality_class_nontrivial").get<bool>();
  r.verdict.lifts = lifts_from(v.at("lifts").get<std::string>());
  r.final_verdict = v.at("final").get<std::string>();
  if (j.contains("timings"))
    for (const auto& t : j.at("timings"))
      r.timings.push_back({t.at("stage").get<std::string>(), t.at("microseconds").get<std::int64_t>()});
  return r;
}

}  // namespace

std::string emit_json(const VerificationReport& report) { return to_json(report).dump(2) + "\n"; }

VerificationReport report_from_json(const std::string& text) {
  try {
    return from_json(Json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Markdown

std::string emit_markdown(const VerificationReport& r) {
  std::ostringstream md;
  const auto mark = [](CheckStatus s) {
    switch (s) {
      case CheckStatus::Pass: return "✓";
      case CheckStatus::Fail: return "✗";
      case CheckStatus::Skipped: return "○";
    }
    return "✗";
  };
  md << "# Roquette curve y^2 = x^" << r.p << " - x over F_" << r.p << "\n\n";
  md << "Verdict: **" << r.final_verdict << "**\n\n";
  md << "schema " << r.schema_version << ", tool " << r.tool_version << ", seed " << r.seed << ", torsion bound "
     << r.ell_bound << ", series precision " << r.precision << "\n\n";

  md << "## Checks\n\n";
  for (const auto& c : r.checks)
    md << "- " << mark(c.status) << " `" << c.id << "` " << c.claim << ". " << c.detail << "\n";

  md << "\n## Group\n\n";
  md << "|G| = " << r.group.order << ", " << r.group.class_count << " conjugacy classes.\n\n";
  md << "| element order | count |\n|---:|---:|\n";
  for (const auto& s : r.group.order_statistics) md << "| " << s.order << " | " << s.count << " |\n";

  md << "\n## Curve\n\n";
  md << "genus " << r.curve.genus << ", #C(F_p) = " << r.curve.points_fp << ", #C(F_{p^2}) = " << r.curve.points_fp2
     << ", deviation from 1 + p^2: " << r.curve.deviation << " (bound " << r.curve.bound << "), eps = "
     << r.curve.epsilon << "\n";

  md << "\n## Character of G on H^1\n\n";
  md << "| class | matrix | lambda_log | order | size | chi |";
  for (const auto& w : r.ell.witnesses) md << " tr mod " << w.ell << " |";
  md << "\n|---:|---|---:|---:|---:|---:|";
  for (std::size_t i = 0; i < r.ell.witnesses.size(); ++i) md << "---:|";
  md << "\n";
  for (std::size_t i = 0; i < r.character.classes.size(); ++i) {
    const auto& row = r.character.classes[i];
    md << "| " << i << " | [" << row.matrix[0] << " " << row.matrix[1] << "; " << row.matrix[2] << " " << row.matrix[3]
       << "] | " << row.lambda_log << " | " << row.element_order << " | " << row.size << " | "
       << rational_text(row.value) << " |";
    for (const auto& w : r.ell.witnesses) md << " " << w.traces[i] << " |";
    md << "\n";
  }
  md << "\n<chi, chi> = " << rational_text(r.character.inner_product) << ", Frobenius-Schur indicator "
     << rational_text(r.character.fs_indicator) << ", Sylow multiplicities (" << rational_text(r.character.sylow_trivial)
     << ", " << rational_text(r.character.sylow_nontrivial) << "), kernel size " << r.character.kernel_size << "\n";

  md << "\n## l-torsion witness\n\n";
  if (r.ell.witnesses.empty()) {
    md << r.ell.reason << "\n";
  } else {
    for (const auto& w : r.ell.witnesses)
      md << "- l = " << w.ell << ": F_{p^" << w.field_degree << "}, #J = " << w.jacobian_order << ", span "
         << w.span_size << "/" << w.expected_span << ", congruent " << (w.congruent ? "yes" : "no") << "\n";
    md << "- CRT reconstruction " << (r.ell.crt_matches ? "equals" : "differs from") << " chi\n";
  }

  md << "\n## Obstruction verdict\n\n";
  md << "- integer-valued: " << (r.verdict.integer_valued ? "yes" : "no") << "\n";
  md << "- irreducible: " << (r.verdict.irreducible ? "yes" : "no") << "\n";
  md << "- Frobenius-Schur indicator: " << rational_text(r.verdict.fs_indicator) << "\n";
  md << "- Schur index witness: " << to_string(r.verdict.schur_index_witness) << "\n";
  md << "- rationality class nontrivial: " << (r.verdict.rationality_class_nontrivial ? "yes" : "no") << "\n";
  md << "- lifting: " << to_string(r.verdict.lifts) << "\n";

  md << "\n## Cited inferences (not machine-checked)\n\n";
  for (const auto& s : r.inferences) md << "- " << s << "\n";

  if (!r.timings.empty()) {
    md << "\n## Timings\n\n";
    for (const auto& t : r.timings) md << "- " << t.stage << ": " << t.microseconds << " us\n";
  }
  return md.str();
}

}  // namespace roquette
