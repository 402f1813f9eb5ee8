// Acceptance run: one PASS/FAIL line per criterion, exit status 0 when all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include <json.hpp>

#include "../support/suites.hpp"
#include "tangentia/boundary.hpp"
#include "tangentia/error.hpp"
#include "tangentia/cli.hpp"

using namespace tangentia;
using json = nlohmann::json;

namespace {

// Pinned limits.
constexpr double kDualSeconds = 60;
constexpr double kBidualSeconds = 600;
constexpr double kExampleSeconds = 30;
constexpr double kVertexSeconds = 10;
constexpr double kChainSeconds = 120;
constexpr double kStrataSeconds = 600;
constexpr double kBitangentSeconds = 120;
constexpr double kBoundarySeconds = 600;
constexpr double kEngineSeconds = 300;
constexpr double kBoundaryFraction = 0.99;
constexpr double kBoundaryTol = 1e-6;
constexpr std::size_t kBoundarySamples = 2000;
constexpr std::uint64_t kSeed = 42;

struct Verdict {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Ideal ideal_in(const Ring& r, const char* text) { return Ideal(r, parse_polynomial_list(r, text)); }

const cli::CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : cli::builtin_corpus())
    if (e.name == name) return e;
  throw InputError("no corpus entry " + name);
}

std::vector<json> run_entry(const std::string& name) {
  cli::RunOptions opts;
  opts.seed = kSeed;
  const auto res = cli::run_source(corpus_entry(name).script, opts);
  if (res.exit_code != 0) throw InputError(name + ": " + res.error);
  std::vector<json> out;
  for (const auto& r : res.records) out.push_back(json::parse(r.json));
  return out;
}

// ---- criteria ----------------------------------------------------------------

Verdict duals() {
  auto r3 = make_ring({"x0", "x1", "x2"});
  auto r4 = make_ring({"x0", "x1", "x2", "x3"});
  std::string detail;
  bool ok = true;
  auto timed = [&](const char* name, const std::function<bool()>& f) {
    const auto t0 = Clock::now();
    const bool good = f();
    const double s = seconds_since(t0);
    ok = ok && good && s < kDualSeconds;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s%s %s %.2fs", detail.empty() ? "" : ", ", name, good ? "ok" : "WRONG", s);
    detail += buf;
  };
  timed("conic", [&] {
    const ProjScheme D = dual_variety(projective(r3, parse_polynomial_list(r3, "x0*x2 - x1^2")));
    return D.ideal().same_ideal(ideal_in(D.ring(), "y1^2 - 4*y0*y2"));
  });
  timed("twisted cubic", [&] {
    const ProjScheme D =
        dual_variety(projective(r4, parse_polynomial_list(r4, "x0*x2 - x1^2, x1*x3 - x2^2, x0*x3 - x1*x2")));
    // Discriminant of the binary cubic y0 + y1 t + y2 t^2 + y3 t^3.
    const Ideal disc = ideal_in(D.ring(), "y1^2*y2^2 - 4*y0*y2^3 - 4*y1^3*y3 + 18*y0*y1*y2*y3 - 27*y0^2*y3^2");
    return D.ideal().same_ideal(disc) && D.dim() == 2 && D.degree() == 4;
  });
  timed("v2(P^2)", [&] {
    const ProjScheme D = dual_variety(veronese(2, 2).image);
    // 4 det of the symmetric matrix of the conic sum y_a x^a.
    const Ideal det = ideal_in(D.ring(), "4*y0*y3*y5 + y1*y2*y4 - y0*y4^2 - y3*y2^2 - y5*y1^2");
    return D.ideal().same_ideal(det) && D.dim() == 4 && D.degree() == 3;
  });
  return {ok, detail};
}

Verdict biduals() {
  auto r3 = make_ring({"x0", "x1", "x2"});
  auto r4 = make_ring({"x0", "x1", "x2", "x3"});
  const auto t0 = Clock::now();
  const std::pair<const char*, ProjScheme> cases[] = {
      {"conic", projective(r3, parse_polynomial_list(r3, "x0*x2 - x1^2"))},
      {"twisted cubic", projective(r4, parse_polynomial_list(r4, "x0*x2 - x1^2, x1*x3 - x2^2, x0*x3 - x1*x2"))},
      {"quadric", projective(r4, parse_polynomial_list(r4, "x0*x3 - x1*x2"))},
      {"v2(P^2)", veronese(2, 2).image},
  };
  bool ok = true;
  std::string detail;
  for (const auto& [name, X] : cases) {
    const bool good = bidual_check(X);
    ok = ok && good;
    detail += std::string(detail.empty() ? "" : ", ") + name + (good ? " ok" : " FAILED");
  }
  const double s = seconds_since(t0);
  char buf[48];
  std::snprintf(buf, sizeof buf, "; total %.2fs", s);
  return {ok && s < kBidualSeconds, detail + buf};
}

Verdict example_cone() {
  const auto t0 = Clock::now();
  const VeroneseConeResult v = veronese_cone_stratum(3, 4, kSeed);
  const auto emb = veronese(3, 4);
  const SpanResult fermat =
      linear_span(veronese_tangency(emb, parse_polynomial(emb.source, "x1^4 + x2^4 + x3^4")), SpanKind::Scheme);
  const double s = seconds_since(t0);
  const bool ok = v.ambient_dim == 34 && v.stratum_dim == 17 && v.stratum_dim_checked == 17 && v.span_dim == 22 &&
                  fermat.proj_dim == 22 && v.span_lower_bound == 22 && v.scheme_span_bound == 11 && v.violated &&
                  s < kExampleSeconds;
  char buf[200];
  std::snprintf(buf, sizeof buf, "N=%zu stratum=%ld (checked %ld) span=%ld (Fermat %ld) bound=%ld, %ld > %ld %s; %.2fs",
                v.ambient_dim, v.stratum_dim, v.stratum_dim_checked, v.span_dim, fermat.proj_dim, v.span_lower_bound,
                v.stratum_dim, v.scheme_span_bound, v.violated ? "violated" : "not violated", s);
  return {ok, buf};
}

Verdict example_vertex() {
  const auto t0 = Clock::now();
  const auto emb = veronese(3, 4);
  const VeroneseSubscheme Z = veronese_tangency(emb, parse_polynomial(emb.source, "x1^4 + x2^4 + x3^4"));
  const SpanResult tan = linear_span(Z, SpanKind::Tangents);
  const Point vertex{1, 0, 0, 0};
  const Point x = emb.map_point(vertex);

  // T_{Z,x}: source tangent vectors of Z pushed forward, together with x.
  RationalMatrix tz(0, x.size());
  tz.append_row(x);
  const RationalMatrix src = zariski_tangent_space(Z.source_ideal, vertex);
  for (std::size_t i = 0; i < src.rows(); ++i) tz.append_row(emb.differential(vertex, src.row(i)));

  // T_{X,x} from the equations of v_4(P^3) in P^34: the kernel of their Jacobian.
  const auto& gens = emb.image.ideal().generators();
  RationalMatrix jac(0, x.size());
  for (const auto& g : gens) {
    std::vector<Rational> row;
    for (std::size_t j = 0; j < x.size(); ++j) row.push_back(g.partial_derivative(j).eval(x));
    jac.append_row(row);
  }
  const RationalMatrix tx = nullspace(jac);
  const bool contained = row_space_contains(tx, tz);
  const double s = seconds_since(t0);
  const bool support = tan.support.size() == 1 && tan.support.front() == vertex;
  const bool ok = tan.proj_dim == 3 && support && contained && tx.rows() == 4 && s < kVertexSeconds;
  char buf[200];
  std::snprintf(buf, sizeof buf, "tangent span dim %ld (n = 3) at the vertex; dim T_Z = %zu <= dim T_X = %zu, contained %s; %.2fs",
                tan.proj_dim, rank(tz) - 1, tx.rows() - 1, contained ? "yes" : "no", s);
  return {ok, buf};
}

Verdict span_chain() {
  const auto t0 = Clock::now();
  const auto records = run_entry("span-chain");
  const auto ring = make_ring({"x0", "x1", "x2", "x3"});
  auto forms = [&](const json& rec) {
    std::vector<Polynomial> out;
    for (const auto& f : rec["result"]["linear_forms"]) out.push_back(parse_polynomial(ring, f.get<std::string>()));
    return out;
  };
  int schemes = 0, good = 0;
  std::string bad;
  for (std::size_t i = 1; i + 3 < records.size() + 1; i += 4) {
    if (records[i]["kind"] != "ideal") break;
    std::string gens;
    for (const auto& g : records[i]["result"]["generators"]) gens += (gens.empty() ? "" : ", ") + g.get<std::string>();
    const ProjScheme Z = ProjScheme::make(ideal_in(ring, gens.c_str()));
    const auto red = forms(records[i + 1]), tan = forms(records[i + 2]), sch = forms(records[i + 3]);
    const bool chain = forms_contain(red, tan) && forms_contain(tan, sch);
    const bool equal = forms_contain(sch, red);
    const bool reduced = radical_zero_dim(Z.ideal()).same_ideal(Z.ideal());
    ++schemes;
    if (chain && equal == reduced) ++good;
    else if (bad.empty()) bad = " first failure: " + gens;
  }
  const double s = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d/%d corpus schemes nested, equal exactly when reduced; %.2fs", good, schemes, s);
  return {schemes >= 10 && good == schemes && s < kChainSeconds, buf + bad};
}

Verdict theorem_bounds() {
  const auto t0 = Clock::now();
  int reports = 0, satisfied = 0;
  std::string detail;
  for (const char* name : {"conic-stratum", "twisted-cubic-bitangent-stratum", "veronese-surface-strata"}) {
    for (const auto& rec : run_entry(name)) {
      if (rec["kind"] != "stratum") continue;
      const auto& res = rec["result"];
      const long dim = res["computed_dim"], bound = res["bound"];
      const bool good = res["satisfied"] == true && dim <= bound && res["exact"] == true;
      ++reports;
      satisfied += good;
      detail += (detail.empty() ? "" : ", ") + res["mode"].get<std::string>() + " r=" + std::to_string(res["r"].get<long>()) +
                " " + std::to_string(dim) + "<=" + std::to_string(bound);
    }
  }
  const double s = seconds_since(t0);
  char buf[64];
  std::snprintf(buf, sizeof buf, "; %d/%d satisfied; %.2fs", satisfied, reports, s);
  return {reports >= 5 && reports == satisfied && s < kStrataSeconds, detail + buf};
}

UPoly curve_component(const char* text) {
  auto r = make_ring({"t"});
  return to_univariate(parse_polynomial(r, text), 0);
}

Verdict bitangency() {
  const auto t0 = Clock::now();
  const auto cubic = ParamCurve::make(
      {curve_component("1"), curve_component("t"), curve_component("t^2"), curve_component("t^3")});
  const auto quartic = ParamCurve::make(
      {curve_component("1"), curve_component("t"), curve_component("t^3"), curve_component("t^4")});
  const BitangencyRecord a = bitangent_osculating(cubic);
  const BitangencyRecord b = bitangent_osculating(quartic);
  // Oracle: Sylvester resultant in t of the deflated pair, made monic in s.
  const Polynomial res = resultant(b.deflated_contact, b.deflated_tangency, 1);
  const UPoly oracle_res = to_univariate(res, 0).monic();
  const bool oracle_match = oracle_res == b.resultant && b.resultant.to_string("s") == "s^3";
  const std::size_t oracle_rational = rational_roots(oracle_res).size();
  const double s = seconds_since(t0);
  const bool ok = a.pairs.empty() && a.finiteness_verdict && !b.resultant.is_zero() && oracle_match &&
                  b.rational_s == oracle_rational && b.finiteness_verdict && s < kBitangentSeconds;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "twisted cubic %zu pairs; quartic resultant %s (oracle %s), %zu rational roots (%zu at flexes); %.2fs",
                a.pairs.size(), b.resultant.to_string("s").c_str(), oracle_res.to_string("s").c_str(), oracle_rational,
                b.inflection_s.size(), s);
  return {ok, buf};
}

// Dimension of the secant variety from the rank of the secant map
// (s, t, a, b) -> a g(s) + b g(t) at a seeded rational point.
long secant_dim_oracle(const ParamCurve& C) {
  oracle::Generator gen(kSeed);
  const Rational s(gen.coefficient(5), 3), t(gen.coefficient(5), 7), a(gen.coefficient(5)), b(gen.coefficient(5));
  const Point gs = C.at(s), gt = C.at(t), ds = C.derivative_at(s), dt = C.derivative_at(t);
  RationalMatrix J(0, 4);
  std::vector<Rational> row(4);
  for (int i = 0; i < 4; ++i) row[i] = a * ds[i];
  J.append_row(row);
  for (int i = 0; i < 4; ++i) row[i] = b * dt[i];
  J.append_row(row);
  J.append_row(gs);
  J.append_row(gt);
  return static_cast<long>(rank(J)) - 1;
}

Verdict boundary_pipeline() {
  const auto t0 = Clock::now();
  auto r = make_ring({"w", "x", "y", "z"});
  const ProjScheme X = projective(r, parse_polynomial_list(r, "x^2 + y^2 - w^2, z*w - x^2 + y^2"));
  const auto C = ParamCurve::make({curve_component("(1+t^2)^2"), curve_component("(1-t^2)*(1+t^2)"),
                                   curve_component("2*t*(1+t^2)"), curve_component("(1-t^2)^2 - 4*t^2")});
  BoundaryReport rep = boundary_candidates(X, curve_witnesses(C, 2), 2);
  const long oracle_dim = secant_dim_oracle(C);
  const bool secants = rep.r_of_X == 1 && rep.secant_dims.size() == 2 && rep.secant_dims[1].dim == oracle_dim;
  std::vector<ProjScheme> vars;
  for (const auto& c : rep.candidates) vars.push_back(c.variety);
  NumericCheckOptions opts;
  opts.samples = kBoundarySamples;
  opts.tol = kBoundaryTol;
  opts.seed = kSeed;
  const NumericCheckReport num = numeric_boundary_check(X, 0, vars, opts);
  const double s = seconds_since(t0);
  const bool ok = secants && !rep.candidates.empty() && num.sample_points == kBoundarySamples &&
                  num.fraction >= kBoundaryFraction && s < kBoundarySeconds;
  char buf[220];
  std::snprintf(buf, sizeof buf,
                "r = %ld, dim sigma_2 = %ld (join oracle %ld), %zu candidates, fraction %.4f of %zu hull points at tol %g; %.2fs",
                rep.r_of_X, rep.secant_dims.size() > 1 ? rep.secant_dims[1].dim : -1, oracle_dim, rep.candidates.size(),
                num.fraction, num.boundary_points, kBoundaryTol, s);
  return {ok, buf};
}

Verdict engine_suites() {
  const auto t0 = Clock::now();
  int members = 0;
  const auto m = oracle::membership_suite(20240901, 100, &members);
  const auto sat = oracle::saturation_suite(77, 50);
  const auto ord = oracle::order_suite(5, 1000);
  const auto sp = oracle::spair_suite();
  // S-pairs of every basis the corpus reports, parsed back.
  int corpus_bases = 0, corpus_ok = 0;
  for (const char* name : {"groebner-basics"}) {
    const auto records = run_entry(name);
    std::map<std::string, Ring> rings;
    Ring current;
    for (const auto& rec : records) {
      if (rec["kind"] == "ring") {
        std::vector<std::string> names = rec["result"]["variables"];
        const std::string order = rec["result"]["order"];
        current = make_ring(names, order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex());
        continue;
      }
      if (rec["kind"] != "gb") continue;
      const Ring ring = make_ring(current->names(), rec["result"]["order"] == "lex" ? MonomialOrder::lex()
                                                                                   : MonomialOrder::grevlex());
      std::vector<Polynomial> G;
      for (const auto& g : rec["result"]["basis"]) G.push_back(parse_polynomial(ring, g.get<std::string>()));
      ++corpus_bases;
      corpus_ok += oracle::s_pairs_reduce(G);
    }
  }
  const double s = seconds_since(t0);
  const bool ok = m.ok() && m.total == 100 && members > 0 && members < 100 && sat.ok() && sat.total == 50 && ord.ok() &&
                  ord.total == 1000 && sp.ok() && corpus_bases > 0 && corpus_ok == corpus_bases && s < kEngineSeconds;
  char buf[240];
  std::snprintf(buf, sizeof buf,
                "membership %d/%d (%d members), saturation %d/%d, order axioms %d/%d, S-pairs %d/%d + corpus %d/%d; %.2fs",
                m.passed, m.total, members, sat.passed, sat.total, ord.passed, ord.total, sp.passed, sp.total, corpus_ok,
                corpus_bases, s);
  return {ok, buf};
}

Verdict determinism() {
  const auto t0 = Clock::now();
  cli::RunOptions opts;
  opts.seed = kSeed;
  const auto a = cli::run_corpus(opts);
  const auto b = cli::run_corpus(opts);
  std::size_t lines = 0, equal = 0, passed = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    passed += a[i].passed && b[i].passed;
    const auto& ra = a[i].run.records;
    const auto& rb = b[i].run.records;
    lines += std::max(ra.size(), rb.size());
    for (std::size_t k = 0; k < ra.size() && k < rb.size(); ++k)
      equal += cli::strip_timing(ra[k].json) == cli::strip_timing(rb[k].json);
  }
  const double s = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu/%zu records identical without timings, corpus %zu/%zu passing; %.2fs", equal, lines,
                passed, a.size(), s);
  return {a.size() == b.size() && lines > 0 && equal == lines && passed == a.size(), buf};
}

}  // namespace

int main() {
  const std::pair<const char*, Verdict (*)()> criteria[] = {
      {"dual-variety golden values", duals},
      {"biduality", biduals},
      {"Veronese cone stratum (n=3, d=4)", example_cone},
      {"tangent span at the cone vertex", example_vertex},
      {"span-chain property suite", span_chain},
      {"stratum dimension bounds", theorem_bounds},
      {"bitangent osculating planes", bitangency},
      {"algebraic boundary pipeline", boundary_pipeline},
      {"engine property suites", engine_suites},
      {"determinism", determinism},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += !v.pass;
    std::printf("criterion %2d %-36s %s  %s\n", index++, name, v.pass ? "PASS" : "FAIL", v.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
