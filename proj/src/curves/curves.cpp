#include <algorithm>
#include <random>
#include <set>

#include "tangentia/curves.hpp"
#include "tangentia/error.hpp"

namespace tangentia {

namespace {

UPoly nth_derivative(UPoly p, unsigned k) {
  for (unsigned i = 0; i < k; ++i) p = p.derivative();
  return p;
}

UPoly det3(const std::vector<std::vector<UPoly>>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Signed 3x3 minors of a 3x4 matrix: entry i drops column i, sign (-1)^i.
std::vector<UPoly> cofactors(const std::vector<std::vector<UPoly>>& rows) {
  std::vector<UPoly> out;
  for (std::size_t drop = 0; drop < 4; ++drop) {
    std::vector<std::vector<UPoly>> sub(3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 4; ++c)
        if (c != drop) sub[r].push_back(rows[r][c]);
    UPoly d = det3(sub);
    out.push_back(drop % 2 == 0 ? d : UPoly() - d);
  }
  return out;
}

std::vector<UPoly> raw_plane(const ParamCurve& C) {
  std::vector<std::vector<UPoly>> rows(3);
  for (const auto& g : C.components()) {
    rows[0].push_back(g);
    rows[1].push_back(nth_derivative(g, 1));
    rows[2].push_back(nth_derivative(g, 2));
  }
  return cofactors(rows);
}

Ring curve_ring() { return make_ring({"x0", "x1", "x2", "x3"}); }

Polynomial bivariate(const Ring& st, const UPoly& in_s, const UPoly& in_t) {
  return from_univariate(in_s, st, 0) * from_univariate(in_t, st, 1);
}

Polynomial deflate(const Polynomial& p, const Polynomial& factor, unsigned power, const char* what) {
  try {
    return divide_exact(p, factor.pow(power));
  } catch (const InputError&) {
    throw InternalError(std::string("deflation failed for the ") + what + " equation (inflection locus?)");
  }
}

}  // namespace

std::size_t coefficient_rank(const std::vector<UPoly>& components) {
  int top = 0;
  for (const auto& g : components) top = std::max(top, g.degree());
  RationalMatrix m(0, static_cast<std::size_t>(top) + 1);
  for (const auto& g : components) {
    std::vector<Rational> row(static_cast<std::size_t>(top) + 1);
    for (int i = 0; i <= g.degree(); ++i) row[static_cast<std::size_t>(i)] = g.coefficient(i);
    m.append_row(row);
  }
  return rank(m);
}

ParamCurve ParamCurve::make(std::vector<UPoly> components) {
  if (components.size() != 4) throw InputError("a space curve needs exactly four components");
  UPoly common;
  for (const auto& g : components) common = gcd(common, g);
  if (common.is_zero()) throw InputError("curve components are all zero");
  if (common.degree() > 0) throw InputError("curve components share the factor " + common.to_string());
  if (coefficient_rank(components) < 4) throw InputError("curve is planar (it spans less than P^3)");
  return ParamCurve(std::move(components));
}

int ParamCurve::degree() const {
  int d = 0;
  for (const auto& g : gamma_) d = std::max(d, g.degree());
  return d;
}

Point ParamCurve::at(const Rational& t) const {
  Point p;
  for (const auto& g : gamma_) p.push_back(g.eval(t));
  return p;
}

Point ParamCurve::derivative_at(const Rational& t, unsigned order) const {
  Point p;
  for (const auto& g : gamma_) p.push_back(nth_derivative(g, order).eval(t));
  return p;
}

std::vector<Rational> ParamCurve::inflection_parameters() const {
  UPoly g;
  for (const auto& c : raw_plane(*this)) g = gcd(g, c);
  return rational_roots(g);
}

OscPlaneRecord osculating_plane(const ParamCurve& C, std::optional<Rational> t0) {
  const auto raw = raw_plane(C);
  if (!t0) {
    std::size_t last = 4;
    for (std::size_t i = 0; i < 4; ++i)
      if (!raw[i].is_zero()) last = i;
    if (last == 4) throw InputError("osculating plane undefined: curve is planar");
    const UPoly scale = UPoly::constant(1 / raw[last].leading_coefficient());
    Ring ring = make_ring({"t", "x0", "x1", "x2", "x3"});
    OscPlaneRecord rec{t0, {}, Polynomial(ring), {}};
    for (std::size_t i = 0; i < 4; ++i) {
      rec.coefficients.push_back(raw[i] * scale);
      rec.plane = rec.plane + from_univariate(rec.coefficients.back(), ring, 0) * Polynomial::variable(ring, i + 1);
    }
    return rec;
  }
  std::vector<Rational> values;
  for (const auto& c : raw) values.push_back(c.eval(*t0));
  std::size_t last = 4;
  for (std::size_t i = 0; i < 4; ++i)
    if (values[i] != 0) last = i;
  if (last == 4) throw InputError("inflection point at t = " + t0->get_str() + ": osculating plane undefined");
  const Rational scale = 1 / values[last];
  Ring ring = curve_ring();
  OscPlaneRecord rec{t0, {}, Polynomial(ring), C.at(*t0)};
  std::vector<Rational> coeffs;
  for (auto& v : values) {
    coeffs.push_back(v * scale);
    rec.coefficients.push_back(UPoly::constant(coeffs.back()));
  }
  std::vector<Term> terms;
  for (std::size_t i = 0; i < 4; ++i) {
    if (coeffs[i] == 0) continue;
    Monomial m(4, 0);
    m[i] = 1;
    terms.push_back(Term{m, coeffs[i]});
  }
  rec.plane = Polynomial::from_terms(ring, std::move(terms));
  return rec;
}

ProjScheme osculating_dual_curve(const ParamCurve& C) {
  const auto rec = osculating_plane(C);
  const auto duals = dual_names(*curve_ring());
  std::vector<std::string> names{"s", "t"};
  names.insert(names.end(), duals.begin(), duals.end());
  Ring ring = make_ring(names, MonomialOrder::block_order(2));
  const Polynomial s = Polynomial::variable(ring, 0);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < 4; ++i)
    gens.push_back(Polynomial::variable(ring, 2 + i) - s * from_univariate(rec.coefficients[i], ring, 1));
  return ProjScheme::make(eliminate(Ideal(ring, std::move(gens)), 2));
}

BitangencyRecord bitangent_osculating(const ParamCurve& C) {
  const auto raw = raw_plane(C);
  Ring st = make_ring({"s", "t"});
  Polynomial P(st), Q(st);
  for (std::size_t i = 0; i < 4; ++i) {
    P = P + bivariate(st, raw[i], C.components()[i]);
    Q = Q + bivariate(st, raw[i], C.components()[i].derivative());
  }
  if (P.is_zero()) throw InputError("curve is planar");
  const Polynomial diff = Polynomial::variable(st, 1) - Polynomial::variable(st, 0);
  BitangencyRecord rec{{}, {}, deflate(P, diff, 3, "contact"), deflate(Q, diff, 2, "tangency"), {}, 0, {}, 0, false};
  const Polynomial res = resultant(rec.deflated_contact, rec.deflated_tangency, 1);
  rec.resultant = to_univariate(res, 0);
  rec.finiteness_verdict = !rec.resultant.is_zero();
  if (!rec.finiteness_verdict) return rec;
  rec.resultant = rec.resultant.monic();
  const auto roots = rational_roots(rec.resultant);
  rec.rational_s = roots.size();
  rec.irrational_s = static_cast<std::size_t>(squarefree_part(rec.resultant).degree()) - roots.size();
  const auto flexes = C.inflection_parameters();
  Ring tr = make_ring({"t"});
  for (const auto& s : roots) {
    if (std::find(flexes.begin(), flexes.end(), s) != flexes.end()) {
      rec.inflection_s.push_back(s);
      continue;
    }
    std::vector<Polynomial> at_s{Polynomial::constant(tr, s), Polynomial::variable(tr, 0)};
    const UPoly a = to_univariate(rec.deflated_contact.substitute(tr, at_s), 0);
    const UPoly b = to_univariate(rec.deflated_tangency.substitute(tr, at_s), 0);
    std::vector<Rational> ts;
    for (const auto& t : rational_roots(gcd(a, b)))
      if (t != s) {
        ts.push_back(t);
        rec.pairs.emplace_back(s, t);
      }
    rec.extra_locus.emplace_back(s, std::move(ts));
  }
  return rec;
}

WitnessFamily contact_family(const ParamCurve& C, std::size_t points) {
  if (points < 1) throw InputError("contact family needs at least one point");
  std::vector<std::string> names;
  for (std::size_t j = 0; j < points; ++j) names.push_back("s" + std::to_string(j));
  const auto duals = dual_names(*curve_ring());
  names.insert(names.end(), duals.begin(), duals.end());
  WitnessFamily fam;
  fam.kind = WitnessFamily::Kind::Implicit;
  fam.ring = make_ring(names);
  std::vector<Polynomial> y;
  for (std::size_t i = 0; i < 4; ++i) y.push_back(Polynomial::variable(fam.ring, points + i));
  for (std::size_t j = 0; j < points; ++j) {
    Polynomial on(fam.ring), tangent(fam.ring);
    for (std::size_t i = 0; i < 4; ++i) {
      on = on + y[i] * from_univariate(C.components()[i], fam.ring, j);
      tangent = tangent + y[i] * from_univariate(C.components()[i].derivative(), fam.ring, j);
    }
    fam.equations.push_back(on);
    fam.equations.push_back(tangent);
    for (std::size_t k = 0; k < j; ++k)
      fam.nonvanishing.push_back(Polynomial::variable(fam.ring, j) - Polynomial::variable(fam.ring, k));
  }
  fam.label = "planes tangent at " + std::to_string(points) + " points";
  return fam;
}

ResecantReport tangent_resecant_check(const ParamCurve& C, std::size_t samples, std::uint64_t seed) {
  const auto inflections = C.inflection_parameters();
  const auto raw = raw_plane(C);
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long> dist(-10, 10);
  std::set<long> used;
  ResecantReport rep;
  for (int attempt = 0; attempt < 200 && rep.samples.size() < samples; ++attempt) {
    const long v = dist(gen);
    if (!used.insert(v).second) continue;
    const Rational t0(v);
    if (std::find(inflections.begin(), inflections.end(), t0) != inflections.end()) continue;
    bool flat = true;
    for (const auto& c : raw) flat = flat && c.eval(t0) == 0;
    if (flat) continue;
    const Point p = C.at(t0);
    const Point dp = C.derivative_at(t0);
    std::vector<std::vector<UPoly>> rows(3);
    for (std::size_t i = 0; i < 4; ++i) {
      rows[0].push_back(C.components()[i]);
      rows[1].push_back(UPoly::constant(p[i]));
      rows[2].push_back(UPoly::constant(dp[i]));
    }
    UPoly meet;
    const UPoly square = UPoly::linear_power(t0, 2);
    for (const auto& m : cofactors(rows)) {
      auto [q, r] = divmod(m, square);
      if (!r.is_zero()) throw InternalError("tangent minor does not vanish to order 2");
      meet = gcd(meet, q);
    }
    const UPoly line = UPoly::linear_power(t0, 1);
    while (!meet.is_zero() && meet.degree() > 0 && meet.eval(t0) == 0) meet = divmod(meet, line).first;
    if (meet.is_zero() || meet.degree() > 0) rep.no_resecant = false;
    rep.samples.push_back({t0, meet});
  }
  return rep;
}

}  // namespace tangentia
