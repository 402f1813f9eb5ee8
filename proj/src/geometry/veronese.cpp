#include <map>

#include "internal.hpp"
#include "tangentia/error.hpp"

namespace tangentia {

namespace {

Monomial add(const Monomial& a, const Monomial& b) {
  Monomial c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

std::vector<std::string> indexed(const char* prefix, std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

}  // namespace

VeroneseEmbedding veronese(std::size_t n, unsigned d) {
  if (n < 1 || d < 1) throw InputError("veronese needs n >= 1 and d >= 1");
  VeroneseEmbedding v{n, d, make_ring(indexed("x", n + 1)), nullptr, monomials_of_degree(n + 1, d),
                      ProjScheme::make(Ideal::zero(make_ring({"z0"})), true)};
  const std::size_t N1 = v.exponents.size();
  v.target = make_ring(indexed("z", N1));
  // Group unordered pairs by the sum of their multi-indices.
  std::map<Monomial, std::vector<std::pair<std::size_t, std::size_t>>> by_sum;
  for (std::size_t a = 0; a < N1; ++a)
    for (std::size_t b = a; b < N1; ++b) by_sum[add(v.exponents[a], v.exponents[b])].emplace_back(a, b);
  std::vector<Polynomial> gens;
  auto z = [&](std::size_t i) { return Polynomial::variable(v.target, i); };
  for (const auto& [sum, pairs] : by_sum) {
    for (std::size_t k = 1; k < pairs.size(); ++k)
      gens.push_back(z(pairs[0].first) * z(pairs[0].second) - z(pairs[k].first) * z(pairs[k].second));
  }
  v.image = ProjScheme::make(Ideal(v.target, std::move(gens)), true);
  return v;
}

Polynomial VeroneseEmbedding::pullback(const Polynomial& linear_form) const {
  if (!same_ring(linear_form.ring(), target)) throw InputError("pullback: form from a different ring");
  const auto c = detail::linear_coefficients(linear_form);
  std::vector<Term> terms;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) terms.push_back(Term{exponents[i], c[i]});
  return Polynomial::from_terms(source, std::move(terms));
}

Polynomial VeroneseEmbedding::pushforward(const Polynomial& form) const {
  if (!same_ring(form.ring(), source)) throw InputError("pushforward: form from a different ring");
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < exponents.size(); ++i) index[exponents[i]] = i;
  std::vector<Rational> c(exponents.size());
  for (const auto& t : form.terms()) {
    auto it = index.find(t.exponents);
    if (it == index.end()) throw InputError("pushforward: form is not homogeneous of degree d");
    c[it->second] = t.coefficient;
  }
  return detail::linear_form(target, c);
}

Point VeroneseEmbedding::map_point(const Point& p) const {
  Point out;
  for (const auto& e : exponents) out.push_back(Polynomial::monomial(source, e).eval(p));
  return out;
}

Point VeroneseEmbedding::differential(const Point& p, const Point& w) const {
  Point out;
  for (const auto& e : exponents) {
    const Polynomial m = Polynomial::monomial(source, e);
    Rational acc = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] != 0) acc += w[i] * m.partial_derivative(i).eval(p);
    out.push_back(acc);
  }
  return out;
}

VeroneseSubscheme veronese_tangency(const VeroneseEmbedding& v, const Polynomial& F) {
  if (!same_ring(F.ring(), v.source)) throw InputError("veronese tangency: form from a different ring");
  if (F.is_zero() || !F.is_homogeneous() || F.total_degree() != static_cast<long>(v.d))
    throw InputError("veronese tangency: expected a nonzero form of degree d");
  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i <= v.n; ++i) partials.push_back(F.partial_derivative(i));
  return {&v, Ideal(v.source, std::move(partials))};
}

WitnessFamily veronese_cone_family(const VeroneseEmbedding& v) {
  // Parameters a1..an (vertex) then coefficients c_beta of a form in n variables.
  const auto forms = monomials_of_degree(v.n, v.d);
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= v.n; ++i) names.push_back("a" + std::to_string(i));
  for (std::size_t k = 0; k < forms.size(); ++k) names.push_back("c" + std::to_string(k));
  Ring params = make_ring(names);
  // Linear forms x_i - a_i x0 in the ring params[x0..xn].
  std::vector<std::string> all = names;
  for (const auto& n : v.source->names()) all.push_back(n);
  Ring big = make_ring(all);
  const std::size_t np = names.size();
  auto x = [&](std::size_t i) { return Polynomial::variable(big, np + i); };
  std::vector<Polynomial> shifted;
  for (std::size_t i = 1; i <= v.n; ++i) shifted.push_back(x(i) - Polynomial::variable(big, i - 1) * x(0));
  Polynomial F(big);
  for (std::size_t k = 0; k < forms.size(); ++k) {
    Polynomial term = Polynomial::variable(big, v.n + k);
    for (std::size_t i = 0; i < v.n; ++i) term = term * shifted[i].pow(forms[k][i]);
    F = F + term;
  }
  // Coefficient of each x^alpha, as a polynomial in the parameters.
  std::map<Monomial, std::vector<Term>> coeffs;
  for (const auto& t : F.terms()) {
    Monomial xa(t.exponents.begin() + static_cast<std::ptrdiff_t>(np), t.exponents.end());
    Monomial pa(t.exponents.begin(), t.exponents.begin() + static_cast<std::ptrdiff_t>(np));
    coeffs[xa].push_back(Term{pa, t.coefficient});
  }
  WitnessFamily fam;
  fam.kind = WitnessFamily::Kind::Parametrized;
  fam.ring = params;
  for (const auto& e : v.exponents) {
    auto it = coeffs.find(e);
    fam.map.push_back(it == coeffs.end() ? Polynomial(params) : Polynomial::from_terms(params, it->second));
  }
  fam.label = "cone sections of v_" + std::to_string(v.d) + "(P^" + std::to_string(v.n) + ")";
  return fam;
}

VeroneseConeResult veronese_cone_stratum(std::size_t n, unsigned d, std::uint64_t seed) {
  VeroneseConeResult res;
  res.n = n;
  res.d = d;
  res.seed = seed;
  const VeroneseEmbedding v = veronese(n, d);
  const long N = static_cast<long>(v.ambient_dim());
  res.ambient_dim = v.ambient_dim();
  res.stratum_dim = binomial(d + n - 1, d).get_si() + static_cast<long>(n) - 1;
  res.span_lower_bound = N - static_cast<long>(n * (n + 1));
  // Generic form in x1..xn: random coefficients, redrawn until its partial
  // derivatives have no common zero in P^{n-1}.
  detail::SmallInts rng(seed);
  const auto forms = monomials_of_degree(n, d);
  Ring inner = PolyRing::make([&] {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
  }());
  std::vector<std::size_t> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = i + 1;
  Polynomial F(v.source);
  for (int attempt = 0;; ++attempt) {
    if (attempt > 50) throw InternalError("could not draw a smooth cone section");
    std::vector<Term> terms;
    for (const auto& e : forms) terms.push_back(Term{e, rng.next()});
    Polynomial f = Polynomial::from_terms(inner, std::move(terms));
    if (f.is_zero()) continue;
    std::vector<Polynomial> partials;
    for (std::size_t i = 0; i < n; ++i) partials.push_back(f.partial_derivative(i));
    if (d > 1 && Ideal(inner, partials).dimension() > 0) continue;
    F = f.remap(v.source, shift);
    break;
  }
  const auto Z = veronese_tangency(v, F);
  const GradedPiece piece = graded_piece_basis(v.source, Z.source_ideal.generators(), d);
  res.span_dim = N - static_cast<long>(piece.dimension());
  res.scheme_span_bound = N - res.span_dim - 1;
  res.violated = res.stratum_dim > res.scheme_span_bound;
  const StratumReport check = stratum_report(v.ambient_dim(), res.span_dim, StratumMode::SchemeSpan,
                                             veronese_cone_family(v), GenericOptions{seed, false});
  res.stratum_dim_checked = check.computed_dim;
  return res;
}

}  // namespace tangentia
