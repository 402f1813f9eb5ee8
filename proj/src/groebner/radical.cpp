#include <map>

#include "tangentia/deadline.hpp"
#include "tangentia/error.hpp"
#include "tangentia/groebner.hpp"
#include "tangentia/linalg.hpp"
#include "tangentia/univariate.hpp"

namespace tangentia {

namespace {

// Seidenberg: a zero-dimensional ideal plus the squarefree parts of its
// univariate eliminants is radical.
Ideal seidenberg_radical(const Ideal& I) {
  std::vector<Polynomial> gens = I.groebner_basis();
  for (std::size_t v = 0; v < I.ring()->size(); ++v) {
    const UPoly g = to_univariate(univariate_eliminant(I, v), v);
    gens.push_back(from_univariate(squarefree_part(g), I.ring(), v));
  }
  return Ideal(I.ring(), std::move(gens));
}

}  // namespace

Polynomial univariate_eliminant(const Ideal& I, std::size_t var) {
  const Ring& ring = I.ring();
  if (I.is_unit()) return Polynomial::constant(ring, 1);
  if (I.dimension() != 0)
    throw UnsupportedError("univariate eliminant needs a zero-dimensional ideal");
  // Normal forms of successive powers until they become linearly dependent.
  std::map<Monomial, std::size_t> columns;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
  Polynomial x = Polynomial::variable(ring, var);
  Polynomial power = I.normal_form(Polynomial::constant(ring, 1));
  for (unsigned k = 0;; ++k) {
    check_deadline();
    std::vector<std::pair<std::size_t, Rational>> row;
    for (const auto& t : power.terms()) {
      auto [it, inserted] = columns.emplace(t.exponents, columns.size());
      row.emplace_back(it->second, t.coefficient);
    }
    rows.push_back(std::move(row));
    RationalMatrix m(columns.size(), rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j)
      for (const auto& [c, v] : rows[j]) m(c, j) = v;
    const RationalMatrix kernel = nullspace(m);
    if (kernel.rows() > 0) {
      std::vector<Rational> coeffs = kernel.row(0);
      return from_univariate(UPoly(std::move(coeffs)), ring, var).monic();
    }
    power = I.normal_form(power * x);
  }
}

Ideal radical_zero_dim(const Ideal& I) {
  const Ring& ring = I.ring();
  if (I.is_unit()) return I;
  const long d = I.dimension();
  if (!I.is_homogeneous()) {
    if (d != 0) throw UnsupportedError("radical: only finite schemes are supported");
    return seidenberg_radical(I);
  }
  if (d > 1) throw UnsupportedError("radical: only finite projective schemes are supported");
  std::vector<Polynomial> vars;
  for (std::size_t v = 0; v < ring->size(); ++v) vars.push_back(Polynomial::variable(ring, v));
  if (d == 0) return Ideal(ring, vars);
  // Work chart by chart: points with x_0 = ... = x_{j-1} = 0 and x_j = 1.
  std::optional<Ideal> result;
  Ideal rest = I;
  for (std::size_t j = 0; j < ring->size(); ++j) {
    if (rest.is_unit()) break;
    std::vector<std::string> names;
    for (std::size_t v = 0; v < ring->size(); ++v)
      if (v != j) names.push_back(ring->name(v));
    Ring chart = PolyRing::make(names, MonomialOrder::grevlex(), ring->characteristic());
    std::vector<Polynomial> images;
    for (std::size_t v = 0, k = 0; v < ring->size(); ++v)
      images.push_back(v == j ? Polynomial::constant(chart, 1) : Polynomial::variable(chart, k++));
    std::vector<Polynomial> affine;
    for (const auto& g : rest.generators()) affine.push_back(g.substitute(chart, images));
    Ideal local(chart, std::move(affine));
    if (!local.is_unit()) {
      const Ideal rad = seidenberg_radical(local);
      // Homogenize a degree-compatible Gröbner basis by x_j.
      std::vector<Polynomial> back;
      for (const auto& g : rad.groebner_basis()) {
        const long deg = g.total_degree();
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
          Monomial e(ring->size(), 0);
          long td = 0;
          for (std::size_t v = 0, k = 0; v < ring->size(); ++v) {
            if (v == j) continue;
            e[v] = t.exponents[k++];
            td += e[v];
          }
          e[j] = static_cast<Exponent>(deg - td);
          terms.push_back(Term{std::move(e), t.coefficient});
        }
        back.push_back(Polynomial::from_terms(ring, std::move(terms)));
      }
      for (std::size_t v = 0; v < j; ++v) back.push_back(vars[v]);
      Ideal piece(ring, std::move(back));
      result = result ? intersect(*result, piece) : piece;
    }
    rest = rest + Ideal(ring, {vars[j]});
  }
  if (!result) return Ideal(ring, vars);
  return Ideal(ring, result->groebner_basis());
}

}  // namespace tangentia
