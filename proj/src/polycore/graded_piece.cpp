#include <map>

#include "tangentia/error.hpp"
#include "tangentia/linalg.hpp"
#include "tangentia/polycore.hpp"

namespace tangentia {

GradedPiece graded_piece_basis(const Ring& ring,
                               std::span<const Polynomial> gens, unsigned d) {
  const std::size_t n = ring->size();
  GradedPiece piece;
  piece.degree = d;
  piece.ambient_dim = binomial(n - 1 + d, d);

  std::vector<Polynomial> products;
  for (const auto& g : gens) {
    if (!same_ring(g.ring(), ring)) throw InputError("generator from another ring");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous())
      throw InputError("graded_piece_basis needs homogeneous generators, got " +
                       g.to_string());
    const long deg = g.total_degree();
    if (deg > static_cast<long>(d)) continue;
    for (const auto& m : monomials_of_degree(n, d - static_cast<unsigned>(deg)))
      products.push_back(g.multiply_monomial(m, 1));
  }
  if (products.empty()) return piece;

  // Columns ordered by descending monomial so pivots are leading monomials.
  auto cmp = [&](const Monomial& a, const Monomial& b) {
    return ring->compare(a, b) > 0;
  };
  std::map<Monomial, std::size_t, decltype(cmp)> column(cmp);
  for (const auto& p : products)
    for (const auto& t : p.terms()) column.emplace(t.exponents, 0);
  std::vector<Monomial> monomials;
  std::size_t next = 0;
  for (auto& [m, idx] : column) {
    idx = next++;
    monomials.push_back(m);
  }

  RationalMatrix matrix(products.size(), monomials.size());
  for (std::size_t r = 0; r < products.size(); ++r)
    for (const auto& t : products[r].terms())
      matrix(r, column.at(t.exponents)) = t.coefficient;

  const auto form = rref(std::move(matrix), ring->characteristic());
  for (std::size_t r = 0; r < form.pivots.size(); ++r) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < monomials.size(); ++c)
      if (form.reduced(r, c) != 0) terms.push_back(Term{monomials[c], form.reduced(r, c)});
    piece.basis.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return piece;
}

}  // namespace tangentia
