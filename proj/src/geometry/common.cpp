#include <algorithm>
#include <functional>

#include "internal.hpp"
#include "tangentia/error.hpp"

namespace tangentia::detail {

PolyMatrix jacobian(std::span<const Polynomial> polys) {
  PolyMatrix m;
  for (const auto& f : polys) {
    std::vector<Polynomial> row;
    for (std::size_t v = 0; v < f.ring()->size(); ++v) row.push_back(f.partial_derivative(v));
    m.push_back(std::move(row));
  }
  return m;
}

Polynomial determinant(const Ring& ring, const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(ring, 1);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Polynomial total(ring);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    PolyMatrix sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      sub.push_back(std::move(row));
    }
    Polynomial term = m[0][c] * determinant(ring, sub);
    total = (c % 2 == 0) ? total + term : total - term;
  }
  return total;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Polynomial> minors(const Ring& ring, const PolyMatrix& m, std::size_t k,
                               const std::vector<std::size_t>& fixed_rows) {
  std::vector<Polynomial> out;
  if (m.empty() || k == 0) return out;
  const std::size_t cols = m.front().size();
  std::vector<std::size_t> free_rows;
  for (std::size_t r = 0; r < m.size(); ++r)
    if (std::find(fixed_rows.begin(), fixed_rows.end(), r) == fixed_rows.end()) free_rows.push_back(r);
  if (fixed_rows.size() > k) return out;
  for (const auto& rs : subsets(free_rows.size(), k - fixed_rows.size())) {
    std::vector<std::size_t> rows;
    for (auto i : rs) rows.push_back(free_rows[i]);
    rows.insert(rows.end(), fixed_rows.begin(), fixed_rows.end());
    for (const auto& cs : subsets(cols, k)) {
      PolyMatrix sub;
      for (auto r : rows) {
        std::vector<Polynomial> row;
        for (auto c : cs) row.push_back(m[r][c]);
        sub.push_back(std::move(row));
      }
      Polynomial det = determinant(ring, sub);
      if (!det.is_zero()) out.push_back(std::move(det));
    }
  }
  return out;
}

std::vector<Rational> linear_coefficients(const Polynomial& form) {
  std::vector<Rational> c(form.ring()->size());
  for (const auto& t : form.terms()) {
    long deg = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      if (t.exponents[i] != 0) {
        deg += t.exponents[i];
        var = i;
      }
    if (deg != 1) throw InputError("expected a linear form, got " + form.to_string());
    c[var] = t.coefficient;
  }
  return c;
}

Polynomial linear_form(const Ring& ring, const std::vector<Rational>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Monomial m(ring->size(), 0);
    m[i] = 1;
    terms.push_back(Term{std::move(m), coeffs[i]});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

std::vector<Polynomial> linear_basis(const Ring& ring, const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(0, ring->size());
  for (const auto& r : rows) m.append_row(r);
  const auto form = rref(std::move(m), ring->characteristic());
  std::vector<Polynomial> out;
  for (std::size_t r = 0; r < form.reduced.rows(); ++r) out.push_back(linear_form(ring, form.reduced.row(r)));
  return out;
}

std::vector<Polynomial> degree_one_part(const Ideal& I) {
  std::vector<std::vector<Rational>> rows;
  if (I.is_unit()) {
    for (std::size_t v = 0; v < I.ring()->size(); ++v) {
      std::vector<Rational> e(I.ring()->size());
      e[v] = 1;
      rows.push_back(std::move(e));
    }
    return linear_basis(I.ring(), rows);
  }
  for (const auto& g : I.groebner_basis())
    if (g.total_degree() == 1 && g.is_homogeneous()) rows.push_back(linear_coefficients(g));
  return linear_basis(I.ring(), rows);
}

Polynomial random_combination(const Ring& ring, std::span<const Polynomial> polys, SmallInts& rng) {
  Polynomial out(ring);
  for (const auto& p : polys) out = out + p.scaled(rng.next());
  return out;
}

bool nonzerodivisor(const Ideal& I, const Polynomial& h) {
  if (I.normal_form(h).is_zero()) return false;
  return quotient(I, h).same_ideal(I);
}

std::vector<Polynomial> generic_equations(const Ideal& I, std::size_t c, SmallInts& rng) {
  const auto& gens = I.generators();
  if (gens.size() == c) return gens;
  if (gens.size() < c) throw InputError("fewer generators than the codimension");
  const Ring& ring = I.ring();
  // Prefer c of the generators themselves: sparse equations keep the minors small.
  constexpr std::size_t kSubsetTrials = 64;
  std::size_t tried = 0;
  for (const auto& pick : subsets(gens.size(), c)) {
    if (++tried > kSubsetTrials) break;
    std::vector<Polynomial> eqs;
    for (auto i : pick) eqs.push_back(gens[i]);
    const auto ms = minors(ring, jacobian(eqs), c);
    if (!ms.empty() && nonzerodivisor(I, random_combination(ring, ms, rng))) return eqs;
  }
  long top = 0;
  for (const auto& g : gens) top = std::max(top, g.total_degree());
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < c; ++i) {
    // Lower-degree generators are lifted by powers of a random linear form.
    std::vector<Rational> l(ring->size());
    for (auto& v : l) v = rng.next();
    const Polynomial L = linear_form(ring, l);
    Polynomial comb(ring);
    for (const auto& g : gens) comb = comb + (g * L.pow(static_cast<unsigned>(top - g.total_degree()))).scaled(rng.next());
    out.push_back(std::move(comb));
  }
  return out;
}

Polynomial singular_witness(const ProjScheme& X, const std::vector<Polynomial>& eqs, std::size_t c,
                            SmallInts& rng) {
  const Ring& ring = X.ring();
  const auto J = jacobian(eqs);
  const auto ms = minors(ring, J, c);
  for (int attempt = 0; attempt < 20; ++attempt) {
    Polynomial h = X.ideal().normal_form(random_combination(ring, ms, rng));
    if (nonzerodivisor(X.ideal(), h)) return h;
  }
  throw InputError("the chosen equations never cut the variety transversally (non-reduced input?)");
}

}  // namespace tangentia::detail
