#include <algorithm>

#include "internal.hpp"
#include "tangentia/error.hpp"
#include "tangentia/univariate.hpp"

namespace tangentia {

ProjScheme ProjScheme::make(Ideal ideal, bool assume_saturated) {
  if (!ideal.is_homogeneous()) throw InputError("projective scheme needs homogeneous generators");
  if (assume_saturated) return ProjScheme(std::move(ideal), true);
  return ProjScheme(saturate_irrelevant(ideal), true);
}

long ProjScheme::dim() const {
  const long d = ideal_.dimension() - 1;
  return d < 0 ? -1 : d;
}

Integer ProjScheme::degree() const {
  if (is_empty()) return 0;
  return ideal_.hilbert_series().degree;
}

ProjScheme projective(const Ring& ring, std::vector<Polynomial> gens) {
  return ProjScheme::make(Ideal(ring, std::move(gens)));
}

std::vector<std::string> dual_names(const PolyRing& ring) {
  const std::size_t n = ring.size();
  for (const char* prefix : {"y", "z", "w", "u", "v"}) {
    std::vector<std::string> names;
    bool clash = false;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(prefix + std::to_string(i));
      if (ring.index_of(names.back())) clash = true;
    }
    if (!clash) return names;
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(fresh_variable_name(ring, "dual" + std::to_string(i)));
  return names;
}

namespace {

// Rational solutions of a zero-dimensional affine ideal.
void solve_affine(const Ideal& I, std::vector<Point>& out, std::size_t& irrational) {
  const Ring& ring = I.ring();
  if (I.is_unit()) return;
  const auto g = to_univariate(univariate_eliminant(I, 0), 0);
  const auto roots = rational_roots(g);
  const UPoly sq = squarefree_part(g);
  irrational += static_cast<std::size_t>(sq.degree()) - roots.size();
  for (const auto& r : roots) {
    if (ring->size() == 1) {
      out.push_back({r});
      continue;
    }
    std::vector<std::string> names(ring->names().begin() + 1, ring->names().end());
    Ring rest = PolyRing::make(names, MonomialOrder::grevlex(), ring->characteristic());
    std::vector<Polynomial> images{Polynomial::constant(rest, r)};
    for (std::size_t v = 0; v + 1 < ring->size(); ++v) images.push_back(Polynomial::variable(rest, v));
    std::vector<Polynomial> gens;
    for (const auto& f : I.groebner_basis()) gens.push_back(f.substitute(rest, images));
    std::vector<Point> sub;
    std::size_t sub_irr = 0;
    solve_affine(Ideal(rest, std::move(gens)), sub, sub_irr);
    irrational += sub_irr;
    for (auto& p : sub) {
      p.insert(p.begin(), r);
      out.push_back(std::move(p));
    }
  }
}

}  // namespace

PointSet rational_points(const ProjScheme& Z) {
  const Ring& ring = Z.ring();
  PointSet result;
  if (Z.is_empty()) {
    result.complete = true;
    return result;
  }
  if (Z.dim() > 0) throw UnsupportedError("rational points: scheme is not finite");
  std::size_t irrational = 0;
  Ideal rest = Z.ideal();
  for (std::size_t j = 0; j < ring->size(); ++j) {
    if (rest.is_unit()) break;
    std::vector<std::string> names;
    for (std::size_t v = 0; v < ring->size(); ++v)
      if (v != j) names.push_back(ring->name(v));
    if (names.empty()) {
      result.points.push_back({1});
      break;
    }
    Ring chart = PolyRing::make(names, MonomialOrder::grevlex(), ring->characteristic());
    std::vector<Polynomial> images;
    for (std::size_t v = 0, k = 0; v < ring->size(); ++v)
      images.push_back(v == j ? Polynomial::constant(chart, 1) : Polynomial::variable(chart, k++));
    std::vector<Polynomial> gens;
    for (const auto& g : rest.generators()) gens.push_back(g.substitute(chart, images));
    std::vector<Point> local;
    solve_affine(Ideal(chart, std::move(gens)), local, irrational);
    for (auto& p : local) {
      Point full(ring->size());
      for (std::size_t v = 0, k = 0; v < ring->size(); ++v) full[v] = v == j ? Rational(1) : p[k++];
      result.points.push_back(std::move(full));
    }
    rest = rest + Ideal(ring, {Polynomial::variable(ring, j)});
  }
  result.complete = irrational == 0;
  return result;
}

RationalMatrix zariski_tangent_space(const Ideal& I, const Point& p) {
  const Ring& ring = I.ring();
  const auto& gens = I.groebner_basis();
  RationalMatrix jac(0, ring->size());
  for (const auto& g : gens) {
    std::vector<Rational> row;
    for (std::size_t v = 0; v < ring->size(); ++v) row.push_back(g.partial_derivative(v).eval(p));
    jac.append_row(row);
  }
  if (jac.rows() == 0) {
    RationalMatrix all(0, ring->size());
    for (std::size_t v = 0; v < ring->size(); ++v) {
      std::vector<Rational> e(ring->size());
      e[v] = 1;
      all.append_row(e);
    }
    return all;
  }
  return nullspace(jac);
}

bool forms_contain(const std::vector<Polynomial>& outer, const std::vector<Polynomial>& inner) {
  if (inner.empty()) return true;
  const std::size_t n = inner.front().ring()->size();
  RationalMatrix a(0, n), b(0, n);
  for (const auto& f : outer) a.append_row(detail::linear_coefficients(f));
  for (const auto& f : inner) b.append_row(detail::linear_coefficients(f));
  return row_space_contains(a, b);
}

}  // namespace tangentia
