#include "internal.hpp"
#include "tangentia/error.hpp"

namespace tangentia {

WhitneyReport whitney_a(const ProjScheme& X, const ProjScheme& Y, const Point& y, const GenericOptions& opts) {
  const Ring& ring = X.ring();
  const std::size_t n = ring->size();
  if (!same_ring(Y.ring(), ring)) throw InputError("whitney: X and Y live in different rings");
  if (y.size() != n) throw InputError("whitney: point has the wrong number of coordinates");
  if (!Y.ideal().contains(X.ideal())) throw InputError("whitney: Y is not contained in X");

  // Y empty as a projective scheme means the cone vertex alone.
  const bool vertex = Y.is_empty();
  RationalMatrix tangent(0, n);
  if (vertex) {
    for (const auto& c : y)
      if (c != 0) throw InputError("whitney: point is not on Y");
  } else {
    for (const auto& g : Y.ideal().generators())
      if (g.eval(y) != 0) throw InputError("whitney: point is not on Y");
    tangent = zariski_tangent_space(Y.ideal(), y);
    if (static_cast<long>(tangent.rows()) != Y.cone_dim()) throw InputError("whitney: point is singular on Y");
  }

  const ConormalVariety C = conormal(X, opts);
  Ring dual = PolyRing::make(dual_names(*ring), MonomialOrder::grevlex(), ring->characteristic());
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::constant(dual, y[i]));
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(dual, i));
  std::vector<Polynomial> fiber_gens;
  for (const auto& g : C.ideal.groebner_basis()) {
    Polynomial f = g.substitute(dual, images);
    if (!f.is_zero()) fiber_gens.push_back(std::move(f));
  }

  WhitneyReport rep{y, ProjScheme::make(Ideal(dual, std::move(fiber_gens))), {}, true, std::nullopt, ""};
  for (std::size_t r = 0; r < tangent.rows(); ++r) rep.tangent_perp.push_back(detail::linear_form(dual, tangent.row(r)));

  for (const auto& form : rep.tangent_perp)
    if (!radical_member(form, rep.fiber.ideal())) rep.verdict_classical = false;

  if (!rep.verdict_classical) {
    rep.verdict_scheme = false;
    rep.scheme_method = "implied by the classical verdict";
    return rep;
  }
  if (rep.fiber.is_empty() || forms_contain(detail::degree_one_part(rep.fiber.ideal()), rep.tangent_perp)) {
    rep.verdict_scheme = true;
    rep.scheme_method = "linear span of the fiber";
    return rep;
  }
  if (rep.fiber.dim() > 0) {
    rep.scheme_method = "unsupported: positive-dimensional fiber";
    return rep;
  }
  try {
    const SpanResult span = linear_span(rep.fiber, SpanKind::Tangents);
    rep.verdict_scheme = forms_contain(span.linear_forms, rep.tangent_perp);
    rep.scheme_method = "tangent span at rational support";
  } catch (const UnsupportedError& e) {
    rep.scheme_method = std::string("unsupported: ") + e.what();
  }
  return rep;
}

}  // namespace tangentia
