#include "internal.hpp"
#include "tangentia/error.hpp"

namespace tangentia {

namespace {

using detail::SmallInts;

struct Incidence {
  Ring ring;                     // [t?] x0..xN y0..yN
  std::size_t offset;            // index of x0
  std::vector<std::size_t> x_map;  // source variable -> big ring
  std::vector<Polynomial> y;
};

Incidence make_incidence(const Ring& source, bool with_t, MonomialOrder order) {
  std::vector<std::string> names(source->names());
  const auto duals = dual_names(*source);
  names.insert(names.end(), duals.begin(), duals.end());
  if (with_t) names.insert(names.begin(), fresh_variable_name(*PolyRing::make(names), "t"));
  Incidence inc;
  inc.ring = PolyRing::make(names, order, source->characteristic());
  inc.offset = with_t ? 1 : 0;
  const std::size_t n = source->size();
  for (std::size_t i = 0; i < n; ++i) inc.x_map.push_back(inc.offset + i);
  for (std::size_t i = 0; i < n; ++i) inc.y.push_back(Polynomial::variable(inc.ring, inc.offset + n + i));
  return inc;
}

long codimension(const ProjScheme& X) {
  return static_cast<long>(X.ring()->size()) - X.cone_dim();
}

// Generators whose zero set, off V(witness), is the conormal total space.
struct ConormalSystem {
  Incidence inc;
  std::vector<Polynomial> gens;
  Polynomial witness;  // saturate with respect to this (Rabinowitsch)
  std::optional<Ideal> full_locus;
};

ConormalSystem conormal_system(const ProjScheme& X, const GenericOptions& opts, bool with_t,
                               MonomialOrder order) {
  if (X.is_empty()) throw InputError("conormal variety of the empty scheme");
  const Ring& src = X.ring();
  const std::size_t n = src->size();
  const long c = codimension(X);
  Incidence inc = make_incidence(src, with_t, order);
  std::vector<Polynomial> gens;
  for (const auto& g : X.ideal().generators()) gens.push_back(g.remap(inc.ring, inc.x_map));
  if (c == 0) {
    for (const auto& y : inc.y) gens.push_back(y);
    return {inc, gens, Polynomial::constant(inc.ring, 1), std::nullopt};
  }
  SmallInts rng(opts.seed);
  const std::size_t cc = static_cast<std::size_t>(c);
  std::vector<Polynomial> eqs =
      opts.full_saturation ? X.ideal().generators() : detail::generic_equations(X.ideal(), cc, rng);
  detail::PolyMatrix m;
  for (auto& row : detail::jacobian(eqs)) {
    std::vector<Polynomial> big;
    for (auto& e : row) big.push_back(e.remap(inc.ring, inc.x_map));
    m.push_back(std::move(big));
  }
  m.push_back(inc.y);
  for (auto& minor : detail::minors(inc.ring, m, cc + 1, {m.size() - 1})) gens.push_back(std::move(minor));
  std::vector<Rational> ly(n);
  for (auto& v : ly) v = rng.nonzero();
  Polynomial ell(inc.ring);
  for (std::size_t i = 0; i < n; ++i) ell = ell + inc.y[i].scaled(ly[i]);
  if (opts.full_saturation) {
    std::vector<Polynomial> locus;
    for (auto& minor : detail::minors(src, detail::jacobian(eqs), cc))
      locus.push_back(minor.remap(inc.ring, inc.x_map));
    return {inc, gens, ell, Ideal(inc.ring, std::move(locus))};
  }
  const Polynomial h = detail::singular_witness(X, eqs, cc, rng).remap(inc.ring, inc.x_map);
  return {inc, gens, h * ell, std::nullopt};
}

Ideal full_conormal_ideal(const ConormalSystem& sys) {
  Ideal I(sys.inc.ring, sys.gens);
  I = saturate(I, *sys.full_locus);
  return saturate_principal(I, sys.witness);
}

}  // namespace

ConormalVariety conormal(const ProjScheme& X, const GenericOptions& opts) {
  const std::size_t n = X.ring()->size();
  const auto order = MonomialOrder::block_order(n);
  if (opts.full_saturation) {
    auto sys = conormal_system(X, opts, false, order);
    Ideal I = full_conormal_ideal(sys);
    return {sys.inc.ring, n, Ideal(sys.inc.ring, I.groebner_basis()), X};
  }
  auto sys = conormal_system(X, opts, true, MonomialOrder::block_order(1));
  std::vector<Polynomial> gens = sys.gens;
  const Polynomial t = Polynomial::variable(sys.inc.ring, 0);
  gens.push_back(Polynomial::constant(sys.inc.ring, 1) - t * sys.witness);
  Ideal closed = eliminate(Ideal(sys.inc.ring, std::move(gens)), 1);
  Ring target = closed.ring()->with_order(order);
  return {target, n, closed.with_order(order), X};
}

ProjScheme dual_variety(const ProjScheme& X, const GenericOptions& opts) {
  const std::size_t n = X.ring()->size();
  if (opts.full_saturation) {
    auto sys = conormal_system(X, opts, false, MonomialOrder::block_order(n));
    return ProjScheme::make(eliminate(full_conormal_ideal(sys), n));
  }
  auto sys = conormal_system(X, opts, true, MonomialOrder::block_order(n + 1));
  std::vector<Polynomial> gens = sys.gens;
  const Polynomial t = Polynomial::variable(sys.inc.ring, 0);
  gens.push_back(Polynomial::constant(sys.inc.ring, 1) - t * sys.witness);
  return ProjScheme::make(eliminate(Ideal(sys.inc.ring, std::move(gens)), n + 1));
}

bool bidual_check(const ProjScheme& X, const GenericOptions& opts) {
  const ProjScheme dual = dual_variety(X, opts);
  const ProjScheme bidual = dual_variety(dual, opts);
  std::vector<std::size_t> identity(X.ring()->size());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
  return bidual.ideal().remap(X.ring(), identity).same_ideal(X.ideal());
}

ProjScheme tangency_scheme(const ProjScheme& X, const Polynomial& H, const GenericOptions& opts) {
  if (!same_ring(H.ring(), X.ring())) throw InputError("tangency: hyperplane from a different ring");
  if (H.is_zero()) throw InputError("tangency: the hyperplane form is zero");
  if (H.total_degree() != 1 || !H.is_homogeneous()) throw InputError("tangency: H must be a linear form");
  if (X.is_empty()) return X;
  const Ring& ring = X.ring();
  const long c = codimension(X);
  std::vector<Polynomial> gens = X.ideal().generators();
  gens.push_back(H);
  if (c == 0) {
    // X = P^N: no point has T_X inside H.
    return ProjScheme::make(Ideal::unit(ring), true);
  }
  const std::size_t cc = static_cast<std::size_t>(c);
  SmallInts rng(opts.seed);
  std::vector<Polynomial> eqs =
      opts.full_saturation ? X.ideal().generators() : detail::generic_equations(X.ideal(), cc, rng);
  std::vector<Polynomial> rows = eqs;
  rows.push_back(H);
  auto m = detail::jacobian(rows);
  for (auto& minor : detail::minors(ring, m, cc + 1, {m.size() - 1})) gens.push_back(std::move(minor));
  Ideal T(ring, std::move(gens));
  if (opts.full_saturation) {
    Ideal locus(ring, detail::minors(ring, detail::jacobian(eqs), cc));
    return ProjScheme::make(saturate(T, X.ideal() + locus));
  }
  const Polynomial h = detail::singular_witness(X, eqs, cc, rng);
  return ProjScheme::make(saturate_principal(T, h));
}

}  // namespace tangentia
