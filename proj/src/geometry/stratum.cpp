#include <algorithm>

#include "internal.hpp"
#include "tangentia/error.hpp"

namespace tangentia {

std::string to_string(StratumMode mode) {
  switch (mode) {
    case StratumMode::ReducedSpan: return "reduced-span";
    case StratumMode::SchemeSpan: return "scheme-span";
    case StratumMode::TangentSpan: return "tangent-span";
    case StratumMode::SurfaceCurveTangency: return "surface-curve-tangency";
  }
  return "?";
}

namespace {

constexpr std::size_t kEliminationParamLimit = 6;

bool same_degree_forms(const std::vector<Polynomial>& map) {
  long deg = -1;
  for (const auto& f : map) {
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) return false;
    if (deg >= 0 && f.total_degree() != deg) return false;
    deg = f.total_degree();
  }
  return true;
}

// Rank of [phi(p); D phi(p)] at a seeded random parameter point, minus one.
long jacobian_lower_bound(const WitnessFamily& fam, std::uint64_t seed) {
  const std::size_t k = fam.ring->size();
  detail::SmallInts rng(seed);
  std::vector<std::vector<Polynomial>> partials(k);
  for (std::size_t j = 0; j < k; ++j)
    for (const auto& f : fam.map) partials[j].push_back(f.partial_derivative(j));
  long best = -1;
  for (int attempt = 0; attempt < 3; ++attempt) {
    Point p(k);
    for (auto& c : p) c = rng.next();
    RationalMatrix m(0, fam.map.size());
    std::vector<Rational> row;
    for (const auto& f : fam.map) row.push_back(f.eval(p));
    m.append_row(row);
    for (std::size_t j = 0; j < k; ++j) {
      row.clear();
      for (const auto& f : partials[j]) row.push_back(f.eval(p));
      m.append_row(row);
    }
    bool zero = true;
    for (const auto& c : m.row(0)) zero = zero && c == 0;
    if (zero) continue;
    best = std::max(best, static_cast<long>(rank(m)) - 1);
  }
  return best;
}

// Closure of the cone over the image: y_i - s * phi_i, eliminate s and parameters.
Ideal image_ideal(const WitnessFamily& fam, std::size_t ambient) {
  const std::size_t k = fam.ring->size();
  std::vector<std::string> names{"s"};
  for (const auto& nm : fam.ring->names()) names.push_back(nm);
  for (std::size_t i = 0; i <= ambient; ++i) names.push_back("y" + std::to_string(i));
  std::vector<std::string> unique;
  for (auto& nm : names) {
    Ring so_far = unique.empty() ? nullptr : PolyRing::make(unique);
    unique.push_back(so_far && so_far->index_of(nm) ? fresh_variable_name(*so_far, nm) : nm);
  }
  Ring big = PolyRing::make(unique, MonomialOrder::block_order(k + 1));
  std::vector<std::size_t> shift(k);
  for (std::size_t j = 0; j < k; ++j) shift[j] = j + 1;
  const Polynomial s = Polynomial::variable(big, 0);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i <= ambient; ++i)
    gens.push_back(Polynomial::variable(big, k + 1 + i) - s * fam.map[i].remap(big, shift));
  return eliminate(Ideal(big, std::move(gens)), k + 1);
}

Ideal implicit_ideal(const WitnessFamily& fam, std::size_t ambient) {
  const std::size_t total = fam.ring->size();
  if (total < ambient + 1) throw InputError("implicit family: ring lacks the dual coordinates");
  const std::size_t aux = total - ambient - 1;
  Ideal I(fam.ring, fam.equations);
  for (const auto& h : fam.nonvanishing) I = saturate_principal(I, h);
  const Ideal image = aux == 0 ? I : eliminate(I.with_order(MonomialOrder::block_order(aux)), aux);
  if (!image.is_homogeneous()) throw InputError("implicit family: projection is not a cone");
  return image;
}

void check_parametrized(const WitnessFamily& family, std::size_t ambient_dim) {
  if (family.map.size() != ambient_dim + 1) throw InputError("witness family: expected N+1 coordinates");
  for (const auto& f : family.map)
    if (!same_ring(f.ring(), family.ring)) throw InputError("witness family: coordinate from a different ring");
}

}  // namespace

ProjScheme witness_closure(std::size_t ambient_dim, const WitnessFamily& family) {
  if (family.kind == WitnessFamily::Kind::Implicit) return ProjScheme::make(implicit_ideal(family, ambient_dim));
  check_parametrized(family, ambient_dim);
  return ProjScheme::make(image_ideal(family, ambient_dim));
}

StratumReport stratum_report(std::size_t ambient_dim, long r, StratumMode mode, const WitnessFamily& family,
                             const GenericOptions& opts) {
  StratumReport rep;
  rep.r = r;
  rep.mode = mode;
  rep.seed = opts.seed;
  rep.ambient_dim = ambient_dim;
  const long N = static_cast<long>(ambient_dim);
  rep.bound = mode == StratumMode::SurfaceCurveTangency ? N - 3 : N - r - 1;
  rep.note = family.label;

  if (family.kind == WitnessFamily::Kind::Parametrized) {
    check_parametrized(family, ambient_dim);
    const long params = static_cast<long>(family.ring->size()) + (same_degree_forms(family.map) ? 0 : 1);
    rep.upper = std::min(params, N + 1) - 1;
    rep.lower = jacobian_lower_bound(family, opts.seed);
    if (rep.lower == rep.upper) {
      rep.computed_dim = rep.lower;
      rep.exact = true;
      rep.method = "jacobian rank meets the parameter count";
    } else if (family.ring->size() <= kEliminationParamLimit) {
      rep.computed_dim = image_ideal(family, ambient_dim).dimension() - 1;
      rep.exact = true;
      rep.method = "elimination";
    } else {
      rep.computed_dim = rep.lower;
      rep.method = "jacobian rank (lower bound)";
    }
  } else {
    rep.computed_dim = implicit_ideal(family, ambient_dim).dimension() - 1;
    rep.lower = rep.upper = rep.computed_dim;
    rep.exact = true;
    rep.method = "elimination";
  }
  if (rep.computed_dim < 0) rep.note += rep.note.empty() ? "empty family" : " (empty family)";
  rep.satisfied = rep.computed_dim <= rep.bound;
  return rep;
}

}  // namespace tangentia
