#include "tangentia/boundary.hpp"
#include "tangentia/error.hpp"

namespace tangentia {

std::vector<StratumWitness> curve_witnesses(const ParamCurve& C, long k_cap) {
  std::vector<StratumWitness> out;
  for (long k = 1; k <= k_cap; ++k) out.push_back({k, contact_family(C, static_cast<std::size_t>(k + 1))});
  return out;
}

BoundaryReport boundary_candidates(const ProjScheme& X, const std::vector<StratumWitness>& witnesses, long k_cap,
                                   const GenericOptions& opts) {
  BoundaryReport rep;
  rep.r_of_X = r_of(X, &rep.secant_dims);
  const long N = static_cast<long>(X.ambient_dim());
  std::vector<std::size_t> identity(X.ring()->size());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;

  auto consider = [&](long k, const ProjScheme& stratum) {
    if (stratum.is_empty()) {
      rep.notices.push_back("k = " + std::to_string(k) + ": witness family is empty, skipped");
      return;
    }
    const ProjScheme back = dual_variety(stratum, opts);
    if (back.dim() != N - 1) {
      rep.notices.push_back("k = " + std::to_string(k) + ": dual of the stratum has dimension " +
                            std::to_string(back.dim()) + ", not a hypersurface");
      return;
    }
    rep.candidates.push_back({k, stratum, ProjScheme::make(back.ideal().remap(X.ring(), identity), true)});
  };

  if (rep.r_of_X == 0) consider(0, dual_variety(X, opts));
  for (const auto& w : witnesses) {
    if (w.k < rep.r_of_X || w.k > k_cap || w.k == 0) continue;
    consider(w.k, witness_closure(X.ambient_dim(), w.family));
  }
  return rep;
}

}  // namespace tangentia
