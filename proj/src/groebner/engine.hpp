#pragma once

// Internal Buchberger engine.  Not installed; the public surface is
// tangentia/groebner.hpp.

#include <cstddef>
#include <span>
#include <vector>

#include "tangentia/polycore.hpp"

namespace tangentia::detail {

struct EngineStats {
  std::size_t pairs_considered = 0;
  std::size_t product_criterion = 0;
  std::size_t chain_criterion = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_insertions = 0;
};

/// Reduced Gröbner basis of the ideal generated by `gens` (all in `ring`),
/// monic, sorted by descending leading monomial.
std::vector<Polynomial> groebner_basis(const Ring& ring,
                                       std::span<const Polynomial> gens,
                                       EngineStats* stats = nullptr);

/// Full normal form of f modulo a Gröbner basis, monic-free (exact scalar
/// multiple preserved: result equals the true remainder).
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

}  // namespace tangentia::detail
