#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tangentia/curves.hpp"
#include "tangentia/geometry.hpp"

namespace tangentia {

/// Join of two cones: closure of {a + b}.  Throws CapacityError past 48
/// variables in the elimination ring.
ProjScheme join(const ProjScheme& A, const ProjScheme& B);

/// k-th secant variety: sigma_1 = X, sigma_{k+1} = join(sigma_k, X).
ProjScheme secant_variety(const ProjScheme& X, long k);

struct SecantDim {
  long k = 0;
  long dim = -1;
};

/// Least k >= 0 with dim sigma_{k+1}(X) >= N - 1.  Throws InputError when X
/// lies in a hyperplane.  `dims` receives (k+1, dim sigma_{k+1}) as computed.
long r_of(const ProjScheme& X, std::vector<SecantDim>* dims = nullptr);

struct BoundaryCandidate {
  long k = 0;
  ProjScheme stratum;  // closure of the witness family in the dual space
  ProjScheme variety;  // its dual, back in the primal space
};

struct BoundaryReport {
  long r_of_X = 0;
  std::vector<SecantDim> secant_dims;
  std::vector<BoundaryCandidate> candidates;
  std::vector<std::string> notices;
  std::optional<double> numeric_check;
};

struct StratumWitness {
  long k = 0;
  WitnessFamily family;
};

/// Candidate hypersurfaces for the algebraic boundary, one per witness with
/// k >= r(X); k = 0 uses X* itself.  Non-hypersurface duals and empty
/// families are skipped with a notice.
BoundaryReport boundary_candidates(const ProjScheme& X, const std::vector<StratumWitness>& witnesses,
                                   long k_cap, const GenericOptions& opts = {});

/// Witnesses for a rational space curve: planes tangent at k+1 points.
std::vector<StratumWitness> curve_witnesses(const ParamCurve& C, long k_cap);

struct NumericCheckOptions {
  std::size_t samples = 2000;
  double tol = 1e-6;
  std::uint64_t seed = 42;
};

struct NumericCheckReport {
  double fraction = 0.0;
  std::size_t sample_points = 0;
  std::size_t hull_facets = 0;
  std::size_t boundary_points = 0;
  std::size_t on_candidates = 0;
  std::vector<double> max_residual;  // per candidate, over the points it explains best
  double worst_residual = 0.0;
};

/// Samples the real affine chart {x_dehom = 1} of the curve X, takes the
/// convex hull of the sample (ambient dimension 2 or 3), refines hull facets
/// to exact multi-tangent configurations and reports the fraction of the
/// resulting boundary points within `tol` of a candidate (scaled residual
/// |g| / (1 + |grad g|)).
NumericCheckReport numeric_boundary_check(const ProjScheme& X, std::size_t dehomogenize,
                                          const std::vector<ProjScheme>& candidates,
                                          const NumericCheckOptions& opts = {});

}  // namespace tangentia
