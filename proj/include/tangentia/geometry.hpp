#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tangentia/groebner.hpp"
#include "tangentia/linalg.hpp"

namespace tangentia {

using Point = std::vector<Rational>;

/// Subscheme of P^N given by a homogeneous ideal in N+1 variables.
class ProjScheme {
 public:
  /// Throws InputError on a non-homogeneous generator.  Saturates by the
  /// irrelevant ideal unless `assume_saturated` is set.
  static ProjScheme make(Ideal ideal, bool assume_saturated = false);

  const Ideal& ideal() const noexcept { return ideal_; }
  const Ring& ring() const noexcept { return ideal_.ring(); }
  std::size_t ambient_dim() const { return ring()->size() - 1; }
  bool saturated() const noexcept { return saturated_; }

  /// Projective dimension, -1 for the empty scheme.
  long dim() const;
  long cone_dim() const { return dim() + 1; }
  bool is_empty() const { return dim() < 0; }
  Integer degree() const;

 private:
  ProjScheme(Ideal ideal, bool saturated) : ideal_(std::move(ideal)), saturated_(saturated) {}
  Ideal ideal_;
  bool saturated_;
};

/// Parse-free convenience: homogeneous generators in `ring`.
ProjScheme projective(const Ring& ring, std::vector<Polynomial> gens);

/// Names y0..yN for the dual space, or z/w/... when those collide.
std::vector<std::string> dual_names(const PolyRing& ring);

struct GenericOptions {
  std::uint64_t seed = 42;
  /// Saturate by the whole singular-locus minor ideal instead of one generic
  /// element of it.
  bool full_saturation = false;
};

struct ConormalVariety {
  Ring ring;             // x0..xN then dual variables, block(N+1)
  std::size_t n_vars;    // N+1
  Ideal ideal;
  ProjScheme source;
};

ConormalVariety conormal(const ProjScheme& X, const GenericOptions& opts = {});
/// Dual variety in a ring named by dual_names(X.ring()).
ProjScheme dual_variety(const ProjScheme& X, const GenericOptions& opts = {});
/// dual(dual(X)) equals X (compared position by position).
bool bidual_check(const ProjScheme& X, const GenericOptions& opts = {});

/// Points where the hyperplane H contains the embedded tangent space, taken
/// at smooth points of X.
ProjScheme tangency_scheme(const ProjScheme& X, const Polynomial& H, const GenericOptions& opts = {});

// ---- Veronese embeddings -------------------------------------------------

struct VeroneseEmbedding {
  std::size_t n = 0;
  unsigned d = 0;
  Ring source;                     // x0..xn
  Ring target;                     // z0..zN
  std::vector<Monomial> exponents; // multi-index of z_i, descending lex
  ProjScheme image;

  std::size_t ambient_dim() const { return exponents.size() - 1; }
  /// Degree-d form on P^n obtained from a linear form on P^N.
  Polynomial pullback(const Polynomial& linear_form) const;
  /// Linear form on P^N whose pullback is the degree-d form F.
  Polynomial pushforward(const Polynomial& form) const;
  Point map_point(const Point& p) const;
  /// Image of a tangent vector w at p under the differential.
  Point differential(const Point& p, const Point& w) const;
};

/// The 2x2 binomial relations z_a z_b - z_c z_e with a + b = c + e.
VeroneseEmbedding veronese(std::size_t n, unsigned d);

/// Subscheme of v_d(P^n) described by a homogeneous ideal on P^n.
struct VeroneseSubscheme {
  const VeroneseEmbedding* embedding;
  Ideal source_ideal;
};

/// Tangency scheme of the hyperplane pulling back to F: the ideal of the
/// partial derivatives of F on P^n.
VeroneseSubscheme veronese_tangency(const VeroneseEmbedding& v, const Polynomial& F);

// ---- linear spans ----------------------------------------------------------

enum class SpanKind { Scheme, Reduced, Tangents };
std::string to_string(SpanKind kind);

struct SpanResult {
  SpanKind kind;
  std::vector<Polynomial> linear_forms;  // basis of the degree-1 forms vanishing on the span
  long proj_dim = -1;
  std::vector<Point> support;            // points used for the tangent kind
};

/// Rational points of a finite scheme (homogeneous, affine dimension <= 1),
/// normalized so the first nonzero coordinate is 1.  `complete` reports
/// whether they exhaust the support.
struct PointSet {
  std::vector<Point> points;
  bool complete = false;
};
PointSet rational_points(const ProjScheme& Z);

/// Basis (rows) of the Zariski tangent space of the affine cone of I at p.
RationalMatrix zariski_tangent_space(const Ideal& I, const Point& p);

SpanResult linear_span(const ProjScheme& Z, SpanKind kind, const std::vector<Point>& support = {});
SpanResult linear_span(const VeroneseSubscheme& Z, SpanKind kind, const std::vector<Point>& support = {});

/// Rows of `inner` lie in the row space of `outer`, both as coefficient vectors.
bool forms_contain(const std::vector<Polynomial>& outer, const std::vector<Polynomial>& inner);

// ---- Whitney condition (a) ---------------------------------------------

struct WhitneyReport {
  Point point;
  ProjScheme fiber;                        // in the dual space
  std::vector<Polynomial> tangent_perp;    // linear forms cutting out T_{Y,y}^perp
  bool verdict_classical = false;
  std::optional<bool> verdict_scheme;      // empty when unsupported
  std::string scheme_method;
};

WhitneyReport whitney_a(const ProjScheme& X, const ProjScheme& Y, const Point& y,
                        const GenericOptions& opts = {});

// ---- strata ------------------------------------------------------------------

enum class StratumMode { ReducedSpan, SchemeSpan, TangentSpan, SurfaceCurveTangency };
std::string to_string(StratumMode mode);

/// Explicit family of hyperplanes.  Parametrized: `map` gives the N+1
/// coefficients as polynomials in the parameter ring.  Implicit: the ring
/// holds auxiliary variables first and the N+1 dual coordinates last; the
/// family is the closure of the projection of V(equations) minus
/// V(nonvanishing).
struct WitnessFamily {
  enum class Kind { Parametrized, Implicit };
  Kind kind = Kind::Parametrized;
  Ring ring;
  std::vector<Polynomial> map;
  std::vector<Polynomial> equations;
  std::vector<Polynomial> nonvanishing;
  std::string label;
};

struct StratumReport {
  long r = 0;
  StratumMode mode = StratumMode::ReducedSpan;
  long computed_dim = -1;
  long lower = -1;
  long upper = -1;
  long bound = 0;
  bool satisfied = false;
  bool exact = false;
  std::uint64_t seed = 0;
  std::string method;
  std::string note;
  std::size_t ambient_dim = 0;
};

/// Zariski closure of the family in the dual space, by elimination.
ProjScheme witness_closure(std::size_t ambient_dim, const WitnessFamily& family);

/// Witness-family lower bound on a stratum dimension against N - r - 1
/// (or N - 3 for the surface-curve tangency stratum).
StratumReport stratum_report(std::size_t ambient_dim, long r, StratumMode mode,
                             const WitnessFamily& family, const GenericOptions& opts = {});

struct VeroneseConeResult {
  std::size_t n = 0;
  unsigned d = 0;
  std::size_t ambient_dim = 0;
  long stratum_dim = 0;          // closed form C(d+n-1, d) + n - 1
  long stratum_dim_checked = -1; // Jacobian rank of the cone family
  long span_dim = 0;             // generic cone section, exact
  long span_lower_bound = 0;     // N - n(n+1)
  long scheme_span_bound = 0;    // N - span_dim - 1
  bool violated = false;
  std::uint64_t seed = 0;
};

VeroneseConeResult veronese_cone_stratum(std::size_t n, unsigned d, std::uint64_t seed = 42);

/// Hyperplanes of v_d(P^n) whose section is a cone with vertex [1:a1:..:an]:
/// parameters a1..an and the coefficients of a form in n variables.
WitnessFamily veronese_cone_family(const VeroneseEmbedding& v);

}  // namespace tangentia
