#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tangentia/geometry.hpp"
#include "tangentia/univariate.hpp"

namespace tangentia {

/// Rational space curve t -> [g0(t) : g1(t) : g2(t) : g3(t)].
class ParamCurve {
 public:
  /// Throws InputError unless there are four components without a common
  /// factor spanning P^3 (a planar curve is rejected).
  static ParamCurve make(std::vector<UPoly> components);

  const std::vector<UPoly>& components() const noexcept { return gamma_; }
  int degree() const;
  Point at(const Rational& t) const;
  Point derivative_at(const Rational& t, unsigned order = 1) const;

  /// Parameters where [g, g', g''] drops rank (rational roots only).
  std::vector<Rational> inflection_parameters() const;

 private:
  explicit ParamCurve(std::vector<UPoly> c) : gamma_(std::move(c)) {}
  std::vector<UPoly> gamma_;
};

/// Rank of the coefficient matrix of four univariate polynomials.
std::size_t coefficient_rank(const std::vector<UPoly>& components);

struct OscPlaneRecord {
  std::optional<Rational> t0;        // empty in symbolic mode
  std::vector<UPoly> coefficients;   // coefficient of x_i as a polynomial in t
  Polynomial plane;                  // in [t, x0..x3] (symbolic) or [x0..x3]
  Point contact_point;               // gamma(t0), empty in symbolic mode
};

/// Plane det[x; g; g'; g''], scaled so the last nonzero coefficient has
/// leading coefficient 1.  Throws InputError at an inflection point.
OscPlaneRecord osculating_plane(const ParamCurve& C, std::optional<Rational> t0 = std::nullopt);

/// Closure of the osculating planes t -> coefficients, in dual coordinates.
ProjScheme osculating_dual_curve(const ParamCurve& C);

struct BitangencyRecord {
  std::vector<std::pair<Rational, Rational>> pairs;  // (s, t), s != t, both rational
  std::vector<std::pair<Rational, std::vector<Rational>>> extra_locus;
  Polynomial deflated_contact;   // P(s,t) / (t-s)^3 in [s, t]
  Polynomial deflated_tangency;  // Q(s,t) / (t-s)^2 in [s, t]
  UPoly resultant;               // Res_t of the deflated pair in s, monic
  std::size_t rational_s = 0;
  std::vector<Rational> inflection_s;  // rational roots skipped as inflection parameters
  std::size_t irrational_s = 0;  // distinct non-rational roots of the resultant
  bool finiteness_verdict = false;
};

/// Parameters s whose osculating plane is tangent to C at another point t.
BitangencyRecord bitangent_osculating(const ParamCurve& C);

/// Planes tangent to C at `points` distinct parameters, as an implicit
/// family: parameters s0.. first, dual coordinates last.
WitnessFamily contact_family(const ParamCurve& C, std::size_t points);

struct ResecantSample {
  Rational t0;
  UPoly meeting;  // gcd of the deflated minors; constant when the tangent line meets C only at t0
};

struct ResecantReport {
  bool no_resecant = true;
  std::vector<ResecantSample> samples;
};

/// Samples seeded rational t0 (skipping inflections) and checks whether the
/// tangent line at g(t0) meets the curve again.
ResecantReport tangent_resecant_check(const ParamCurve& C, std::size_t samples, std::uint64_t seed = 42);

}  // namespace tangentia
