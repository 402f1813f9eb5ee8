#include "doctest.h"

#include "tangentia/curves.hpp"
#include "tangentia/error.hpp"

using namespace tangentia;

namespace {

ParamCurve curve(const char* a, const char* b, const char* c, const char* d) {
  auto r = make_ring({"t"});
  std::vector<UPoly> comps;
  for (const char* s : {a, b, c, d}) comps.push_back(to_univariate(parse_polynomial(r, s), 0));
  return ParamCurve::make(std::move(comps));
}

}  // namespace

TEST_CASE("osculating planes of the twisted cubic") {
  auto C = curve("1", "t", "t^2", "t^3");
  CHECK(osculating_plane(C).plane.to_string() == "-t^3*x0 + 3*t^2*x1 - 3*t*x2 + x3");
  CHECK(osculating_plane(C, Rational(0)).plane.to_string() == "x3");
  CHECK(osculating_plane(C, Rational(1)).plane.to_string() == "-x0 + 3*x1 - 3*x2 + x3");
  CHECK(C.inflection_parameters().empty());
}

TEST_CASE("osculating planes have contact of order three") {
  auto C = curve("1", "t", "t^3", "t^4 + t");
  for (int v : {1, 2, -3}) {
    const Rational t0(v);
    const auto rec = osculating_plane(C, t0);
    UPoly restricted;
    for (std::size_t i = 0; i < 4; ++i)
      restricted = restricted + C.components()[i] * UPoly::constant(rec.coefficients[i].coefficient(0));
    CHECK(root_multiplicity(restricted, t0) >= 3);
  }
}

TEST_CASE("curve validation") {
  CHECK_THROWS_AS(curve("1", "t", "t^2", "0"), InputError);
  CHECK_THROWS_AS(curve("t", "t^2", "t^3", "t^4"), InputError);
  auto flex = curve("1", "t", "t^3", "t^4");
  CHECK(flex.inflection_parameters() == std::vector<Rational>{0});
  CHECK_THROWS_AS(osculating_plane(flex, Rational(0)), InputError);
}

TEST_CASE("osculating dual curves") {
  auto C = curve("1", "t", "t^2", "t^3");
  auto D = osculating_dual_curve(C);
  CHECK(D.dim() == 1);
  CHECK(D.degree() == 3);
  // Coefficients (-t^3, 3t^2, -3t, 1) at t = 2.
  for (const auto& g : D.ideal().generators()) CHECK(g.eval(Point{-8, 12, -6, 1}) == 0);
  auto E = osculating_dual_curve(curve("1", "t", "t^2", "t^4"));
  CHECK(E.dim() == 1);
  const auto rec = osculating_plane(curve("1", "t", "t^2", "t^4"), Rational(3));
  Point p;
  for (const auto& c : rec.coefficients) p.push_back(c.coefficient(0));
  for (const auto& g : E.ideal().generators()) CHECK(g.eval(p) == 0);
}

TEST_CASE("bitangent osculating planes") {
  auto cubic = bitangent_osculating(curve("1", "t", "t^2", "t^3"));
  CHECK(cubic.finiteness_verdict);
  CHECK(cubic.pairs.empty());
  CHECK(cubic.resultant.degree() == 0);
  CHECK(cubic.deflated_contact.is_constant());

  // Frozen from an independent resultant computation: Res_t = -72 s^3, with
  // P/(t-s)^3 = -6s(s+t) and Q/(t-s)^2 = -12s(s+2t).
  auto quartic = bitangent_osculating(curve("1", "t", "t^3", "t^4"));
  CHECK(quartic.finiteness_verdict);
  CHECK(quartic.resultant.to_string("s") == "s^3");
  CHECK(quartic.rational_s == 1);
  CHECK(quartic.irrational_s == 0);
  CHECK(quartic.inflection_s == std::vector<Rational>{0});
  CHECK(quartic.pairs.empty());
  auto st = quartic.deflated_contact.ring();
  CHECK(quartic.deflated_contact == parse_polynomial(st, "-6*s*(s + t)"));
  CHECK(quartic.deflated_tangency == parse_polynomial(st, "-12*s*(s + 2*t)"));

  auto other = bitangent_osculating(curve("1", "t", "t^2", "t^4"));
  CHECK(other.finiteness_verdict);
  CHECK(other.resultant.to_string("s") == "s");
  CHECK(other.pairs.empty());
}

TEST_CASE("tangent lines do not meet the curve again") {
  auto cubic = tangent_resecant_check(curve("1", "t", "t^2", "t^3"), 5);
  CHECK(cubic.no_resecant);
  CHECK(cubic.samples.size() == 5);
  auto quartic = tangent_resecant_check(curve("1", "t", "t^2", "t^4"), 5);
  CHECK(quartic.no_resecant);
}
