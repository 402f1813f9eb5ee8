#include "doctest.h"

#include "tangentia/error.hpp"
#include "tangentia/geometry.hpp"

using namespace tangentia;

namespace {

ProjScheme scheme(const std::vector<std::string>& names, const char* gens) {
  auto r = make_ring(names);
  return projective(r, parse_polynomial_list(r, gens));
}

const std::vector<std::string> P2{"x0", "x1", "x2"};
const std::vector<std::string> P3{"x0", "x1", "x2", "x3"};

}  // namespace

TEST_CASE("projective schemes are saturated on construction") {
  auto X = scheme(P2, "x0^2, x0*x1, x0*x2");
  CHECK(X.ideal().generators().size() == 1);
  CHECK(X.dim() == 1);
  CHECK(X.degree() == 1);
  CHECK(scheme(P2, "x0, x1, x2").is_empty());
  CHECK_THROWS_AS(scheme(P2, "x0 + 1"), InputError);
}

TEST_CASE("dual of a conic") {
  auto X = scheme(P2, "x0*x2 - x1^2");
  auto D = dual_variety(X);
  REQUIRE(D.ideal().groebner_basis().size() == 1);
  CHECK(D.ideal().groebner_basis()[0].to_string() == "y1^2 - 4*y0*y2");
  GenericOptions full;
  full.full_saturation = true;
  CHECK(dual_variety(X, full).ideal().same_ideal(D.ideal()));
  CHECK(bidual_check(X));
}

TEST_CASE("dual of a point is its perpendicular line") {
  auto X = scheme(P2, "x1, x2");
  auto D = dual_variety(X);
  CHECK(D.ideal().groebner_basis().size() == 1);
  CHECK(D.ideal().groebner_basis()[0].to_string() == "y0");
  auto C = conormal(X);
  // Affine bicone over a line times a plane.
  CHECK(C.ideal.dimension() == 3);
  CHECK(bidual_check(X));
}

TEST_CASE("dual of the twisted cubic is a quartic surface") {
  auto X = scheme(P3, "x0*x2 - x1^2, x1*x3 - x2^2, x0*x3 - x1*x2");
  auto D = dual_variety(X);
  CHECK(D.dim() == 2);
  CHECK(D.degree() == 4);
  // x0 = 0 meets the curve in a triple point.
  const auto& g = D.ideal().groebner_basis();
  REQUIRE(g.size() == 1);
  CHECK(g[0].eval(std::vector<Rational>{1, 0, 0, 0}) == 0);
}

TEST_CASE("dual of the Veronese surface is the symmetric determinant") {
  auto v = veronese(2, 2);
  CHECK(v.image.ideal().generators().size() == 6);
  auto D = dual_variety(v.image);
  REQUIRE(D.ideal().groebner_basis().size() == 1);
  // z-order: x0^2, x0x1, x0x2, x1^2, x1x2, x2^2.  The pairing with a quadric
  // q puts q's coefficients on the y's, so the symmetric matrix carries
  // halves off the diagonal.
  auto r = D.ring();
  auto det = parse_polynomial(r, "4*y0*y3*y5 + y1*y4*y2 - y0*y4^2 - y3*y2^2 - y5*y1^2");
  CHECK(D.ideal().contains(det));
  CHECK(D.degree() == 3);
}

TEST_CASE("biduality") {
  CHECK(bidual_check(scheme(P3, "x0*x2 - x1^2, x1*x3 - x2^2, x0*x3 - x1*x2")));
  CHECK(bidual_check(scheme(P3, "x0*x3 - x1*x2")));
  CHECK(bidual_check(veronese(2, 2).image));
}

TEST_CASE("veronese embedding") {
  auto v1 = veronese(1, 2);
  REQUIRE(v1.image.ideal().generators().size() == 1);
  CHECK(v1.image.ideal().same_ideal(Ideal(v1.target, parse_polynomial_list(v1.target, "z0*z2 - z1^2"))));
  auto v = veronese(3, 4);
  CHECK(v.ambient_dim() == 34);
  auto F = parse_polynomial(v.source, "x1^4 + x2^4 + 3*x0*x3^3");
  CHECK(v.pullback(v.pushforward(F)) == F);
  const Point p{1, 2, -1, 3};
  const auto img = v.map_point(p);
  CHECK(v.pushforward(F).eval(img) == F.eval(p));
  CHECK_THROWS_AS(veronese(0, 2), InputError);
}

TEST_CASE("tangency schemes") {
  auto conic = scheme(P2, "x0*x2 - x1^2");
  // Tangent line at [1:2:4]: 4*x0 - 4*x1 + x2.
  auto T = tangency_scheme(conic, parse_polynomial(conic.ring(), "4*x0 - 4*x1 + x2"));
  CHECK(T.dim() == 0);
  CHECK(T.degree() == 1);
  auto pts = rational_points(T);
  REQUIRE(pts.points.size() == 1);
  CHECK(pts.points[0] == Point{1, 2, 4});

  auto quadric = scheme(P3, "x0*x3 - x1*x2");
  auto Q = tangency_scheme(quadric, parse_polynomial(quadric.ring(), "x3"));
  CHECK(Q.dim() == 0);
  CHECK(rational_points(Q).points == std::vector<Point>{Point{1, 0, 0, 0}});
  CHECK(tangency_scheme(quadric, parse_polynomial(quadric.ring(), "x0 + x3")).is_empty());
}

TEST_CASE("fermat cone section of v4(P3)") {
  auto v = veronese(3, 4);
  auto Z = veronese_tangency(v, parse_polynomial(v.source, "x1^4 + x2^4 + x3^4"));
  auto scheme_span = linear_span(Z, SpanKind::Scheme);
  CHECK(scheme_span.proj_dim == 22);
  CHECK(linear_span(Z, SpanKind::Reduced).proj_dim == 0);
  auto tangent_span = linear_span(Z, SpanKind::Tangents);
  CHECK(tangent_span.proj_dim == 3);
  REQUIRE(tangent_span.support.size() == 1);
  CHECK(tangent_span.support[0] == Point{1, 0, 0, 0});
  CHECK(forms_contain(tangent_span.linear_forms, scheme_span.linear_forms));
}

TEST_CASE("span chain on a fat point") {
  auto Z = scheme(P2, "x1^2, x1*x2, x2^2");
  CHECK(linear_span(Z, SpanKind::Scheme).proj_dim == 2);
  CHECK(linear_span(Z, SpanKind::Reduced).proj_dim == 0);
  CHECK(linear_span(Z, SpanKind::Tangents).proj_dim == 2);
  auto W = scheme(P2, "x1^2, x2");
  CHECK(linear_span(W, SpanKind::Scheme).proj_dim == 1);
  CHECK(linear_span(W, SpanKind::Tangents).proj_dim == 1);
  CHECK(linear_span(scheme(P2, "x0, x1, x2"), SpanKind::Scheme).proj_dim == -1);
  CHECK_THROWS_AS(linear_span(scheme(P2, "x0^2 - 2*x1^2, x2"), SpanKind::Tangents), UnsupportedError);
}

TEST_CASE("veronese cone strata") {
  auto big = veronese_cone_stratum(3, 4);
  CHECK(big.ambient_dim == 34);
  CHECK(big.stratum_dim == 17);
  CHECK(big.stratum_dim_checked == 17);
  CHECK(big.span_dim == 22);
  CHECK(big.span_lower_bound == 22);
  CHECK(big.scheme_span_bound == 11);
  CHECK(big.violated);
  auto conic = veronese_cone_stratum(1, 2);
  CHECK(conic.span_dim == 0);
  CHECK_FALSE(conic.violated);
  auto cubic = veronese_cone_stratum(2, 3);
  CHECK(cubic.stratum_dim == 5);
  CHECK(cubic.stratum_dim_checked == 5);
  CHECK(cubic.span_dim == 3);
  CHECK_FALSE(cubic.violated);
}

TEST_CASE("whitney condition on a quadric cone") {
  auto X = scheme(P2, "x0*x2 - x1^2");
  auto ruling = scheme(P2, "x0, x1");
  auto rep = whitney_a(X, ruling, Point{0, 0, 1});
  CHECK(rep.verdict_classical);
  REQUIRE(rep.verdict_scheme.has_value());
  CHECK(*rep.verdict_scheme);
  auto vertex = scheme(P2, "x0, x1, x2");
  auto at_vertex = whitney_a(X, vertex, Point{0, 0, 0});
  CHECK(at_vertex.tangent_perp.empty());
  CHECK(at_vertex.verdict_classical);
  CHECK_THROWS_AS(whitney_a(X, ruling, Point{1, 0, 0}), InputError);
}

TEST_CASE("whitney condition along the directrix of a cubic scroll") {
  auto X = scheme({"x0", "x1", "x2", "x3", "x4"}, "x0*x2 - x1^2, x0*x4 - x1*x3, x1*x4 - x2*x3");
  auto L = projective(X.ring(), parse_polynomial_list(X.ring(), "x0, x1, x2"));
  auto rep = whitney_a(X, L, Point{0, 0, 0, 1, 2});
  CHECK(rep.verdict_classical);
  REQUIRE(rep.verdict_scheme.has_value());
  CHECK(*rep.verdict_scheme);
}

TEST_CASE("stratum reports") {
  auto params = make_ring({"a", "b"});
  WitnessFamily fam;
  fam.ring = params;
  fam.map = parse_polynomial_list(params, "1, a, b, a*b");
  auto rep = stratum_report(3, 0, StratumMode::ReducedSpan, fam);
  CHECK(rep.computed_dim == 2);
  CHECK(rep.bound == 2);
  CHECK(rep.satisfied);
  auto tangency = stratum_report(3, 0, StratumMode::SurfaceCurveTangency, fam);
  CHECK(tangency.bound == 0);
  CHECK_FALSE(tangency.satisfied);

  // Rank-deficient family: the image is a curve, found by elimination.
  fam.map = parse_polynomial_list(params, "1, a + b, (a + b)^2, 0");
  auto curve = stratum_report(3, 0, StratumMode::ReducedSpan, fam);
  CHECK(curve.lower == 1);
  CHECK(curve.computed_dim == 1);
  CHECK(curve.exact);

  auto implicit = make_ring({"s", "y0", "y1", "y2"});
  WitnessFamily imp;
  imp.kind = WitnessFamily::Kind::Implicit;
  imp.ring = implicit;
  imp.equations = parse_polynomial_list(implicit, "y1 - s*y0, y2 - s^2*y0");
  CHECK(stratum_report(2, 0, StratumMode::ReducedSpan, imp).computed_dim == 1);
  imp.nonvanishing = parse_polynomial_list(implicit, "s");
  CHECK(stratum_report(2, 0, StratumMode::ReducedSpan, imp).computed_dim == 1);
  imp.equations = parse_polynomial_list(implicit, "s*y0, s*y1, s*y2");
  auto empty = stratum_report(2, 0, StratumMode::ReducedSpan, imp);
  CHECK(empty.computed_dim == -1);
  CHECK(empty.satisfied);
}
