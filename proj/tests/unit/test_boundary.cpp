#include "doctest.h"

#include "tangentia/boundary.hpp"
#include "tangentia/error.hpp"

using namespace tangentia;

namespace {

ParamCurve curve(const char* a, const char* b, const char* c, const char* d) {
  auto r = make_ring({"t"});
  std::vector<UPoly> comps;
  for (const char* s : {a, b, c, d}) comps.push_back(to_univariate(parse_polynomial(r, s), 0));
  return ParamCurve::make(std::move(comps));
}

ProjScheme twisted_cubic() {
  auto r = make_ring({"x0", "x1", "x2", "x3"});
  return projective(r, parse_polynomial_list(r, "x0*x2 - x1^2, x1*x3 - x2^2, x0*x3 - x1*x2"));
}

ProjScheme trig_curve() {
  auto r = make_ring({"w", "x", "y", "z"});
  return projective(r, parse_polynomial_list(r, "x^2 + y^2 - w^2, z*w - x^2 + y^2"));
}

ParamCurve trig_param() {
  return curve("(1+t^2)^2", "(1-t^2)*(1+t^2)", "2*t*(1+t^2)", "(1-t^2)^2 - 4*t^2");
}

}  // namespace

TEST_CASE("secant varieties") {
  CHECK(secant_variety(twisted_cubic(), 2).ideal().is_zero());
  CHECK(secant_variety(twisted_cubic(), 1).degree() == 3);

  auto v = veronese(2, 2);
  auto S = secant_variety(v.image, 2);
  CHECK(S.dim() == 4);
  CHECK(S.degree() == 3);
  const auto& gb = S.ideal().groebner_basis();
  REQUIRE(gb.size() == 1);
  CHECK(gb.front().total_degree() == 3);
  CHECK(v.image.ideal().contains(S.ideal()));

  auto r = make_ring({"x0", "x1", "x2", "x3"});
  auto L = projective(r, parse_polynomial_list(r, "x2, x3"));
  CHECK(secant_variety(L, 2).ideal().same_ideal(L.ideal()));
  CHECK(secant_variety(L, 5).ideal().same_ideal(L.ideal()));
  CHECK_THROWS_AS(secant_variety(L, 0), InputError);
}

TEST_CASE("r(X) from secant dimensions") {
  std::vector<SecantDim> dims;
  CHECK(r_of(twisted_cubic(), &dims) == 1);
  REQUIRE(dims.size() == 2);
  CHECK(dims[0].dim == 1);
  CHECK(dims[1].dim == 3);

  dims.clear();
  CHECK(r_of(veronese(2, 2).image, &dims) == 1);
  REQUIRE(dims.size() == 2);
  CHECK(dims[0].dim == 2);
  CHECK(dims[1].dim == 4);

  auto r = make_ring({"x", "y", "z"});
  CHECK(r_of(projective(r, parse_polynomial_list(r, "x^2 + y^2 - z^2"))) == 0);

  std::vector<SecantDim> trig;
  CHECK(r_of(trig_curve(), &trig) == 1);
  REQUIRE(trig.size() == 2);
  CHECK(trig[1].dim == 3);
  for (std::size_t i = 1; i < trig.size(); ++i) CHECK(trig[i].dim >= trig[i - 1].dim);

  // Two points on a line.
  auto two = projective(r, parse_polynomial_list(r, "z, x*y"));
  CHECK_THROWS_AS(r_of(two), InputError);
}

TEST_CASE("boundary candidates of a conic") {
  auto r = make_ring({"w", "x", "y"});
  auto E = projective(r, parse_polynomial_list(r, "x^2 + 4*y^2 - w^2"));
  auto rep = boundary_candidates(E, {}, 2);
  CHECK(rep.r_of_X == 0);
  REQUIRE(rep.candidates.size() == 1);
  CHECK(rep.candidates.front().k == 0);
  CHECK(rep.candidates.front().variety.ideal().same_ideal(E.ideal()));
}

TEST_CASE("boundary candidates of the trigonometric curve") {
  auto X = trig_curve();
  auto rep = boundary_candidates(X, curve_witnesses(trig_param(), 2), 2);
  CHECK(rep.r_of_X == 1);
  REQUIRE(rep.candidates.size() == 1);
  CHECK(rep.candidates.front().k == 1);
  CHECK(rep.candidates.front().stratum.dim() == 1);
  CHECK(rep.candidates.front().stratum.degree() == 4);
  // No plane is tangent at three points.
  REQUIRE(rep.notices.size() == 1);
  CHECK(rep.notices.front().find("k = 2") == 0);

  // The two parabolic cylinders z = 1 - 2y^2 and z = 2x^2 - 1.
  auto r = X.ring();
  auto cyl = parse_polynomial(r, "(w^2 - 2*y^2 - w*z)*(w^2 - 2*x^2 + w*z)");
  CHECK(rep.candidates.front().variety.ideal().same_ideal(Ideal(r, {cyl})));

  auto num = numeric_boundary_check(X, 0, {rep.candidates.front().variety});
  CHECK(num.sample_points == 2000);
  CHECK(num.fraction >= 0.99);
}

TEST_CASE("numeric boundary check") {
  auto r = make_ring({"w", "x", "y"});
  auto E = projective(r, parse_polynomial_list(r, "x^2 + 4*y^2 - w^2"));
  auto rep = numeric_boundary_check(E, 0, {E});
  CHECK(rep.fraction == 1.0);
  CHECK(rep.worst_residual < 1e-10);
  CHECK(numeric_boundary_check(E, 0, {}).fraction == 0.0);

  // The wrong candidate explains nothing.
  auto other = projective(r, parse_polynomial_list(r, "x^2 + y^2 - 4*w^2"));
  CHECK(numeric_boundary_check(E, 0, {other}).fraction == 0.0);

  NumericCheckOptions opts;
  opts.seed = 7;
  opts.samples = 300;
  CHECK(numeric_boundary_check(E, 0, {E}, opts).fraction == 1.0);
  CHECK_THROWS_AS(numeric_boundary_check(E, 5, {E}), InputError);
}
