#include "doctest.h"

#include "tangentia/error.hpp"
#include "tangentia/groebner.hpp"

using namespace tangentia;

namespace {

std::vector<Polynomial> P(const Ring& r, const char* text) { return parse_polynomial_list(r, text); }

std::string joined(const std::vector<Polynomial>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : ", ") + p.to_string();
  return s;
}

}  // namespace

TEST_CASE("reduce by a divisor list") {
  auto r = make_ring({"x0", "x1", "x2", "x3"});
  auto G = P(r, "x0*x2 - x1^2, x1*x3 - x2^2, x0*x3 - x1*x2");
  // x1*x2 leads x0*x3 - x1*x2 in grevlex, so x0*x3 is already reduced there.
  CHECK(reduce(parse_polynomial(r, "x0*x3"), G).remainder.to_string() == "x0*x3");
  auto lex = make_ring({"x0", "x1", "x2", "x3"}, MonomialOrder::lex());
  auto Gl = P(lex, "x0*x2 - x1^2, x1*x3 - x2^2, x0*x3 - x1*x2");
  CHECK(reduce(parse_polynomial(lex, "x0*x3"), Gl).remainder.to_string() == "x1*x2");
  CHECK(reduce(parse_polynomial(r, "x1^2"), P(r, "x1")).remainder.is_zero());
  CHECK(reduce(parse_polynomial(r, "x0 + 1"), P(r, "x1")).remainder.to_string() == "x0 + 1");
}

TEST_CASE("twisted cubic is its own reduced basis") {
  auto r = make_ring({"x0", "x1", "x2", "x3"});
  auto G = P(r, "x0*x2 - x1^2, x1*x3 - x2^2, x0*x3 - x1*x2");
  auto gb = buchberger(r, G);
  CHECK(gb.size() == 3);
  CHECK(is_groebner_basis(gb));
  Ideal I(r, G);
  for (const auto& g : G) CHECK(I.contains(g));
  CHECK(I.dimension() == 2);
  CHECK(I.hilbert_series().degree == 3);
  CHECK(I.contains(parse_polynomial(r, "x0*x2*x3 - x1^2*x3")));
  CHECK_FALSE(I.contains(parse_polynomial(r, "x0")));
}

TEST_CASE("lex basis of a linear system") {
  auto r = make_ring({"x0", "x1", "x2"}, MonomialOrder::lex());
  auto gb = buchberger(r, P(r, "x0 - x1, x1 - x2"));
  CHECK(joined(gb) == "x0 - x2, x1 - x2");
}

TEST_CASE("elimination") {
  auto r = make_ring({"t", "x", "y"}, MonomialOrder::block_order(1));
  CHECK(joined(eliminate(Ideal(r, P(r, "x - t, y - t^2")), 1).groebner_basis()) == "x^2 - y");
  CHECK(joined(eliminate(Ideal(r, P(r, "x - t^2, y - t^3")), 1).groebner_basis()) == "x^3 - y^2");
  auto g = make_ring({"x", "y"});
  CHECK_THROWS_AS(eliminate(Ideal(g, P(g, "x")), 1), InputError);
}

TEST_CASE("quotient, intersection, saturation") {
  auto r = make_ring({"x0", "x1", "x2", "x3"});
  auto I = [&](const char* s) { return Ideal(r, P(r, s)); };
  CHECK(quotient(I("x0*x1"), I("x0")).same_ideal(I("x1")));
  CHECK(intersect(I("x0"), I("x1")).same_ideal(I("x0*x1")));
  CHECK(quotient(I("x0^2, x0*x1"), I("x0")).same_ideal(I("x0, x1")));
  CHECK(saturate(I("x0^2*x1"), I("x0")).same_ideal(I("x1")));
  CHECK(saturate_principal(I("x0^2*x1"), parse_polynomial(r, "x0")).same_ideal(I("x1")));
  CHECK(saturate_by_variable(I("x0^2*x1"), 0).same_ideal(I("x1")));
  auto fermat = I("x1^3, x2^3, x3^3");
  CHECK(saturate(fermat, I("x0, x1, x2, x3")).same_ideal(fermat));
  CHECK(saturate_irrelevant(fermat).same_ideal(fermat));
  CHECK(saturate(I("x1"), I("1")).same_ideal(I("x1")));
  CHECK(saturate(I("1"), I("x0")).is_unit());
}

TEST_CASE("dimension") {
  auto r = make_ring({"x0", "x1", "x2"});
  CHECK(Ideal::zero(r).dimension() == 3);
  auto q = make_ring({"x0", "x1", "x2", "x3"});
  CHECK(Ideal(q, P(q, "x0, x1, x2, x3")).dimension() == 0);
  CHECK(Ideal::unit(q).dimension() == -1);
}

TEST_CASE("zero-dimensional radical") {
  auto l = make_ring({"x0", "x1"});
  CHECK(radical_zero_dim(Ideal(l, P(l, "x1^2"))).same_ideal(Ideal(l, P(l, "x1"))));
  auto r = make_ring({"x0", "x1", "x2"});
  CHECK(radical_zero_dim(Ideal(r, P(r, "x1^2, x1*x2, x2^2"))).same_ideal(Ideal(r, P(r, "x1, x2"))));
  auto sq = Ideal(l, P(l, "x1^3 - x0^2*x1"));
  CHECK(radical_zero_dim(sq).same_ideal(sq));
  auto a = make_ring({"x", "y"});
  CHECK(radical_zero_dim(Ideal(a, P(a, "x^2, y^3 - y^2"))).same_ideal(Ideal(a, P(a, "x, y^2 - y"))));
}

TEST_CASE("radical membership") {
  auto r = make_ring({"x", "y"});
  Ideal I(r, P(r, "x^3, y^2"));
  CHECK(radical_member(parse_polynomial(r, "x + y"), I));
  CHECK_FALSE(radical_member(parse_polynomial(r, "x + 1"), I));
}

TEST_CASE("prime field mode agrees on the twisted cubic") {
  auto r = PolyRing::make({"x0", "x1", "x2", "x3"}, MonomialOrder::grevlex(), 2147483647);
  auto gb = buchberger(r, P(r, "x0*x2 - x1^2, x1*x3 - x2^2, x0*x3 - x1*x2"));
  CHECK(gb.size() == 3);
  CHECK(is_groebner_basis(gb));
}
