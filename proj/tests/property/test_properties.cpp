#include "doctest.h"

#include "../support/suites.hpp"
#include "tangentia/boundary.hpp"

using namespace tangentia;

TEST_CASE("membership agrees with the Macaulay matrix oracle") {
  int members = 0;
  const auto res = oracle::membership_suite(20240901, 100, &members);
  CHECK_MESSAGE(res.ok(), res.first_failure);
  CHECK(res.total == 100);
  CHECK(members >= 50);
  CHECK(members < 100);
}

TEST_CASE("saturation is idempotent") {
  const auto res = oracle::saturation_suite(77, 50);
  CHECK_MESSAGE(res.ok(), res.first_failure);
}

TEST_CASE("monomial order axioms") {
  const auto res = oracle::order_suite(5, 1000);
  CHECK_MESSAGE(res.ok(), res.first_failure);
  CHECK(res.total == 1000);
}

TEST_CASE("S-polynomials of returned bases reduce to zero") {
  const auto res = oracle::spair_suite();
  CHECK_MESSAGE(res.ok(), res.first_failure);
}

TEST_CASE("textbook division agrees with the engine") {
  oracle::Generator gen(11);
  auto ring = make_ring({"x", "y", "z"});
  for (int i = 0; i < 40; ++i) {
    const Ideal I(ring, gen.homogeneous_ideal(ring, 3, 2));
    const Polynomial f = gen.form(ring, 3, 4);
    CHECK(oracle::remainder(f, I.groebner_basis()) == I.normal_form(f));
  }
}

TEST_CASE("secant dimensions are monotone and capped") {
  auto r = make_ring({"x0", "x1", "x2", "x3"});
  const char* curves[] = {"x0*x2 - x1^2, x1*x3 - x2^2, x0*x3 - x1*x2", "x0*x3 - x1*x2, x0^2 - x1^2 - x3^2"};
  for (const char* text : curves) {
    const ProjScheme X = projective(r, parse_polynomial_list(r, text));
    std::vector<SecantDim> dims;
    const long rx = r_of(X, &dims);
    for (std::size_t i = 1; i < dims.size(); ++i) CHECK(dims[i].dim >= dims[i - 1].dim);
    for (const auto& s : dims) CHECK(s.dim <= std::min<long>(3, s.k * (X.dim() + 1) - 1));
    CHECK(dims.at(static_cast<std::size_t>(rx)).dim >= 2);
    if (rx > 0) CHECK(dims.at(static_cast<std::size_t>(rx - 1)).dim < 2);
  }
}
