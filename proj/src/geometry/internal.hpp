#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tangentia/geometry.hpp"

namespace tangentia::detail {

/// Small integers in [-10, 10] from a seeded generator.
class SmallInts {
 public:
  explicit SmallInts(std::uint64_t seed) : gen_(seed), dist_(-10, 10) {}
  long next() { return dist_(gen_); }
  long nonzero() {
    for (;;)
      if (long v = next(); v != 0) return v;
  }

 private:
  std::mt19937_64 gen_;
  std::uniform_int_distribution<long> dist_;
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Rows are gradients of the given polynomials.
PolyMatrix jacobian(std::span<const Polynomial> polys);

/// Determinant by cofactor expansion (sizes up to about 5).
Polynomial determinant(const Ring& ring, const PolyMatrix& m);

/// All k-subsets of {0, ..., n-1}, lexicographic.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

/// k x k minors taking all rows in `fixed_rows` plus k - |fixed| others.
std::vector<Polynomial> minors(const Ring& ring, const PolyMatrix& m, std::size_t k,
                               const std::vector<std::size_t>& fixed_rows = {});

/// Coefficient vector of a linear form.
std::vector<Rational> linear_coefficients(const Polynomial& form);
Polynomial linear_form(const Ring& ring, const std::vector<Rational>& coeffs);

/// Row-reduced basis of the linear forms among `polys`' span.
std::vector<Polynomial> linear_basis(const Ring& ring, const std::vector<std::vector<Rational>>& rows);

/// Degree-1 elements of a homogeneous ideal (its saturated generators).
std::vector<Polynomial> degree_one_part(const Ideal& I);

/// Random integer combination of `polys`.
Polynomial random_combination(const Ring& ring, std::span<const Polynomial> polys, SmallInts& rng);

/// h vanishes on no associated component of I (I : h == I).
bool nonzerodivisor(const Ideal& I, const Polynomial& h);

/// c polynomials of I_X used as local equations: a subset of the generators
/// whose Jacobian has full rank generically on every component, else random
/// combinations.
std::vector<Polynomial> generic_equations(const Ideal& I, std::size_t c, SmallInts& rng);

/// Polynomial that vanishes on the singular locus of X (and on the locus
/// where `eqs` fail to cut X transversally) but not on X.
Polynomial singular_witness(const ProjScheme& X, const std::vector<Polynomial>& eqs, std::size_t c,
                            SmallInts& rng);

}  // namespace tangentia::detail
