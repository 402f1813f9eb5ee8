#pragma once

#include <memory>
#include <span>
#include <vector>

#include "tangentia/polycore.hpp"

namespace tangentia {

struct NormalForm {
  Polynomial remainder;
  /// The divisor list is a Gröbner basis, so the remainder is canonical.
  bool certified = false;
};

/// Multivariate division of f by the list G (in order, full reduction).
NormalForm reduce(const Polynomial& f, std::span<const Polynomial> G);

/// Reduced Gröbner basis, monic, sorted by descending leading monomial.
std::vector<Polynomial> buchberger(const Ring& ring, std::span<const Polynomial> gens);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Every S-polynomial reduces to zero modulo G.
bool is_groebner_basis(std::span<const Polynomial> G);

struct HilbertSeries {
  /// K(t) with H(t) = K(t) / (1 - t)^n, n the number of variables.
  std::vector<Integer> numerator;
  /// Same series reduced to h(t) / (1 - t)^dimension with h(1) != 0.
  std::vector<Integer> reduced_numerator;
  long dimension = -1;
  Integer degree = 0;
};

/// Ideal with a lazily computed, write-once reduced Gröbner basis.  Copies
/// share the cache.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> generators);
  static Ideal zero(Ring ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(Ring ring);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }

  const std::vector<Polynomial>& groebner_basis() const;
  bool is_unit() const;
  bool is_zero() const;
  bool is_homogeneous() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  /// Same ideal (equal reduced Gröbner bases up to ring order).
  bool same_ideal(const Ideal& other) const;

  /// Krull dimension of R/I; -1 for the unit ideal.
  long dimension() const;
  HilbertSeries hilbert_series() const;

  /// Same polynomials in the same variables under a different order.
  Ideal with_order(MonomialOrder order) const;
  /// Move generators into `target` sending variable i to var_map[i].
  Ideal remap(const Ring& target, std::span<const std::size_t> var_map) const;

  Ideal operator+(const Ideal& other) const;
  Ideal operator*(const Ideal& other) const;

 private:
  struct Cache;
  Ring ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

bool member(const Polynomial& f, const Ideal& I);

/// I must live in a block(k) ring; returns I ∩ Q[trailing variables] in a
/// grevlex ring on the trailing names.
Ideal eliminate(const Ideal& I, std::size_t k);

/// Eliminate the named variables of any ring; the result lives in a grevlex ring on
/// the remaining variables, in their original order.
Ideal eliminate_variables(const Ideal& I, const std::vector<std::size_t>& vars);

Ideal intersect(const Ideal& I, const Ideal& J);
Ideal quotient(const Ideal& I, const Polynomial& f);
Ideal quotient(const Ideal& I, const Ideal& J);

/// I : J^∞ by iterated quotients until the Gröbner basis stabilizes.
Ideal saturate(const Ideal& I, const Ideal& J);
/// I : f^∞ through one auxiliary variable: (I + (1 - t f)) ∩ R.
Ideal saturate_principal(const Ideal& I, const Polynomial& f);
/// I : x^∞ for a variable x; homogeneous I uses the reverse-lex division
/// trick, otherwise the auxiliary-variable route.
Ideal saturate_by_variable(const Ideal& I, std::size_t var);
/// Saturation by the irrelevant ideal (x_0, ..., x_n).
Ideal saturate_irrelevant(const Ideal& I);

long dimension(const Ideal& I);

/// f ∈ √I, decided by 1 ∈ I + (1 - t f).
bool radical_member(const Polynomial& f, const Ideal& I);

/// Radical of an ideal defining finitely many points: affine dimension 0,
/// or homogeneous of affine dimension at most 1.  Throws UnsupportedError
/// otherwise.
Ideal radical_zero_dim(const Ideal& I);

/// Monic generator of I ∩ Q[x_var] for a zero-dimensional I.
Polynomial univariate_eliminant(const Ideal& I, std::size_t var);

/// Leading monomials of a Gröbner basis.
std::vector<Monomial> leading_monomials(std::span<const Polynomial> basis);
/// Krull dimension of R / (monomials), maximal independent set search.
long monomial_dimension(std::size_t n, std::span<const Monomial> monomials);

}  // namespace tangentia
