#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tangentia {

using Integer = mpz_class;
using Rational = mpq_class;
using Exponent = std::uint32_t;
using Monomial = std::vector<Exponent>;

/// Total monomial order tag.  `block(k)` compares the first k variables by
/// grevlex and breaks ties with grevlex on the rest, so it eliminates the
/// leading block.
struct MonomialOrder {
  enum class Kind { Grevlex, Lex, Block };

  Kind kind = Kind::Grevlex;
  std::size_t block = 0;

  static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder block_order(std::size_t k) { return {Kind::Block, k}; }

  std::string to_string() const;
  bool operator==(const MonomialOrder&) const = default;
};

class PolyRing;
using Ring = std::shared_ptr<const PolyRing>;

/// Polynomial ring over Q (characteristic 0) or over F_p for cross-checks.
class PolyRing {
 public:
  /// Throws InputError on duplicate or empty names, on a block size outside
  /// [1, n), and on a modulus that is not a prime above 2^30.
  static Ring make(std::vector<std::string> names,
                   MonomialOrder order = MonomialOrder::grevlex(),
                   std::uint64_t characteristic = 0);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  const MonomialOrder& order() const noexcept { return order_; }
  std::uint64_t characteristic() const noexcept { return characteristic_; }

  /// Three-way comparison of exponent vectors: negative, zero or positive.
  int compare(const Monomial& a, const Monomial& b) const;

  /// Canonical representative of a scalar in the coefficient field.
  Rational normalize(const Rational& c) const;
  Rational inverse(const Rational& c) const;

  bool same_as(const PolyRing& other) const;

  /// Same variables and characteristic, different order.
  Ring with_order(MonomialOrder order) const;

 private:
  PolyRing() = default;

  std::vector<std::string> names_;
  MonomialOrder order_;
  std::uint64_t characteristic_ = 0;
};

Ring make_ring(std::vector<std::string> names,
               MonomialOrder order = MonomialOrder::grevlex());

bool same_ring(const Ring& a, const Ring& b);

/// `base`, or `base` with a numeric suffix, not already a variable of `ring`.
std::string fresh_variable_name(const PolyRing& ring, std::string_view base);

struct Term {
  Monomial exponents;
  Rational coefficient;
};

/// Immutable sparse polynomial; terms strictly descending in the ring order,
/// coefficients nonzero and canonical.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial from_terms(Ring ring, std::vector<Term> terms);
  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial variable(Ring ring, std::size_t index);
  static Polynomial monomial(Ring ring, Monomial exponents,
                             const Rational& c = 1);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().exponents; }
  const Rational& leading_coefficient() const {
    return leading_term().coefficient;
  }

  /// -1 for the zero polynomial.
  long total_degree() const;
  long degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  /// Homogeneous in the variables selected by `mask` (other variables ignored).
  bool is_homogeneous_in(const std::vector<bool>& mask) const;
  bool uses_only(const std::vector<bool>& allowed) const;

  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial multiply_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned k) const;
  Polynomial monic() const;

  Rational eval(std::span<const Rational> point) const;
  Polynomial partial_derivative(std::size_t var) const;

  /// Substitute variable i by images[i]; images live in a common target ring.
  Polynomial substitute(const Ring& target,
                        std::span<const Polynomial> images) const;
  /// Move into `target`, sending variable i to variable var_map[i].
  Polynomial remap(const Ring& target,
                   std::span<const std::size_t> var_map) const;

  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);

/// Quotient f / g; throws InputError when g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// Multivariate division by a single polynomial: {quotient, remainder}.
std::pair<Polynomial, Polynomial> divide(const Polynomial& f,
                                         const Polynomial& g);

/// Resultant with respect to `var`, by fraction-free elimination on the
/// Sylvester matrix.
Polynomial resultant(const Polynomial& f, const Polynomial& g,
                     std::size_t var);

/// All exponent vectors of total degree d in n variables, descending lex.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d);

Integer binomial(unsigned long n, unsigned long k);

/// Parse with the shared grammar: `+ - * ^`, parentheses, integer and
/// `a/b` literals.  Unknown identifiers raise ParseError.
Polynomial parse_polynomial(const Ring& ring, std::string_view text);

/// Comma-separated list of polynomials.
std::vector<Polynomial> parse_polynomial_list(const Ring& ring,
                                              std::string_view text);

/// Identifiers occurring in an expression, in first-occurrence order.
std::vector<std::string> scan_identifiers(std::string_view text);

/// Degree-d slice of the ideal generated by homogeneous `gens`.
struct GradedPiece {
  unsigned degree = 0;
  std::vector<Polynomial> basis;
  Integer ambient_dim;

  std::size_t dimension() const noexcept { return basis.size(); }
};

GradedPiece graded_piece_basis(const Ring& ring,
                               std::span<const Polynomial> gens, unsigned d);

}  // namespace tangentia
