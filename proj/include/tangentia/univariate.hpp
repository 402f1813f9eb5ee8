#pragma once

#include <vector>

#include "tangentia/polycore.hpp"

namespace tangentia {

/// Dense univariate polynomial over Q, coefficients low degree first.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c);
  static UPoly x();
  /// (x - root)^power
  static UPoly linear_power(const Rational& root, unsigned power);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(int i) const;
  Rational leading_coefficient() const;

  Rational eval(const Rational& t) const;
  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// {quotient, remainder}
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
/// g / gcd(g, g'), monic.
UPoly squarefree_part(const UPoly& g);
/// Multiplicity of `root` as a root of p.
unsigned root_multiplicity(const UPoly& p, const Rational& root);
/// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const UPoly& p);
Rational resultant(const UPoly& a, const UPoly& b);

/// Convert a polynomial that involves at most one variable `var`.
UPoly to_univariate(const Polynomial& p, std::size_t var);
Polynomial from_univariate(const UPoly& u, const Ring& ring, std::size_t var);

}  // namespace tangentia
