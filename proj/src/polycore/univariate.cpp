#include "tangentia/univariate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tangentia/error.hpp"
#include "tangentia/linalg.hpp"

namespace tangentia {

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly({c}); }
UPoly UPoly::x() { return UPoly({0, 1}); }

UPoly UPoly::linear_power(const Rational& root, unsigned power) {
  UPoly base({-root, 1});
  UPoly out = constant(1);
  for (unsigned i = 0; i < power; ++i) out = out * base;
  return out;
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UPoly::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational UPoly::leading_coefficient() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational UPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d.push_back(coeffs_[i] * static_cast<long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = coeffs_;
  const Rational lc = c.back();
  for (auto& v : c) v /= lc;
  return UPoly(std::move(c));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UPoly(std::move(c));
}

std::string UPoly::to_string(const std::string& var) const {
  auto ring = make_ring({var});
  return from_univariate(*this, ring, 0).to_string();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw InputError("univariate division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational lb = b.leading_coefficient();
  for (int i = a.degree(); i >= db; --i) {
    const Rational c = rem[static_cast<std::size_t>(i)] / lb;
    quo[static_cast<std::size_t>(i - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] -= c * b.coefficient(j);
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& g) {
  if (g.degree() <= 0) return g.monic();
  return divmod(g, gcd(g, g.derivative())).first.monic();
}

unsigned root_multiplicity(const UPoly& p, const Rational& root) {
  if (p.is_zero()) throw InputError("multiplicity of a root of the zero polynomial");
  unsigned m = 0;
  UPoly q = p;
  const UPoly lin({-root, 1});
  for (;;) {
    auto [quo, rem] = divmod(q, lin);
    if (!rem.is_zero()) return m;
    ++m;
    q = quo;
  }
}

namespace {

// Positive divisors by trial division.
std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<std::pair<Integer, unsigned>> factors;
  Integer d = 2;
  while (d * d <= n) {
    if (d > 10000000) throw CapacityError("rational root search: coefficient too large to factor");
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) factors.emplace_back(d, e);
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<Integer> out{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p) {
  if (p.is_zero()) throw InputError("rational roots of the zero polynomial");
  UPoly q = squarefree_part(p);
  std::set<Rational> roots;
  if (q.degree() <= 0) return {};
  if (q.coefficient(0) == 0) {
    roots.insert(0);
    q = divmod(q, UPoly::x()).first;
  }
  if (q.degree() >= 1) {
    // Clear denominators to get an integer polynomial.
    Integer lcm = 1;
    for (const auto& c : q.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ints;
    for (const auto& c : q.coefficients()) ints.push_back(Rational(c * lcm).get_num());
    const auto num_divs = divisors(ints.front());
    const auto den_divs = divisors(ints.back());
    for (const auto& a : num_divs)
      for (const auto& b : den_divs)
        for (int sign : {1, -1}) {
          Rational r(a * sign, b);
          r.canonicalize();
          if (q.eval(r) == 0) roots.insert(r);
        }
  }
  return {roots.begin(), roots.end()};
}

Rational resultant(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree(), n = b.degree();
  if (m == 0 && n == 0) return 1;
  const std::size_t size = static_cast<std::size_t>(m + n);
  RationalMatrix s(size, size);
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j)
      s(static_cast<std::size_t>(r), static_cast<std::size_t>(r + j)) = a.coefficient(m - j);
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j)
      s(static_cast<std::size_t>(n + r), static_cast<std::size_t>(r + j)) = b.coefficient(n - j);
  return determinant(std::move(s));
}

UPoly to_univariate(const Polynomial& p, std::size_t var) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max<long>(p.degree_in(var), -1) + 1));
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      if (i != var && t.exponents[i] != 0)
        throw InputError("polynomial is not univariate in the requested variable: " +
                         p.to_string());
    c[t.exponents[var]] += t.coefficient;
  }
  return UPoly(std::move(c));
}

Polynomial from_univariate(const UPoly& u, const Ring& ring, std::size_t var) {
  std::vector<Term> terms;
  for (int i = 0; i <= u.degree(); ++i) {
    if (u.coefficient(i) == 0) continue;
    Monomial m(ring->size(), 0);
    m[var] = static_cast<Exponent>(i);
    terms.push_back(Term{std::move(m), u.coefficient(i)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace tangentia
