#include <algorithm>
#include <sstream>

#include "tangentia/error.hpp"
#include "tangentia/polycore.hpp"

namespace tangentia {

namespace {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring()))
    throw InputError("polynomials belong to different rings");
}

// Sorts descending, merges equal monomials and drops zeros.
std::vector<Term> normalize_terms(const PolyRing& ring,
                                  std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ring.compare(a.exponents, b.exponents) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exponents == t.exponents) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty()) {
        out.back().coefficient = ring.normalize(out.back().coefficient);
        if (out.back().coefficient == 0) out.pop_back();
      }
      out.push_back(std::move(t));
    }
  }
  if (!out.empty()) {
    out.back().coefficient = ring.normalize(out.back().coefficient);
    if (out.back().coefficient == 0) out.pop_back();
  }
  return out;
}

std::vector<Term> merge_terms(const PolyRing& ring, const std::vector<Term>& a,
                              const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size())
      c = -1;
    else if (j == b.size())
      c = 1;
    else
      c = ring.compare(a[i].exponents, b[j].exponents);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Term t = b[j++];
      if (subtract) t.coefficient = ring.normalize(-t.coefficient);
      out.push_back(std::move(t));
    } else {
      Rational s = a[i].coefficient;
      if (subtract)
        s -= b[j].coefficient;
      else
        s += b[j].coefficient;
      s = ring.normalize(s);
      if (s != 0) out.push_back(Term{a[i].exponents, s});
      ++i;
      ++j;
    }
  }
  return out;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.exponents.size() != ring->size())
      throw InputError("exponent vector length does not match the ring");
  Polynomial p(ring);
  p.terms_ = normalize_terms(*ring, std::move(terms));
  return p;
}

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  const std::size_t n = ring->size();
  return monomial(std::move(ring), Monomial(n, 0), c);
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  if (index >= ring->size()) throw InputError("variable index out of range");
  Monomial m(ring->size(), 0);
  m[index] = 1;
  return monomial(std::move(ring), std::move(m), 1);
}

Polynomial Polynomial::monomial(Ring ring, Monomial exponents,
                                const Rational& c) {
  std::vector<Term> t;
  t.push_back(Term{std::move(exponents), c});
  return from_terms(std::move(ring), std::move(t));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 &&
                            std::all_of(terms_[0].exponents.begin(),
                                        terms_[0].exponents.end(),
                                        [](Exponent e) { return e == 0; }));
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw InputError("zero polynomial has no leading term");
  return terms_.front();
}

long Polynomial::total_degree() const {
  long best = -1;
  for (const auto& t : terms_) {
    long d = 0;
    for (auto e : t.exponents) d += e;
    best = std::max(best, d);
  }
  return best;
}

long Polynomial::degree_in(std::size_t var) const {
  long best = -1;
  for (const auto& t : terms_) best = std::max<long>(best, t.exponents[var]);
  return best;
}

bool Polynomial::is_homogeneous() const {
  return is_homogeneous_in(std::vector<bool>(ring_->size(), true));
}

bool Polynomial::is_homogeneous_in(const std::vector<bool>& mask) const {
  long d = -1;
  for (const auto& t : terms_) {
    long td = 0;
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      if (mask[i]) td += t.exponents[i];
    if (d < 0) d = td;
    if (td != d) return false;
  }
  return true;
}

bool Polynomial::uses_only(const std::vector<bool>& allowed) const {
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      if (t.exponents[i] != 0 && !allowed[i]) return false;
  return true;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const Rational& c) const {
  const Rational cn = ring_->normalize(c);
  Polynomial out(ring_);
  if (cn == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_)
    t.coefficient = ring_->normalize(t.coefficient * cn);
  return out;
}

Polynomial Polynomial::multiply_monomial(const Monomial& m,
                                         const Rational& c) const {
  const Rational cn = ring_->normalize(c);
  Polynomial out(ring_);
  if (cn == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial e = t.exponents;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += m[i];
    out.terms_.push_back(Term{std::move(e), ring_->normalize(t.coefficient * cn)});
  }
  return out;  // monomial multiplication preserves the order
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->inverse(leading_coefficient()));
}

Rational Polynomial::eval(std::span<const Rational> point) const {
  if (point.size() != ring_->size())
    throw InputError("evaluation point has the wrong number of coordinates");
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (Exponent e = 0; e < t.exponents[i]; ++e) v *= point[i];
    }
    total += v;
  }
  return ring_->normalize(total);
}

Polynomial Polynomial::partial_derivative(std::size_t var) const {
  if (var >= ring_->size()) throw InputError("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exponents[var] == 0) continue;
    Term d = t;
    d.coefficient *= t.exponents[var];
    d.exponents[var] -= 1;
    out.push_back(std::move(d));
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::substitute(const Ring& target,
                                  std::span<const Polynomial> images) const {
  if (images.size() != ring_->size())
    throw InputError("substitution needs one image per variable");
  for (const auto& im : images)
    if (!same_ring(im.ring(), target))
      throw InputError("substitution images must live in the target ring");
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, Exponent e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial total(target);
  for (const auto& t : terms_) {
    Polynomial v = constant(target, t.coefficient);
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      if (t.exponents[i] != 0) v = v * power(i, t.exponents[i]);
    total = total + v;
  }
  return total;
}

Polynomial Polynomial::remap(const Ring& target,
                             std::span<const std::size_t> var_map) const {
  if (var_map.size() != ring_->size())
    throw InputError("variable map has the wrong length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial e(target->size(), 0);
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      if (var_map[i] >= target->size())
        throw InputError("variable map points outside the target ring");
      e[var_map[i]] += t.exponents[i];
    }
    out.push_back(Term{std::move(e), t.coefficient});
  }
  return from_terms(target, std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool any_var = false;
    std::ostringstream vars;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      if (any_var) vars << "*";
      vars << ring_->name(i);
      if (t.exponents[i] > 1) vars << "^" << t.exponents[i];
      any_var = true;
    }
    if (!any_var) {
      os << c.get_str();
    } else if (c == 1) {
      os << vars.str();
    } else {
      os << c.get_str() << "*" << vars.str();
    }
  }
  return os.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  Polynomial out(a.ring_);
  out.terms_ = merge_terms(*a.ring_, a.terms_, b.terms_, false);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  Polynomial out(a.ring_);
  out.terms_ = merge_terms(*a.ring_, a.terms_, b.terms_, true);
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (a.size() == 1) return b.multiply_monomial(a.terms_[0].exponents, a.terms_[0].coefficient);
  if (b.size() == 1) return a.multiply_monomial(b.terms_[0].exponents, b.terms_[0].coefficient);
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Monomial e = s.exponents;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += t.exponents[i];
      prod.push_back(Term{std::move(e), s.coefficient * t.coefficient});
    }
  }
  Polynomial out(a.ring_);
  out.terms_ = normalize_terms(*a.ring_, std::move(prod));
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exponents != b.terms_[i].exponents ||
        a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  }
  return true;
}

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }

std::pair<Polynomial, Polynomial> divide(const Polynomial& f,
                                         const Polynomial& g) {
  require_same_ring(f, g);
  if (g.is_zero()) throw InputError("division by the zero polynomial");
  const Ring& ring = f.ring();
  std::vector<Term> quotient;
  std::vector<Term> remainder;
  Polynomial p = f;
  const Term& lg = g.leading_term();
  const Rational inv = ring->inverse(lg.coefficient);
  while (!p.is_zero()) {
    const Term& lp = p.leading_term();
    if (divides(lg.exponents, lp.exponents)) {
      Monomial m = lp.exponents;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] -= lg.exponents[i];
      const Rational c = ring->normalize(lp.coefficient * inv);
      quotient.push_back(Term{m, c});
      p = p - g.multiply_monomial(m, c);
    } else {
      remainder.push_back(lp);
      std::vector<Term> rest(p.terms().begin() + 1, p.terms().end());
      p = Polynomial::from_terms(ring, std::move(rest));
    }
  }
  return {Polynomial::from_terms(ring, std::move(quotient)),
          Polynomial::from_terms(ring, std::move(remainder))};
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  auto [q, r] = divide(f, g);
  if (!r.is_zero())
    throw InputError("exact division failed: " + g.to_string() +
                     " does not divide " + f.to_string());
  return q;
}

Polynomial resultant(const Polynomial& f, const Polynomial& g,
                     std::size_t var) {
  require_same_ring(f, g);
  const Ring& ring = f.ring();
  if (f.is_zero() || g.is_zero()) return Polynomial(ring);
  auto coefficients = [&](const Polynomial& p) {
    const long d = p.degree_in(var);
    std::vector<std::vector<Term>> parts(static_cast<std::size_t>(d) + 1);
    for (const auto& t : p.terms()) {
      Term s = t;
      const Exponent e = s.exponents[var];
      s.exponents[var] = 0;
      parts[e].push_back(std::move(s));
    }
    std::vector<Polynomial> out;
    for (auto& part : parts)
      out.push_back(Polynomial::from_terms(ring, std::move(part)));
    return out;  // out[j] = coefficient of var^j
  };
  const auto cf = coefficients(f);
  const auto cg = coefficients(g);
  const std::size_t m = cf.size() - 1;
  const std::size_t n = cg.size() - 1;
  if (m == 0 && n == 0) return Polynomial::constant(ring, 1);
  if (m == 0) return cf[0].pow(static_cast<unsigned>(n));
  if (n == 0) return cg[0].pow(static_cast<unsigned>(m));
  const std::size_t size = m + n;
  std::vector<std::vector<Polynomial>> s(
      size, std::vector<Polynomial>(size, Polynomial(ring)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) s[r][r + j] = cf[m - j];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) s[n + r][r + j] = cg[n - j];
  // Bareiss fraction-free elimination.
  Polynomial previous = Polynomial::constant(ring, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (s[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < size && s[swap][k].is_zero()) ++swap;
      if (swap == size) return Polynomial(ring);
      std::swap(s[k], s[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        Polynomial num = s[k][k] * s[i][j] - s[i][k] * s[k][j];
        s[i][j] = divide_exact(num, previous);
      }
      s[i][k] = Polynomial(ring);
    }
    previous = s[k][k];
  }
  Polynomial det = s[size - 1][size - 1];
  return negate ? -det : det;
}

}  // namespace tangentia
