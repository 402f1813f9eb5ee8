#include <algorithm>
#include <mutex>

#include "engine.hpp"
#include "tangentia/error.hpp"
#include "tangentia/groebner.hpp"

namespace tangentia {

namespace {

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial quotient_monomial(const Monomial& a, const Monomial& b) {
  Monomial q(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) q[i] = a[i] - b[i];
  return q;
}

}  // namespace

NormalForm reduce(const Polynomial& f, std::span<const Polynomial> G) {
  const Ring& ring = f.ring();
  for (const auto& g : G)
    if (!same_ring(g.ring(), ring)) throw InputError("reduce: divisor from a different ring");
  std::vector<Term> rest;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    const Polynomial* divisor = nullptr;
    for (const auto& g : G)
      if (!g.is_zero() && divides(g.leading_monomial(), lt.exponents)) {
        divisor = &g;
        break;
      }
    if (divisor) {
      const Rational c = lt.coefficient * ring->inverse(divisor->leading_coefficient());
      p = p - divisor->multiply_monomial(quotient_monomial(lt.exponents, divisor->leading_monomial()), c);
    } else {
      rest.push_back(lt);
      p = p - Polynomial::monomial(ring, lt.exponents, lt.coefficient);
    }
  }
  return {Polynomial::from_terms(ring, std::move(rest)), false};
}

std::vector<Polynomial> buchberger(const Ring& ring, std::span<const Polynomial> gens) {
  return detail::groebner_basis(ring, gens);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
  const Ring& ring = f.ring();
  const Monomial& a = f.leading_monomial();
  const Monomial& b = g.leading_monomial();
  Monomial l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return f.multiply_monomial(quotient_monomial(l, a), ring->inverse(f.leading_coefficient())) -
         g.multiply_monomial(quotient_monomial(l, b), ring->inverse(g.leading_coefficient()));
}

bool is_groebner_basis(std::span<const Polynomial> G) {
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      if (!reduce(s_polynomial(G[i], G[j]), G).remainder.is_zero()) return false;
  return true;
}

// ---- Ideal ----------------------------------------------------------------

struct Ideal::Cache {
  std::once_flag gb_once;
  std::vector<Polynomial> gb;
  std::once_flag dim_once;
  long dim = -1;
};

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw InputError("ideal generator from a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(Ring ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::call_once(cache_->gb_once, [&] { cache_->gb = detail::groebner_basis(ring_, gens_); });
  return cache_->gb;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

bool Ideal::is_zero() const { return gens_.empty(); }

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring_)) throw InputError("normal form: polynomial from a different ring");
  return detail::normal_form(f, groebner_basis());
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::same_ideal(const Ideal& other) const {
  if (!same_ring(ring_, other.ring_)) {
    if (ring_->names() != other.ring_->names() ||
        ring_->characteristic() != other.ring_->characteristic())
      throw InputError("comparing ideals of different rings");
    return same_ideal(other.with_order(ring_->order()));
  }
  const auto& a = groebner_basis();
  const auto& b = other.groebner_basis();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

long Ideal::dimension() const {
  std::call_once(cache_->dim_once, [&] {
    if (is_unit()) {
      cache_->dim = -1;
      return;
    }
    const auto lms = leading_monomials(groebner_basis());
    cache_->dim = monomial_dimension(ring_->size(), lms);
  });
  return cache_->dim;
}

Ideal Ideal::with_order(MonomialOrder order) const {
  if (order == ring_->order()) return *this;
  Ring target = ring_->with_order(order);
  std::vector<std::size_t> identity(ring_->size());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
  return remap(target, identity);
}

Ideal Ideal::remap(const Ring& target, std::span<const std::size_t> var_map) const {
  std::vector<Polynomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.remap(target, var_map));
  return Ideal(target, std::move(out));
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (!same_ring(ring_, other.ring_)) throw InputError("sum of ideals from different rings");
  std::vector<Polynomial> g = gens_;
  g.insert(g.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::operator*(const Ideal& other) const {
  if (!same_ring(ring_, other.ring_)) throw InputError("product of ideals from different rings");
  std::vector<Polynomial> g;
  for (const auto& a : gens_)
    for (const auto& b : other.gens_) g.push_back(a * b);
  return Ideal(ring_, std::move(g));
}

bool member(const Polynomial& f, const Ideal& I) { return I.contains(f); }

long dimension(const Ideal& I) { return I.dimension(); }

std::vector<Monomial> leading_monomials(std::span<const Polynomial> basis) {
  std::vector<Monomial> out;
  for (const auto& g : basis)
    if (!g.is_zero()) out.push_back(g.leading_monomial());
  return out;
}

}  // namespace tangentia
