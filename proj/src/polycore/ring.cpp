#include <algorithm>
#include <set>

#include "tangentia/error.hpp"
#include "tangentia/polycore.hpp"

namespace tangentia {

namespace {

long partial_degree(const Monomial& m, std::size_t begin, std::size_t end) {
  long d = 0;
  for (std::size_t i = begin; i < end; ++i) d += m[i];
  return d;
}

// grevlex restricted to [begin, end)
int grevlex_compare(const Monomial& a, const Monomial& b, std::size_t begin,
                    std::size_t end) {
  const long da = partial_degree(a, begin, end);
  const long db = partial_degree(b, begin, end);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = end; i-- > begin;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

std::string MonomialOrder::to_string() const {
  switch (kind) {
    case Kind::Grevlex:
      return "grevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Block:
      return "block(" + std::to_string(block) + ")";
  }
  return "?";
}

Ring PolyRing::make(std::vector<std::string> names, MonomialOrder order,
                    std::uint64_t characteristic) {
  if (names.empty()) throw InputError("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw InputError("empty variable name");
    if (!seen.insert(n).second)
      throw InputError("duplicate variable name '" + n + "'");
  }
  if (order.kind == MonomialOrder::Kind::Block &&
      (order.block < 1 || order.block >= names.size()))
    throw InputError("block order needs 1 <= k < number of variables");
  if (characteristic != 0) {
    Integer p(static_cast<unsigned long>(characteristic));
    if (characteristic <= (std::uint64_t{1} << 30) ||
        characteristic >= (std::uint64_t{1} << 32) ||
        mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
      throw InputError("prime field modulus must be a prime in (2^30, 2^32)");
  }
  auto ring = std::shared_ptr<PolyRing>(new PolyRing());
  ring->names_ = std::move(names);
  ring->order_ = order;
  ring->characteristic_ = characteristic;
  return ring;
}

Ring make_ring(std::vector<std::string> names, MonomialOrder order) {
  return PolyRing::make(std::move(names), order, 0);
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

int PolyRing::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = names_.size();
  switch (order_.kind) {
    case MonomialOrder::Kind::Grevlex:
      return grevlex_compare(a, b, 0, n);
    case MonomialOrder::Kind::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case MonomialOrder::Kind::Block: {
      const int c = grevlex_compare(a, b, 0, order_.block);
      if (c != 0) return c;
      return grevlex_compare(a, b, order_.block, n);
    }
  }
  return 0;
}

Rational PolyRing::normalize(const Rational& c) const {
  if (characteristic_ == 0) return c;
  const Integer p(static_cast<unsigned long>(characteristic_));
  Integer num = c.get_num() % p;
  if (num < 0) num += p;
  Integer den = c.get_den() % p;
  if (den == 0) throw InputError("denominator divisible by the field modulus");
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  Integer r = (num * inv) % p;
  return Rational(r);
}

Rational PolyRing::inverse(const Rational& c) const {
  if (c == 0) throw InputError("division by zero");
  if (characteristic_ == 0) return 1 / c;
  const Integer p(static_cast<unsigned long>(characteristic_));
  Integer v = normalize(c).get_num();
  Integer inv;
  mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return Rational(inv);
}

bool PolyRing::same_as(const PolyRing& other) const {
  return names_ == other.names_ && order_ == other.order_ &&
         characteristic_ == other.characteristic_;
}

Ring PolyRing::with_order(MonomialOrder order) const {
  return make(names_, order, characteristic_);
}

bool same_ring(const Ring& a, const Ring& b) {
  return a == b || (a && b && a->same_as(*b));
}

std::string fresh_variable_name(const PolyRing& ring, std::string_view base) {
  std::string name(base);
  for (unsigned k = 0; ring.index_of(name); ++k) name = std::string(base) + std::to_string(k);
  return name;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial current(n, 0);
  // Recursive enumeration, first variable's exponent descending.
  auto rec = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
    if (i + 1 == n) {
      current[i] = remaining;
      out.push_back(current);
      return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
      current[i] = e;
      self(self, i + 1, remaining - e);
    }
    current[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace tangentia
