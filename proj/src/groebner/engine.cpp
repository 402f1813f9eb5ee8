#include "engine.hpp"

#include <algorithm>
#include <cstdint>

#include "tangentia/deadline.hpp"
#include "tangentia/error.hpp"

namespace tangentia::detail {

namespace {

// Exponent vectors are stored flat with two leading weight slots:
// [w0, w1, e0, ..., e(n-1)].  For grevlex w0 is the total degree, for a
// block order w0/w1 are the degrees of the two blocks, lex ignores them.
class Layout {
 public:
  explicit Layout(const PolyRing& ring)
      : n_(ring.size()), kind_(ring.order().kind), block_(ring.order().block) {}

  std::size_t vars() const { return n_; }
  std::size_t stride() const { return n_ + 2; }

  void fill_weights(Exponent* m) const {
    Exponent* e = m + 2;
    switch (kind_) {
      case MonomialOrder::Kind::Grevlex: {
        Exponent d = 0;
        for (std::size_t i = 0; i < n_; ++i) d += e[i];
        m[0] = d;
        m[1] = 0;
        break;
      }
      case MonomialOrder::Kind::Block: {
        Exponent d0 = 0, d1 = 0;
        for (std::size_t i = 0; i < block_; ++i) d0 += e[i];
        for (std::size_t i = block_; i < n_; ++i) d1 += e[i];
        m[0] = d0;
        m[1] = d1;
        break;
      }
      case MonomialOrder::Kind::Lex:
        m[0] = m[1] = 0;
        break;
    }
  }

  int compare(const Exponent* a, const Exponent* b) const {
    const Exponent* ea = a + 2;
    const Exponent* eb = b + 2;
    switch (kind_) {
      case MonomialOrder::Kind::Grevlex:
        if (a[0] != b[0]) return a[0] < b[0] ? -1 : 1;
        for (std::size_t i = n_; i-- > 0;)
          if (ea[i] != eb[i]) return ea[i] < eb[i] ? 1 : -1;
        return 0;
      case MonomialOrder::Kind::Block:
        if (a[0] != b[0]) return a[0] < b[0] ? -1 : 1;
        for (std::size_t i = block_; i-- > 0;)
          if (ea[i] != eb[i]) return ea[i] < eb[i] ? 1 : -1;
        if (a[1] != b[1]) return a[1] < b[1] ? -1 : 1;
        for (std::size_t i = n_; i-- > block_;)
          if (ea[i] != eb[i]) return ea[i] < eb[i] ? 1 : -1;
        return 0;
      case MonomialOrder::Kind::Lex:
        for (std::size_t i = 0; i < n_; ++i)
          if (ea[i] != eb[i]) return ea[i] < eb[i] ? -1 : 1;
        return 0;
    }
    return 0;
  }

  Exponent degree(const Exponent* m) const {
    Exponent d = 0;
    for (std::size_t i = 0; i < n_; ++i) d += m[2 + i];
    return d;
  }

  std::uint64_t mask(const Exponent* m) const {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < n_; ++i)
      if (m[2 + i] != 0) bits |= std::uint64_t{1} << (i % 64);
    return bits;
  }

  bool divides(const Exponent* a, const Exponent* b) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (a[2 + i] > b[2 + i]) return false;
    return true;
  }

  bool coprime(const Exponent* a, const Exponent* b) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (a[2 + i] != 0 && b[2 + i] != 0) return false;
    return true;
  }

  void lcm(const Exponent* a, const Exponent* b, Exponent* out) const {
    for (std::size_t i = 0; i < n_; ++i) out[2 + i] = std::max(a[2 + i], b[2 + i]);
    fill_weights(out);
  }

  // out = a / b, assumes b | a
  void quotient(const Exponent* a, const Exponent* b, Exponent* out) const {
    for (std::size_t i = 0; i < n_; ++i) out[2 + i] = a[2 + i] - b[2 + i];
    fill_weights(out);
  }

 private:
  std::size_t n_;
  MonomialOrder::Kind kind_;
  std::size_t block_;
};

// ---- coefficient domains --------------------------------------------------

struct IntegerDomain {
  using T = Integer;
  static bool is_zero(const T& v) { return v == 0; }
};

struct PrimeDomain {
  using T = std::uint64_t;
  std::uint64_t p;
  T mul(T a, T b) const { return (a * b) % p; }
  T sub(T a, T b) const { return a >= b ? a - b : a + p - b; }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
  T inv(T a) const {
    // Fermat inverse
    T result = 1, base = a % p;
    std::uint64_t e = p - 2;
    while (e > 0) {
      if (e & 1u) result = mul(result, base);
      base = mul(base, base);
      e >>= 1u;
    }
    return result;
  }
  static bool is_zero(T v) { return v == 0; }
};

template <class C>
struct EPoly {
  std::vector<Exponent> mon;
  std::vector<C> coef;
  std::uint64_t lm_mask = 0;
  Exponent sugar = 0;

  std::size_t size() const { return coef.size(); }
  bool empty() const { return coef.empty(); }
};

// ---- domain specific arithmetic ------------------------------------------

template <class Dom>
class Arith;

template <>
class Arith<IntegerDomain> {
 public:
  using C = Integer;
  explicit Arith(const PolyRing&) {}

  // Returns the integer polynomial corresponding to a rational one (scaled
  // by the lcm of denominators).
  C from_rational(const Rational& r, const Integer& scale) const {
    return Rational(r * scale).get_num();
  }
  Integer scale_for(const Polynomial& p) const {
    Integer lcm = 1;
    for (const auto& t : p.terms())
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.coefficient.get_den_mpz_t());
    return lcm;
  }
  Rational to_rational(const C& c) const { return Rational(c); }

  // Divide by content, leading coefficient positive.  Returns the factor
  // divided out (signed).
  Integer normalize(EPoly<C>& p) const {
    if (p.empty()) return 1;
    Integer g = 0;
    for (const auto& c : p.coef) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    if (p.coef.front() < 0) g = -g;
    if (g != 1)
      for (auto& c : p.coef) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return g;
  }

  // p <- a*p - b*m*g where lc(p)*a == lc(g)*b; the leading terms cancel.
  void step_factors(const C& lcp, const C& lcg, C& a, C& b) const {
    Integer d;
    mpz_gcd(d.get_mpz_t(), lcp.get_mpz_t(), lcg.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), lcg.get_mpz_t(), d.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), lcp.get_mpz_t(), d.get_mpz_t());
    if (a < 0) {
      a = -a;
      b = -b;
    }
  }
  bool is_one(const C& c) const { return c == 1; }
  C times(const C& x, const C& y) const { return x * y; }
  C minus(const C& x, const C& y) const { return x - y; }
  C negate(const C& x) const { return -x; }
  bool zero(const C& c) const { return c == 0; }
};

template <>
class Arith<PrimeDomain> {
 public:
  using C = std::uint64_t;
  explicit Arith(const PolyRing& ring) : dom_{ring.characteristic()} {}

  C from_rational(const Rational& r, const Integer&) const {
    return r.get_num().get_ui();  // coefficients are already reduced mod p
  }
  Integer scale_for(const Polynomial&) const { return 1; }
  Rational to_rational(const C& c) const { return Rational(static_cast<unsigned long>(c)); }

  Integer normalize(EPoly<C>& p) const {
    if (p.empty()) return 1;
    const C inv = dom_.inv(p.coef.front());
    for (auto& c : p.coef) c = dom_.mul(c, inv);
    return 1;
  }
  void step_factors(const C& lcp, const C& lcg, C& a, C& b) const {
    a = 1;
    b = dom_.mul(lcp, dom_.inv(lcg));
  }
  bool is_one(const C& c) const { return c == 1; }
  C times(const C& x, const C& y) const { return dom_.mul(x, y); }
  C minus(const C& x, const C& y) const { return dom_.sub(x, y); }
  C negate(const C& x) const { return dom_.neg(x); }
  bool zero(const C& c) const { return c == 0; }

 private:
  PrimeDomain dom_;
};

// ---- engine ---------------------------------------------------------------

template <class Dom>
class Engine {
 public:
  using A = Arith<Dom>;
  using C = typename A::C;
  using Poly = EPoly<C>;

  Engine(const Ring& ring, EngineStats* stats)
      : ring_(ring), layout_(*ring), arith_(*ring), stats_(stats) {}

  Poly convert(const Polynomial& p) const {
    Poly out;
    const std::size_t s = layout_.stride();
    const Integer scale = arith_.scale_for(p);
    out.mon.resize(p.size() * s);
    out.coef.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto& t = p.terms()[i];
      Exponent* m = &out.mon[i * s];
      for (std::size_t v = 0; v < layout_.vars(); ++v) m[2 + v] = t.exponents[v];
      layout_.fill_weights(m);
      out.coef.push_back(arith_.from_rational(t.coefficient, scale));
    }
    finish(out);
    if (!out.empty()) out.sugar = max_degree(out);
    return out;
  }

  Polynomial to_polynomial(const Poly& p, bool make_monic) const {
    std::vector<Term> terms;
    terms.reserve(p.size());
    const std::size_t s = layout_.stride();
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Exponent* m = &p.mon[i * s];
      terms.push_back(Term{Monomial(m + 2, m + 2 + layout_.vars()), arith_.to_rational(p.coef[i])});
    }
    Polynomial out = Polynomial::from_terms(ring_, std::move(terms));
    return make_monic ? out.monic() : out;
  }

  std::vector<Polynomial> run(std::span<const Polynomial> gens) {
    std::vector<Poly> inputs;
    for (const auto& g : gens) {
      if (!same_ring(g.ring(), ring_)) throw InputError("generator from a different ring");
      if (g.is_zero()) continue;
      Poly p = convert(g);
      arith_.normalize(p);
      inputs.push_back(std::move(p));
    }
    std::sort(inputs.begin(), inputs.end(), [&](const Poly& a, const Poly& b) {
      const int c = layout_.compare(a.mon.data(), b.mon.data());
      if (c != 0) return c < 0;
      return a.size() < b.size();
    });
    for (auto& p : inputs) {
      check_deadline();
      Poly h = reduce(std::move(p), nullptr);
      if (h.empty()) continue;
      if (is_unit(h)) return {Polynomial::constant(ring_, 1)};
      insert(std::move(h));
    }

    while (!pairs_.empty()) {
      check_deadline();
      const std::size_t pick = select_pair();
      Pair pair = std::move(pairs_[pick]);
      pairs_[pick] = std::move(pairs_.back());
      pairs_.pop_back();
      if (stats_) ++stats_->pairs_considered;
      Poly s = spolynomial(pair);
      Poly h = reduce(std::move(s), nullptr);
      if (h.empty()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      if (is_unit(h)) return {Polynomial::constant(ring_, 1)};
      insert(std::move(h));
    }
    return reduced_basis();
  }

  // Exact normal form of f modulo the given basis (true remainder).
  Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
    for (const auto& g : basis) {
      Poly p = convert(g);
      arith_.normalize(p);
      basis_.push_back(std::move(p));
      active_.push_back(true);
    }
    Poly p = convert(f);
    const Integer input_scale = arith_.scale_for(f);
    Rational factor = 1;
    Poly r = reduce(std::move(p), &factor);
    // r == factor * input_scale * f  (mod basis)
    Polynomial out = to_polynomial(r, false);
    return out.scaled(ring_->inverse(factor * Rational(input_scale)));
  }

 private:
  struct Pair {
    std::size_t i, j;
    std::vector<Exponent> lcm;
    Exponent sugar;
  };

  static bool is_unit_mon(const Layout& l, const Exponent* m) { return l.degree(m) == 0; }
  bool is_unit(const Poly& h) const { return is_unit_mon(layout_, h.mon.data()); }

  Exponent max_degree(const Poly& p) const {
    Exponent d = 0;
    const std::size_t s = layout_.stride();
    for (std::size_t i = 0; i < p.size(); ++i) d = std::max(d, layout_.degree(&p.mon[i * s]));
    return d;
  }

  void finish(Poly& p) const {
    if (!p.empty()) p.lm_mask = layout_.mask(p.mon.data());
  }

  // Returns a*P[start..] - b*(m*G[1..]); P's lead at `start` and m*lead(G) cancel.
  Poly combine(const Poly& P, std::size_t start, const C& a, const Poly& G,
               const Exponent* m, const C& b) const {
    const std::size_t s = layout_.stride();
    Poly out;
    const std::size_t np = P.size(), ng = G.size();
    out.mon.reserve((np - start + ng) * s);
    out.coef.reserve(np - start + ng);
    const bool a_one = arith_.is_one(a);
    std::vector<Exponent> buf(s);
    std::size_t i = start + 1, j = 1;
    auto load_g = [&](std::size_t idx) {
      const Exponent* g = &G.mon[idx * s];
      for (std::size_t v = 0; v < s; ++v) buf[v] = g[v] + m[v];
    };
    if (j < ng) load_g(j);
    while (i < np || j < ng) {
      int c;
      if (i == np)
        c = -1;
      else if (j == ng)
        c = 1;
      else
        c = layout_.compare(&P.mon[i * s], buf.data());
      if (c > 0) {
        out.mon.insert(out.mon.end(), P.mon.begin() + static_cast<std::ptrdiff_t>(i * s),
                       P.mon.begin() + static_cast<std::ptrdiff_t>((i + 1) * s));
        out.coef.push_back(a_one ? P.coef[i] : arith_.times(a, P.coef[i]));
        ++i;
      } else if (c < 0) {
        out.mon.insert(out.mon.end(), buf.begin(), buf.end());
        out.coef.push_back(arith_.negate(arith_.times(b, G.coef[j])));
        ++j;
        if (j < ng) load_g(j);
      } else {
        C v = arith_.minus(a_one ? P.coef[i] : arith_.times(a, P.coef[i]),
                           arith_.times(b, G.coef[j]));
        if (!arith_.zero(v)) {
          out.mon.insert(out.mon.end(), buf.begin(), buf.end());
          out.coef.push_back(std::move(v));
        }
        ++i;
        ++j;
        if (j < ng) load_g(j);
      }
    }
    return out;
  }

  const Poly* find_reducer(const Exponent* m, std::uint64_t mask) const {
    const Poly* best = nullptr;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!active_[k]) continue;
      const Poly& g = basis_[k];
      if ((g.lm_mask & ~mask) != 0) continue;
      if (!layout_.divides(g.mon.data(), m)) continue;
      if (!best || g.size() < best->size()) best = &g;
    }
    return best;
  }

  // Full reduction (head and tail).  When `factor` is given, accumulates the
  // scalar s with result == s * input (mod basis).
  Poly reduce(Poly p, Rational* factor) {
    const std::size_t s = layout_.stride();
    Poly r;
    Exponent sugar = p.sugar;
    std::size_t start = 0;
    std::vector<Exponent> q(s);
    unsigned steps = 0;
    while (start < p.size()) {
      const Exponent* lead = &p.mon[start * s];
      const Poly* g = find_reducer(lead, layout_.mask(lead));
      if (!g) {
        r.mon.insert(r.mon.end(), p.mon.begin() + static_cast<std::ptrdiff_t>(start * s),
                     p.mon.begin() + static_cast<std::ptrdiff_t>((start + 1) * s));
        r.coef.push_back(p.coef[start]);
        ++start;
        continue;
      }
      layout_.quotient(lead, g->mon.data(), q.data());
      sugar = std::max<Exponent>(sugar, layout_.degree(q.data()) + g->sugar);
      C a, b;
      arith_.step_factors(p.coef[start], g->coef.front(), a, b);
      if (!arith_.is_one(a)) {
        for (auto& c : r.coef) c = arith_.times(a, c);
        if (factor) *factor *= arith_.to_rational(a);
      }
      p = combine(p, start, a, *g, q.data(), b);
      start = 0;
      if constexpr (std::is_same_v<Dom, IntegerDomain>) {
        if (++steps % 32 == 0) shrink(p, r, factor);
      }
      if (steps % 256 == 0) check_deadline();
    }
    r.sugar = sugar;
    const Integer g = arith_.normalize(r);
    if (factor && g != 1) *factor /= Rational(g);
    finish(r);
    return r;
  }

  // Divide the common content out of the working pair (p, r).
  void shrink(Poly& p, Poly& r, Rational* factor) const {
    if constexpr (std::is_same_v<Dom, IntegerDomain>) {
      Integer g = 0;
      for (const auto& c : r.coef) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
      }
      for (const auto& c : p.coef) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
      }
      if (g == 0 || g == 1) return;
      for (auto& c : r.coef) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
      for (auto& c : p.coef) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
      if (factor) *factor /= Rational(g);
    }
  }

  Poly spolynomial(const Pair& pair) const {
    const Poly& f = basis_[pair.i];
    const Poly& g = basis_[pair.j];
    const std::size_t s = layout_.stride();
    std::vector<Exponent> mf(s), mg(s);
    layout_.quotient(pair.lcm.data(), f.mon.data(), mf.data());
    layout_.quotient(pair.lcm.data(), g.mon.data(), mg.data());
    // Build mf*f as a polynomial, then combine with g.
    Poly left;
    left.mon.resize(f.mon.size());
    left.coef = f.coef;
    for (std::size_t t = 0; t < f.size(); ++t) {
      for (std::size_t v = 0; v < s; ++v) left.mon[t * s + v] = f.mon[t * s + v] + mf[v];
    }
    C a, b;
    arith_.step_factors(left.coef.front(), g.coef.front(), a, b);
    Poly out = combine(left, 0, a, g, mg.data(), b);
    out.sugar = std::max<Exponent>(f.sugar + layout_.degree(mf.data()),
                                   g.sugar + layout_.degree(mg.data()));
    finish(out);
    return out;
  }

  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& p = pairs_[k];
      const Pair& q = pairs_[best];
      if (p.sugar != q.sugar) {
        if (p.sugar < q.sugar) best = k;
        continue;
      }
      const int c = layout_.compare(p.lcm.data(), q.lcm.data());
      if (c < 0 || (c == 0 && std::tie(p.i, p.j) < std::tie(q.i, q.j))) best = k;
    }
    return best;
  }

  // Gebauer-Möller update.
  void insert(Poly h) {
    finish(h);
    const std::size_t s = layout_.stride();
    const std::size_t t = basis_.size();
    const Exponent* lh = h.mon.data();
    if (stats_) ++stats_->basis_insertions;

    struct Candidate {
      std::size_t i;
      std::vector<Exponent> lcm;
      bool coprime;
    };
    std::vector<Candidate> cands;
    for (std::size_t i = 0; i < t; ++i) {
      if (!active_[i]) continue;
      Candidate c{i, std::vector<Exponent>(s), layout_.coprime(basis_[i].mon.data(), lh)};
      layout_.lcm(basis_[i].mon.data(), lh, c.lcm.data());
      cands.push_back(std::move(c));
    }
    // D: keep (h, g) if coprime or its lcm is not divisible by another lcm
    // remaining in C or already accepted in D.
    std::vector<Candidate> accepted;
    for (std::size_t k = 0; k < cands.size(); ++k) {
      const auto& c = cands[k];
      bool keep = c.coprime;
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < cands.size() && keep; ++l)
          if (layout_.divides(cands[l].lcm.data(), c.lcm.data())) keep = false;
        for (const auto& d : accepted)
          if (keep && layout_.divides(d.lcm.data(), c.lcm.data())) keep = false;
      }
      if (keep)
        accepted.push_back(c);
      else if (stats_)
        ++stats_->chain_criterion;
    }
    // Old pairs: drop those whose lcm is a strict multiple via h.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    std::vector<Exponent> l1(s), l2(s);
    for (auto& p : pairs_) {
      bool drop = false;
      if (layout_.divides(lh, p.lcm.data())) {
        layout_.lcm(basis_[p.i].mon.data(), lh, l1.data());
        layout_.lcm(basis_[p.j].mon.data(), lh, l2.data());
        drop = !std::equal(l1.begin() + 2, l1.end(), p.lcm.begin() + 2) &&
               !std::equal(l2.begin() + 2, l2.end(), p.lcm.begin() + 2);
      }
      if (drop) {
        if (stats_) ++stats_->chain_criterion;
      } else {
        kept.push_back(std::move(p));
      }
    }
    pairs_ = std::move(kept);
    for (auto& c : accepted) {
      if (c.coprime) {
        if (stats_) ++stats_->product_criterion;
        continue;
      }
      const Poly& g = basis_[c.i];
      std::vector<Exponent> mg(s), mh(s);
      layout_.quotient(c.lcm.data(), g.mon.data(), mg.data());
      layout_.quotient(c.lcm.data(), lh, mh.data());
      const Exponent sugar = std::max<Exponent>(g.sugar + layout_.degree(mg.data()),
                                                h.sugar + layout_.degree(mh.data()));
      pairs_.push_back(Pair{c.i, t, std::move(c.lcm), sugar});
    }
    for (std::size_t i = 0; i < t; ++i)
      if (active_[i] && layout_.divides(lh, basis_[i].mon.data())) active_[i] = false;
    basis_.push_back(std::move(h));
    active_.push_back(true);
  }

  std::vector<Polynomial> reduced_basis() {
    // Minimalize.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!active_[i]) continue;
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (j == i || !active_[j]) continue;
        if (layout_.divides(basis_[j].mon.data(), basis_[i].mon.data())) {
          const int c = layout_.compare(basis_[j].mon.data(), basis_[i].mon.data());
          redundant = c != 0 || j < i;
        }
      }
      if (!redundant) keep.push_back(i);
    }
    std::vector<Poly> minimal;
    for (auto i : keep) minimal.push_back(basis_[i]);
    // Interreduce tails against the other elements.
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      basis_.clear();
      active_.clear();
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j == i) continue;
        basis_.push_back(minimal[j]);
        active_.push_back(true);
      }
      Poly r = reduce(minimal[i], nullptr);
      out.push_back(to_polynomial(r, true));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ring_->compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return out;
  }

  Ring ring_;
  Layout layout_;
  A arith_;
  EngineStats* stats_;
  std::vector<Poly> basis_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Polynomial> groebner_basis(const Ring& ring,
                                       std::span<const Polynomial> gens,
                                       EngineStats* stats) {
  if (ring->characteristic() == 0) return Engine<IntegerDomain>(ring, stats).run(gens);
  return Engine<PrimeDomain>(ring, stats).run(gens);
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  const Ring& ring = f.ring();
  if (f.is_zero()) return f;
  if (ring->characteristic() == 0) return Engine<IntegerDomain>(ring, nullptr).normal_form(f, basis);
  return Engine<PrimeDomain>(ring, nullptr).normal_form(f, basis);
}

}  // namespace tangentia::detail
