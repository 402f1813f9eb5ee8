#include <algorithm>
#include <limits>

#include "tangentia/error.hpp"
#include "tangentia/groebner.hpp"

namespace tangentia {

namespace {

constexpr std::size_t kDropped = std::numeric_limits<std::size_t>::max();

void require_same_ring(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring())) throw InputError("ideals from different rings");
}

// Ring with one fresh variable in front, block(1) so it is eliminated first.
struct Extended {
  Ring ring;
  std::vector<std::size_t> shift;  // old variable i -> i + 1
  Polynomial t;
};

Extended extend_front(const Ring& ring) {
  std::vector<std::string> names{fresh_variable_name(*ring, "t")};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  Ring ext = PolyRing::make(std::move(names), MonomialOrder::block_order(1), ring->characteristic());
  std::vector<std::size_t> shift(ring->size());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = i + 1;
  return {ext, std::move(shift), Polynomial::variable(ext, 0)};
}

// Move an ideal on variables 1..n of an extended ring back to `ring`.
Ideal drop_front(const Ideal& I, const Ring& ring) {
  std::vector<Polynomial> out;
  std::vector<std::size_t> map(I.ring()->size());
  map[0] = kDropped;
  for (std::size_t i = 1; i < map.size(); ++i) map[i] = i - 1;
  for (const auto& g : I.groebner_basis()) {
    if (g.degree_in(0) > 0) continue;
    out.push_back(g.remap(ring, map));
  }
  return Ideal(ring, std::move(out));
}

}  // namespace

Ideal eliminate(const Ideal& I, std::size_t k) {
  const Ring& ring = I.ring();
  if (ring->order().kind != MonomialOrder::Kind::Block || ring->order().block != k)
    throw InputError("eliminate: ideal must live in a block(" + std::to_string(k) + ") ring");
  std::vector<std::string> names(ring->names().begin() + static_cast<std::ptrdiff_t>(k),
                                 ring->names().end());
  Ring target = PolyRing::make(std::move(names), MonomialOrder::grevlex(), ring->characteristic());
  std::vector<std::size_t> map(ring->size(), kDropped);
  for (std::size_t i = k; i < ring->size(); ++i) map[i] = i - k;
  std::vector<bool> trailing(ring->size(), false);
  for (std::size_t i = k; i < ring->size(); ++i) trailing[i] = true;
  std::vector<Polynomial> out;
  for (const auto& g : I.groebner_basis())
    if (g.uses_only(trailing)) out.push_back(g.remap(target, map));
  return Ideal(target, std::move(out));
}

Ideal eliminate_variables(const Ideal& I, const std::vector<std::size_t>& vars) {
  const Ring& ring = I.ring();
  std::vector<bool> gone(ring->size(), false);
  for (auto v : vars) {
    if (v >= ring->size()) throw InputError("eliminate: variable index out of range");
    gone[v] = true;
  }
  std::vector<std::string> names;
  std::vector<std::size_t> map(ring->size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < ring->size(); ++i)
    if (gone[i]) {
      map[i] = names.size();
      names.push_back(ring->name(i));
      ++k;
    }
  if (k == 0) return I.with_order(MonomialOrder::grevlex());
  if (k == ring->size()) throw InputError("eliminate: cannot eliminate every variable");
  for (std::size_t i = 0; i < ring->size(); ++i)
    if (!gone[i]) {
      map[i] = names.size();
      names.push_back(ring->name(i));
    }
  Ring block = PolyRing::make(std::move(names), MonomialOrder::block_order(k), ring->characteristic());
  return eliminate(I.remap(block, map), k);
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  if (I.is_zero() || J.is_zero()) return Ideal::zero(I.ring());
  auto ext = extend_front(I.ring());
  const Polynomial one = Polynomial::constant(ext.ring, 1);
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(ext.t * f.remap(ext.ring, ext.shift));
  for (const auto& g : J.generators()) gens.push_back((one - ext.t) * g.remap(ext.ring, ext.shift));
  return drop_front(Ideal(ext.ring, std::move(gens)), I.ring());
}

Ideal quotient(const Ideal& I, const Polynomial& f) {
  if (!same_ring(I.ring(), f.ring())) throw InputError("quotient: polynomial from a different ring");
  if (f.is_zero()) return Ideal::unit(I.ring());
  const Ideal both = intersect(I, Ideal(I.ring(), {f}));
  std::vector<Polynomial> out;
  for (const auto& g : both.groebner_basis()) out.push_back(divide_exact(g, f));
  return Ideal(I.ring(), std::move(out));
}

Ideal quotient(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  if (J.is_zero()) return Ideal::unit(I.ring());
  std::optional<Ideal> acc;
  for (const auto& g : J.generators()) {
    Ideal q = quotient(I, g);
    acc = acc ? intersect(*acc, q) : q;
    if (acc->same_ideal(I)) break;
  }
  return *acc;
}

Ideal saturate(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  Ideal current = I;
  for (;;) {
    Ideal next = quotient(current, J);
    if (next.same_ideal(current)) return Ideal(I.ring(), current.groebner_basis());
    current = next;
  }
}

Ideal saturate_principal(const Ideal& I, const Polynomial& f) {
  if (!same_ring(I.ring(), f.ring())) throw InputError("saturate: polynomial from a different ring");
  if (f.is_zero()) return Ideal::unit(I.ring());
  auto ext = extend_front(I.ring());
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.remap(ext.ring, ext.shift));
  gens.push_back(Polynomial::constant(ext.ring, 1) - ext.t * f.remap(ext.ring, ext.shift));
  return drop_front(Ideal(ext.ring, std::move(gens)), I.ring());
}

Ideal saturate_by_variable(const Ideal& I, std::size_t var) {
  const Ring& ring = I.ring();
  if (var >= ring->size()) throw InputError("saturate: variable index out of range");
  if (!I.is_homogeneous()) return saturate_principal(I, Polynomial::variable(ring, var));
  // Grevlex with `var` last: x | LM(g) iff x | g for homogeneous g.
  std::vector<std::string> names;
  std::vector<std::size_t> to(ring->size()), back(ring->size());
  for (std::size_t i = 0; i < ring->size(); ++i)
    if (i != var) {
      to[i] = names.size();
      back[names.size()] = i;
      names.push_back(ring->name(i));
    }
  to[var] = names.size();
  back[names.size()] = var;
  names.push_back(ring->name(var));
  Ring rev = PolyRing::make(std::move(names), MonomialOrder::grevlex(), ring->characteristic());
  const std::size_t last = ring->size() - 1;
  std::vector<Polynomial> out;
  const Ideal moved = I.remap(rev, to);
  for (const auto& g : moved.groebner_basis()) {
    Exponent e = std::numeric_limits<Exponent>::max();
    for (const auto& t : g.terms()) e = std::min(e, t.exponents[last]);
    Polynomial h = g;
    if (e > 0) {
      Monomial m(rev->size(), 0);
      m[last] = e;
      h = divide_exact(g, Polynomial::monomial(rev, m));
    }
    out.push_back(h.remap(ring, back));
  }
  return Ideal(ring, std::move(out));
}

Ideal saturate_irrelevant(const Ideal& I) {
  const Ring& ring = I.ring();
  if (I.is_unit()) return I;
  if (I.is_homogeneous()) {
    // A variable that is a nonzerodivisor certifies saturation.
    for (std::size_t v = 0; v < ring->size(); ++v)
      if (saturate_by_variable(I, v).same_ideal(I)) return I;
  }
  std::vector<Polynomial> vars;
  for (std::size_t v = 0; v < ring->size(); ++v) vars.push_back(Polynomial::variable(ring, v));
  return saturate(I, Ideal(ring, std::move(vars)));
}

bool radical_member(const Polynomial& f, const Ideal& I) {
  if (!same_ring(I.ring(), f.ring())) throw InputError("radical membership: ring mismatch");
  if (f.is_zero()) return true;
  auto ext = extend_front(I.ring());
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.remap(ext.ring, ext.shift));
  gens.push_back(Polynomial::constant(ext.ring, 1) - ext.t * f.remap(ext.ring, ext.shift));
  return Ideal(ext.ring, std::move(gens)).is_unit();
}

}  // namespace tangentia
