#include <algorithm>
#include <cstdint>
#include <functional>

#include "tangentia/deadline.hpp"
#include "tangentia/error.hpp"
#include "tangentia/groebner.hpp"

namespace tangentia {

namespace {

using Poly = std::vector<Integer>;  // coefficients in t, low degree first

Poly poly_add(const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Poly shift(const Poly& a, std::size_t k) {
  if (a.empty()) return a;
  Poly c(k, 0);
  c.insert(c.end(), a.begin(), a.end());
  return c;
}

long degree(const Monomial& m) {
  long d = 0;
  for (auto e : m) d += e;
  return d;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    const long da = degree(a), db = degree(b);
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

// Numerator K(t) of the Hilbert series of R / (gens), pivoting on variables.
Poly hilbert_numerator(std::vector<Monomial> gens, std::size_t n) {
  check_deadline();
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  // Pairwise coprime generators give a product formula.
  std::vector<int> count(n, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < n; ++i)
      if (g[i] > 0) ++count[i];
  const auto best = std::max_element(count.begin(), count.end());
  if (*best <= 1) {
    Poly k{1};
    for (const auto& g : gens) {
      Poly f(static_cast<std::size_t>(degree(g)) + 1, 0);
      f[0] = 1;
      f.back() -= 1;
      k = poly_mul(k, f);
    }
    return k;
  }
  const std::size_t x = static_cast<std::size_t>(best - count.begin());
  Exponent e = 0;
  for (const auto& g : gens)
    if (g[x] > 0 && (e == 0 || g[x] < e)) e = g[x];
  Monomial pivot(n, 0);
  pivot[x] = e;
  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> colon;
  for (auto g : gens) {
    g[x] = g[x] > e ? g[x] - e : 0;
    colon.push_back(std::move(g));
  }
  return poly_add(hilbert_numerator(std::move(with_pivot), n),
                  shift(hilbert_numerator(std::move(colon), n), e));
}

}  // namespace

long monomial_dimension(std::size_t n, std::span<const Monomial> monomials) {
  if (n > 64) throw CapacityError("dimension search supports at most 64 variables");
  std::vector<std::uint64_t> supports;
  for (const auto& m : monomials) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] > 0) s |= std::uint64_t{1} << i;
    if (s == 0) return -1;
    supports.push_back(s);
  }
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  long best = 0;
  std::function<void(std::size_t, std::uint64_t, long)> search = [&](std::size_t i, std::uint64_t set,
                                                                      long size) {
    if (size + static_cast<long>(n - i) <= best) return;
    if (i == n) {
      best = size;
      return;
    }
    const std::uint64_t with = set | (std::uint64_t{1} << i);
    bool ok = true;
    for (auto s : supports)
      if ((s & ~with) == 0) {
        ok = false;
        break;
      }
    if (ok) search(i + 1, with, size + 1);
    search(i + 1, set, size);
  };
  search(0, 0, 0);
  return best;
}

HilbertSeries Ideal::hilbert_series() const {
  if (!is_homogeneous()) throw InputError("Hilbert series needs a homogeneous ideal");
  HilbertSeries hs;
  const std::size_t n = ring_->size();
  if (is_unit()) {
    hs.numerator = {};
    hs.dimension = -1;
    return hs;
  }
  hs.numerator = hilbert_numerator(leading_monomials(groebner_basis()), n);
  Poly h = hs.numerator;
  long c = 0;
  for (;;) {
    Integer at_one = 0;
    for (const auto& v : h) at_one += v;
    if (at_one != 0 || h.empty()) break;
    // Divide by (1 - t).
    Poly q(h.size() - 1);
    Integer acc = 0;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
      acc += h[i];
      q[i] = acc;
    }
    h = q;
    while (!h.empty() && h.back() == 0) h.pop_back();
    ++c;
  }
  hs.reduced_numerator = h;
  hs.dimension = static_cast<long>(n) - c;
  hs.degree = 0;
  for (const auto& v : h) hs.degree += v;
  return hs;
}

}  // namespace tangentia
