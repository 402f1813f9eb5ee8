#include "tangentia/boundary.hpp"
#include "tangentia/error.hpp"

namespace tangentia {

namespace {

constexpr std::size_t kMaxJoinVariables = 48;

}  // namespace

ProjScheme join(const ProjScheme& A, const ProjScheme& B) {
  const Ring& ring = A.ring();
  if (!same_ring(B.ring(), ring)) throw InputError("join: schemes in different rings");
  const std::size_t n = ring->size();
  if (2 * n > kMaxJoinVariables) throw CapacityError("join: elimination ring exceeds 48 variables");
  if (A.is_empty()) return B;
  if (B.is_empty()) return A;
  // Points x = a + b with a on cone(A), b on cone(B): substitute a = x - b.
  std::vector<std::string> names;
  for (const auto& nm : ring->names()) names.push_back(fresh_variable_name(*ring, "b_" + nm));
  for (const auto& nm : ring->names()) names.push_back(nm);
  Ring big = PolyRing::make(names, MonomialOrder::block_order(n), ring->characteristic());
  std::vector<Polynomial> a_images, b_images;
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial b = Polynomial::variable(big, i);
    b_images.push_back(b);
    a_images.push_back(Polynomial::variable(big, n + i) - b);
  }
  std::vector<Polynomial> gens;
  for (const auto& g : A.ideal().groebner_basis()) gens.push_back(g.substitute(big, a_images));
  for (const auto& g : B.ideal().groebner_basis()) gens.push_back(g.substitute(big, b_images));
  const Ideal image = eliminate(Ideal(big, std::move(gens)), n);
  std::vector<std::size_t> identity(n);
  for (std::size_t i = 0; i < n; ++i) identity[i] = i;
  return ProjScheme::make(image.remap(ring, identity));
}

ProjScheme secant_variety(const ProjScheme& X, long k) {
  if (k < 1) throw InputError("secant variety index must be at least 1");
  ProjScheme sigma = X;
  for (long j = 1; j < k; ++j) {
    if (sigma.ideal().is_zero()) break;
    ProjScheme next = join(sigma, X);
    if (next.ideal().same_ideal(sigma.ideal())) break;
    sigma = std::move(next);
  }
  return sigma;
}

long r_of(const ProjScheme& X, std::vector<SecantDim>* dims) {
  if (X.is_empty()) throw InputError("r(X) of the empty scheme");
  for (const auto& g : X.ideal().groebner_basis())
    if (g.total_degree() == 1) throw InputError("r(X) needs a nondegenerate X; it lies in " + g.to_string() + " = 0");
  const long N = static_cast<long>(X.ambient_dim());
  ProjScheme sigma = X;
  for (long k = 0;; ++k) {
    const long d = sigma.dim();
    if (dims) dims->push_back({k + 1, d});
    if (d >= N - 1) return k;
    sigma = join(sigma, X);
  }
}

}  // namespace tangentia
