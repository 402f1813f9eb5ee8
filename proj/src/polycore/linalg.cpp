#include "tangentia/linalg.hpp"

#include "tangentia/error.hpp"

namespace tangentia {

namespace {

Rational reduce_mod(const Rational& c, std::uint64_t p) {
  const Integer m(static_cast<unsigned long>(p));
  Integer num = c.get_num() % m;
  if (num < 0) num += m;
  Integer den = c.get_den() % m;
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
    throw InputError("denominator not invertible modulo the field prime");
  return Rational((num * inv) % m);
}

}  // namespace

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void RationalMatrix::append_row(const std::vector<Rational>& values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw InputError("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

EchelonForm rref(RationalMatrix m, std::uint64_t modulus) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  auto fix = [&](Rational& v) {
    if (modulus != 0) v = reduce_mod(v, modulus);
  };
  if (modulus != 0)
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) fix(m(r, c));
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot = lead;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(pivot, k), m(lead, k));
    Rational inv;
    if (modulus == 0) {
      inv = 1 / m(lead, c);
    } else {
      Integer v = m(lead, c).get_num(), r;
      const Integer p(static_cast<unsigned long>(modulus));
      mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
      inv = Rational(r);
    }
    for (std::size_t k = c; k < cols; ++k) {
      m(lead, k) *= inv;
      fix(m(lead, k));
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m(r, c) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (m(lead, k) == 0) continue;
        m(r, k) -= factor * m(lead, k);
        fix(m(r, k));
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  RationalMatrix reduced(pivots.size(), cols);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) reduced(r, c) = m(r, c);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m, std::uint64_t modulus) {
  return rref(m, modulus).pivots.size();
}

RationalMatrix nullspace(const RationalMatrix& m) {
  const auto form = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : form.pivots) is_pivot[p] = true;
  RationalMatrix basis(0, cols);
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < form.pivots.size(); ++r)
      v[form.pivots[r]] = -form.reduced(r, free);
    basis.append_row(v);
  }
  return basis;
}

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(pivot, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const Rational factor = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= factor * m(c, k);
    }
  }
  return det;
}

bool row_space_contains(const RationalMatrix& space, const RationalMatrix& sub) {
  if (sub.rows() == 0) return true;
  if (space.cols() != sub.cols() && space.rows() != 0)
    throw InputError("row_space_contains: column mismatch");
  RationalMatrix stacked = space;
  if (stacked.rows() == 0) stacked = RationalMatrix(0, sub.cols());
  const std::size_t before = rank(stacked);
  for (std::size_t r = 0; r < sub.rows(); ++r) stacked.append_row(sub.row(r));
  return rank(stacked) == before;
}

}  // namespace tangentia
