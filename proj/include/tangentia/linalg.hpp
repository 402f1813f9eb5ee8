#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tangentia/polycore.hpp"

namespace tangentia {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<Rational> row(std::size_t r) const;
  void append_row(const std::vector<Rational>& values);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct EchelonForm {
  RationalMatrix reduced;  // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; `modulus` > 0 works over F_p instead of Q.
EchelonForm rref(RationalMatrix m, std::uint64_t modulus = 0);

std::size_t rank(const RationalMatrix& m, std::uint64_t modulus = 0);

/// Basis of {v : m v = 0}, one vector per row of the result.
RationalMatrix nullspace(const RationalMatrix& m);

Rational determinant(RationalMatrix m);

/// Rows of `sub` lie in the row space of `space`.
bool row_space_contains(const RationalMatrix& space, const RationalMatrix& sub);

}  // namespace tangentia
