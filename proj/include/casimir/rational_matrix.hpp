#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "casimir/big_rational.hpp"

namespace casimir {

/// Dense matrix over BigRational for numeric exact linear algebra
/// (ranks at sample points, kernels, numeric inverses).
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const BigRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  BigRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigRational> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m);
std::size_t rank(RationalMatrix m);
BigRational determinant(RationalMatrix m);
/// Basis of {v : m v = 0}.
std::vector<std::vector<BigRational>> kernel(RationalMatrix m);
/// Inverse, or nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

}  // namespace casimir
