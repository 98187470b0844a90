#pragma once

#include <cstddef>
#include <vector>

#include "casimir/rational_expr.hpp"

namespace casimir {

/// Dense matrix of rational expressions, 0-based storage.
class PolyMatrix {
public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols);

  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const RationalExpr& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  RationalExpr& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  /// Entry with 1-based indices, matching the a_{ij} notation.
  const RationalExpr& at1(int i, int j) const { return (*this)(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)); }

  /// Submatrix A^{i1,i2}_{j1,j2}: rows i1..i2, columns j1..j2, 1-based and
  /// inclusive. An empty range (i1 > i2) yields a 0-row matrix.
  PolyMatrix block(int i1, int i2, int j1, int j2) const;

  bool all_polynomial() const noexcept;
  PolyMatrix transposed() const;
  /// Applies f to every entry.
  template <typename F>
  PolyMatrix map(F&& f) const {
    PolyMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = f(entries_[i]);
    return out;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RationalExpr> entries_;
};

}  // namespace casimir
