#include "casimir/poly_matrix.hpp"

#include <stdexcept>

namespace casimir {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RationalExpr(1);
  return m;
}

PolyMatrix PolyMatrix::block(int i1, int i2, int j1, int j2) const {
  const int nr = i2 >= i1 ? i2 - i1 + 1 : 0;
  const int nc = j2 >= j1 ? j2 - j1 + 1 : 0;
  if (nr > 0 && (i1 < 1 || i2 > static_cast<int>(rows_))) throw std::out_of_range("PolyMatrix::block rows");
  if (nc > 0 && (j1 < 1 || j2 > static_cast<int>(cols_))) throw std::out_of_range("PolyMatrix::block cols");
  PolyMatrix out(static_cast<std::size_t>(nr), static_cast<std::size_t>(nc));
  for (int r = 0; r < nr; ++r) {
    for (int c = 0; c < nc; ++c) out(r, c) = at1(i1 + r, j1 + c);
  }
  return out;
}

bool PolyMatrix::all_polynomial() const noexcept {
  for (const RationalExpr& e : entries_) {
    if (!e.is_polynomial()) return false;
  }
  return true;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("PolyMatrix: shape mismatch in product");
  PolyMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      RationalExpr acc;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const RationalExpr& x = a(i, k);
        const RationalExpr& y = b(k, j);
        if (x.is_zero() || y.is_zero()) continue;
        acc += x * y;
      }
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("PolyMatrix: shape mismatch in difference");
  PolyMatrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] = a.entries_[i] - b.entries_[i];
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (!(a.entries_[i] == b.entries_[i])) return false;
  }
  return true;
}

}  // namespace casimir
