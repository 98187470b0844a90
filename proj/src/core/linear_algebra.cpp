#include "casimir/linear_algebra.hpp"

#include <stdexcept>
#include <utility>

#include "casimir/errors.hpp"
#include "casimir/rational_matrix.hpp"

namespace casimir {

namespace {

void require_square(const PolyMatrix& m) {
  if (!m.is_square()) {
    throw NotSquare("determinant of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  }
}

RationalExpr cofactor_rec(const PolyMatrix& m, std::size_t row, std::vector<bool>& used) {
  const std::size_t n = m.rows();
  if (row == n) return RationalExpr(1);
  RationalExpr acc;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (used[c]) continue;
    const RationalExpr& a = m(row, c);
    if (!a.is_zero()) {
      used[c] = true;
      RationalExpr minor = cofactor_rec(m, row + 1, used);
      used[c] = false;
      if (!minor.is_zero()) {
        RationalExpr t = a * minor;
        acc = sign > 0 ? acc + t : acc - t;
      }
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

RationalExpr det_cofactor(const PolyMatrix& m) {
  require_square(m);
  std::vector<bool> used(m.cols(), false);
  return cofactor_rec(m, 0, used);
}

MultiPoly det_bareiss(const PolyMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return MultiPoly(1);
  std::vector<std::vector<MultiPoly>> a(n, std::vector<MultiPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!m(i, j).is_polynomial()) throw std::invalid_argument("det_bareiss: entry is not a polynomial");
      a[i][j] = m(i, j).num().scaled(m(i, j).den().constant_term().inverse());
    }
  }
  bool negate = false;
  MultiPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return MultiPoly();
      std::swap(a[p], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        if (!prev.is_constant() || !prev.constant_term().is_one()) {
          auto q = v.divide_exact(prev);
          if (!q) throw std::logic_error("det_bareiss: inexact division");
          v = std::move(*q);
        }
        a[i][j] = std::move(v);
      }
      a[i][k] = MultiPoly();
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

RationalExpr det(const PolyMatrix& m) {
  require_square(m);
  if (m.rows() <= 4) return det_cofactor(m);
  if (m.all_polynomial()) return RationalExpr(det_bareiss(m));
  // Scale each row by the product of its distinct denominators.
  PolyMatrix scaled(m.rows(), m.cols());
  MultiPoly scale(1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<MultiPoly> dens;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const MultiPoly& d = m(r, c).den();
      if (d.is_constant()) continue;
      bool seen = false;
      for (const MultiPoly& e : dens) seen = seen || e == d;
      if (!seen) dens.push_back(d);
    }
    MultiPoly row_scale(1);
    for (const MultiPoly& d : dens) row_scale *= d;
    scale *= row_scale;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      RationalExpr v = m(r, c) * RationalExpr(row_scale);
      if (!v.is_polynomial()) throw std::logic_error("det: row scaling left a denominator");
      scaled(r, c) = std::move(v);
    }
  }
  return RationalExpr(det_bareiss(scaled), scale);
}

std::vector<RationalExpr> cramer_solve(const PolyMatrix& a, const std::vector<RationalExpr>& rhs) {
  require_square(a);
  if (rhs.size() != a.rows()) throw std::invalid_argument("cramer_solve: right-hand side has the wrong length");
  const RationalExpr d = det(a);
  if (d.is_zero()) throw SingularSystem("coefficient determinant is identically zero");
  std::vector<RationalExpr> sol;
  sol.reserve(rhs.size());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    PolyMatrix ac = a;
    for (std::size_t r = 0; r < a.rows(); ++r) ac(r, c) = rhs[r];
    sol.push_back(det(ac) / d);
  }
  return sol;
}

std::size_t jacobian_rank_at(const std::vector<RationalExpr>& fs, const std::vector<VarId>& vars,
                             const Assignment& point) {
  RationalMatrix jac(fs.size(), vars.size());
  for (std::size_t l = 0; l < fs.size(); ++l) {
    const MultiPoly& p = fs[l].num();
    const MultiPoly& q = fs[l].den();
    const BigRational qv = q.eval(point);
    if (qv.is_zero()) throw DenominatorVanishes("denominator " + q.to_string() + " vanishes at the sample point");
    const BigRational pv = p.eval(point);
    for (std::size_t m = 0; m < vars.size(); ++m) {
      const BigRational dp = p.partial(vars[m]).eval(point);
      const BigRational dq = q.partial(vars[m]).eval(point);
      jac(l, m) = (dp * qv - pv * dq) / (qv * qv);
    }
  }
  return rank(std::move(jac));
}

}  // namespace casimir
