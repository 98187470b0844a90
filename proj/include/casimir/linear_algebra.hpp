#pragma once

#include <vector>

#include "casimir/multi_poly.hpp"
#include "casimir/poly_matrix.hpp"
#include "casimir/rational_expr.hpp"

namespace casimir {

/// Exact determinant. Sizes up to 4 use cofactor expansion; larger ones use
/// Bareiss elimination, after scaling rows to clear denominators if needed.
/// Throws NotSquare.
RationalExpr det(const PolyMatrix& m);

/// Laplace expansion along the first row. Works for any entries.
RationalExpr det_cofactor(const PolyMatrix& m);
/// Fraction-free elimination; every entry must be a polynomial.
MultiPoly det_bareiss(const PolyMatrix& m);

/// Solves A sol = rhs over the rational-function field by Cramer's rule.
/// Throws SingularSystem when det(A) is identically zero.
std::vector<RationalExpr> cramer_solve(const PolyMatrix& a, const std::vector<RationalExpr>& rhs);

/// Rank of (d f_l / d v_m) at the point. Throws DenominatorVanishes.
std::size_t jacobian_rank_at(const std::vector<RationalExpr>& fs, const std::vector<VarId>& vars,
                             const Assignment& point);

}  // namespace casimir
