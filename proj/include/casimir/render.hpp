#pragma once

#include <string>

#include "casimir/poly_matrix.hpp"

namespace casimir {

std::string latex(const BigRational& q);
std::string latex(const MultiPoly& p);
/// \frac{num}{den}, or the numerator alone when den is 1.
std::string latex(const RationalExpr& e);
/// \left|\begin{array}{...} ... \end{array}\right|
std::string latex_det(const PolyMatrix& m);

}  // namespace casimir
