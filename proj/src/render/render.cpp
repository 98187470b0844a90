#include "casimir/render.hpp"

namespace casimir {

std::string latex(const BigRational& q) {
  if (q.is_integer()) return q.to_string();
  const std::string sign = q.sign() < 0 ? "-" : "";
  const BigRational m = q.abs();
  return sign + "\\frac{" + m.numerator_string() + "}{" + m.denominator_string() + "}";
}

namespace {

std::string latex_monomial(const Monomial& m) {
  std::string out;
  for (const Factor& f : m.factors()) {
    if (!out.empty()) out += " ";
    out += f.var.latex();
    if (f.exp > 1) out += "^{" + std::to_string(f.exp) + "}";
  }
  return out;
}

}  // namespace

std::string latex(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    const BigRational mag = t.coeff.abs();
    if (first) {
      if (t.coeff.sign() < 0) out += "-";
    } else {
      out += t.coeff.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += latex(mag);
    } else {
      if (!mag.is_one()) out += latex(mag) + " ";
      out += latex_monomial(t.monomial);
    }
  }
  return out;
}

std::string latex(const RationalExpr& e) {
  if (e.is_polynomial()) return latex(e.num().scaled(e.den().constant_term().inverse()));
  return "\\frac{" + latex(e.num()) + "}{" + latex(e.den()) + "}";
}

std::string latex_det(const PolyMatrix& m) {
  std::string out = "\\left|\\begin{array}{" + std::string(m.cols(), 'c') + "}";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r > 0) out += " \\\\ ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += " & ";
      out += latex(m(r, c));
    }
  }
  return out + "\\end{array}\\right|";
}

}  // namespace casimir
