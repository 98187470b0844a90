#pragma once

#include <map>
#include <string>
#include <vector>

#include "casimir/multi_poly.hpp"

namespace casimir {

class RationalExpr;
using Substitution = std::map<VarId, RationalExpr>;

/// Quotient of two polynomials.
///
/// Normalized on construction: common monomial factors cancelled, the
/// denominator has coprime integer coefficients with a positive leading
/// coefficient, and a denominator that divides the numerator exactly is
/// absorbed. This is not a full gcd reduction, so equality is decided by
/// cross-multiplication.
class RationalExpr {
public:
  RationalExpr() : den_(1) {}
  RationalExpr(MultiPoly num);  // NOLINT(google-explicit-constructor)
  RationalExpr(const BigRational& c) : RationalExpr(MultiPoly(c)) {}  // NOLINT(google-explicit-constructor)
  RationalExpr(int c) : RationalExpr(MultiPoly(c)) {}  // NOLINT(google-explicit-constructor)
  RationalExpr(MultiPoly num, MultiPoly den);

  static RationalExpr variable(VarId var) { return RationalExpr(MultiPoly::variable(var)); }

  const MultiPoly& num() const noexcept { return num_; }
  const MultiPoly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  std::vector<VarId> variables() const;
  bool has_kind(VarKind kind) const noexcept { return num_.has_kind(kind) || den_.has_kind(kind); }
  bool depends_on(VarId var) const noexcept { return num_.depends_on(var) || den_.depends_on(var); }

  RationalExpr operator-() const;
  friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b);
  RationalExpr& operator+=(const RationalExpr& rhs) { return *this = *this + rhs; }
  RationalExpr& operator-=(const RationalExpr& rhs) { return *this = *this - rhs; }
  RationalExpr& operator*=(const RationalExpr& rhs) { return *this = *this * rhs; }
  RationalExpr& operator/=(const RationalExpr& rhs) { return *this = *this / rhs; }

  /// a/b == c/d iff a*d - c*b is the zero polynomial.
  friend bool operator==(const RationalExpr& a, const RationalExpr& b);

  RationalExpr partial(VarId var) const;
  /// Throws DenominatorVanishes when the denominator evaluates to zero.
  BigRational eval(const Assignment& values) const;
  RationalExpr eval_partial(const Assignment& values) const;
  /// Simultaneous substitution of rational expressions for variables.
  RationalExpr substitute(const Substitution& values) const;

  std::string to_string() const;

private:
  MultiPoly num_;
  MultiPoly den_;
};

/// Simultaneous substitution into a polynomial, returned as one quotient
/// over the product of the needed denominator powers.
RationalExpr substitute(const MultiPoly& p, const Substitution& values);

}  // namespace casimir
