#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "casimir/big_rational.hpp"
#include "casimir/var_id.hpp"

namespace casimir {

/// Values for variables; evaluation requires every variable of the
/// polynomial to be present.
using Assignment = std::map<VarId, BigRational>;

struct Factor {
  VarId var;
  std::uint32_t exp = 0;
  bool operator==(const Factor&) const = default;
};

/// Power product, stored as factors sorted by variable with positive
/// exponents.
///
/// Ordering is lexicographic with the smallest VarId most significant: at the
/// first variable where the exponents differ, the larger exponent wins. This
/// is a monomial order, so it is stable under multiplication and supports
/// exact division.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(VarId var, std::uint32_t exp = 1);
  static Monomial from_factors(std::vector<Factor> factors);

  std::span<const Factor> factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::uint32_t degree_in(VarId var) const noexcept;
  std::uint32_t total_degree() const noexcept;

  bool divides(const Monomial& other) const noexcept;
  /// this / divisor; divisor must divide this.
  Monomial quotient(const Monomial& divisor) const;
  Monomial without(VarId var) const;

  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;

private:
  std::vector<Factor> factors_;
};

struct Term {
  Monomial monomial;
  BigRational coeff;
  bool operator==(const Term&) const = default;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Canonical form: terms sorted by strictly decreasing monomial, no zero
/// coefficients. Equality is structural.
class MultiPoly {
public:
  MultiPoly() = default;
  MultiPoly(const BigRational& constant);  // NOLINT(google-explicit-constructor)
  MultiPoly(int constant) : MultiPoly(BigRational(constant)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(VarId var);
  static MultiPoly monomial(Monomial m, BigRational coeff = 1);
  /// Canonicalizes arbitrary (unsorted, duplicated, zero) terms.
  static MultiPoly from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  BigRational constant_term() const;
  const Term& leading_term() const;

  std::uint32_t degree_in(VarId var) const noexcept;
  std::uint32_t total_degree() const noexcept;
  std::vector<VarId> variables() const;
  bool has_kind(VarKind kind) const noexcept;
  bool depends_on(VarId var) const noexcept { return degree_in(var) > 0; }

  /// gcd of all monomials.
  Monomial monomial_content() const;
  /// Positive rational c such that this / c has coprime integer coefficients.
  BigRational coefficient_content() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  MultiPoly scaled(const BigRational& factor) const;
  MultiPoly times_monomial(const Monomial& m, const BigRational& coeff) const;
  MultiPoly pow(unsigned exponent) const;

  MultiPoly partial(VarId var) const;
  BigRational eval(const Assignment& values) const;
  /// Substitutes the assigned variables, keeps the others symbolic.
  MultiPoly eval_partial(const Assignment& values) const;
  MultiPoly substitute(VarId var, const MultiPoly& value) const;
  /// Coefficient of var^exp, viewing this as a polynomial in var.
  MultiPoly coefficient_of(VarId var, std::uint32_t exp) const;

  /// Quotient if divisor divides this exactly, nullopt otherwise.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;
  MultiPoly divide_monomial(const Monomial& m) const;

  /// Plain text, leading term first: "x_31*x_42 - x_32*x_41".
  std::string to_string() const;

private:
  std::vector<Term> terms_;
};

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_partial(const MultiPoly& p, VarId var);
BigRational eval(const MultiPoly& p, const Assignment& values);

std::string monomial_to_string(const Monomial& m);

}  // namespace casimir
