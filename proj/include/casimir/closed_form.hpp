#pragma once

#include <string>
#include <utility>
#include <vector>

#include "casimir/algebra.hpp"
#include "casimir/poly_matrix.hpp"
#include "casimir/uea.hpp"

namespace casimir {

struct InvariantBasis {
  AlgebraKind kind;
  int n;
  std::vector<RationalExpr> elements;
  /// Display form of each element with determinants kept unexpanded.
  std::vector<std::string> latex;
};

/// |X^{kappa,n}_{1,k}|, k = 1..[n/2].
InvariantBasis t0_basis(int n);
/// Rational invariants, k = 0..[(n-1)/2].
InvariantBasis t_basis(int n);
/// Invariants of st(n) in the strictly lower x and the f-duals, k = 1..[(n-1)/2].
InvariantBasis st_basis(int n);
InvariantBasis closed_form_basis(AlgebraKind kind, int n);

/// X^{j,j}_{1,k} bordered by `corner`, over X^{kappa,n}_{1,k} bordered by X^{kappa,n}_{j,j}.
PolyMatrix bordered_matrix(const PolyMatrix& x, int k, int j, const RationalExpr& corner);

/// f_k restricted to t(n): ((n-k)/n) sum_{i<=k} x_ii - (k/n) sum_{i>k} x_ii.
MultiPoly f_pullback(int n, int k);
/// f_m -> f_pullback(n, m) for every m.
Substitution st_pullback(int n);

/// Both identities of the Schur-complement lemma at a point, for every i, j.
/// Needs 1 < k < n. Throws MinorVanishes when |X^{kappa+1,n}_{1,k-1}| = 0.
bool lemma3_check(int n, int k, const BigRational& beta, const Assignment& point);
/// Same identities as rational-function identities, beta symbolic.
bool lemma3_check_symbolic(int n, int k);

/// (|I^{kappa,n}_{1,k}|, |X^{kappa,n}_{1,k}|) for I = B X B^{-1}, B unipotent.
std::pair<BigRational, BigRational> note3_trick(int n, int k, const Assignment& b_values, const Assignment& x_values);

/// det(e_ij), i = 1..k, j = n-k+1..n, in the enveloping algebra of t0(n).
std::vector<UeaElement> symmetrize_t0(const AlgebraSpec& t0);

/// Formal symmetrized invariant of t(n). Words are kept in the stated order:
/// in each product the factor e_{i'j} comes after e_{jj'}.
struct FormalInvariant {
  int k;
  UeaElement numerator;    // ordered, not normal-form
  UeaElement denominator;  // |E^{1,k}_{kappa,n}|, generators commute
  UeaElement diagonal;     // (-1)^k sum_{j=k+1}^{n-k} e_jj
};

std::vector<FormalInvariant> symmetrized_t_basis(const AlgebraSpec& t);
std::string to_string(const FormalInvariant& f, const AlgebraSpec& t);

}  // namespace casimir
