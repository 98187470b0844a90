#pragma once

#include "casimir/algebra.hpp"
#include "casimir/poly_matrix.hpp"
#include "casimir/rational_matrix.hpp"

namespace casimir {

enum class GroupKind { Unipotent, Triangular };

GroupKind group_kind_for(AlgebraKind kind);  // T0 -> Unipotent, T and ST -> Triangular

/// Generic upper triangular B in the b_{ij} variables.
struct GroupElement {
  int n = 0;
  GroupKind kind = GroupKind::Unipotent;
  PolyMatrix entries;

  static GroupElement symbolic(GroupKind kind, int n);
};

/// Inverse by back-substitution. Entries are polynomials for Unipotent and
/// have monomial denominators in the b_{ii} for Triangular.
PolyMatrix symbolic_inverse(const GroupElement& g);

/// X = (x_{ij}), lower triangular; strictly so for T0.
PolyMatrix dual_matrix(AlgebraKind kind, int n);

/// Whether (i, j) is a coordinate position: j < i for T0, j <= i otherwise.
bool is_significant(AlgebraKind kind, int i, int j);

struct LiftedInvariantMatrix {
  AlgebraKind kind;
  int n;
  PolyMatrix b;
  PolyMatrix b_inv;
  PolyMatrix x;
  PolyMatrix entries;  // B X B^{-1}

  bool significant(int i, int j) const { return is_significant(kind, i, j); }
  const RationalExpr& at(int i, int j) const { return entries.at1(i, j); }
};

/// Throws UnsupportedKind for ST and InvalidSize for n < 2.
LiftedInvariantMatrix lifted_invariant(AlgebraKind kind, int n);

/// Entry (i, j) by the explicit summation formula, with hat-b taken from the
/// symbolic inverse. Independent of the matrix products above.
RationalExpr lifted_entry_by_formula(AlgebraKind kind, int n, int i, int j);

/// Numeric B from b-values: missing off-diagonal entries are 0, missing
/// diagonal entries 1; the diagonal is forced to 1 for T0.
RationalMatrix group_matrix(AlgebraKind kind, int n, const Assignment& b_values);

/// Coordinates of Ad*_B applied to X. Missing x-values are 0.
/// Throws SingularGroupElement if some b_{ii} = 0.
Assignment coadjoint_transform(AlgebraKind kind, int n, const Assignment& b_values, const Assignment& x_values);

/// x-variables of the dual space of t0(n) or t(n).
std::vector<VarId> x_vars(AlgebraKind kind, int n);
/// b-variables of B.
std::vector<VarId> b_vars(GroupKind kind, int n);

}  // namespace casimir
