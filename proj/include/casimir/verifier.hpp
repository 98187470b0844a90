#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "casimir/algebra.hpp"
#include "casimir/closed_form.hpp"

namespace casimir {

/// D_i(P) = sum_{j,k} c_{ij}^k x_k dP/dx_j for a polynomial P.
MultiPoly apply_generator(const AlgebraSpec& alg, std::size_t i, const MultiPoly& p);

/// Criterion applied to F = P/Q: Q D_i(P) - P D_i(Q), as a polynomial. It
/// vanishes iff D_i(F) does.
MultiPoly infinitesimal_residual(const AlgebraSpec& alg, const RationalExpr& f, std::size_t i);

struct CriterionReport {
  RationalExpr candidate;
  std::vector<MultiPoly> residuals;  // one per generator
  bool pass = false;
  /// Index of the first generator with a nonzero residual.
  std::optional<std::size_t> first_failure;
};

CriterionReport criterion_report(const AlgebraSpec& alg, const RationalExpr& f);

struct BasisReport {
  AlgebraKind kind;
  int n;
  std::size_t dim = 0;
  std::size_t coadjoint_rank = 0;
  std::size_t jacobian_rank = 0;
  std::vector<CriterionReport> elements;
  bool pass = false;
  std::string failure;  // empty on pass
};

/// Symbolic criterion for every element, Jacobian rank at a random point and
/// the count dim - rank(coadjoint). Never throws on a failed check.
BasisReport check_basis(const AlgebraSpec& alg, const InvariantBasis& basis, std::uint64_t seed);
/// check_basis, throwing VerificationFailure on failure.
BasisReport verify_basis(const AlgebraSpec& alg, const InvariantBasis& basis, std::uint64_t seed);

struct GroupCheckOutcome {
  bool passed = true;
  int trials_run = 0;
  std::optional<int> first_failure;  // 1-based trial number
};

/// F(Ad*_B X) = F(X) at random B and X. For ST the candidate is pulled back
/// to t(n)* and B is sampled with determinant 1. Throws DegeneratePoint after
/// 50 unusable samples in a row.
GroupCheckOutcome group_invariance_outcome(AlgebraKind kind, int n, const RationalExpr& f, int trials, std::uint64_t seed);
bool group_invariance_check(AlgebraKind kind, int n, const RationalExpr& f, int trials, std::uint64_t seed);

/// Jacobian rank at a random point, resampling while denominators vanish.
std::size_t jacobian_rank_sampled(const std::vector<RationalExpr>& fs, const std::vector<VarId>& vars, std::uint64_t seed);

/// True iff adding g to fs does not raise the Jacobian rank.
bool functional_dependence_check(const std::vector<RationalExpr>& fs, const RationalExpr& g, const std::vector<VarId>& vars,
                                 std::uint64_t seed);

}  // namespace casimir
