#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "casimir/algebra.hpp"
#include "casimir/poly_matrix.hpp"

namespace casimir {

/// Value imposed on one lifted invariant I_{ij}; nullopt leaves it free.
struct Constraint {
  int i;
  int j;
  std::optional<int> value;
};

struct NormalizationPlan {
  AlgebraKind kind;
  int n;
  std::vector<Constraint> constraints;  // every significant position, row-major
  std::vector<VarId> solve_for;         // in solving order
  std::vector<VarId> free_parameters;   // group parameters never solved for
};

enum class SubsystemPart { S12, S3, S4 };
std::string_view part_name(SubsystemPart part);  // "S1+S2", "S3", "S4"

/// Equations (BX - IB)_{ij} = 0 at the listed positions, linear in `unknowns`.
struct LinearSystem {
  int k;
  SubsystemPart part;
  std::vector<std::pair<int, int>> positions;
  std::vector<VarId> unknowns;
  std::vector<MultiPoly> equations;
};

struct SolveStep {
  LinearSystem system;
  PolyMatrix matrix;
  std::vector<RationalExpr> rhs;
  RationalExpr determinant;
  std::vector<RationalExpr> solution;
};

struct NormalizationResult {
  AlgebraKind kind;
  int n;
  std::vector<VarId> raw_names;          // I_{kappa k} for T0, I_{kk} for T
  std::vector<RationalExpr> raw_invariants;
  Substitution solved;
  std::vector<MultiPoly> residual_x_equations;
  std::vector<MultiPoly> genericity_assumptions;
  std::vector<SolveStep> steps;
};

/// Throws UnsupportedKind for ST, InvalidSize for n < 2.
NormalizationPlan build_plan(AlgebraKind kind, int n);

/// The equations of B X = I B under the plan, grouped by k in solving order.
/// Throws NonlinearSystem if some designated unknown enters nonlinearly.
std::vector<LinearSystem> decompose_subsystems(const NormalizationPlan& plan);

/// Solves the subsystems in order by Cramer's rule. Throws ResidualXEquations
/// if some equation is left over in the x alone.
NormalizationResult run_normalization(AlgebraKind kind, int n);

/// T0: |X^{kappa,n}_{1,k}| by telescoping products. T: the recombined
/// tilde-I_{kk}, k = 0..[(n-1)/2].
std::vector<RationalExpr> recombine(const NormalizationResult& raw);

}  // namespace casimir
