#include "casimir/normalization.hpp"

#include <algorithm>
#include <stdexcept>

#include "casimir/errors.hpp"
#include "casimir/lifted.hpp"
#include "casimir/linear_algebra.hpp"

namespace casimir {

namespace {

bool is_unknown(VarId v, const std::vector<VarId>& unknowns) {
  return std::find(unknowns.begin(), unknowns.end(), v) != unknowns.end();
}

std::uint32_t unknown_degree(const Monomial& m, const std::vector<VarId>& unknowns) {
  std::uint32_t d = 0;
  for (const Factor& f : m.factors()) {
    if (is_unknown(f.var, unknowns)) d += f.exp;
  }
  return d;
}

void require_linear(const MultiPoly& eq, const std::vector<VarId>& unknowns, int k, SubsystemPart part) {
  for (const Term& t : eq.terms()) {
    if (unknown_degree(t.monomial, unknowns) > 1) {
      throw NonlinearSystem(std::string(part_name(part)) + " for k = " + std::to_string(k) +
                            " is not linear in its unknowns: " + eq.to_string());
    }
  }
}

// Records p != 0 as x-minors: the monomial part splits into single
// variables, group parameters are dropped, the rest is made primitive.
void add_assumption(std::vector<MultiPoly>& out, const MultiPoly& p) {
  const auto push = [&](MultiPoly q) {
    if (q.is_constant()) return;
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
  };
  if (p.is_zero()) return;
  const Monomial content = p.monomial_content();
  for (const Factor& f : content.factors()) {
    if (f.var.kind() != VarKind::B) push(MultiPoly::variable(f.var));
  }
  MultiPoly q = p.divide_monomial(content);
  BigRational c = q.coefficient_content();
  if (q.leading_term().coeff.sign() < 0) c = -c;
  push(q.scaled(c.inverse()));
}

}  // namespace

std::string_view part_name(SubsystemPart part) {
  switch (part) {
    case SubsystemPart::S12: return "S1+S2";
    case SubsystemPart::S3: return "S3";
    case SubsystemPart::S4: return "S4";
  }
  return "?";
}

NormalizationPlan build_plan(AlgebraKind kind, int n) {
  if (kind == AlgebraKind::ST) throw UnsupportedKind("normalization is defined for t0 and t only");
  if (n < 2) throw InvalidSize("n must be >= 2");
  NormalizationPlan plan{kind, n, {}, {}, {}};
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      if (!is_significant(kind, i, j)) continue;
      const bool anti = i == n - j + 1 && j <= n / 2;
      std::optional<int> value = 0;
      if (kind == AlgebraKind::T0) {
        if (anti) value.reset();
      } else {
        if (anti) value = 1;
        if (i == j && j <= (n + 1) / 2) value.reset();
      }
      plan.constraints.push_back({i, j, value});
    }
  }
  const std::vector<LinearSystem> systems = decompose_subsystems(plan);
  for (const LinearSystem& s : systems) plan.solve_for.insert(plan.solve_for.end(), s.unknowns.begin(), s.unknowns.end());
  for (const VarId b : b_vars(group_kind_for(kind), n)) {
    if (!is_unknown(b, plan.solve_for)) plan.free_parameters.push_back(b);
  }
  return plan;
}

std::vector<LinearSystem> decompose_subsystems(const NormalizationPlan& plan) {
  const AlgebraKind kind = plan.kind;
  const int n = plan.n;
  const GroupElement g = GroupElement::symbolic(group_kind_for(kind), n);
  const PolyMatrix x = dual_matrix(kind, n);
  PolyMatrix lifted(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (const Constraint& c : plan.constraints) {
    lifted(c.i - 1, c.j - 1) = c.value ? RationalExpr(*c.value) : RationalExpr::variable(VarId::inv(c.i, c.j));
  }
  const PolyMatrix lhs = g.entries * x;
  const PolyMatrix rhs = lifted * g.entries;
  const auto equation = [&](int i, int j) { return (lhs.at1(i, j) - rhs.at1(i, j)).num(); };

  std::vector<LinearSystem> out;
  const auto emit = [&](int k, SubsystemPart part, int row, int j_from, int j_to, std::vector<VarId> unknowns) {
    if (j_from > j_to) return;
    LinearSystem s{k, part, {}, std::move(unknowns), {}};
    for (int j = j_from; j <= j_to; ++j) {
      s.positions.emplace_back(row, j);
      s.equations.push_back(equation(row, j));
      require_linear(s.equations.back(), s.unknowns, k, part);
    }
    if (s.positions.size() != s.unknowns.size()) {
      throw std::logic_error("subsystem has " + std::to_string(s.positions.size()) + " equations and " +
                             std::to_string(s.unknowns.size()) + " unknowns");
    }
    out.push_back(std::move(s));
  };

  for (int k = 1; k <= (n + 1) / 2; ++k) {
    const int kappa = n - k + 1;
    std::vector<VarId> u;
    if (kind == AlgebraKind::T0) {
      if (k < kappa) {
        for (int ip = kappa + 1; ip <= n; ++ip) u.push_back(VarId::b(kappa, ip));
        u.push_back(VarId::inv(kappa, k));
        emit(k, SubsystemPart::S12, kappa, 1, k, std::move(u));
        u.clear();
        for (int j = k + 1; j < kappa; ++j) u.push_back(VarId::b(k, j));
        emit(k, SubsystemPart::S3, kappa, k + 1, kappa - 1, std::move(u));
        u.clear();
      }
      for (int ip = kappa + 1; ip <= n; ++ip) u.push_back(VarId::b(k, ip));
      emit(k, SubsystemPart::S4, k, 1, k - 1, std::move(u));
    } else {
      if (k < kappa) {
        for (int ip = kappa + 1; ip <= n; ++ip) u.push_back(VarId::b(kappa, ip));
        for (int j = k; j <= kappa; ++j) u.push_back(VarId::b(k, j));
        emit(k, SubsystemPart::S12, kappa, 1, kappa, std::move(u));
        u.clear();
      }
      for (int j = std::max(kappa, k) + 1; j <= n; ++j) u.push_back(VarId::b(k, j));
      emit(k, SubsystemPart::S3, k, 1, k - 1, std::move(u));
      emit(k, SubsystemPart::S4, k, k, k, {VarId::inv(k, k)});
    }
  }
  return out;
}

NormalizationResult run_normalization(AlgebraKind kind, int n) {
  const NormalizationPlan plan = build_plan(kind, n);
  const std::vector<LinearSystem> systems = decompose_subsystems(plan);
  NormalizationResult res{kind, n, {}, {}, {}, {}, {}, {}};

  for (const LinearSystem& s : systems) {
    const std::size_t m = s.unknowns.size();
    PolyMatrix a(m, m);
    std::vector<RationalExpr> rhs;
    for (std::size_t r = 0; r < m; ++r) {
      const MultiPoly eq = substitute(s.equations[r], res.solved).num();
      MultiPoly rest = eq;
      for (std::size_t c = 0; c < m; ++c) {
        const MultiPoly coeff = eq.coefficient_of(s.unknowns[c], 1);
        a(r, c) = RationalExpr(coeff);
        rest -= coeff * MultiPoly::variable(s.unknowns[c]);
      }
      for (const VarId u : s.unknowns) {
        if (rest.depends_on(u)) {
          throw NonlinearSystem(std::string(part_name(s.part)) + " for k = " + std::to_string(s.k) +
                                " became nonlinear after substitution");
        }
      }
      rhs.push_back(RationalExpr(-rest));
    }
    SolveStep step{s, a, rhs, det(a), {}};
    if (step.determinant.is_zero()) {
      throw SingularSystem(std::string(part_name(s.part)) + " for k = " + std::to_string(s.k) + " is singular");
    }
    step.solution = cramer_solve(a, rhs);
    add_assumption(res.genericity_assumptions, step.determinant.num());
    add_assumption(res.genericity_assumptions, step.determinant.den());
    for (std::size_t c = 0; c < m; ++c) res.solved[s.unknowns[c]] = step.solution[c];
    res.steps.push_back(std::move(step));
  }

  for (const LinearSystem& s : systems) {
    for (std::size_t r = 0; r < s.equations.size(); ++r) {
      const MultiPoly left = substitute(s.equations[r], res.solved).num();
      if (left.is_zero()) continue;
      if (left.has_kind(VarKind::B) || left.has_kind(VarKind::Inv)) {
        throw std::logic_error("equation at (" + std::to_string(s.positions[r].first) + ", " +
                               std::to_string(s.positions[r].second) + ") is not satisfied: " + left.to_string());
      }
      res.residual_x_equations.push_back(left);
    }
  }
  if (!res.residual_x_equations.empty()) {
    throw ResidualXEquations("normalization leaves " + std::to_string(res.residual_x_equations.size()) +
                             " equations in x alone, first: " + res.residual_x_equations.front().to_string() + " = 0");
  }

  if (kind == AlgebraKind::T0) {
    for (int k = 1; k <= n / 2; ++k) res.raw_names.push_back(VarId::inv(n - k + 1, k));
  } else {
    for (int k = 1; k <= (n + 1) / 2; ++k) res.raw_names.push_back(VarId::inv(k, k));
  }
  for (const VarId v : res.raw_names) {
    const RationalExpr& e = res.solved.at(v);
    if (e.has_kind(VarKind::B)) throw std::logic_error(v.name() + " still depends on group parameters: " + e.to_string());
    res.raw_invariants.push_back(e);
  }
  return res;
}

std::vector<RationalExpr> recombine(const NormalizationResult& raw) {
  std::vector<RationalExpr> out;
  if (raw.kind == AlgebraKind::T0) {
    RationalExpr acc(1);
    for (std::size_t m = 0; m < raw.raw_invariants.size(); ++m) {
      const int k = static_cast<int>(m) + 1;
      acc *= raw.raw_invariants[m] * RationalExpr(k % 2 == 1 ? 1 : -1);
      out.push_back(acc);
    }
    return out;
  }
  RationalExpr prev;
  for (const RationalExpr& v : raw.raw_invariants) prev += v;
  out.push_back(prev);
  for (int k = 1; k <= (raw.n - 1) / 2; ++k) {
    const RationalExpr& ikk = raw.raw_invariants[static_cast<std::size_t>(k - 1)];
    prev = ikk * RationalExpr(k % 2 == 1 ? 1 : -1) - prev;
    out.push_back(prev);
  }
  return out;
}

}  // namespace casimir
