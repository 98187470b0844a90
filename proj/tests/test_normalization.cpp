#include <doctest.h>

#include "casimir/closed_form.hpp"
#include "casimir/errors.hpp"
#include "casimir/lifted.hpp"
#include "casimir/normalization.hpp"
#include "casimir/verifier.hpp"

using namespace casimir;

namespace {

RationalExpr x(int i, int j) { return RationalExpr::variable(VarId::x(i, j)); }

std::optional<int> constraint_at(const NormalizationPlan& p, int i, int j) {
  for (const Constraint& c : p.constraints) {
    if (c.i == i && c.j == j) return c.value;
  }
  FAIL("no constraint at (" << i << ", " << j << ")");
  return std::nullopt;
}

}  // namespace

TEST_CASE("t0 plan leaves the anti-diagonal free") {
  const NormalizationPlan p = build_plan(AlgebraKind::T0, 4);
  CHECK(p.constraints.size() == 6);
  CHECK_FALSE(constraint_at(p, 4, 1).has_value());
  CHECK_FALSE(constraint_at(p, 3, 2).has_value());
  for (const auto& [i, j] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 2}, {4, 3}}) CHECK(constraint_at(p, i, j) == 0);
  CHECK_THROWS_AS(build_plan(AlgebraKind::ST, 4), UnsupportedKind);
}

TEST_CASE("t plan fixes the anti-diagonal to 1") {
  const NormalizationPlan p = build_plan(AlgebraKind::T, 4);
  CHECK(p.constraints.size() == 10);
  CHECK(constraint_at(p, 4, 1) == 1);
  CHECK(constraint_at(p, 3, 2) == 1);
  CHECK_FALSE(constraint_at(p, 1, 1).has_value());
  CHECK_FALSE(constraint_at(p, 2, 2).has_value());
  CHECK(constraint_at(p, 3, 3) == 0);
}

TEST_CASE("subsystems are linear and square") {
  for (AlgebraKind kind : {AlgebraKind::T0, AlgebraKind::T}) {
    for (int n = 2; n <= 6; ++n) {
      for (const LinearSystem& s : decompose_subsystems(build_plan(kind, n))) {
        CHECK(s.equations.size() == s.unknowns.size());
        CHECK(s.positions.size() == s.equations.size());
        for (const MultiPoly& e : s.equations) {
          for (VarId u : s.unknowns) CHECK(e.degree_in(u) <= 1);
        }
      }
    }
  }
}

TEST_CASE("raw invariants") {
  const NormalizationResult t0 = run_normalization(AlgebraKind::T0, 4);
  REQUIRE(t0.raw_invariants.size() == 2);
  CHECK(t0.raw_names[0] == VarId::inv(4, 1));
  CHECK(t0.raw_invariants[0] == x(4, 1));
  CHECK(t0.raw_invariants[1] == -(x(3, 1) * x(4, 2) - x(3, 2) * x(4, 1)) / x(4, 1));
  CHECK(t0.residual_x_equations.empty());

  const NormalizationResult t2 = run_normalization(AlgebraKind::T, 2);
  REQUIRE(t2.raw_invariants.size() == 1);
  CHECK(t2.raw_invariants[0] == x(1, 1) + x(2, 2));

  const NormalizationResult t3 = run_normalization(AlgebraKind::T, 3);
  const std::vector<RationalExpr> rec = recombine(t3);
  REQUIRE(rec.size() == 2);
  CHECK(rec[1] == (x(2, 1) * x(3, 2) - x(2, 2) * x(3, 1)) / x(3, 1));
}

TEST_CASE("recombination equals the closed form") {
  CHECK(recombine(run_normalization(AlgebraKind::T0, 4)) == t0_basis(4).elements);
  CHECK(recombine(run_normalization(AlgebraKind::T, 2)) == std::vector<RationalExpr>{x(1, 1) + x(2, 2)});
  const std::vector<RationalExpr> r5 = recombine(run_normalization(AlgebraKind::T0, 5));
  REQUIRE(r5.size() == 2);
  CHECK(r5[0] == x(5, 1));
  // Cross-multiplied against the Laplace expansion of X^{4,5}_{1,2}.
  const RationalExpr minor = x(4, 1) * x(5, 2) - x(4, 2) * x(5, 1);
  CHECK(r5[1].num() * minor.den() == minor.num() * r5[1].den());
  for (AlgebraKind kind : {AlgebraKind::T0, AlgebraKind::T}) {
    for (int n = 2; n <= 6; ++n) {
      const NormalizationResult r = run_normalization(kind, n);
      for (const RationalExpr& e : r.raw_invariants) CHECK_FALSE(e.has_kind(VarKind::B));
      CHECK(recombine(r) == closed_form_basis(kind, n).elements);
    }
  }
}

TEST_CASE("genericity assumptions are recorded") {
  const NormalizationResult r = run_normalization(AlgebraKind::T, 4);
  const auto& a = r.genericity_assumptions;
  CHECK(std::find(a.begin(), a.end(), MultiPoly::variable(VarId::x(4, 1))) != a.end());
  const MultiPoly minor = (x(3, 1) * x(4, 2) - x(3, 2) * x(4, 1)).num();
  CHECK((std::find(a.begin(), a.end(), minor) != a.end() || std::find(a.begin(), a.end(), -minor) != a.end()));
  for (const MultiPoly& p : a) CHECK_FALSE(p.has_kind(VarKind::B));
}

TEST_CASE("raw invariant is a function of the recombined basis") {
  const NormalizationResult r = run_normalization(AlgebraKind::T0, 4);
  CHECK(functional_dependence_check(t0_basis(4).elements, r.raw_invariants[1], x_vars(AlgebraKind::T0, 4), 42));
}
