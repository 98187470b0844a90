#include <doctest.h>

#include "casimir/closed_form.hpp"
#include "casimir/errors.hpp"
#include "casimir/lifted.hpp"
#include "casimir/sampling.hpp"
#include "casimir/verifier.hpp"

using namespace casimir;

namespace {

RationalExpr x(int i, int j) { return RationalExpr::variable(VarId::x(i, j)); }

// D_i(P) expanded by hand from the bracket table, generator by generator.
MultiPoly reference_generator(const AlgebraSpec& alg, std::size_t i, const MultiPoly& p) {
  MultiPoly out;
  for (std::size_t j = 0; j < alg.dim(); ++j) {
    MultiPoly coeff;
    for (const StructureTerm& t : alg.bracket(i, j)) coeff += MultiPoly::variable(alg.dual_var(t.index)).scaled(t.coeff);
    out += coeff * p.partial(alg.dual_var(j));
  }
  return out;
}

}  // namespace

TEST_CASE("generator action matches the hand expansion") {
  PointSampler s(41);
  const AlgebraSpec alg = build_algebra(AlgebraKind::T, 4);
  for (int t = 0; t < 10; ++t) {
    const MultiPoly p = random_poly(s, alg.dual_vars(), 6, 2);
    for (std::size_t i = 0; i < alg.dim(); ++i) CHECK(apply_generator(alg, i, p) == reference_generator(alg, i, p));
  }
}

TEST_CASE("infinitesimal residual") {
  for (int n = 2; n <= 6; ++n) {
    const AlgebraSpec alg = build_algebra(AlgebraKind::T0, n);
    for (std::size_t i = 0; i < alg.dim(); ++i) CHECK(infinitesimal_residual(alg, x(n, 1), i).is_zero());
  }
  const AlgebraSpec t3 = build_algebra(AlgebraKind::T, 3);
  const RationalExpr trace = x(1, 1) + x(2, 2) + x(3, 3);
  for (std::size_t i = 0; i < t3.dim(); ++i) CHECK(infinitesimal_residual(t3, trace, i).is_zero());
  const std::size_t e12 = *t3.index_of(BasisLabel::e(1, 2));
  CHECK_FALSE(infinitesimal_residual(t3, x(1, 1), e12).is_zero());
  const CriterionReport bad = criterion_report(t3, x(1, 1));
  CHECK_FALSE(bad.pass);
  CHECK(bad.first_failure.has_value());
}

TEST_CASE("verify_basis") {
  const BasisReport t0 = verify_basis(build_algebra(AlgebraKind::T0, 6), t0_basis(6), 42);
  CHECK(t0.pass);
  CHECK(t0.jacobian_rank == 3);
  CHECK(verify_basis(build_algebra(AlgebraKind::T, 4), t_basis(4), 42).jacobian_rank == 2);
  CHECK(verify_basis(build_algebra(AlgebraKind::ST, 5), st_basis(5), 42).jacobian_rank == 2);

  InvariantBasis broken = t_basis(3);
  broken.elements.push_back(x(1, 1));
  const AlgebraSpec t3 = build_algebra(AlgebraKind::T, 3);
  const BasisReport r = check_basis(t3, broken, 42);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.failure.empty());
  CHECK_THROWS_AS(verify_basis(t3, broken, 42), VerificationFailure);

  InvariantBasis short_basis = t_basis(3);
  short_basis.elements.pop_back();
  CHECK_FALSE(check_basis(t3, short_basis, 42).pass);
}

TEST_CASE("group invariance") {
  for (int n = 2; n <= 6; ++n) CHECK(group_invariance_check(AlgebraKind::T0, n, x(n, 1), 20, 42));
  CHECK(group_invariance_check(AlgebraKind::T0, 4, x(3, 1) * x(4, 2) - x(3, 2) * x(4, 1), 100, 42));
  const GroupCheckOutcome neg = group_invariance_outcome(AlgebraKind::T0, 3, x(2, 1), 10, 42);
  CHECK_FALSE(neg.passed);
  CHECK(neg.first_failure.value() <= 10);
  for (int n = 3; n <= 5; ++n) {
    for (const RationalExpr& f : st_basis(n).elements) CHECK(group_invariance_check(AlgebraKind::ST, n, f, 20, 7));
  }
  CHECK_FALSE(group_invariance_check(AlgebraKind::ST, 3, RationalExpr::variable(VarId::f(1)) + x(2, 1), 10, 7));
}

TEST_CASE("functional dependence") {
  const std::vector<VarId> vars = x_vars(AlgebraKind::T0, 4);
  CHECK(functional_dependence_check({x(4, 1)}, x(4, 1) * x(4, 1), vars, 42));
  CHECK_FALSE(functional_dependence_check({x(4, 1)}, x(3, 1), vars, 42));
  CHECK(jacobian_rank_sampled(t0_basis(4).elements, vars, 42) == 2);
}
