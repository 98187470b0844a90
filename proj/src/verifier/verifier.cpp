#include "casimir/verifier.hpp"

#include "casimir/errors.hpp"
#include "casimir/lifted.hpp"
#include "casimir/linear_algebra.hpp"
#include "casimir/sampling.hpp"

namespace casimir {

namespace {

constexpr int kMaxResample = 50;

}  // namespace

MultiPoly apply_generator(const AlgebraSpec& alg, std::size_t i, const MultiPoly& p) {
  MultiPoly out;
  if (p.is_constant()) return out;
  for (std::size_t j = 0; j < alg.dim(); ++j) {
    const auto& br = alg.bracket(i, j);
    if (br.empty()) continue;
    const VarId xj = alg.dual_var(j);
    if (!p.depends_on(xj)) continue;
    out += alg.bracket_form(i, j) * p.partial(xj);
  }
  return out;
}

MultiPoly infinitesimal_residual(const AlgebraSpec& alg, const RationalExpr& f, std::size_t i) {
  const MultiPoly& p = f.num();
  const MultiPoly& q = f.den();
  if (q.is_constant()) return apply_generator(alg, i, p);
  return q * apply_generator(alg, i, p) - p * apply_generator(alg, i, q);
}

CriterionReport criterion_report(const AlgebraSpec& alg, const RationalExpr& f) {
  CriterionReport r{f, {}, true, std::nullopt};
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    r.residuals.push_back(infinitesimal_residual(alg, f, i));
    if (!r.residuals.back().is_zero() && !r.first_failure) {
      r.first_failure = i;
      r.pass = false;
    }
  }
  return r;
}

std::size_t jacobian_rank_sampled(const std::vector<RationalExpr>& fs, const std::vector<VarId>& vars, std::uint64_t seed) {
  PointSampler sampler(seed);
  for (int attempt = 0; attempt < kMaxResample; ++attempt) {
    try {
      return jacobian_rank_at(fs, vars, sampler.point(vars));
    } catch (const DenominatorVanishes&) {
    }
  }
  throw DegeneratePoint("no usable sample point after 50 attempts");
}

BasisReport check_basis(const AlgebraSpec& alg, const InvariantBasis& basis, std::uint64_t seed) {
  BasisReport rep{alg.kind(), alg.n(), alg.dim(), 0, 0, {}, true, {}};
  for (std::size_t e = 0; e < basis.elements.size(); ++e) {
    rep.elements.push_back(criterion_report(alg, basis.elements[e]));
    const CriterionReport& cr = rep.elements.back();
    if (!cr.pass && rep.failure.empty()) {
      rep.failure = "element " + std::to_string(e) + " fails the criterion for generator " +
                    alg.label(*cr.first_failure).name() + ": residual " + cr.residuals[*cr.first_failure].to_string();
    }
  }
  rep.coadjoint_rank = coadjoint_rank(alg, 5, seed);
  rep.jacobian_rank = basis.elements.empty() ? 0 : jacobian_rank_sampled(basis.elements, alg.dual_vars(), seed);
  const std::size_t count = basis.elements.size();
  if (rep.failure.empty() && rep.jacobian_rank != count) {
    rep.failure = "Jacobian rank " + std::to_string(rep.jacobian_rank) + " is below the basis size " + std::to_string(count);
  }
  if (rep.failure.empty() && rep.dim - rep.coadjoint_rank != count) {
    rep.failure = "dim - rank(coadjoint) = " + std::to_string(rep.dim - rep.coadjoint_rank) + " but the basis has " +
                  std::to_string(count) + " elements";
  }
  rep.pass = rep.failure.empty();
  return rep;
}

BasisReport verify_basis(const AlgebraSpec& alg, const InvariantBasis& basis, std::uint64_t seed) {
  BasisReport rep = check_basis(alg, basis, seed);
  if (!rep.pass) throw VerificationFailure(rep.failure);
  return rep;
}

GroupCheckOutcome group_invariance_outcome(AlgebraKind kind, int n, const RationalExpr& f, int trials, std::uint64_t seed) {
  const RationalExpr g = kind == AlgebraKind::ST ? f.substitute(st_pullback(n)) : f;
  const AlgebraKind coords = kind == AlgebraKind::T0 ? AlgebraKind::T0 : AlgebraKind::T;
  const std::vector<VarId> xs = x_vars(coords, n);
  const std::vector<VarId> bs = b_vars(group_kind_for(kind), n);
  PointSampler sampler(seed);
  GroupCheckOutcome out;
  for (int t = 1; t <= trials; ++t) {
    bool done = false;
    for (int attempt = 0; attempt < kMaxResample && !done; ++attempt) {
      Assignment b;
      for (const VarId v : bs) b[v] = v.row() == v.col() ? sampler.next_nonzero() : sampler.next();
      if (kind == AlgebraKind::ST) {
        BigRational prod = 1;
        for (int i = 1; i < n; ++i) prod *= b[VarId::b(i, i)];
        b[VarId::b(n, n)] = prod.inverse();
      }
      const Assignment x = sampler.point(xs);
      try {
        const BigRational before = g.eval(x);
        const BigRational after = g.eval(coadjoint_transform(coords, n, b, x));
        done = true;
        ++out.trials_run;
        if (before != after) {
          out.passed = false;
          out.first_failure = t;
          return out;
        }
      } catch (const DenominatorVanishes&) {
      }
    }
    if (!done) throw DegeneratePoint("no usable sample point after 50 attempts");
  }
  return out;
}

bool group_invariance_check(AlgebraKind kind, int n, const RationalExpr& f, int trials, std::uint64_t seed) {
  return group_invariance_outcome(kind, n, f, trials, seed).passed;
}

bool functional_dependence_check(const std::vector<RationalExpr>& fs, const RationalExpr& g, const std::vector<VarId>& vars,
                                 std::uint64_t seed) {
  std::vector<RationalExpr> all = fs;
  all.push_back(g);
  PointSampler sampler(seed);
  for (int attempt = 0; attempt < kMaxResample; ++attempt) {
    const Assignment p = sampler.point(vars);
    try {
      return jacobian_rank_at(all, vars, p) == jacobian_rank_at(fs, vars, p);
    } catch (const DenominatorVanishes&) {
    }
  }
  throw DegeneratePoint("no usable sample point after 50 attempts");
}

}  // namespace casimir
