#include "casimir/algebra.hpp"

#include <algorithm>

#include "casimir/errors.hpp"
#include "casimir/rational_matrix.hpp"
#include "casimir/sampling.hpp"

namespace casimir {

std::string_view kind_name(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::T0: return "t0";
    case AlgebraKind::T: return "t";
    case AlgebraKind::ST: return "st";
  }
  return "?";
}

std::optional<AlgebraKind> parse_kind(std::string_view text) {
  if (text == "t0") return AlgebraKind::T0;
  if (text == "t") return AlgebraKind::T;
  if (text == "st") return AlgebraKind::ST;
  return std::nullopt;
}

std::string BasisLabel::name() const {
  if (family == Family::F) return "f_" + std::to_string(i);
  if (i < 10 && j < 10) return "e_" + std::to_string(i) + std::to_string(j);
  return "e_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

AlgebraSpec::AlgebraSpec(AlgebraKind kind, int n, std::vector<BasisLabel> basis)
    : kind_(kind), n_(n), basis_(std::move(basis)), brackets_(basis_.size() * basis_.size()) {}

std::optional<std::size_t> AlgebraSpec::index_of(const BasisLabel& label) const {
  for (std::size_t a = 0; a < basis_.size(); ++a) {
    if (basis_[a] == label) return a;
  }
  return std::nullopt;
}

void AlgebraSpec::set_bracket(std::size_t a, std::size_t b, std::vector<StructureTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](const StructureTerm& l, const StructureTerm& r) { return l.index < r.index; });
  brackets_[a * dim() + b] = std::move(terms);
}

VarId AlgebraSpec::dual_var(std::size_t a) const {
  const BasisLabel& l = basis_[a];
  return l.family == BasisLabel::Family::F ? VarId::f(l.i) : VarId::x(l.j, l.i);
}

std::vector<VarId> AlgebraSpec::dual_vars() const {
  std::vector<VarId> out;
  out.reserve(dim());
  for (std::size_t a = 0; a < dim(); ++a) out.push_back(dual_var(a));
  return out;
}

std::optional<std::size_t> AlgebraSpec::index_of_dual(VarId v) const {
  for (std::size_t a = 0; a < dim(); ++a) {
    if (dual_var(a) == v) return a;
  }
  return std::nullopt;
}

MultiPoly AlgebraSpec::bracket_form(std::size_t a, std::size_t b) const {
  std::vector<Term> terms;
  for (const StructureTerm& t : bracket(a, b)) terms.push_back({Monomial(dual_var(t.index)), t.coeff});
  return MultiPoly::from_terms(std::move(terms));
}

BigRational f_weight(int n, int k, int position) {
  return position <= k ? BigRational(n - k, n) : BigRational(-k, n);
}

AlgebraSpec build_algebra(AlgebraKind kind, int n) {
  if (n < 2) throw InvalidSize("n must be >= 2");
  std::vector<BasisLabel> basis;
  const int first_diag = kind == AlgebraKind::T ? 0 : 1;
  for (int d = first_diag; d < n; ++d) {
    for (int i = 1; i + d <= n; ++i) basis.push_back(BasisLabel::e(i, i + d));
  }
  if (kind == AlgebraKind::ST) {
    for (int k = 1; k < n; ++k) basis.push_back(BasisLabel::f(k));
  }
  AlgebraSpec alg(kind, n, std::move(basis));

  const auto idx = [&](const BasisLabel& l) { return *alg.index_of(l); };
  const std::size_t dim = alg.dim();
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      const BasisLabel& la = alg.label(a);
      const BasisLabel& lb = alg.label(b);
      std::vector<StructureTerm> terms;
      using F = BasisLabel::Family;
      if (la.family == F::E && lb.family == F::E) {
        // [e_ij, e_i'j'] = delta_{i'j} e_ij' - delta_{ij'} e_i'j
        if (lb.i == la.j) terms.push_back({idx(BasisLabel::e(la.i, lb.j)), BigRational(1)});
        if (la.i == lb.j) terms.push_back({idx(BasisLabel::e(lb.i, la.j)), BigRational(-1)});
        if (terms.size() == 2 && terms[0].index == terms[1].index) terms.clear();
      } else if (la.family == F::F && lb.family == F::E) {
        const BigRational c = f_weight(n, la.i, lb.i) - f_weight(n, la.i, lb.j);
        if (!c.is_zero()) terms.push_back({b, c});
      } else if (la.family == F::E && lb.family == F::F) {
        const BigRational c = f_weight(n, lb.i, la.j) - f_weight(n, lb.i, la.i);
        if (!c.is_zero()) terms.push_back({a, c});
      }
      alg.set_bracket(a, b, std::move(terms));
    }
  }
  return alg;
}

std::vector<std::vector<BigRational>> center(const AlgebraSpec& alg) {
  const std::size_t dim = alg.dim();
  // Row (b, k): coefficient of e_k in [v, e_b] = sum_a v_a c_{ab}^k.
  RationalMatrix m(dim * dim, dim);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      for (const StructureTerm& t : alg.bracket(a, b)) m(b * dim + t.index, a) += t.coeff;
    }
  }
  return kernel(std::move(m));
}

std::size_t coadjoint_rank(const AlgebraSpec& alg, int samples, std::uint64_t seed) {
  PointSampler sampler(seed);
  const std::vector<VarId> vars = alg.dual_vars();
  const std::size_t dim = alg.dim();
  std::size_t best = 0;
  for (int s = 0; s < samples; ++s) {
    const Assignment point = sampler.point(vars);
    RationalMatrix m(dim, dim);
    for (std::size_t a = 0; a < dim; ++a) {
      for (std::size_t b = 0; b < dim; ++b) {
        BigRational v;
        for (const StructureTerm& t : alg.bracket(a, b)) v += t.coeff * point.at(vars[t.index]);
        m(a, b) = v;
      }
    }
    best = std::max(best, rank(std::move(m)));
  }
  return best;
}

std::size_t expected_invariant_count(AlgebraKind kind, int n) {
  if (n < 2) throw InvalidSize("n must be >= 2");
  switch (kind) {
    case AlgebraKind::T0: return static_cast<std::size_t>(n / 2);
    case AlgebraKind::T: return static_cast<std::size_t>((n - 1) / 2 + 1);
    case AlgebraKind::ST: return static_cast<std::size_t>((n - 1) / 2);
  }
  return 0;
}

}  // namespace casimir
