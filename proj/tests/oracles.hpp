#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's determinant, bracket or transform code.

#include <algorithm>
#include <numeric>
#include <vector>

#include "casimir/algebra.hpp"
#include "casimir/closed_form.hpp"
#include "casimir/lifted.hpp"
#include "casimir/poly_matrix.hpp"
#include "casimir/rational_matrix.hpp"
#include "casimir/sampling.hpp"

namespace oracle {

using casimir::BigRational;
using casimir::RationalExpr;

inline int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) sign = -sign;
    }
  }
  return sign;
}

/// Leibniz expansion over all permutations.
inline RationalExpr leibniz(const casimir::PolyMatrix& m) {
  std::vector<int> p(m.rows());
  std::iota(p.begin(), p.end(), 0);
  RationalExpr sum;
  do {
    RationalExpr term(permutation_sign(p));
    for (std::size_t r = 0; r < m.rows(); ++r) term *= m(r, static_cast<std::size_t>(p[r]));
    sum += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

inline BigRational leibniz(const casimir::RationalMatrix& m) {
  std::vector<int> p(m.rows());
  std::iota(p.begin(), p.end(), 0);
  BigRational sum;
  do {
    BigRational term(permutation_sign(p));
    for (std::size_t r = 0; r < m.rows(); ++r) term *= m(r, static_cast<std::size_t>(p[r]));
    sum += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

/// The n x n matrix of a basis element: a matrix unit, or diag(f_weight) for f_k.
inline casimir::RationalMatrix matrix_of(const casimir::BasisLabel& l, int n) {
  casimir::RationalMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  if (l.family == casimir::BasisLabel::Family::E) {
    m(static_cast<std::size_t>(l.i - 1), static_cast<std::size_t>(l.j - 1)) = 1;
  } else {
    for (int p = 1; p <= n; ++p) {
      m(static_cast<std::size_t>(p - 1), static_cast<std::size_t>(p - 1)) = p <= l.i ? BigRational(n - l.i, n) : BigRational(-l.i, n);
    }
  }
  return m;
}

inline casimir::RationalMatrix commutator(const casimir::RationalMatrix& a, const casimir::RationalMatrix& b) {
  casimir::RationalMatrix ab = a * b;
  const casimir::RationalMatrix ba = b * a;
  for (std::size_t r = 0; r < ab.rows(); ++r) {
    for (std::size_t c = 0; c < ab.cols(); ++c) ab(r, c) -= ba(r, c);
  }
  return ab;
}

/// Matrix of sum_c coeff_c * basis_c.
inline casimir::RationalMatrix combination(const casimir::AlgebraSpec& alg, const std::vector<casimir::StructureTerm>& terms) {
  casimir::RationalMatrix out(static_cast<std::size_t>(alg.n()), static_cast<std::size_t>(alg.n()));
  for (const auto& t : terms) {
    const casimir::RationalMatrix m = matrix_of(alg.label(t.index), alg.n());
    for (std::size_t r = 0; r < out.rows(); ++r) {
      for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) += t.coeff * m(r, c);
    }
  }
  return out;
}

/// Ad*_B on lower triangular X: significant entries of B X B^{-1}, inverse by Gauss-Jordan.
inline casimir::RationalMatrix conjugate(const casimir::RationalMatrix& b, const casimir::RationalMatrix& x) {
  return b * x * *casimir::inverse(b);
}

/// Random upper triangular B with nonzero diagonal; unit diagonal when `unipotent`.
inline casimir::RationalMatrix random_upper(casimir::PointSampler& s, int n, bool unipotent) {
  casimir::RationalMatrix b(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < b.rows(); ++i) {
    b(i, i) = unipotent ? BigRational(1) : s.next_nonzero();
    for (std::size_t j = i + 1; j < b.cols(); ++j) b(i, j) = s.next();
  }
  return b;
}

/// |X^{kappa,n}_{1,k}| by permutation expansion.
inline RationalExpr corner_minor(int n, int k) {
  casimir::PolyMatrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = RationalExpr::variable(casimir::VarId::x(n - k + 1 + r, c + 1));
  }
  return leibniz(m);
}

struct OrbitResult {
  bool passed = true;
  int trials_run = 0;
};

/// F(B X B^{-1}) == F(X) at random points. st candidates are pulled back to
/// t(n)* first; any triangular B then works because scalars act trivially.
inline OrbitResult orbit_invariant(casimir::AlgebraKind kind, int n, const RationalExpr& f, int trials, std::uint64_t seed) {
  using casimir::AlgebraKind;
  const AlgebraKind dual = kind == AlgebraKind::T0 ? AlgebraKind::T0 : AlgebraKind::T;
  const RationalExpr g = kind == AlgebraKind::ST ? f.substitute(casimir::st_pullback(n)) : f;
  casimir::PointSampler s(seed);
  OrbitResult out;
  while (out.trials_run < trials) {
    casimir::RationalMatrix xm(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    casimir::Assignment before;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (!casimir::is_significant(dual, i, j)) continue;
        xm(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = s.next();
        before[casimir::VarId::x(i, j)] = xm(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
      }
    }
    const casimir::RationalMatrix y = conjugate(random_upper(s, n, kind == AlgebraKind::T0), xm);
    casimir::Assignment after;
    for (const auto& [v, _] : before) after[v] = y(static_cast<std::size_t>(v.row() - 1), static_cast<std::size_t>(v.col() - 1));
    if (g.den().eval(before).is_zero() || g.den().eval(after).is_zero()) continue;
    ++out.trials_run;
    if (!(g.eval(before) == g.eval(after))) {
      out.passed = false;
      return out;
    }
  }
  return out;
}

}  // namespace oracle
