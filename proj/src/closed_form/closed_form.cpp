#include "casimir/closed_form.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "casimir/errors.hpp"
#include "casimir/lifted.hpp"
#include "casimir/linear_algebra.hpp"
#include "casimir/render.hpp"

namespace casimir {

namespace {

// Signed permutations of {0..size-1}, in lexicographic order.
template <typename F>
void for_each_permutation(int size, F&& f) {
  std::vector<int> p(static_cast<std::size_t>(size));
  std::iota(p.begin(), p.end(), 0);
  do {
    int inversions = 0;
    for (int a = 0; a < size; ++a) {
      for (int b = a + 1; b < size; ++b) inversions += p[a] > p[b] ? 1 : 0;
    }
    f(p, inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(p.begin(), p.end()));
}

RationalMatrix sub(const RationalMatrix& m, int r1, int r2, int c1, int c2) {
  RationalMatrix out(static_cast<std::size_t>(std::max(0, r2 - r1 + 1)), static_cast<std::size_t>(std::max(0, c2 - c1 + 1)));
  for (int r = r1; r <= r2; ++r) {
    for (int c = c1; c <= c2; ++c) out(r - r1, c - c1) = m(r - 1, c - 1);
  }
  return out;
}

RationalMatrix numeric_dual(int n, const Assignment& point) {
  RationalMatrix x(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      if (auto it = point.find(VarId::x(i, j)); it != point.end()) x(i - 1, j - 1) = it->second;
    }
  }
  return x;
}

RationalMatrix numeric_bordered(const RationalMatrix& x, int row, int r1, int r2, int c_last, int col, const BigRational& corner) {
  const int size = c_last + 1;
  RationalMatrix out(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
  for (int c = 1; c <= c_last; ++c) out(0, c - 1) = x(row - 1, c - 1);
  out(0, c_last) = corner;
  for (int r = r1; r <= r2; ++r) {
    for (int c = 1; c <= c_last; ++c) out(r - r1 + 1, c - 1) = x(r - 1, c - 1);
    out(r - r1 + 1, c_last) = x(r - 1, col - 1);
  }
  return out;
}

BigRational dot(const RationalMatrix& row, const RationalMatrix& m, const RationalMatrix& col) {
  const RationalMatrix v = row * m * col;
  return v(0, 0);
}

PolyMatrix symbolic_bordered(const PolyMatrix& x, int row, int r1, int r2, int c_last, int col, const RationalExpr& corner) {
  const int size = c_last + 1;
  PolyMatrix out(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
  for (int c = 1; c <= c_last; ++c) out(0, c - 1) = x.at1(row, c);
  out(0, c_last) = corner;
  for (int r = r1; r <= r2; ++r) {
    for (int c = 1; c <= c_last; ++c) out(r - r1 + 1, c - 1) = x.at1(r, c);
    out(r - r1 + 1, c_last) = x.at1(r, col);
  }
  return out;
}

RationalExpr schur_term(const PolyMatrix& x, int row, int r1, int r2, int c_last, int col) {
  const PolyMatrix m = x.block(r1, r2, 1, c_last);
  std::vector<RationalExpr> rhs;
  for (int r = r1; r <= r2; ++r) rhs.push_back(x.at1(r, col));
  const std::vector<RationalExpr> sol = cramer_solve(m, rhs);
  RationalExpr acc;
  for (int c = 1; c <= c_last; ++c) acc += x.at1(row, c) * sol[static_cast<std::size_t>(c - 1)];
  return acc;
}

std::string signed_join(const std::string& head, const std::string& tail) {
  if (tail.empty() || tail == "0") return head;
  if (tail[0] == '-') return head + " - " + tail.substr(1);
  return head + " + " + tail;
}

}  // namespace

PolyMatrix bordered_matrix(const PolyMatrix& x, int k, int j, const RationalExpr& corner) {
  const int n = static_cast<int>(x.rows());
  return symbolic_bordered(x, j, n - k + 1, n, k, j, corner);
}

InvariantBasis t0_basis(int n) {
  if (n < 2) throw InvalidSize("n must be >= 2");
  const PolyMatrix x = dual_matrix(AlgebraKind::T0, n);
  InvariantBasis out{AlgebraKind::T0, n, {}, {}};
  for (int k = 1; k <= n / 2; ++k) {
    const PolyMatrix m = x.block(n - k + 1, n, 1, k);
    out.elements.push_back(det(m));
    out.latex.push_back(k == 1 ? latex(m(0, 0)) : latex_det(m));
  }
  return out;
}

InvariantBasis t_basis(int n) {
  if (n < 2) throw InvalidSize("n must be >= 2");
  const PolyMatrix x = dual_matrix(AlgebraKind::T, n);
  InvariantBasis out{AlgebraKind::T, n, {}, {}};
  for (int k = 0; k <= (n - 1) / 2; ++k) {
    const int kappa = n - k + 1;
    RationalExpr numerator;
    std::string sum;
    for (int j = k + 1; j <= kappa - 1; ++j) {
      const PolyMatrix b = bordered_matrix(x, k, j, x.at1(j, j));
      numerator += det(b);
      if (!sum.empty()) sum += " + ";
      sum += k == 0 ? latex(x.at1(j, j)) : latex_det(b);
    }
    if (k == 0) {
      out.elements.push_back(numerator);
      out.latex.push_back(sum);
      continue;
    }
    const PolyMatrix m = x.block(kappa, n, 1, k);
    out.elements.push_back(numerator / det(m));
    out.latex.push_back("\\frac{1}{" + latex_det(m) + "}\\left(" + sum + "\\right)");
  }
  return out;
}

MultiPoly f_pullback(int n, int k) {
  MultiPoly out;
  for (int i = 1; i <= n; ++i) out += MultiPoly::variable(VarId::x(i, i)).scaled(f_weight(n, k, i));
  return out;
}

Substitution st_pullback(int n) {
  Substitution s;
  for (int m = 1; m < n; ++m) s[VarId::f(m)] = RationalExpr(f_pullback(n, m));
  return s;
}

InvariantBasis st_basis(int n) {
  if (n < 2) throw InvalidSize("n must be >= 2");
  const PolyMatrix x = dual_matrix(AlgebraKind::T0, n);
  InvariantBasis out{AlgebraKind::ST, n, {}, {}};
  for (int k = 1; k <= (n - 1) / 2; ++k) {
    const int kappa = n - k + 1;
    RationalExpr numerator;
    std::string sum;
    for (int j = k + 1; j <= kappa - 1; ++j) {
      const PolyMatrix b = bordered_matrix(x, k, j, RationalExpr());
      numerator += det(b);
      if (!sum.empty()) sum += " + ";
      sum += latex_det(b);
    }
    const PolyMatrix m = x.block(kappa, n, 1, k);
    const int sign = k % 2 == 1 ? 1 : -1;
    RationalExpr e = numerator / det(m) * RationalExpr(sign);
    e += RationalExpr::variable(VarId::f(k)) - RationalExpr::variable(VarId::f(n - k));
    out.elements.push_back(std::move(e));
    out.latex.push_back(std::string(sign < 0 ? "-" : "") + "\\frac{1}{" + latex_det(m) + "}\\left(" + sum +
                        "\\right) + f^*_{" + std::to_string(k) + "} - f^*_{" + std::to_string(n - k) + "}");
  }
  return out;
}

InvariantBasis closed_form_basis(AlgebraKind kind, int n) {
  switch (kind) {
    case AlgebraKind::T0: return t0_basis(n);
    case AlgebraKind::T: return t_basis(n);
    case AlgebraKind::ST: return st_basis(n);
  }
  throw UnsupportedKind("unknown algebra kind");
}

bool lemma3_check(int n, int k, const BigRational& beta, const Assignment& point) {
  if (k <= 1 || k >= n) throw InvalidSize("the identities need 1 < k < n");
  const int kappa = n - k + 1;
  const RationalMatrix x = numeric_dual(n, point);
  const RationalMatrix m = sub(x, kappa + 1, n, 1, k - 1);
  const BigRational d = determinant(m);
  if (d.is_zero()) throw MinorVanishes("|X^{" + std::to_string(kappa + 1) + "," + std::to_string(n) + "}_{1," +
                                       std::to_string(k - 1) + "}| vanishes at the point");
  const RationalMatrix m_inv = *inverse(m);
  const BigRational big = determinant(sub(x, kappa, n, 1, k));
  const BigRational sign = k % 2 == 1 ? 1 : -1;
  const auto schur = [&](int row, int col) {
    return dot(sub(x, row, row, 1, k - 1), m_inv, sub(x, kappa + 1, n, col, col));
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const BigRational lhs = beta - schur(i, j);
      const BigRational rhs = sign / d * determinant(numeric_bordered(x, i, kappa + 1, n, k - 1, j, beta));
      if (lhs != rhs) return false;
    }
  }
  for (int j = 1; j <= n; ++j) {
    const BigRational lhs = (x(kappa - 1, j - 1) - schur(kappa, j)) * (x(j - 1, k - 1) - schur(j, k));
    const BigRational rhs = determinant(numeric_bordered(x, j, kappa, n, k, j, beta)) / d +
                            big / (d * d) * determinant(numeric_bordered(x, j, kappa + 1, n, k - 1, j, beta));
    if (lhs != rhs) return false;
  }
  return true;
}

bool lemma3_check_symbolic(int n, int k) {
  if (k <= 1 || k >= n) throw InvalidSize("the identities need 1 < k < n");
  const int kappa = n - k + 1;
  const PolyMatrix x = dual_matrix(AlgebraKind::T, n);
  const RationalExpr beta = RationalExpr::variable(VarId::param(1));
  const RationalExpr d = det(x.block(kappa + 1, n, 1, k - 1));
  const RationalExpr big = det(x.block(kappa, n, 1, k));
  const RationalExpr sign(k % 2 == 1 ? 1 : -1);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const RationalExpr lhs = beta - schur_term(x, i, kappa + 1, n, k - 1, j);
      const RationalExpr rhs = sign / d * det(symbolic_bordered(x, i, kappa + 1, n, k - 1, j, beta));
      if (!(lhs == rhs)) return false;
    }
  }
  for (int j = 1; j <= n; ++j) {
    const RationalExpr lhs = (x.at1(kappa, j) - schur_term(x, kappa, kappa + 1, n, k - 1, j)) *
                             (x.at1(j, k) - schur_term(x, j, kappa + 1, n, k - 1, k));
    const RationalExpr rhs = det(symbolic_bordered(x, j, kappa, n, k, j, beta)) / d +
                             big / (d * d) * det(symbolic_bordered(x, j, kappa + 1, n, k - 1, j, beta));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::pair<BigRational, BigRational> note3_trick(int n, int k, const Assignment& b_values, const Assignment& x_values) {
  const RationalMatrix b = group_matrix(AlgebraKind::T0, n, b_values);
  RationalMatrix x(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      if (auto it = x_values.find(VarId::x(i, j)); it != x_values.end()) x(i - 1, j - 1) = it->second;
    }
  }
  const RationalMatrix lifted = b * x * *inverse(b);
  const int kappa = n - k + 1;
  return {determinant(sub(lifted, kappa, n, 1, k)), determinant(sub(x, kappa, n, 1, k))};
}

std::vector<UeaElement> symmetrize_t0(const AlgebraSpec& t0) {
  const int n = t0.n();
  PbwRewriter rw(t0);
  std::vector<UeaElement> out;
  for (int k = 1; k <= n / 2; ++k) {
    UeaElement formal;
    for_each_permutation(k, [&](const std::vector<int>& p, int sign) {
      Word w;
      for (int r = 0; r < k; ++r) {
        w.push_back(static_cast<std::uint16_t>(*t0.index_of(BasisLabel::e(r + 1, n - k + 1 + p[r]))));
      }
      formal.add(w, BigRational(sign));
    });
    out.push_back(rw.normal_form(formal));
  }
  return out;
}

std::vector<FormalInvariant> symmetrized_t_basis(const AlgebraSpec& t) {
  const int n = t.n();
  const auto gen = [&](int i, int j) { return static_cast<std::uint16_t>(*t.index_of(BasisLabel::e(i, j))); };
  PbwRewriter rw(t);
  std::vector<FormalInvariant> out;
  for (int k = 0; k <= (n - 1) / 2; ++k) {
    const int kappa = n - k + 1;
    FormalInvariant f{k, {}, UeaElement::scalar(1), {}};
    for (int j = k + 1; j <= n - k; ++j) f.diagonal.add({gen(j, j)}, BigRational(k % 2 == 0 ? 1 : -1));
    if (k == 0) {
      out.push_back(std::move(f));
      continue;
    }
    UeaElement den;
    for_each_permutation(k, [&](const std::vector<int>& p, int sign) {
      Word w;
      for (int r = 0; r < k; ++r) w.push_back(gen(r + 1, kappa + p[r]));
      den.add(w, BigRational(sign));
    });
    f.denominator = rw.normal_form(den);
    // Rows 0..k-1: [e_{r+1,j}, E^{r+1}_{kappa..n}]; row k: [0, e_{j,kappa..n}].
    for (int j = k + 1; j <= n - k; ++j) {
      for_each_permutation(k + 1, [&](const std::vector<int>& p, int sign) {
        if (p[k] == 0) return;
        Word commuting;
        std::uint16_t c_entry = 0;
        for (int r = 0; r < k; ++r) {
          if (p[r] == 0) {
            c_entry = gen(r + 1, j);
          } else {
            commuting.push_back(gen(r + 1, kappa + p[r] - 1));
          }
        }
        Word w = commuting;
        w.push_back(gen(j, kappa + p[k] - 1));
        w.push_back(c_entry);
        f.numerator.add(w, BigRational(sign));
      });
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::string to_string(const FormalInvariant& f, const AlgebraSpec& t) {
  if (f.k == 0) return to_string(f.diagonal, t);
  const std::string head = "(" + to_string(f.numerator, t) + ")/(" + to_string(f.denominator, t) + ")";
  return signed_join(head, to_string(f.diagonal, t));
}

}  // namespace casimir
