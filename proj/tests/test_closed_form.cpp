#include <doctest.h>

#include "casimir/closed_form.hpp"
#include "casimir/errors.hpp"
#include "casimir/lifted.hpp"
#include "casimir/render.hpp"
#include "casimir/verifier.hpp"
#include "oracles.hpp"

using namespace casimir;

namespace {

RationalExpr x(int i, int j) { return RationalExpr::variable(VarId::x(i, j)); }

RationalExpr corner_minor(int n, int k) { return oracle::corner_minor(n, k); }

bool orbit_invariant(AlgebraKind kind, int n, const RationalExpr& f, int trials, std::uint64_t seed) {
  return oracle::orbit_invariant(kind, n, f, trials, seed).passed;
}

}  // namespace

TEST_CASE("t0 basis") {
  CHECK(t0_basis(2).elements == std::vector<RationalExpr>{x(2, 1)});
  CHECK(t0_basis(3).elements == std::vector<RationalExpr>{x(3, 1)});
  const InvariantBasis b4 = t0_basis(4);
  REQUIRE(b4.elements.size() == 2);
  CHECK(b4.elements[0].to_string() == "x_41");
  CHECK(b4.elements[1].to_string() == "x_31*x_42 - x_32*x_41");
  for (int n = 2; n <= 8; ++n) {
    const InvariantBasis b = t0_basis(n);
    REQUIRE(b.elements.size() == static_cast<std::size_t>(n / 2));
    for (int k = 1; k <= n / 2; ++k) CHECK(b.elements[static_cast<std::size_t>(k - 1)] == corner_minor(n, k));
  }
  CHECK_THROWS_AS(t0_basis(1), InvalidSize);
}

TEST_CASE("t basis matches the expanded forms") {
  CHECK(t_basis(2).elements == std::vector<RationalExpr>{x(1, 1) + x(2, 2)});
  const InvariantBasis b3 = t_basis(3);
  REQUIRE(b3.elements.size() == 2);
  CHECK(b3.elements[0] == x(1, 1) + x(2, 2) + x(3, 3));
  CHECK(b3.elements[1] == (x(2, 1) * x(3, 2) - x(2, 2) * x(3, 1)) / x(3, 1));
  for (int n = 2; n <= 6; ++n) CHECK(t_basis(n).elements.size() == static_cast<std::size_t>((n - 1) / 2 + 1));
}

TEST_CASE("st basis") {
  CHECK(st_basis(2).elements.empty());
  const InvariantBasis b3 = st_basis(3);
  REQUIRE(b3.elements.size() == 1);
  // x_22 in the t(3) invariant is replaced by f_1 - f_2.
  const RationalExpr f1 = RationalExpr::variable(VarId::f(1));
  const RationalExpr f2 = RationalExpr::variable(VarId::f(2));
  CHECK(b3.elements[0] == (x(2, 1) * x(3, 2)) / x(3, 1) + f1 - f2);
  CHECK(st_basis(5).elements.size() == 2);
}

TEST_CASE("st basis pulls back to the stated t combination") {
  for (int n = 3; n <= 6; ++n) {
    const InvariantBasis s = st_basis(n);
    const InvariantBasis t = t_basis(n);
    for (int k = 1; k <= (n - 1) / 2; ++k) {
      const RationalExpr expected = t.elements[static_cast<std::size_t>(k)] * RationalExpr(k % 2 ? 1 : -1) +
                                    t.elements[0] * RationalExpr(BigRational(n - 2 * k, n));
      CHECK(s.elements[static_cast<std::size_t>(k - 1)].substitute(st_pullback(n)) == expected);
    }
  }
}

TEST_CASE("f pullback weights") {
  // f_k = sum over the diagonal of its matrix.
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k < n; ++k) {
      const RationalMatrix m = oracle::matrix_of(BasisLabel::f(k), n);
      MultiPoly expected;
      BigRational trace;
      for (int i = 1; i <= n; ++i) {
        expected += MultiPoly::variable(VarId::x(i, i)).scaled(m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1)));
        trace += m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1));
      }
      CHECK(f_pullback(n, k) == expected);
      CHECK(trace.is_zero());
    }
  }
}

TEST_CASE("closed forms are orbit invariant under the oracle transform") {
  for (AlgebraKind kind : {AlgebraKind::T0, AlgebraKind::T, AlgebraKind::ST}) {
    for (int n = 2; n <= 6; ++n) {
      for (const RationalExpr& f : closed_form_basis(kind, n).elements) CHECK(orbit_invariant(kind, n, f, 10, 1000 + n));
    }
  }
  CHECK_FALSE(orbit_invariant(AlgebraKind::T0, 3, x(2, 1), 10, 5));
  CHECK_FALSE(orbit_invariant(AlgebraKind::T, 3, x(1, 1), 10, 5));
}

TEST_CASE("lemma 3") {
  PointSampler s(37);
  const auto pt = [&](int n) { return s.point(x_vars(AlgebraKind::T, n)); };
  CHECK(lemma3_check(4, 2, 0, pt(4)));
  CHECK(lemma3_check(5, 2, BigRational(17, 3), pt(5)));
  for (int n = 3; n <= 6; ++n) {
    for (int k = 2; k < n; ++k) CHECK(lemma3_check(n, k, s.next(), pt(n)));
  }
  for (int n = 3; n <= 4; ++n) {
    for (int k = 2; k < n; ++k) CHECK(lemma3_check_symbolic(n, k));
  }
  Assignment zero = pt(4);
  zero[VarId::x(4, 1)] = 0;
  CHECK_THROWS_AS(lemma3_check(4, 2, 1, zero), MinorVanishes);
  CHECK_THROWS(lemma3_check(4, 1, 1, pt(4)));
}

TEST_CASE("latex display keeps determinants") {
  const InvariantBasis b = t0_basis(4);
  CHECK(b.latex[0] == "x_{41}");
  CHECK(b.latex[1].find("\\left|\\begin{array}") != std::string::npos);
  const InvariantBasis t = t_basis(3);
  CHECK(t.latex[1].find("\\frac{1}{") == 0);
}
