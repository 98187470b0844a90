#include <doctest.h>

#include "casimir/algebra.hpp"
#include "casimir/errors.hpp"
#include "oracles.hpp"

using namespace casimir;

namespace {

std::size_t idx(const AlgebraSpec& alg, BasisLabel l) { return *alg.index_of(l); }

}  // namespace

TEST_CASE("dimensions") {
  for (int n = 2; n <= 7; ++n) {
    CHECK(build_algebra(AlgebraKind::T0, n).dim() == static_cast<std::size_t>(n * (n - 1) / 2));
    CHECK(build_algebra(AlgebraKind::T, n).dim() == static_cast<std::size_t>(n * (n + 1) / 2));
    CHECK(build_algebra(AlgebraKind::ST, n).dim() == static_cast<std::size_t>(n * (n + 1) / 2 - 1));
  }
  CHECK_THROWS_AS(build_algebra(AlgebraKind::T, 1), InvalidSize);
}

TEST_CASE("basis labels") {
  const AlgebraSpec st = build_algebra(AlgebraKind::ST, 3);
  CHECK(st.label(0).name() == "e_12");
  CHECK(st.label(st.dim() - 1).name() == "f_2");
  CHECK(BasisLabel::e(10, 11).name() == "e_{10,11}");
  CHECK(parse_kind("st") == AlgebraKind::ST);
  CHECK_FALSE(parse_kind("gl").has_value());
}

TEST_CASE("brackets equal matrix commutators") {
  for (AlgebraKind kind : {AlgebraKind::T0, AlgebraKind::T, AlgebraKind::ST}) {
    for (int n = 2; n <= 5; ++n) {
      const AlgebraSpec alg = build_algebra(kind, n);
      for (std::size_t a = 0; a < alg.dim(); ++a) {
        for (std::size_t b = 0; b < alg.dim(); ++b) {
          const RationalMatrix expected = oracle::commutator(oracle::matrix_of(alg.label(a), n), oracle::matrix_of(alg.label(b), n));
          CHECK(oracle::combination(alg, alg.bracket(a, b)) == expected);
        }
      }
    }
  }
}

TEST_CASE("st brackets restrict the t brackets") {
  const int n = 4;
  const AlgebraSpec st = build_algebra(AlgebraKind::ST, n);
  const AlgebraSpec t = build_algebra(AlgebraKind::T, n);
  for (std::size_t a = 0; a < st.dim(); ++a) {
    for (std::size_t b = 0; b < st.dim(); ++b) {
      if (st.label(a).family != BasisLabel::Family::E || st.label(b).family != BasisLabel::Family::E) continue;
      std::vector<StructureTerm> mapped;
      for (const StructureTerm& s : st.bracket(a, b)) mapped.push_back({idx(t, st.label(s.index)), s.coeff});
      std::sort(mapped.begin(), mapped.end(), [](const auto& l, const auto& r) { return l.index < r.index; });
      const auto& direct = t.bracket(idx(t, st.label(a)), idx(t, st.label(b)));
      REQUIRE(mapped.size() == direct.size());
      for (std::size_t i = 0; i < mapped.size(); ++i) {
        CHECK(mapped[i].index == direct[i].index);
        CHECK(mapped[i].coeff == direct[i].coeff);
      }
    }
  }
  // [f_k, e_ij] = e_ij exactly when i <= k < j.
  const auto& f2_e12 = st.bracket(idx(st, BasisLabel::f(2)), idx(st, BasisLabel::e(1, 2)));
  CHECK(f2_e12.empty());
  const auto& f2_e13 = st.bracket(idx(st, BasisLabel::f(2)), idx(st, BasisLabel::e(1, 3)));
  REQUIRE(f2_e13.size() == 1);
  CHECK(f2_e13[0].coeff == BigRational(1));
}

TEST_CASE("antisymmetry and Jacobi") {
  for (AlgebraKind kind : {AlgebraKind::T0, AlgebraKind::T, AlgebraKind::ST}) {
    for (int n = 2; n <= 4; ++n) {
      const AlgebraSpec alg = build_algebra(kind, n);
      for (std::size_t a = 0; a < alg.dim(); ++a) {
        for (std::size_t b = 0; b < alg.dim(); ++b) {
          const RationalMatrix ab = oracle::combination(alg, alg.bracket(a, b));
          const RationalMatrix ba = oracle::combination(alg, alg.bracket(b, a));
          RationalMatrix sum = ab;
          for (std::size_t r = 0; r < sum.rows(); ++r) {
            for (std::size_t c = 0; c < sum.cols(); ++c) sum(r, c) += ba(r, c);
          }
          CHECK(sum == RationalMatrix(sum.rows(), sum.cols()));
          for (std::size_t c = 0; c < alg.dim(); ++c) {
            const RationalMatrix mc = oracle::matrix_of(alg.label(c), n);
            const RationalMatrix ma = oracle::matrix_of(alg.label(a), n);
            const RationalMatrix mb = oracle::matrix_of(alg.label(b), n);
            RationalMatrix j = oracle::commutator(ma, oracle::commutator(mb, mc));
            const RationalMatrix j2 = oracle::commutator(mb, oracle::commutator(mc, ma));
            const RationalMatrix j3 = oracle::commutator(mc, oracle::commutator(ma, mb));
            for (std::size_t r = 0; r < j.rows(); ++r) {
              for (std::size_t cc = 0; cc < j.cols(); ++cc) j(r, cc) += j2(r, cc) + j3(r, cc);
            }
            CHECK(j == RationalMatrix(j.rows(), j.cols()));
          }
        }
      }
    }
  }
}

TEST_CASE("bracket form") {
  const AlgebraSpec alg = build_algebra(AlgebraKind::T0, 3);
  const MultiPoly f = alg.bracket_form(idx(alg, BasisLabel::e(1, 2)), idx(alg, BasisLabel::e(2, 3)));
  CHECK(f == MultiPoly::variable(VarId::x(3, 1)));
  CHECK(alg.dual_var(idx(alg, BasisLabel::e(1, 3))) == VarId::x(3, 1));
}

TEST_CASE("center") {
  const AlgebraSpec t0 = build_algebra(AlgebraKind::T0, 4);
  const auto z0 = center(t0);
  REQUIRE(z0.size() == 1);
  for (std::size_t a = 0; a < t0.dim(); ++a) CHECK(z0[0][a].is_zero() == (a != idx(t0, BasisLabel::e(1, 4))));

  const AlgebraSpec t = build_algebra(AlgebraKind::T, 3);
  const auto z = center(t);
  REQUIRE(z.size() == 1);
  for (std::size_t a = 0; a < t.dim(); ++a) {
    const BasisLabel& l = t.label(a);
    if (l.i == l.j) {
      CHECK(z[0][a] == z[0][idx(t, BasisLabel::e(1, 1))]);
      CHECK_FALSE(z[0][a].is_zero());
    } else {
      CHECK(z[0][a].is_zero());
    }
  }
  CHECK(center(build_algebra(AlgebraKind::ST, 3)).empty());
}

TEST_CASE("coadjoint rank and expected counts") {
  CHECK(coadjoint_rank(build_algebra(AlgebraKind::T0, 2), 5, 42) == 0);
  CHECK(coadjoint_rank(build_algebra(AlgebraKind::T0, 4), 5, 42) == 4);
  CHECK(coadjoint_rank(build_algebra(AlgebraKind::T, 3), 5, 42) == 4);
  CHECK(expected_invariant_count(AlgebraKind::T0, 6) == 3);
  CHECK(expected_invariant_count(AlgebraKind::T, 2) == 1);
  CHECK(expected_invariant_count(AlgebraKind::ST, 5) == 2);
  for (AlgebraKind kind : {AlgebraKind::T0, AlgebraKind::T, AlgebraKind::ST}) {
    for (int n = 2; n <= 6; ++n) {
      const AlgebraSpec alg = build_algebra(kind, n);
      CHECK(alg.dim() - coadjoint_rank(alg, 5, 42) == expected_invariant_count(kind, n));
    }
  }
}
