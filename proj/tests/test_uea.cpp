#include <doctest.h>

#include "casimir/closed_form.hpp"
#include "casimir/errors.hpp"
#include "casimir/sampling.hpp"
#include "casimir/uea.hpp"

using namespace casimir;

namespace {

std::uint16_t g(const AlgebraSpec& alg, int i, int j) { return static_cast<std::uint16_t>(*alg.index_of(BasisLabel::e(i, j))); }
UeaElement e(const AlgebraSpec& alg, int i, int j) { return UeaElement::generator(g(alg, i, j)); }

// Plain average over all orderings, reduced afterwards.
UeaElement reference_sym(const Word& w, const AlgebraSpec& alg) {
  Word p = w;
  std::sort(p.begin(), p.end());
  UeaElement sum;
  long count = 0;
  do {
    sum += UeaElement::word(p);
    ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  // Repeated letters make distinct arrangements; weight them back to r!.
  long fact = 1;
  for (std::size_t i = 2; i <= w.size(); ++i) fact *= static_cast<long>(i);
  PbwRewriter rw(alg);
  return rw.normal_form(sum.scaled(BigRational(fact / count, fact)));
}

}  // namespace

TEST_CASE("products in normal order") {
  const AlgebraSpec t0 = build_algebra(AlgebraKind::T0, 4);
  const UeaElement p = uea_mul(e(t0, 1, 2), e(t0, 3, 4), t0);
  CHECK(p == uea_mul(e(t0, 3, 4), e(t0, 1, 2), t0));
  CHECK(p.is_normal());

  const AlgebraSpec t = build_algebra(AlgebraKind::T, 3);
  const UeaElement lhs = uea_mul(e(t, 2, 3), e(t, 1, 2), t);
  UeaElement rhs = uea_mul(e(t, 1, 2), e(t, 2, 3), t);
  rhs -= e(t, 1, 3);
  CHECK(lhs == rhs);
}

TEST_CASE("rearrangement identity used for the symmetrized t forms") {
  // e_{i'i} e_{ij'} = e_{ij'} e_{i'i} + e_{i'j'}
  for (int n = 3; n <= 5; ++n) {
    const AlgebraSpec t = build_algebra(AlgebraKind::T, n);
    for (int ip = 1; ip <= n; ++ip) {
      for (int i = ip + 1; i <= n; ++i) {
        for (int jp = i + 1; jp <= n; ++jp) {
          UeaElement rhs = uea_mul(e(t, i, jp), e(t, ip, i), t);
          rhs += e(t, ip, jp);
          CHECK(uea_mul(e(t, ip, i), e(t, i, jp), t) == rhs);
        }
      }
    }
  }
}

TEST_CASE("associativity and confluence") {
  PointSampler s(43);
  for (AlgebraKind kind : {AlgebraKind::T0, AlgebraKind::T, AlgebraKind::ST}) {
    const AlgebraSpec alg = build_algebra(kind, 4);
    PbwRewriter rw(alg);
    const auto pick = [&] { return static_cast<std::uint16_t>(s.uniform(0, static_cast<std::int64_t>(alg.dim()) - 1)); };
    for (int t = 0; t < 30; ++t) {
      const UeaElement a = UeaElement::word({pick(), pick()});
      const UeaElement b = UeaElement::generator(pick());
      const UeaElement c = UeaElement::word({pick(), pick()});
      CHECK(rw.multiply(rw.multiply(a, b), c) == rw.multiply(a, rw.multiply(b, c)));
      const Word w = {pick(), pick(), pick(), pick(), pick()};
      PbwRewriter random_order(alg, static_cast<std::uint64_t>(s.uniform(0, 1000000)));
      CHECK(random_order.normal_form(w) == rw.normal_form(w));
    }
  }
}

TEST_CASE("word length cap") {
  const AlgebraSpec alg = build_algebra(AlgebraKind::T0, 3);
  PbwRewriter rw(alg);
  const UeaElement long_word = UeaElement::word(Word(kMaxWordLength, 0));
  CHECK_THROWS_AS(rw.multiply(long_word, UeaElement::generator(0)), WordTooLong);
  CHECK_THROWS_AS(sym(Word(kMaxSymDegree + 1, 0), alg), WordTooLong);
}

TEST_CASE("sym") {
  const AlgebraSpec t0 = build_algebra(AlgebraKind::T0, 3);
  CHECK(sym({g(t0, 1, 2)}, t0) == e(t0, 1, 2));
  UeaElement expected = UeaElement::word({g(t0, 1, 2), g(t0, 2, 3)});
  expected += e(t0, 1, 3).scaled(BigRational(-1, 2));
  CHECK(sym({g(t0, 1, 2), g(t0, 2, 3)}, t0) == expected);
  const AlgebraSpec t4 = build_algebra(AlgebraKind::T0, 4);
  CHECK(sym({g(t4, 1, 3), g(t4, 2, 4)}, t4) == UeaElement::word({g(t4, 1, 3), g(t4, 2, 4)}));

  PointSampler s(47);
  const AlgebraSpec t = build_algebra(AlgebraKind::T, 4);
  for (int trial = 0; trial < 20; ++trial) {
    Word w;
    const auto len = s.uniform(1, 4);
    for (std::int64_t i = 0; i < len; ++i) w.push_back(static_cast<std::uint16_t>(s.uniform(0, static_cast<std::int64_t>(t.dim()) - 1)));
    CHECK(sym(w, t) == reference_sym(w, t));
  }
}

TEST_CASE("Casimir operators of t0") {
  const AlgebraSpec t4 = build_algebra(AlgebraKind::T0, 4);
  CHECK(casimir_check(e(t4, 1, 4), t4));
  UeaElement c2 = UeaElement::word({g(t4, 1, 3), g(t4, 2, 4)});
  c2 -= UeaElement::word({g(t4, 1, 4), g(t4, 2, 3)});
  CHECK(casimir_check(c2, t4));
  const std::vector<UeaElement> cs = symmetrize_t0(t4);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0] == e(t4, 1, 4));
  PbwRewriter rw(t4);
  CHECK(rw.normal_form(cs[1]) == rw.normal_form(c2));

  const AlgebraSpec t2 = build_algebra(AlgebraKind::T0, 2);
  CHECK(symmetrize_t0(t2) == std::vector<UeaElement>{e(t2, 1, 2)});
  const AlgebraSpec t5 = build_algebra(AlgebraKind::T0, 5);
  for (const UeaElement& c : symmetrize_t0(t5)) CHECK(casimir_check(c, t5));
  const AlgebraSpec t3 = build_algebra(AlgebraKind::T0, 3);
  CHECK_FALSE(casimir_check(e(t3, 1, 2), t3));
}

TEST_CASE("symmetrized t forms") {
  const AlgebraSpec t2 = build_algebra(AlgebraKind::T, 2);
  const std::vector<FormalInvariant> f2 = symmetrized_t_basis(t2);
  REQUIRE(f2.size() == 1);
  CHECK(to_string(f2[0], t2) == "e_11 + e_22");

  const AlgebraSpec t3 = build_algebra(AlgebraKind::T, 3);
  const std::vector<FormalInvariant> f3 = symmetrized_t_basis(t3);
  REQUIRE(f3.size() == 2);
  CHECK(to_string(f3[1], t3) == "(e_23*e_12)/(e_13) - e_22");

  // Each of the k|E| cofactor terms of summand j picks up half a commutator;
  // with the layout sign that is (-1)^{k+1} k/2 |E| per j.
  for (int n = 3; n <= 6; ++n) {
    const AlgebraSpec t = build_algebra(AlgebraKind::T, n);
    PbwRewriter rw(t);
    for (const FormalInvariant& f : symmetrized_t_basis(t)) {
      if (f.k == 0) continue;
      UeaElement symmetrized;
      for (const auto& [w, c] : f.numerator.terms()) symmetrized += sym(w, t).scaled(c);
      UeaElement expected = rw.normal_form(f.numerator);
      expected += rw.normal_form(f.denominator).scaled(BigRational((f.k % 2 ? 1 : -1) * f.k * (n - 2 * f.k), 2));
      CHECK(symmetrized == expected);
    }
  }
}
