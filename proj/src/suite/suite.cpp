#include "casimir/suite.hpp"

#include <chrono>
#include <sstream>

#include "casimir/algebra.hpp"
#include "casimir/closed_form.hpp"
#include "casimir/errors.hpp"
#include "casimir/lifted.hpp"
#include "casimir/linear_algebra.hpp"
#include "casimir/normalization.hpp"
#include "casimir/sampling.hpp"
#include "casimir/uea.hpp"
#include "casimir/verifier.hpp"

namespace casimir {

namespace {

// Collects the first failure; later checks still run so timings stay honest.
class Outcome {
public:
  void require(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool passed() const { return failure_.empty(); }
  std::string detail(const std::string& summary) const {
    return passed() ? summary + " (" + std::to_string(checks_) + " checks)" : failure_;
  }

private:
  std::string failure_;
  int checks_ = 0;
};

std::string tag(AlgebraKind kind, int n) { return std::string(kind_name(kind)) + "(" + std::to_string(n) + ")"; }

RationalExpr xv(int i, int j) { return RationalExpr::variable(VarId::x(i, j)); }

bool all_pass_criterion(const AlgebraSpec& alg, const InvariantBasis& b) {
  for (const RationalExpr& e : b.elements) {
    if (!criterion_report(alg, e).pass) return false;
  }
  return true;
}

std::string theorem1(std::uint64_t, Outcome& o) {
  for (int n = 2; n <= 8; ++n) {
    const AlgebraSpec alg = build_algebra(AlgebraKind::T0, n);
    const InvariantBasis b = t0_basis(n);
    o.require(b.elements.size() == static_cast<std::size_t>(n / 2), tag(AlgebraKind::T0, n) + ": wrong basis size");
    const PolyMatrix x = dual_matrix(AlgebraKind::T0, n);
    for (int k = 1; k <= n / 2 && k <= static_cast<int>(b.elements.size()); ++k) {
      const RationalExpr& e = b.elements[static_cast<std::size_t>(k - 1)];
      o.require(e.is_polynomial(), tag(AlgebraKind::T0, n) + ": element is not a polynomial");
      o.require(e == det_cofactor(x.block(n - k + 1, n, 1, k)), tag(AlgebraKind::T0, n) + ": element differs from the minor");
    }
    o.require(all_pass_criterion(alg, b), tag(AlgebraKind::T0, n) + ": criterion fails");
  }
  const InvariantBasis b4 = t0_basis(4);
  o.require(b4.elements[0].to_string() == "x_41" && b4.elements[1].to_string() == "x_31*x_42 - x_32*x_41",
            "t0(4) basis text differs");
  return "t0(n), n = 2..8";
}

std::string theorem2(std::uint64_t, Outcome& o) {
  for (int n = 2; n <= 6; ++n) {
    const AlgebraSpec alg = build_algebra(AlgebraKind::T, n);
    const InvariantBasis b = t_basis(n);
    o.require(b.elements.size() == static_cast<std::size_t>((n - 1) / 2 + 1), tag(AlgebraKind::T, n) + ": wrong basis size");
    o.require(all_pass_criterion(alg, b), tag(AlgebraKind::T, n) + ": criterion fails");
  }
  const InvariantBasis b2 = t_basis(2);
  o.require(b2.elements.size() == 1 && b2.elements[0] == xv(1, 1) + xv(2, 2), "t(2) differs from x_11 + x_22");
  const InvariantBasis b3 = t_basis(3);
  o.require(b3.elements.size() == 2 && b3.elements[0] == xv(1, 1) + xv(2, 2) + xv(3, 3) &&
                b3.elements[1] == (xv(2, 1) * xv(3, 2) - xv(2, 2) * xv(3, 1)) / xv(3, 1),
            "t(3) differs from the expanded form");
  return "t(n), n = 2..6";
}

std::string theorem_st(std::uint64_t, Outcome& o) {
  for (int n = 3; n <= 6; ++n) {
    const AlgebraSpec alg = build_algebra(AlgebraKind::ST, n);
    const InvariantBasis s = st_basis(n);
    const InvariantBasis t = t_basis(n);
    o.require(s.elements.size() == static_cast<std::size_t>((n - 1) / 2), tag(AlgebraKind::ST, n) + ": wrong basis size");
    const Substitution pull = st_pullback(n);
    for (int k = 1; k <= static_cast<int>(s.elements.size()); ++k) {
      const RationalExpr lhs = s.elements[static_cast<std::size_t>(k - 1)].substitute(pull);
      const RationalExpr rhs = t.elements[static_cast<std::size_t>(k)] * RationalExpr(k % 2 == 1 ? 1 : -1) +
                               t.elements[0] * RationalExpr(BigRational(n - 2 * k, n));
      o.require(lhs == rhs, tag(AlgebraKind::ST, n) + ": identity fails for k = " + std::to_string(k));
    }
    o.require(all_pass_criterion(alg, s), tag(AlgebraKind::ST, n) + ": criterion fails");
  }
  return "st(n), n = 3..6";
}

std::string equivalence(std::uint64_t, Outcome& o) {
  for (AlgebraKind kind : {AlgebraKind::T0, AlgebraKind::T}) {
    for (int n = 2; n <= 6; ++n) {
      const NormalizationResult r = run_normalization(kind, n);
      o.require(r.residual_x_equations.empty(), tag(kind, n) + ": residual equations in x");
      const std::vector<RationalExpr> rec = recombine(r);
      const InvariantBasis cf = closed_form_basis(kind, n);
      o.require(rec.size() == cf.elements.size(), tag(kind, n) + ": count mismatch");
      for (std::size_t i = 0; i < rec.size() && i < cf.elements.size(); ++i) {
        o.require(!rec[i].has_kind(VarKind::B), tag(kind, n) + ": invariant depends on b");
        o.require(rec[i] == cf.elements[i], tag(kind, n) + ": element " + std::to_string(i) + " differs");
      }
    }
  }
  return "t0(n), t(n), n = 2..6";
}

std::string counting(std::uint64_t seed, Outcome& o) {
  for (AlgebraKind kind : {AlgebraKind::T0, AlgebraKind::T, AlgebraKind::ST}) {
    for (int n = 2; n <= 7; ++n) {
      const AlgebraSpec alg = build_algebra(kind, n);
      const std::size_t r1 = coadjoint_rank(alg, 5, seed);
      const std::size_t r2 = coadjoint_rank(alg, 5, 1337);
      const std::size_t basis = closed_form_basis(kind, n).elements.size();
      o.require(r1 == r2, tag(kind, n) + ": ranks disagree across seeds");
      o.require(alg.dim() - r1 == basis, tag(kind, n) + ": dim - rank != basis size");
      o.require(basis == expected_invariant_count(kind, n), tag(kind, n) + ": basis size != expected count");
    }
  }
  return "three families, n = 2..7";
}

std::string lemma3(std::uint64_t seed, Outcome& o) {
  for (int n = 3; n <= 5; ++n) {
    for (int k = 2; k < n; ++k) {
      o.require(lemma3_check_symbolic(n, k), "symbolic identities fail for n = " + std::to_string(n) + ", k = " + std::to_string(k));
    }
  }
  PointSampler s(seed);
  for (int n = 3; n <= 8; ++n) {
    const std::vector<VarId> vars = x_vars(AlgebraKind::T, n);
    for (int k = 2; k < n; ++k) {
      for (int trial = 0; trial < 20; ++trial) {
        bool ok = false;
        for (int attempt = 0; attempt < 50; ++attempt) {
          try {
            ok = lemma3_check(n, k, s.next(), s.point(vars));
            break;
          } catch (const MinorVanishes&) {
          }
        }
        o.require(ok, "numeric identities fail for n = " + std::to_string(n) + ", k = " + std::to_string(k));
      }
    }
  }
  return "symbolic n <= 5, numeric n <= 8";
}

std::string casimirs(std::uint64_t, Outcome& o) {
  for (int n = 2; n <= 5; ++n) {
    const AlgebraSpec alg = build_algebra(AlgebraKind::T0, n);
    const std::vector<UeaElement> cs = symmetrize_t0(alg);
    o.require(cs.size() == static_cast<std::size_t>(n / 2), tag(AlgebraKind::T0, n) + ": wrong Casimir count");
    for (std::size_t k = 0; k < cs.size(); ++k) {
      o.require(casimir_check(cs[k], alg), tag(AlgebraKind::T0, n) + ": Casimir " + std::to_string(k + 1) + " is not central");
    }
  }
  return "t0(n), n = 2..5";
}

std::string group_orbits(std::uint64_t seed, Outcome& o) {
  for (AlgebraKind kind : {AlgebraKind::T0, AlgebraKind::T, AlgebraKind::ST}) {
    for (int n = 2; n <= 6; ++n) {
      const InvariantBasis b = closed_form_basis(kind, n);
      for (std::size_t e = 0; e < b.elements.size(); ++e) {
        const GroupCheckOutcome g = group_invariance_outcome(kind, n, b.elements[e], 100, seed);
        o.require(g.passed && g.trials_run == 100, tag(kind, n) + ": element " + std::to_string(e) + " is not invariant");
      }
      if (n >= 3) {
        const GroupCheckOutcome neg = group_invariance_outcome(kind, n, xv(2, 1), 10, seed);
        o.require(!neg.passed, tag(kind, n) + ": negative control x_21 was not rejected");
      }
    }
  }
  return "100 trials per element, n <= 6";
}

// Ring axioms, determinant laws, PBW and Jacobi checks on random data.
std::string properties(std::uint64_t seed, Outcome& o) {
  PointSampler s(seed);
  std::vector<VarId> vars;
  for (int i = 2; i <= 4; ++i) {
    for (int j = 1; j < i; ++j) vars.push_back(VarId::x(i, j));
  }
  for (int t = 0; t < 1000; ++t) {
    const MultiPoly a = random_poly(s, vars, static_cast<int>(s.uniform(0, 10)), 2);
    const MultiPoly b = random_poly(s, vars, static_cast<int>(s.uniform(0, 10)), 2);
    const MultiPoly c = random_poly(s, vars, static_cast<int>(s.uniform(0, 10)), 2);
    o.require((a + b) + c == a + (b + c), "addition is not associative");
    o.require(a + b == b + a, "addition is not commutative");
    o.require((a * b) * c == a * (b * c), "multiplication is not associative");
    o.require(a * b == b * a, "multiplication is not commutative");
    o.require(a * (b + c) == a * b + a * c, "distributivity fails");
  }
  const auto random_matrix = [&](std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = RationalExpr(random_poly(s, vars, 2, 1));
    }
    return m;
  };
  for (int t = 0; t < 20; ++t) {
    const PolyMatrix m = random_matrix(3);
    const PolyMatrix nn = random_matrix(3);
    o.require(det(m * nn) == det(m) * det(nn), "det(MN) != det(M) det(N)");
    PolyMatrix swapped = m;
    for (std::size_t c = 0; c < 3; ++c) std::swap(swapped(0, c), swapped(2, c));
    o.require(det(swapped) == -det(m), "row swap does not negate det");
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int t = 0; t < 3; ++t) {
      const PolyMatrix m = random_matrix(n);
      o.require(RationalExpr(det_bareiss(m)) == det_cofactor(m), "Bareiss and cofactor disagree at size " + std::to_string(n));
    }
  }
  for (AlgebraKind kind : {AlgebraKind::T0, AlgebraKind::T, AlgebraKind::ST}) {
    for (int n = 2; n <= 5; ++n) {
      const AlgebraSpec alg = build_algebra(kind, n);
      const std::size_t d = alg.dim();
      std::vector<std::vector<BigRational>> dense(d * d, std::vector<BigRational>(d));
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
          for (const StructureTerm& t : alg.bracket(a, b)) dense[a * d + b][t.index] = t.coeff;
        }
      }
      bool jacobi = true;
      bool anti = true;
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
          for (std::size_t k = 0; k < d; ++k) anti = anti && dense[a * d + b][k] == -dense[b * d + a][k];
          for (std::size_t c = 0; c < d; ++c) {
            for (std::size_t m = 0; m < d && jacobi; ++m) {
              BigRational sum;
              for (std::size_t k = 0; k < d; ++k) {
                sum += dense[a * d + b][k] * dense[k * d + c][m] + dense[b * d + c][k] * dense[k * d + a][m] +
                       dense[c * d + a][k] * dense[k * d + b][m];
              }
              jacobi = sum.is_zero();
            }
          }
        }
      }
      o.require(anti, tag(kind, n) + ": structure constants are not antisymmetric");
      o.require(jacobi, tag(kind, n) + ": Jacobi identity fails");
    }
  }
  for (AlgebraKind kind : {AlgebraKind::T0, AlgebraKind::T, AlgebraKind::ST}) {
    for (int n = 2; n <= 4; ++n) {
      const AlgebraSpec alg = build_algebra(kind, n);
      PbwRewriter fixed(alg);
      const auto gen = [&] { return UeaElement::generator(static_cast<std::size_t>(s.uniform(0, static_cast<std::int64_t>(alg.dim()) - 1))); };
      for (int t = 0; t < 70; ++t) {
        const UeaElement a = gen();
        const UeaElement b = gen() + gen();
        const UeaElement c = gen();
        o.require(fixed.multiply(fixed.multiply(a, b), c) == fixed.multiply(a, fixed.multiply(b, c)),
                  tag(kind, n) + ": PBW product is not associative");
      }
      for (int t = 0; t < 60; ++t) {
        Word w;
        const auto len = s.uniform(2, 5);
        for (std::int64_t i = 0; i < len; ++i) w.push_back(static_cast<std::uint16_t>(s.uniform(0, static_cast<std::int64_t>(alg.dim()) - 1)));
        PbwRewriter random_order(alg, static_cast<std::uint64_t>(s.uniform(0, 1 << 30)));
        o.require(random_order.normal_form(w) == fixed.normal_form(w), tag(kind, n) + ": normal form depends on rewrite order");
      }
    }
  }
  return "ring axioms, det laws, Jacobi, PBW";
}

struct Entry {
  const char* title;
  std::string (*run)(std::uint64_t, Outcome&);
};

const Entry kEntries[kCriterionCount] = {
    {"Theorem 1 basis of t0(n)", theorem1},
    {"Theorem 2 basis of t(n)", theorem2},
    {"st(n) basis and its relation to t(n)", theorem_st},
    {"normalization equals closed form", equivalence},
    {"dim - rank(coadjoint) equals basis size", counting},
    {"Lemma 3 identities", lemma3},
    {"Casimir operators of t0(n) are central", casimirs},
    {"group-orbit invariance", group_orbits},
    {"property suites", properties},
};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw InvalidSize("criterion id must be in 1..9");
  const Entry& e = kEntries[id - 1];
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  std::string summary;
  try {
    summary = e.run(seed, o);
  } catch (const std::exception& ex) {
    o.require(false, std::string("exception: ") + ex.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {id, e.title, o.passed(), o.detail(summary), secs};
}

std::vector<CriterionResult> run_suite(std::uint64_t seed, const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, seed));
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace casimir
