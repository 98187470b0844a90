#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "casimir/multi_poly.hpp"

namespace casimir {

enum class AlgebraKind { T0, T, ST };

std::string_view kind_name(AlgebraKind kind);  // "t0", "t", "st"
std::optional<AlgebraKind> parse_kind(std::string_view text);

/// E_{ij} (matrix unit) or F_k (st(n) diagonal generator, stored with i = j = k).
struct BasisLabel {
  enum class Family : std::uint8_t { E, F };
  Family family = Family::E;
  int i = 0;
  int j = 0;

  static BasisLabel e(int i, int j) { return {Family::E, i, j}; }
  static BasisLabel f(int k) { return {Family::F, k, k}; }

  std::string name() const;  // e_12, f_1
  bool operator==(const BasisLabel&) const = default;
};

struct StructureTerm {
  std::size_t index;
  BigRational coeff;
};

/// Basis and structure constants of t0(n), t(n) or st(n).
class AlgebraSpec {
public:
  AlgebraSpec(AlgebraKind kind, int n, std::vector<BasisLabel> basis);

  AlgebraKind kind() const noexcept { return kind_; }
  int n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<BasisLabel>& basis() const noexcept { return basis_; }
  const BasisLabel& label(std::size_t a) const { return basis_[a]; }
  std::optional<std::size_t> index_of(const BasisLabel& label) const;

  /// [e_a, e_b] as a sparse combination, sorted by index.
  const std::vector<StructureTerm>& bracket(std::size_t a, std::size_t b) const { return brackets_[a * dim() + b]; }
  void set_bracket(std::size_t a, std::size_t b, std::vector<StructureTerm> terms);

  /// Dual coordinate of basis element a: x_{ji} for E_{ij}, f_k for F_k.
  VarId dual_var(std::size_t a) const;
  std::vector<VarId> dual_vars() const;
  std::optional<std::size_t> index_of_dual(VarId v) const;

  /// sum_k c_{ab}^k x_k.
  MultiPoly bracket_form(std::size_t a, std::size_t b) const;

private:
  AlgebraKind kind_;
  int n_;
  std::vector<BasisLabel> basis_;
  std::vector<std::vector<StructureTerm>> brackets_;
};

/// Throws InvalidSize for n < 2.
AlgebraSpec build_algebra(AlgebraKind kind, int n);

/// Basis of the center as coefficient vectors over alg.basis().
std::vector<std::vector<BigRational>> center(const AlgebraSpec& alg);

/// Maximum rank of (sum_k c_{ij}^k x_k) over `samples` random points.
std::size_t coadjoint_rank(const AlgebraSpec& alg, int samples, std::uint64_t seed);

std::size_t expected_invariant_count(AlgebraKind kind, int n);

/// Diagonal weights of f_k: (n-k)/n on positions <= k, -k/n after.
BigRational f_weight(int n, int k, int position);

}  // namespace casimir
