#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace casimir {

/// Variable families. The enumerator order is the primary key of the
/// canonical variable order.
enum class VarKind : std::uint8_t {
  X = 0,      // dual coordinate x_{ij}, i >= j
  B = 1,      // group parameter b_{ij}, i <= j
  BHat = 2,   // entry of B^{-1}; only used for display of summation formulas
  FStar = 3,  // dual coordinate of f_k in st(n); stored as (k, k)
  Inv = 4,    // free lifted-invariant unknown I_{ij} during normalization
  Param = 5,  // auxiliary scalar parameter (e.g. beta); stored as (i, i)
};

/// Indexed variable. Ordered lexicographically on (kind, row, col).
class VarId {
public:
  constexpr VarId() noexcept = default;
  VarId(VarKind kind, int row, int col);

  static VarId x(int row, int col) { return {VarKind::X, row, col}; }
  static VarId b(int row, int col) { return {VarKind::B, row, col}; }
  static VarId bhat(int row, int col) { return {VarKind::BHat, row, col}; }
  static VarId f(int k) { return {VarKind::FStar, k, k}; }
  static VarId inv(int row, int col) { return {VarKind::Inv, row, col}; }
  static VarId param(int index) { return {VarKind::Param, index, index}; }

  /// Inverse of key(): "x_4_1", "f_2_2", ...
  static VarId from_key(std::string_view key);

  constexpr VarKind kind() const noexcept { return static_cast<VarKind>(code_ >> 16); }
  constexpr int row() const noexcept { return static_cast<int>((code_ >> 8) & 0xffu); }
  constexpr int col() const noexcept { return static_cast<int>(code_ & 0xffu); }
  constexpr std::uint32_t code() const noexcept { return code_; }

  /// Display name: x_41, b_12, bh_12, f_1, I_32, beta_1. Indices >= 10 use x_{10,1}.
  std::string name() const;
  /// Stable JSON key "<kind>_<row>_<col>".
  std::string key() const;
  /// LaTeX form: x_{41}, \hat b_{12}, f^*_{1}, ...
  std::string latex() const;

  constexpr auto operator<=>(const VarId&) const noexcept = default;

private:
  std::uint32_t code_ = 0;
};

std::string_view kind_prefix(VarKind kind);

}  // namespace casimir
