#include "casimir/var_id.hpp"

#include <charconv>
#include <stdexcept>

namespace casimir {

namespace {

std::string index_pair(int row, int col) {
  if (row < 10 && col < 10) return std::to_string(row) + std::to_string(col);
  return "{" + std::to_string(row) + "," + std::to_string(col) + "}";
}

}  // namespace

VarId::VarId(VarKind kind, int row, int col) {
  if (row < 1 || row > 255 || col < 1 || col > 255) {
    throw std::invalid_argument("VarId: indices must lie in 1..255");
  }
  switch (kind) {
    case VarKind::X:
    case VarKind::Inv:
      if (col > row) throw std::invalid_argument("VarId: dual coordinates are lower triangular (col <= row)");
      break;
    case VarKind::B:
    case VarKind::BHat:
      if (row > col) throw std::invalid_argument("VarId: group parameters are upper triangular (row <= col)");
      break;
    case VarKind::FStar:
    case VarKind::Param:
      if (row != col) throw std::invalid_argument("VarId: f-dual and parameter variables carry one index");
      break;
  }
  code_ = (static_cast<std::uint32_t>(kind) << 16) | (static_cast<std::uint32_t>(row) << 8) |
          static_cast<std::uint32_t>(col);
}

std::string_view kind_prefix(VarKind kind) {
  switch (kind) {
    case VarKind::X: return "x";
    case VarKind::B: return "b";
    case VarKind::BHat: return "bh";
    case VarKind::FStar: return "f";
    case VarKind::Inv: return "I";
    case VarKind::Param: return "beta";
  }
  return "?";
}

std::string VarId::name() const {
  const std::string prefix(kind_prefix(kind()));
  if (kind() == VarKind::FStar || kind() == VarKind::Param) return prefix + "_" + std::to_string(row());
  return prefix + "_" + index_pair(row(), col());
}

std::string VarId::key() const {
  return std::string(kind_prefix(kind())) + "_" + std::to_string(row()) + "_" + std::to_string(col());
}

std::string VarId::latex() const {
  const std::string idx = (row() < 10 && col() < 10) ? std::to_string(row()) + std::to_string(col())
                                                     : std::to_string(row()) + "," + std::to_string(col());
  switch (kind()) {
    case VarKind::X: return "x_{" + idx + "}";
    case VarKind::B: return "b_{" + idx + "}";
    case VarKind::BHat: return "\\widehat b_{" + idx + "}";
    case VarKind::FStar: return "f^*_{" + std::to_string(row()) + "}";
    case VarKind::Inv: return "\\mathcal I_{" + idx + "}";
    case VarKind::Param: return "\\beta_{" + std::to_string(row()) + "}";
  }
  return {};
}

VarId VarId::from_key(std::string_view key) {
  const auto first = key.find('_');
  const auto second = key.rfind('_');
  if (first == std::string_view::npos || first == second) {
    throw std::invalid_argument("VarId: malformed key '" + std::string(key) + "'");
  }
  const std::string_view prefix = key.substr(0, first);
  const auto parse_int = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw std::invalid_argument("VarId: malformed key '" + std::string(key) + "'");
    }
    return v;
  };
  const int row = parse_int(key.substr(first + 1, second - first - 1));
  const int col = parse_int(key.substr(second + 1));
  for (const VarKind k : {VarKind::X, VarKind::B, VarKind::BHat, VarKind::FStar, VarKind::Inv, VarKind::Param}) {
    if (kind_prefix(k) == prefix) return VarId(k, row, col);
  }
  throw std::invalid_argument("VarId: unknown kind in key '" + std::string(key) + "'");
}

}  // namespace casimir
