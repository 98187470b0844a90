#include "casimir/lifted.hpp"

#include "casimir/errors.hpp"

namespace casimir {

GroupKind group_kind_for(AlgebraKind kind) {
  return kind == AlgebraKind::T0 ? GroupKind::Unipotent : GroupKind::Triangular;
}

GroupElement GroupElement::symbolic(GroupKind kind, int n) {
  GroupElement g{n, kind, PolyMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n))};
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      g.entries(i - 1, j - 1) =
          (i == j && kind == GroupKind::Unipotent) ? RationalExpr(1) : RationalExpr::variable(VarId::b(i, j));
    }
  }
  return g;
}

PolyMatrix symbolic_inverse(const GroupElement& g) {
  const int n = g.n;
  const PolyMatrix& b = g.entries;
  PolyMatrix inv(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    inv(j, j) = RationalExpr(1) / b(j, j);
    for (int i = j - 1; i >= 0; --i) {
      RationalExpr acc;
      for (int k = i + 1; k <= j; ++k) {
        if (!b(i, k).is_zero() && !inv(k, j).is_zero()) acc += b(i, k) * inv(k, j);
      }
      inv(i, j) = -(acc / b(i, i));
    }
  }
  return inv;
}

bool is_significant(AlgebraKind kind, int i, int j) { return kind == AlgebraKind::T0 ? j < i : j <= i; }

PolyMatrix dual_matrix(AlgebraKind kind, int n) {
  PolyMatrix x(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      if (is_significant(kind, i, j)) x(i - 1, j - 1) = RationalExpr::variable(VarId::x(i, j));
    }
  }
  return x;
}

LiftedInvariantMatrix lifted_invariant(AlgebraKind kind, int n) {
  if (kind == AlgebraKind::ST) throw UnsupportedKind("lifted invariants are built for t0 and t only");
  if (n < 2) throw InvalidSize("n must be >= 2");
  const GroupElement g = GroupElement::symbolic(group_kind_for(kind), n);
  PolyMatrix b_inv = symbolic_inverse(g);
  PolyMatrix x = dual_matrix(kind, n);
  PolyMatrix entries = g.entries * x * b_inv;
  return {kind, n, g.entries, std::move(b_inv), std::move(x), std::move(entries)};
}

RationalExpr lifted_entry_by_formula(AlgebraKind kind, int n, int i, int j) {
  const GroupElement g = GroupElement::symbolic(group_kind_for(kind), n);
  const PolyMatrix hat = symbolic_inverse(g);
  const auto b = [&](int r, int c) { return g.entries.at1(r, c); };
  const auto x = [&](int r, int c) { return RationalExpr::variable(VarId::x(r, c)); };
  RationalExpr out;
  if (kind == AlgebraKind::T0) {
    out = x(i, j);
    for (int ip = i + 1; ip <= n; ++ip) {
      if (j < ip) out += b(i, ip) * x(ip, j);
    }
    for (int jp = 1; jp < j; ++jp) {
      if (jp < i) out += hat.at1(jp, j) * x(i, jp);
    }
    for (int ip = i + 1; ip <= n; ++ip) {
      for (int jp = 1; jp < j; ++jp) {
        if (jp < ip) out += b(i, ip) * hat.at1(jp, j) * x(ip, jp);
      }
    }
  } else {
    for (int ip = i; ip <= n; ++ip) {
      for (int jp = 1; jp <= j; ++jp) {
        if (jp <= ip) out += b(i, ip) * hat.at1(jp, j) * x(ip, jp);
      }
    }
  }
  return out;
}

RationalMatrix group_matrix(AlgebraKind kind, int n, const Assignment& b_values) {
  RationalMatrix b(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      BigRational v = i == j ? BigRational(1) : BigRational(0);
      if (i != j || kind != AlgebraKind::T0) {
        if (auto it = b_values.find(VarId::b(i, j)); it != b_values.end()) v = it->second;
      }
      b(i - 1, j - 1) = v;
    }
  }
  return b;
}

Assignment coadjoint_transform(AlgebraKind kind, int n, const Assignment& b_values, const Assignment& x_values) {
  const RationalMatrix b = group_matrix(kind, n, b_values);
  for (int i = 0; i < n; ++i) {
    if (b(i, i).is_zero()) throw SingularGroupElement("b_" + std::to_string(i + 1) + std::to_string(i + 1) + " = 0");
  }
  const AlgebraKind coords = kind == AlgebraKind::T0 ? AlgebraKind::T0 : AlgebraKind::T;
  RationalMatrix x(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      if (!is_significant(coords, i, j)) continue;
      if (auto it = x_values.find(VarId::x(i, j)); it != x_values.end()) x(i - 1, j - 1) = it->second;
    }
  }
  const RationalMatrix result = b * x * *inverse(b);
  Assignment out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      if (is_significant(coords, i, j)) out[VarId::x(i, j)] = result(i - 1, j - 1);
    }
  }
  return out;
}

std::vector<VarId> x_vars(AlgebraKind kind, int n) {
  std::vector<VarId> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      if (is_significant(kind, i, j)) out.push_back(VarId::x(i, j));
    }
  }
  return out;
}

std::vector<VarId> b_vars(GroupKind kind, int n) {
  std::vector<VarId> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      if (i != j || kind == GroupKind::Triangular) out.push_back(VarId::b(i, j));
    }
  }
  return out;
}

}  // namespace casimir
