#include "casimir/rational_expr.hpp"

#include <algorithm>
#include <stdexcept>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

void normalize(MultiPoly& num, MultiPoly& den) {
  if (den.is_zero()) throw std::domain_error("RationalExpr: zero denominator");
  if (num.is_zero()) {
    den = MultiPoly(1);
    return;
  }
  const Monomial g = Monomial::gcd(num.monomial_content(), den.monomial_content());
  if (!g.is_one()) {
    num = num.divide_monomial(g);
    den = den.divide_monomial(g);
  }
  BigRational c = den.coefficient_content();
  if (den.leading_term().coeff.sign() < 0) c = -c;
  if (!c.is_one()) {
    const BigRational inv = c.inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  if (den.is_constant()) return;
  if (num.size() >= den.size() && num.total_degree() >= den.total_degree()) {
    if (auto q = num.divide_exact(den)) {
      num = std::move(*q);
      den = MultiPoly(1);
    }
  }
}

// Removes q from p (or p from q) when one divides the other exactly.
void cancel_pair(MultiPoly& p, MultiPoly& q) {
  if (p.is_zero() || q.is_constant() || p.is_constant()) return;
  if (p == q) {
    p = MultiPoly(1);
    q = MultiPoly(1);
    return;
  }
  if (q.size() <= p.size()) {
    if (auto r = p.divide_exact(q)) {
      p = std::move(*r);
      q = MultiPoly(1);
      return;
    }
  }
  if (p.size() <= q.size()) {
    if (auto r = q.divide_exact(p)) {
      q = std::move(*r);
      p = MultiPoly(1);
    }
  }
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) { return (a * b).quotient(Monomial::gcd(a, b)); }

}  // namespace

RationalExpr::RationalExpr(MultiPoly num) : num_(std::move(num)), den_(1) {}

RationalExpr::RationalExpr(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize(num_, den_);
}

std::vector<VarId> RationalExpr::variables() const {
  std::vector<VarId> vars = num_.variables();
  const std::vector<VarId> dv = den_.variables();
  vars.insert(vars.end(), dv.begin(), dv.end());
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

RationalExpr RationalExpr::operator-() const {
  RationalExpr r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalExpr(a.num_ + b.num_, a.den_);
  if (a.den_.is_constant()) return RationalExpr(a.num_ * b.den_ + b.num_, b.den_);
  if (b.den_.is_constant()) return RationalExpr(a.num_ + b.num_ * a.den_, a.den_);
  if (a.den_.is_monomial() && b.den_.is_monomial()) {
    const Monomial& ma = a.den_.leading_term().monomial;
    const Monomial& mb = b.den_.leading_term().monomial;
    const Monomial l = monomial_lcm(ma, mb);
    // Normalized monomial denominators carry coefficient 1.
    return RationalExpr(a.num_.times_monomial(l.quotient(ma), 1) + b.num_.times_monomial(l.quotient(mb), 1),
                        MultiPoly::monomial(l));
  }
  if (b.den_.size() >= a.den_.size()) {
    if (auto q = b.den_.divide_exact(a.den_)) return RationalExpr(a.num_ * *q + b.num_, b.den_);
  }
  if (a.den_.size() >= b.den_.size()) {
    if (auto q = a.den_.divide_exact(b.den_)) return RationalExpr(a.num_ + b.num_ * *q, a.den_);
  }
  return RationalExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) { return a + (-b); }

RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) return RationalExpr(a.num_ * b.num_, a.den_ * b.den_);
  MultiPoly an = a.num_;
  MultiPoly ad = a.den_;
  MultiPoly bn = b.num_;
  MultiPoly bd = b.den_;
  cancel_pair(an, bd);
  cancel_pair(bn, ad);
  return RationalExpr(an * bn, ad * bd);
}

RationalExpr operator/(const RationalExpr& a, const RationalExpr& b) {
  if (b.is_zero()) throw std::domain_error("RationalExpr: division by zero");
  RationalExpr inv;
  inv.num_ = b.den_;
  inv.den_ = b.num_;
  normalize(inv.num_, inv.den_);
  return a * inv;
}

bool operator==(const RationalExpr& a, const RationalExpr& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalExpr RationalExpr::partial(VarId var) const {
  if (den_.is_constant()) return RationalExpr(num_.partial(var), den_);
  const MultiPoly dd = den_.partial(var);
  if (dd.is_zero()) return RationalExpr(num_.partial(var), den_);
  return RationalExpr(num_.partial(var) * den_ - num_ * dd, den_ * den_);
}

BigRational RationalExpr::eval(const Assignment& values) const {
  const BigRational d = den_.eval(values);
  if (d.is_zero()) throw DenominatorVanishes("denominator " + den_.to_string() + " vanishes at the given point");
  return num_.eval(values) / d;
}

RationalExpr RationalExpr::eval_partial(const Assignment& values) const {
  MultiPoly d = den_.eval_partial(values);
  if (d.is_zero()) throw DenominatorVanishes("denominator " + den_.to_string() + " vanishes under partial evaluation");
  return RationalExpr(num_.eval_partial(values), std::move(d));
}

RationalExpr RationalExpr::substitute(const Substitution& values) const {
  return casimir::substitute(num_, values) / casimir::substitute(den_, values);
}

std::string RationalExpr::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  const auto wrap = [](const MultiPoly& p) {
    if (p.size() == 1 && p.leading_term().coeff.sign() > 0 && p.leading_term().coeff.is_integer()) {
      return p.to_string();
    }
    return "(" + p.to_string() + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

RationalExpr substitute(const MultiPoly& p, const Substitution& values) {
  // Variables of p that are replaced, with their degree in p.
  std::vector<std::pair<VarId, std::uint32_t>> subs;
  for (const VarId v : p.variables()) {
    if (values.count(v) != 0) subs.emplace_back(v, p.degree_in(v));
  }
  if (subs.empty()) return RationalExpr(p);

  // Group terms by their exponent signature in the replaced variables, so the
  // shared factor prod N_v^e * D_v^(d-e) is built once per signature.
  std::map<std::vector<std::uint32_t>, std::vector<Term>> groups;
  for (const Term& t : p.terms()) {
    std::vector<std::uint32_t> signature;
    signature.reserve(subs.size());
    Monomial rest = t.monomial;
    for (const auto& [v, d] : subs) {
      signature.push_back(t.monomial.degree_in(v));
      rest = rest.without(v);
    }
    groups[signature].push_back({std::move(rest), t.coeff});
  }

  std::vector<std::vector<MultiPoly>> num_pow(subs.size());
  std::vector<std::vector<MultiPoly>> den_pow(subs.size());
  MultiPoly den(1);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const RationalExpr& value = values.at(subs[i].first);
    const std::uint32_t d = subs[i].second;
    num_pow[i].push_back(MultiPoly(1));
    den_pow[i].push_back(MultiPoly(1));
    for (std::uint32_t e = 1; e <= d; ++e) {
      num_pow[i].push_back(num_pow[i].back() * value.num());
      den_pow[i].push_back(den_pow[i].back() * value.den());
    }
    den *= den_pow[i][d];
  }

  MultiPoly num;
  for (auto& [signature, terms] : groups) {
    MultiPoly factor = MultiPoly::from_terms(std::move(terms));
    for (std::size_t i = 0; i < subs.size(); ++i) {
      const std::uint32_t e = signature[i];
      factor *= num_pow[i][e];
      factor *= den_pow[i][subs[i].second - e];
    }
    num += factor;
  }
  return RationalExpr(std::move(num), std::move(den));
}

}  // namespace casimir
