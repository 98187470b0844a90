#include "casimir/multi_poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "casimir/errors.hpp"

namespace casimir {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(VarId var, std::uint32_t exp) {
  if (exp > 0) factors_.push_back({var, exp});
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.var < b.var; });
  Monomial m;
  for (const Factor& f : factors) {
    if (f.exp == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().var == f.var) {
      m.factors_.back().exp += f.exp;
    } else {
      m.factors_.push_back(f);
    }
  }
  return m;
}

std::uint32_t Monomial::degree_in(VarId var) const noexcept {
  for (const Factor& f : factors_) {
    if (f.var == var) return f.exp;
    if (var < f.var) break;
  }
  return 0;
}

std::uint32_t Monomial::total_degree() const noexcept {
  std::uint32_t d = 0;
  for (const Factor& f : factors_) d += f.exp;
  return d;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  auto it = other.factors_.begin();
  for (const Factor& f : factors_) {
    while (it != other.factors_.end() && it->var < f.var) ++it;
    if (it == other.factors_.end() || it->var != f.var || it->exp < f.exp) return false;
    ++it;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out;
  out.factors_.reserve(factors_.size());
  auto it = divisor.factors_.begin();
  for (const Factor& f : factors_) {
    std::uint32_t sub = 0;
    if (it != divisor.factors_.end() && it->var == f.var) {
      sub = it->exp;
      ++it;
    }
    if (sub > f.exp) throw std::logic_error("Monomial::quotient: divisor does not divide");
    if (f.exp > sub) out.factors_.push_back({f.var, f.exp - sub});
  }
  if (it != divisor.factors_.end()) throw std::logic_error("Monomial::quotient: divisor does not divide");
  return out;
}

Monomial Monomial::without(VarId var) const {
  Monomial out;
  for (const Factor& f : factors_) {
    if (f.var != var) out.factors_.push_back(f);
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->var < ib->var) {
      ++ia;
    } else if (ib->var < ia->var) {
      ++ib;
    } else {
      out.factors_.push_back({ia->var, std::min(ia->exp, ib->exp)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->var < ib->var)) {
      out.factors_.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->var < ia->var) {
      out.factors_.push_back(*ib++);
    } else {
      out.factors_.push_back({ia->var, ia->exp + ib->exp});
      ++ia;
      ++ib;
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  const std::size_t n = std::min(a.factors_.size(), b.factors_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Factor& fa = a.factors_[i];
    const Factor& fb = b.factors_[i];
    if (fa.var != fb.var) {
      // The side holding the smaller variable has a positive exponent where
      // the other has zero.
      return fa.var < fb.var ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (fa.exp != fb.exp) return fa.exp <=> fb.exp;
  }
  return a.factors_.size() <=> b.factors_.size();
}

std::string monomial_to_string(const Monomial& m) {
  std::string out;
  for (const Factor& f : m.factors()) {
    if (!out.empty()) out += "*";
    out += f.var.name();
    if (f.exp > 1) out += "^" + std::to_string(f.exp);
  }
  return out;
}

// --------------------------------------------------------------- MultiPoly

namespace {

bool term_greater(const Term& a, const Term& b) { return a.monomial > b.monomial; }

// Merge two canonical term lists, multiplying the second by `sign`.
std::vector<Term> merge_terms(std::span<const Term> a, std::span<const Term> b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      out.push_back({b[j].monomial, sign > 0 ? b[j].coeff : -b[j].coeff});
      ++j;
      continue;
    }
    const auto c = a[i].monomial <=> b[j].monomial;
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].monomial, sign > 0 ? b[j].coeff : -b[j].coeff});
      ++j;
    } else {
      BigRational s = a[i].coeff;
      if (sign > 0) {
        s += b[j].coeff;
      } else {
        s -= b[j].coeff;
      }
      if (!s.is_zero()) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly::MultiPoly(const BigRational& constant) {
  if (!constant.is_zero()) terms_.push_back({Monomial{}, constant});
}

MultiPoly MultiPoly::variable(VarId var) { return monomial(Monomial(var), 1); }

MultiPoly MultiPoly::monomial(Monomial m, BigRational coeff) {
  MultiPoly p;
  if (!coeff.is_zero()) p.terms_.push_back({std::move(m), std::move(coeff)});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  MultiPoly p;
  p.terms_.reserve(terms.size());
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool MultiPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

BigRational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return 0;
}

const Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("MultiPoly::leading_term of zero polynomial");
  return terms_.front();
}

std::uint32_t MultiPoly::degree_in(VarId var) const noexcept {
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial.degree_in(var));
  return d;
}

std::uint32_t MultiPoly::total_degree() const noexcept {
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial.total_degree());
  return d;
}

std::vector<VarId> MultiPoly::variables() const {
  std::vector<VarId> vars;
  for (const Term& t : terms_) {
    for (const Factor& f : t.monomial.factors()) vars.push_back(f.var);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool MultiPoly::has_kind(VarKind kind) const noexcept {
  for (const Term& t : terms_) {
    for (const Factor& f : t.monomial.factors()) {
      if (f.var.kind() == kind) return true;
    }
  }
  return false;
}

Monomial MultiPoly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.front().monomial;
  for (std::size_t i = 1; i < terms_.size() && !g.is_one(); ++i) g = Monomial::gcd(g, terms_[i].monomial);
  return g;
}

BigRational MultiPoly::coefficient_content() const {
  BigRational c;
  for (const Term& t : terms_) c = BigRational::content_gcd(c, t.coeff);
  return c.is_zero() ? BigRational(1) : c;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  terms_ = merge_terms(terms_, rhs.terms_, +1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  if (rhs.is_zero()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, -1);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly MultiPoly::times_monomial(const Monomial& m, const BigRational& coeff) const {
  MultiPoly out;
  if (coeff.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back({t.monomial * m, t.coeff * coeff});
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].monomial, a.terms_[0].coeff);
  if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].monomial, b.terms_[0].coeff);
  // Each row a_i * b is already sorted; accumulate row by row when one side is
  // short, otherwise sort the full product list once.
  if (std::min(a.terms_.size(), b.terms_.size()) <= 4) {
    const MultiPoly& small = a.terms_.size() <= b.terms_.size() ? a : b;
    const MultiPoly& large = a.terms_.size() <= b.terms_.size() ? b : a;
    MultiPoly acc;
    for (const Term& t : small.terms_) acc += large.times_monomial(t.monomial, t.coeff);
    return acc;
  }
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& ta : a.terms_) {
    for (const Term& tb : b.terms_) products.push_back({ta.monomial * tb.monomial, ta.coeff * tb.coeff});
  }
  return MultiPoly::from_terms(std::move(products));
}

MultiPoly MultiPoly::scaled(const BigRational& factor) const {
  if (factor.is_zero()) return {};
  MultiPoly out = *this;
  for (Term& t : out.terms_) t.coeff *= factor;
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::partial(VarId var) const {
  std::vector<Term> out;
  for (const Term& t : terms_) {
    const std::uint32_t e = t.monomial.degree_in(var);
    if (e == 0) continue;
    std::vector<Factor> fs(t.monomial.factors().begin(), t.monomial.factors().end());
    for (Factor& f : fs) {
      if (f.var == var) f.exp -= 1;
    }
    out.push_back({Monomial::from_factors(std::move(fs)), t.coeff * BigRational(static_cast<std::int64_t>(e))});
  }
  // Differentiation can reorder monomials, so canonicalize.
  return from_terms(std::move(out));
}

namespace {

BigRational power(const BigRational& base, std::uint32_t exp) {
  BigRational r(1);
  for (std::uint32_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

BigRational MultiPoly::eval(const Assignment& values) const {
  BigRational total;
  for (const Term& t : terms_) {
    BigRational v = t.coeff;
    for (const Factor& f : t.monomial.factors()) {
      const auto it = values.find(f.var);
      if (it == values.end()) throw MissingVariable("eval: variable " + f.var.name() + " is unassigned");
      v *= power(it->second, f.exp);
    }
    total += v;
  }
  return total;
}

MultiPoly MultiPoly::eval_partial(const Assignment& values) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    BigRational c = t.coeff;
    std::vector<Factor> kept;
    for (const Factor& f : t.monomial.factors()) {
      const auto it = values.find(f.var);
      if (it == values.end()) {
        kept.push_back(f);
      } else {
        c *= power(it->second, f.exp);
      }
    }
    if (!c.is_zero()) out.push_back({Monomial::from_factors(std::move(kept)), std::move(c)});
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::coefficient_of(VarId var, std::uint32_t exp) const {
  std::vector<Term> out;
  for (const Term& t : terms_) {
    if (t.monomial.degree_in(var) == exp) out.push_back({t.monomial.without(var), t.coeff});
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::substitute(VarId var, const MultiPoly& value) const {
  const std::uint32_t d = degree_in(var);
  if (d == 0) return *this;
  std::vector<MultiPoly> powers{MultiPoly(1)};
  for (std::uint32_t e = 1; e <= d; ++e) powers.push_back(powers.back() * value);
  MultiPoly out;
  for (std::uint32_t e = 0; e <= d; ++e) {
    const MultiPoly c = coefficient_of(var, e);
    if (!c.is_zero()) out += c * powers[e];
  }
  return out;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("MultiPoly::divide_exact: division by zero");
  if (is_zero()) return MultiPoly{};
  const Term& lead = divisor.terms_.front();
  if (divisor.terms_.size() == 1) {
    MultiPoly q;
    q.terms_.reserve(terms_.size());
    const BigRational inv = lead.coeff.inverse();
    for (const Term& t : terms_) {
      if (!lead.monomial.divides(t.monomial)) return std::nullopt;
      q.terms_.push_back({t.monomial.quotient(lead.monomial), t.coeff * inv});
    }
    return q;
  }
  if (total_degree() < divisor.total_degree()) return std::nullopt;
  // With a monomial order the remainder of division by a single polynomial is
  // unique, so the first non-divisible leading term proves non-divisibility.
  std::map<Monomial, BigRational, std::greater<>> remainder;
  for (const Term& t : terms_) remainder.emplace_hint(remainder.end(), t.monomial, t.coeff);
  std::vector<Term> quotient;
  const BigRational inv = lead.coeff.inverse();
  while (!remainder.empty()) {
    const auto top = remainder.begin();
    if (!lead.monomial.divides(top->first)) return std::nullopt;
    Monomial qm = top->first.quotient(lead.monomial);
    BigRational qc = top->second * inv;
    remainder.erase(top);
    for (std::size_t i = 1; i < divisor.terms_.size(); ++i) {
      const Term& d = divisor.terms_[i];
      const BigRational c = -(d.coeff * qc);
      auto [it, inserted] = remainder.try_emplace(d.monomial * qm, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) remainder.erase(it);
      }
    }
    quotient.push_back({std::move(qm), std::move(qc)});
  }
  MultiPoly q;
  q.terms_ = std::move(quotient);  // produced in strictly decreasing order
  return q;
}

MultiPoly MultiPoly::divide_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  MultiPoly out;
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back({t.monomial.quotient(m), t.coeff});
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    const bool negative = t.coeff.sign() < 0;
    const BigRational mag = t.coeff.abs();
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (t.monomial.is_one()) {
      os << mag.to_string();
    } else if (mag.is_one()) {
      os << monomial_to_string(t.monomial);
    } else {
      os << mag.to_string() << "*" << monomial_to_string(t.monomial);
    }
  }
  return os.str();
}

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
MultiPoly poly_partial(const MultiPoly& p, VarId var) { return p.partial(var); }
BigRational eval(const MultiPoly& p, const Assignment& values) { return p.eval(values); }

}  // namespace casimir
