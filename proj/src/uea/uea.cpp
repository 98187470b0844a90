#include "casimir/uea.hpp"

#include <algorithm>

#include "casimir/errors.hpp"

namespace casimir {

UeaElement UeaElement::scalar(const BigRational& c) { return word({}, c); }

UeaElement UeaElement::generator(std::size_t index) { return word({static_cast<std::uint16_t>(index)}); }

UeaElement UeaElement::word(Word w, const BigRational& c) {
  UeaElement e;
  e.add(w, c);
  return e;
}

void UeaElement::add(const Word& w, const BigRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool UeaElement::is_normal() const {
  for (const auto& [w, c] : terms_) {
    if (!std::is_sorted(w.begin(), w.end())) return false;
  }
  return true;
}

UeaElement UeaElement::scaled(const BigRational& c) const {
  UeaElement out;
  if (c.is_zero()) return out;
  for (const auto& [w, v] : terms_) out.terms_.emplace(w, v * c);
  return out;
}

UeaElement& UeaElement::operator+=(const UeaElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, c);
  return *this;
}

UeaElement& UeaElement::operator-=(const UeaElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, -c);
  return *this;
}

UeaElement formal_product(const UeaElement& a, const UeaElement& b) {
  UeaElement out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  }
  return out;
}

UeaElement PbwRewriter::normal_form(const Word& w) {
  if (w.size() > kMaxWordLength) throw WordTooLong("word of length " + std::to_string(w.size()) + " exceeds 12");
  std::vector<std::size_t> descents;
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    if (w[p] > w[p + 1]) {
      descents.push_back(p);
      if (!rng_) break;
    }
  }
  if (descents.empty()) return UeaElement::word(w);
  if (!rng_) {
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  }
  std::size_t p = descents.front();
  if (rng_) p = descents[std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(*rng_)];

  Word swapped = w;
  std::swap(swapped[p], swapped[p + 1]);
  UeaElement out = normal_form(swapped);
  for (const StructureTerm& t : alg_.bracket(w[p], w[p + 1])) {
    Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
    shorter.push_back(static_cast<std::uint16_t>(t.index));
    shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(p + 2), w.end());
    out += normal_form(shorter).scaled(t.coeff);
  }
  if (!rng_) cache_.emplace(w, out);
  return out;
}

UeaElement PbwRewriter::normal_form(const UeaElement& e) {
  UeaElement out;
  for (const auto& [w, c] : e.terms()) out += normal_form(w).scaled(c);
  return out;
}

UeaElement PbwRewriter::multiply(const UeaElement& a, const UeaElement& b) { return normal_form(formal_product(a, b)); }

UeaElement PbwRewriter::commutator(const UeaElement& a, const UeaElement& b) { return multiply(a, b) - multiply(b, a); }

UeaElement uea_mul(const UeaElement& a, const UeaElement& b, const AlgebraSpec& alg) {
  PbwRewriter rw(alg);
  return rw.multiply(a, b);
}

UeaElement sym(const Word& w, const AlgebraSpec& alg) {
  if (w.size() > kMaxSymDegree) throw WordTooLong("sym supports words of length <= 6");
  Word perm(w.size());
  std::vector<std::size_t> order(w.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  PbwRewriter rw(alg);
  UeaElement acc;
  BigRational count;
  do {
    for (std::size_t i = 0; i < order.size(); ++i) perm[i] = w[order[i]];
    acc += rw.normal_form(perm);
    count += 1;
  } while (std::next_permutation(order.begin(), order.end()));
  return acc.scaled(count.inverse());
}

bool casimir_check(const UeaElement& c, const AlgebraSpec& alg) {
  PbwRewriter rw(alg);
  for (std::size_t a = 0; a < alg.dim(); ++a) {
    if (!rw.commutator(c, UeaElement::generator(a)).is_zero()) return false;
  }
  return true;
}

std::string to_string(const UeaElement& e, const AlgebraSpec& alg) {
  if (e.is_zero()) return "0";
  std::vector<std::pair<Word, BigRational>> terms(e.terms().begin(), e.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) { return l.first.size() > r.first.size(); });
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms) {
    const BigRational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    std::string body;
    for (const std::uint16_t g : w) {
      if (!body.empty()) body += "*";
      body += alg.label(g).name();
    }
    if (body.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += body;
    } else {
      out += mag.to_string() + "*" + body;
    }
  }
  return out;
}

}  // namespace casimir
