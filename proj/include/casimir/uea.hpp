#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "casimir/algebra.hpp"

namespace casimir {

/// Word in the generators, as basis indices.
using Word = std::vector<std::uint16_t>;

inline constexpr std::size_t kMaxWordLength = 12;
inline constexpr std::size_t kMaxSymDegree = 6;

/// Element of the universal enveloping algebra. Normal-form elements hold
/// only non-decreasing words; the type itself does not enforce it so that
/// unordered formal products can be represented too.
class UeaElement {
public:
  UeaElement() = default;
  static UeaElement scalar(const BigRational& c);
  static UeaElement generator(std::size_t index);
  static UeaElement word(Word w, const BigRational& c = 1);

  const std::map<Word, BigRational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add(const Word& w, const BigRational& c);
  bool is_normal() const;

  UeaElement scaled(const BigRational& c) const;
  UeaElement& operator+=(const UeaElement& rhs);
  UeaElement& operator-=(const UeaElement& rhs);
  friend UeaElement operator+(UeaElement a, const UeaElement& b) { return a += b; }
  friend UeaElement operator-(UeaElement a, const UeaElement& b) { return a -= b; }
  friend bool operator==(const UeaElement&, const UeaElement&) = default;

  /// Concatenation product without reordering.
  friend UeaElement formal_product(const UeaElement& a, const UeaElement& b);

private:
  std::map<Word, BigRational> terms_;
};

/// Rewrites words into PBW normal form using e_a e_b = e_b e_a + [e_a, e_b]
/// for a > b. Caches normal forms of words; not thread-safe.
class PbwRewriter {
public:
  explicit PbwRewriter(const AlgebraSpec& alg) : alg_(alg) {}
  /// Picks the descent to rewrite at random instead of the leftmost one, and
  /// skips the cache. Used to test confluence.
  PbwRewriter(const AlgebraSpec& alg, std::uint64_t seed) : alg_(alg), rng_(std::mt19937_64(seed)) {}

  const AlgebraSpec& algebra() const noexcept { return alg_; }

  UeaElement normal_form(const Word& w);
  UeaElement normal_form(const UeaElement& e);
  /// Throws WordTooLong when a product word exceeds kMaxWordLength.
  UeaElement multiply(const UeaElement& a, const UeaElement& b);
  UeaElement commutator(const UeaElement& a, const UeaElement& b);

private:
  const AlgebraSpec& alg_;
  std::optional<std::mt19937_64> rng_;
  std::map<Word, UeaElement> cache_;
};

UeaElement uea_mul(const UeaElement& a, const UeaElement& b, const AlgebraSpec& alg);

/// (1/r!) sum over orderings of the word, normal-ordered. Throws WordTooLong for r > 6.
UeaElement sym(const Word& w, const AlgebraSpec& alg);

/// True iff c commutes with every generator.
bool casimir_check(const UeaElement& c, const AlgebraSpec& alg);

/// "e_12*e_23 - 1/2*e_13"; longer words first.
std::string to_string(const UeaElement& e, const AlgebraSpec& alg);

}  // namespace casimir
