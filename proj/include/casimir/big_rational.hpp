#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace casimir {

/// Exact rational number, always stored reduced with a positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits live inline and use
/// 128-bit intermediates; larger values are promoted to a GMP rational and
/// demoted again as soon as they fit.
class BigRational {
public:
  BigRational() noexcept = default;
  BigRational(std::int64_t value) noexcept;  // NOLINT(google-explicit-constructor)
  BigRational(int value) noexcept : BigRational(static_cast<std::int64_t>(value)) {}
  BigRational(std::int64_t num, std::int64_t den);
  explicit BigRational(const mpq_class& value);

  /// Parses "p", "-p" or "p/q" with decimal integers of any length.
  static BigRational parse(std::string_view text);

  BigRational(const BigRational& other);
  BigRational(BigRational&& other) noexcept = default;
  BigRational& operator=(const BigRational& other);
  BigRational& operator=(BigRational&& other) noexcept = default;
  ~BigRational() = default;

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const noexcept;
  int sign() const noexcept;

  std::string numerator_string() const;
  std::string denominator_string() const;
  std::string to_string() const;
  mpq_class to_mpq() const;

  /// Exact value as a machine integer pair if it fits.
  bool fits_small() const noexcept { return !big_; }

  BigRational operator-() const;
  BigRational abs() const;
  BigRational inverse() const;

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const BigRational& a, const BigRational& b) noexcept;
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

  /// gcd of numerators over lcm of denominators; gcd(0, x) = |x|.
  static BigRational content_gcd(const BigRational& a, const BigRational& b);

private:
  void assign_reduced(__int128 num, __int128 den);
  void assign_mpq(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& value);

}  // namespace casimir
