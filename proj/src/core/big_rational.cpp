#include "casimir/big_rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace casimir {

namespace {

using u128 = unsigned __int128;

constexpr std::int64_t kSmallMin = std::numeric_limits<std::int64_t>::min() + 1;
constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

u128 magnitude(__int128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  if (a <= std::numeric_limits<std::uint64_t>::max() && b <= std::numeric_limits<std::uint64_t>::max()) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool in_small_range(__int128 v) { return v >= kSmallMin && v <= kSmallMax; }

void set_mpz(mpz_class& out, __int128 value) {
  const u128 mag = magnitude(value);
  const std::uint64_t words[2] = {static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(mag >> 64)};
  mpz_import(out.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  if (value < 0) mpz_neg(out.get_mpz_t(), out.get_mpz_t());
}

bool mpz_fits_small(const mpz_class& z) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return mpz_fits_slong_p(z.get_mpz_t()) != 0 && z != std::numeric_limits<long>::min();
}

}  // namespace

BigRational::BigRational(std::int64_t value) noexcept : num_(value), den_(1) {
  if (value == std::numeric_limits<std::int64_t>::min()) {
    big_ = std::make_unique<mpq_class>(mpz_class(static_cast<long>(value)));
    num_ = 0;
  }
}

BigRational::BigRational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("BigRational: zero denominator");
  if (den < 0) {
    assign_reduced(-static_cast<__int128>(num), -static_cast<__int128>(den));
  } else {
    assign_reduced(num, den);
  }
}

BigRational::BigRational(const mpq_class& value) { assign_mpq(value); }

BigRational::BigRational(const BigRational& other)
    : num_(other.num_), den_(other.den_), big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

BigRational& BigRational::operator=(const BigRational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

BigRational BigRational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("BigRational: empty string");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("BigRational: cannot parse '" + s + "'");
  if (q.get_den() == 0) throw std::domain_error("BigRational: zero denominator");
  q.canonicalize();
  return BigRational(q);
}

void BigRational::assign_reduced(__int128 num, __int128 den) {
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  if (den != 1) {
    const u128 g = gcd128(magnitude(num), static_cast<u128>(den));
    if (g != 1) {
      num /= static_cast<__int128>(g);
      den /= static_cast<__int128>(g);
    }
  }
  if (in_small_range(num) && den <= kSmallMax) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  mpq_class q;
  set_mpz(q.get_num(), num);
  set_mpz(q.get_den(), den);
  num_ = 0;
  den_ = 1;
  big_ = std::make_unique<mpq_class>(std::move(q));
}

void BigRational::assign_mpq(mpq_class value) {
  if (mpz_fits_small(value.get_num()) && mpz_fits_small(value.get_den())) {
    num_ = value.get_num().get_si();
    den_ = value.get_den().get_si();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_unique<mpq_class>(std::move(value));
}

bool BigRational::is_integer() const noexcept {
  if (!big_) return den_ == 1;
  return big_->get_den() == 1;
}

int BigRational::sign() const noexcept {
  if (!big_) return (num_ > 0) - (num_ < 0);
  return sgn(*big_);
}

std::string BigRational::numerator_string() const {
  return big_ ? big_->get_num().get_str() : std::to_string(num_);
}

std::string BigRational::denominator_string() const {
  return big_ ? big_->get_den().get_str() : std::to_string(den_);
}

std::string BigRational::to_string() const {
  if (is_integer()) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

mpq_class BigRational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

BigRational BigRational::operator-() const {
  BigRational r;
  if (!big_) {
    r.num_ = -num_;
    r.den_ = den_;
  } else {
    r.assign_mpq(-*big_);
  }
  return r;
}

BigRational BigRational::abs() const { return sign() < 0 ? -*this : *this; }

BigRational BigRational::inverse() const {
  if (is_zero()) throw std::domain_error("BigRational: inverse of zero");
  BigRational r;
  if (!big_) {
    if (num_ < 0) {
      r.num_ = -den_;
      r.den_ = -num_;
    } else {
      r.num_ = den_;
      r.den_ = num_;
    }
  } else {
    mpq_class q;
    mpq_inv(q.get_mpq_t(), big_->get_mpq_t());
    r.assign_mpq(std::move(q));
  }
  return r;
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      assign_reduced(static_cast<__int128>(num_) + rhs.num_, 1);
    } else {
      assign_reduced(static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_,
                     static_cast<__int128>(den_) * rhs.den_);
    }
    return *this;
  }
  assign_mpq(to_mpq() + rhs.to_mpq());
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      assign_reduced(static_cast<__int128>(num_) - rhs.num_, 1);
    } else {
      assign_reduced(static_cast<__int128>(num_) * rhs.den_ - static_cast<__int128>(rhs.num_) * den_,
                     static_cast<__int128>(den_) * rhs.den_);
    }
    return *this;
  }
  assign_mpq(to_mpq() - rhs.to_mpq());
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  if (!big_ && !rhs.big_) {
    assign_reduced(static_cast<__int128>(num_) * rhs.num_, static_cast<__int128>(den_) * rhs.den_);
    return *this;
  }
  assign_mpq(to_mpq() * rhs.to_mpq());
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("BigRational: division by zero");
  if (!big_ && !rhs.big_) {
    __int128 num = static_cast<__int128>(num_) * rhs.den_;
    __int128 den = static_cast<__int128>(den_) * rhs.num_;
    if (den < 0) {
      num = -num;
      den = -den;
    }
    assign_reduced(num, den);
    return *this;
  }
  assign_mpq(to_mpq() / rhs.to_mpq());
  return *this;
}

bool operator==(const BigRational& a, const BigRational& b) noexcept {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
  if (!a.big_ && !b.big_) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

BigRational BigRational::content_gcd(const BigRational& a, const BigRational& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  if (!a.big_ && !b.big_) {
    const std::uint64_t na = static_cast<std::uint64_t>(a.num_ < 0 ? -a.num_ : a.num_);
    const std::uint64_t nb = static_cast<std::uint64_t>(b.num_ < 0 ? -b.num_ : b.num_);
    const std::uint64_t g = std::gcd(na, nb);
    const std::uint64_t da = static_cast<std::uint64_t>(a.den_);
    const std::uint64_t db = static_cast<std::uint64_t>(b.den_);
    const u128 l = static_cast<u128>(da / std::gcd(da, db)) * db;
    BigRational r;
    r.assign_reduced(static_cast<__int128>(g), static_cast<__int128>(l));
    return r;
  }
  const mpq_class qa = a.to_mpq();
  const mpq_class qb = b.to_mpq();
  mpz_class g;
  mpz_class l;
  mpz_gcd(g.get_mpz_t(), qa.get_num_mpz_t(), qb.get_num_mpz_t());
  mpz_lcm(l.get_mpz_t(), qa.get_den_mpz_t(), qb.get_den_mpz_t());
  mpq_class q(g, l);
  q.canonicalize();
  return BigRational(q);
}

std::ostream& operator<<(std::ostream& os, const BigRational& value) { return os << value.to_string(); }

}  // namespace casimir
