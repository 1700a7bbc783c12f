#pragma once

// Arbitrary-precision nonnegative integers and the handful of arithmetic
// primitives the rest of the toolkit is written against.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace sigmapair {

/// Nonnegative integer of unbounded size. Always canonical: two Nats compare
/// equal exactly when their values do.
class Nat {
 public:
  Nat() = default;
  Nat(std::uint64_t v);  // NOLINT(google-explicit-constructor)

  /// Wraps a GMP integer; throws InvalidArgument if it is negative.
  static Nat from_mpz(mpz_class v);

  /// Plain decimal: one or more ASCII digits, no sign, no separators.
  /// Leading zeros are accepted on input and dropped on output.
  static Nat parse(std::string_view decimal);
  std::string to_string() const;

  const mpz_class& mpz() const noexcept { return value_; }

  bool is_zero() const noexcept { return mpz_sgn(value_.get_mpz_t()) == 0; }
  bool is_one() const noexcept { return mpz_cmp_ui(value_.get_mpz_t(), 1) == 0; }
  bool is_odd() const noexcept { return mpz_odd_p(value_.get_mpz_t()) != 0; }
  bool fits_u64() const noexcept;
  std::uint64_t to_u64() const;  // throws InvalidArgument when it does not fit

  std::size_t bit_length() const noexcept;
  std::size_t decimal_digits() const;
  /// Natural log; exact up to double rounding even for 10^4000-sized values.
  double log() const;

  std::uint64_t mod_u64(std::uint64_t m) const;
  bool divisible_by(std::uint64_t d) const;
  bool divisible_by(const Nat& d) const;

  friend bool operator==(const Nat& a, const Nat& b) noexcept { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) noexcept {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend Nat operator+(const Nat& a, const Nat& b) { return Nat(mpz_class(a.value_ + b.value_), 0); }
  friend Nat operator*(const Nat& a, const Nat& b) { return Nat(mpz_class(a.value_ * b.value_), 0); }
  /// Throws InvalidArgument when b > a.
  friend Nat operator-(const Nat& a, const Nat& b);
  /// Floor division and remainder; throw InvalidArgument on a zero divisor.
  friend Nat operator/(const Nat& a, const Nat& b);
  friend Nat operator%(const Nat& a, const Nat& b);

  Nat& operator+=(const Nat& b) { value_ += b.value_; return *this; }
  Nat& operator*=(const Nat& b) { value_ *= b.value_; return *this; }

 private:
  Nat(mpz_class v, int /*trusted*/) : value_(std::move(v)) {}
  mpz_class value_;
};

struct DivMod {
  Nat quotient;
  Nat remainder;
};

DivMod divmod(const Nat& a, const Nat& b);

/// a / b when b divides a, nullopt otherwise.
std::optional<Nat> exact_div(const Nat& a, const Nat& b);

Nat pow(const Nat& base, unsigned exponent);

/// sigma(p^m) = 1 + p + ... + p^m. Requires p >= 1 and m >= 1.
Nat sigma_power(const Nat& p, unsigned m);

/// Requires a and b not both zero.
Nat gcd(const Nat& a, const Nat& b);

/// Largest s^2 dividing x where every prime factor of s is <= trial_bound.
/// This is a lower bound for the true largest square divisor of x.
/// Requires x >= 1 and trial_bound >= 2.
Nat bounded_square_part(const Nat& x, std::uint64_t trial_bound);

}  // namespace sigmapair
