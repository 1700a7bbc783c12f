#include "nat.hpp"

#include <cmath>

#include "error.hpp"
#include "primes.hpp"

namespace sigmapair {

Nat::Nat(std::uint64_t v) {
  // mpz_class has no portable 64-bit constructor on every ABI.
  mpz_import(value_.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
}

Nat Nat::from_mpz(mpz_class v) {
  if (sgn(v) < 0) throw Error(Errc::InvalidArgument, "negative value for Nat");
  return Nat(std::move(v), 0);
}

Nat Nat::parse(std::string_view decimal) {
  if (decimal.empty()) throw Error(Errc::Parse, "empty decimal string");
  for (char c : decimal)
    if (c < '0' || c > '9')
      throw Error(Errc::Parse, "invalid decimal digit in '" + std::string(decimal) + "'");
  mpz_class v;
  v.set_str(std::string(decimal), 10);
  return Nat(std::move(v), 0);
}

std::string Nat::to_string() const { return value_.get_str(10); }

bool Nat::fits_u64() const noexcept { return bit_length() <= 64; }

std::uint64_t Nat::to_u64() const {
  if (!fits_u64()) throw Error(Errc::InvalidArgument, "value exceeds 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value_.get_mpz_t());
  return out;
}

std::size_t Nat::bit_length() const noexcept {
  return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

std::size_t Nat::decimal_digits() const {
  // mpz_sizeinbase may overshoot by one for base 10.
  std::size_t n = mpz_sizeinbase(value_.get_mpz_t(), 10);
  if (n > 1) {
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 10, n - 1);
    if (value_ < bound) --n;
  }
  return n;
}

double Nat::log() const {
  if (is_zero()) return -HUGE_VAL;
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, value_.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

std::uint64_t Nat::mod_u64(std::uint64_t m) const {
  if (m == 0) throw Error(Errc::InvalidArgument, "modulus is zero");
  if (m <= 0xFFFFFFFFull) return mpz_fdiv_ui(value_.get_mpz_t(), static_cast<unsigned long>(m));
  return (*this % Nat(m)).to_u64();
}

bool Nat::divisible_by(std::uint64_t d) const {
  if (d == 0) return is_zero();
  return mod_u64(d) == 0;
}

bool Nat::divisible_by(const Nat& d) const {
  if (d.is_zero()) return is_zero();
  return mpz_divisible_p(value_.get_mpz_t(), d.value_.get_mpz_t()) != 0;
}

Nat operator-(const Nat& a, const Nat& b) {
  if (b > a) throw Error(Errc::InvalidArgument, "Nat subtraction underflow");
  return Nat(mpz_class(a.value_ - b.value_), 0);
}

Nat operator/(const Nat& a, const Nat& b) { return divmod(a, b).quotient; }
Nat operator%(const Nat& a, const Nat& b) { return divmod(a, b).remainder; }

DivMod divmod(const Nat& a, const Nat& b) {
  if (b.is_zero()) throw Error(Errc::InvalidArgument, "division by zero");
  mpz_class q;
  mpz_class r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return {Nat::from_mpz(std::move(q)), Nat::from_mpz(std::move(r))};
}

std::optional<Nat> exact_div(const Nat& a, const Nat& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Nat pow(const Nat& base, unsigned exponent) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.mpz().get_mpz_t(), exponent);
  return Nat::from_mpz(std::move(out));
}

Nat sigma_power(const Nat& p, unsigned m) {
  if (p.is_zero() || m == 0) throw Error(Errc::InvalidArgument, "sigma_power requires p >= 1 and m >= 1");
  if (p.is_one()) return Nat(std::uint64_t{m} + 1);
  // Horner: ((p + 1) p + 1) p + ... avoids the big division of the closed form.
  mpz_class acc = 1;
  for (unsigned i = 0; i < m; ++i) {
    acc *= p.mpz();
    acc += 1;
  }
  return Nat::from_mpz(std::move(acc));
}

Nat gcd(const Nat& a, const Nat& b) {
  if (a.is_zero() && b.is_zero()) throw Error(Errc::InvalidArgument, "gcd(0, 0) is undefined");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Nat::from_mpz(std::move(g));
}

Nat bounded_square_part(const Nat& x, std::uint64_t trial_bound) {
  if (x.is_zero()) throw Error(Errc::InvalidArgument, "bounded_square_part requires x >= 1");
  if (trial_bound < 2) throw Error(Errc::InvalidArgument, "bounded_square_part requires trial_bound >= 2");

  std::vector<std::uint64_t> sieved;
  std::span<const std::uint64_t> primes = small_primes();
  if (trial_bound > primes.back()) {
    sieved = primes_up_to(trial_bound);
    primes = sieved;
  }

  mpz_class rest = x.mpz();
  mpz_class root = 1;
  for (std::uint64_t p : primes) {
    if (p > trial_bound) break;
    const auto pu = static_cast<unsigned long>(p);
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), pu)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), pu);
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) root *= pu;
    if (rest == 1) break;
  }
  return Nat::from_mpz(mpz_class(root * root));
}

}  // namespace sigmapair
