#include "primality.hpp"

#include <vector>

#include "error.hpp"
#include "primes.hpp"

namespace sigmapair {

const char* primality_status_name(PrimalityStatus s) noexcept {
  switch (s) {
    case PrimalityStatus::Prime: return "Prime";
    case PrimalityStatus::Composite: return "Composite";
    case PrimalityStatus::ProbablePrime: return "ProbablePrime";
  }
  return "Unknown";
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t fingerprint(const Nat& x) {
  const std::size_t words = (x.bit_length() + 63) / 64;
  std::vector<std::uint64_t> limbs(words == 0 ? 1 : words, 0);
  mpz_export(limbs.data(), nullptr, -1, sizeof(std::uint64_t), 0, 0, x.mpz().get_mpz_t());
  std::uint64_t h = splitmix64(words);
  for (std::uint64_t w : limbs) h = splitmix64(h ^ w);
  return h;
}

bool strong_probable_prime(const mpz_class& n, const mpz_class& base) {
  const mpz_class n_minus_1 = n - 1;
  mpz_class d = n_minus_1;
  const mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  mpz_class x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (mp_bitcnt_t r = 1; r < s; ++r) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

Nat sprp_base(const Nat& x, unsigned round) {
  if (x.bit_length() <= 2) return Nat(2);
  const std::uint64_t h = splitmix64(fingerprint(x) ^ splitmix64(0xA5A5A5A5ull + round));
  // base in [2, x - 2]
  return Nat(h) % (x - Nat(3)) + Nat(2);
}

PrimalityVerdict is_prime(const Nat& x, unsigned rounds) {
  if (rounds == 0) throw Error(Errc::InvalidArgument, "primality rounds must be >= 1");

  PrimalityVerdict v;
  if (x.fits_u64()) {
    const std::uint64_t n = x.to_u64();
    if (is_prime_u64(n)) {
      v.status = PrimalityStatus::Prime;
    } else if (n >= 4) {
      for (std::uint64_t p : small_primes()) {
        if (p * p > n) break;
        if (n % p == 0) {
          v.witness = Nat(p);
          break;
        }
      }
    }
    return v;
  }

  for (std::uint64_t p : small_primes()) {
    if (x.divisible_by(p)) {
      v.witness = Nat(p);
      return v;
    }
  }

  for (unsigned i = 0; i < rounds; ++i) {
    Nat base = sprp_base(x, i);
    ++v.rounds;
    if (!strong_probable_prime(x.mpz(), base.mpz())) {
      v.witness = std::move(base);
      return v;
    }
  }
  v.status = PrimalityStatus::ProbablePrime;
  return v;
}

}  // namespace sigmapair
