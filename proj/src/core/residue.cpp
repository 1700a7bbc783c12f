#include "residue.hpp"

#include <string>

#include "error.hpp"
#include "primes.hpp"
#include "quasichain.hpp"

namespace sigmapair {

std::vector<std::uint64_t> prime_factors(std::uint64_t w) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= w; ++p) {
    if (w % p != 0) continue;
    out.push_back(p);
    while (w % p == 0) w /= p;
  }
  if (w > 1) out.push_back(w);
  return out;
}

namespace {

std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t w) {
  // extended Euclid on signed 128-bit to stay clear of overflow
  __int128 r0 = w, r1 = a % w, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    __int128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) return std::nullopt;
  if (s0 < 0) s0 += w;
  return static_cast<std::uint64_t>(s0);
}

std::optional<std::uint64_t> find_mirror_shift(const std::vector<std::uint64_t>& c) {
  const std::size_t p = c.size();
  for (std::size_t k = 0; k < p; ++k) {
    bool ok = true;
    for (std::size_t i = 0; i < p && ok; ++i) ok = c[i] == c[(k + p - i) % p];
    if (ok) return k;
  }
  return std::nullopt;
}

}  // namespace

ResidueProfile residue_profile(std::uint64_t w, std::uint64_t max_steps) {
  if (w < 2) throw Error(Errc::PreconditionViolation, "modulus must be >= 2");
  if (w > (std::uint64_t{1} << 32)) throw Error(Errc::PreconditionViolation, "modulus must be < 2^32");
  for (std::uint64_t p : prime_factors(w))
    if (p % 3 == 1)
      throw Error(Errc::PreconditionViolation,
                  "modulus " + std::to_string(w) + " has prime factor " + std::to_string(p) + " = 1 (mod 3)");

  ResidueProfile out;
  out.modulus = w;
  const std::uint64_t one = 1 % w;
  std::uint64_t a = one;  // t_n mod w
  std::uint64_t b = one;  // t_{n+1} mod w
  for (std::uint64_t step = 0; step < max_steps; ++step) {
    out.cycle.push_back(a);
    const auto inv = inverse_mod(a, w);
    if (!inv)
      throw Error(Errc::NonUnitResidue, "residue " + std::to_string(a) + " at n = " + std::to_string(step + 1) +
                                            " is not a unit mod " + std::to_string(w));
    const std::uint64_t numer = (mulmod_u64(b, b, w) + b + 1) % w;
    const std::uint64_t c = mulmod_u64(numer, *inv, w);
    a = b;
    b = c;
    if (a == one && b == one) {
      out.period = out.cycle.size();
      out.mirror_shift = find_mirror_shift(out.cycle);
      out.palindromic = out.mirror_shift.has_value();
      return out;
    }
  }
  throw Error(Errc::PeriodNotFound, "no period found for modulus " + std::to_string(w) + " within " +
                                        std::to_string(max_steps) + " steps");
}

ResiduePatternReport check_residue_pattern(std::uint64_t count) {
  if (count < 6) throw Error(Errc::PreconditionViolation, "check_residue_pattern requires at least 6 terms");
  ResiduePatternReport report;
  report.terms = count;
  const std::vector<Nat> t = chain_terms(2, count);
  for (std::uint64_t n = 1; n <= count; ++n) {
    const Nat& term = t[n - 1];
    const std::uint64_t r4 = term.mod_u64(4);
    const std::uint64_t r3 = term.mod_u64(3);
    if (n % 3 == 0) {
      report.exceptions.push_back(n);
      if (r3 != 0) report.violations.push_back({n, 3, r3});
    } else {
      if (r4 != 1) report.violations.push_back({n, 4, r4});
      if (r3 != 1) report.violations.push_back({n, 3, r3});
    }
  }
  return report;
}

}  // namespace sigmapair
