#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sigmapair {

/// All primes <= limit, by a plain sieve of Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Primes below 10^5; shared by the trial-division prefilter.
std::span<const std::uint64_t> small_primes();

/// Deterministic for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

}  // namespace sigmapair
