#pragma once

#include <optional>

#include "nat.hpp"

namespace sigmapair {

enum class PrimalityStatus { Prime, Composite, ProbablePrime };

const char* primality_status_name(PrimalityStatus s) noexcept;

struct PrimalityVerdict {
  PrimalityStatus status = PrimalityStatus::Composite;
  unsigned rounds = 0;         // strong-probable-prime rounds actually run
  std::optional<Nat> witness;  // a factor or a Miller-Rabin witness, when composite

  bool passes() const noexcept { return status != PrimalityStatus::Composite; }
  friend bool operator==(const PrimalityVerdict&, const PrimalityVerdict&) = default;
};

inline constexpr unsigned kDefaultRounds = 40;
inline constexpr std::uint64_t kTrialDivisionBound = 100000;

/// Deterministic below 2^64. Above that: trial division by primes < 10^5,
/// then `rounds` strong-probable-prime rounds whose bases are a hash of
/// (x, round index), so repeated calls always agree. Requires rounds >= 1.
PrimalityVerdict is_prime(const Nat& x, unsigned rounds = kDefaultRounds);

/// Base used for probabilistic round `round` on x; exposed for tests.
Nat sprp_base(const Nat& x, unsigned round);

}  // namespace sigmapair
