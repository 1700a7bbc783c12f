#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace sigmapair {

/// One full period of t_n mod w, starting at t_1.
struct ResidueProfile {
  std::uint64_t modulus = 0;
  std::uint64_t period = 0;
  std::vector<std::uint64_t> cycle;
  bool palindromic = false;
  /// k with cycle[i] == cycle[(k - i) mod period] for all i, when one exists.
  std::optional<std::uint64_t> mirror_shift;
};

inline std::uint64_t default_residue_steps(std::uint64_t w) { return w * w + 2; }

/// Iterates (t_n, t_{n+1}) mod w from (1, 1) until (1, 1) recurs.
/// Errors: PreconditionViolation (w < 2 or w has a prime factor = 1 mod 3),
/// PeriodNotFound (max_steps exhausted), NonUnitResidue (division by a
/// residue that is not a unit mod w).
ResidueProfile residue_profile(std::uint64_t w, std::uint64_t max_steps);
inline ResidueProfile residue_profile(std::uint64_t w) { return residue_profile(w, default_residue_steps(w)); }

struct ResidueViolation {
  std::uint64_t n;
  std::uint64_t modulus;
  std::uint64_t residue;
};

struct ResiduePatternReport {
  std::uint64_t terms = 0;
  std::vector<ResidueViolation> violations;
  /// Indices n = 0 (mod 3); the mod-4 rule is not asserted there.
  std::vector<std::uint64_t> exceptions;
};

/// Checks t_n = 1 (mod 4) and t_n = 1 (mod 3) for n != 0 (mod 3), and
/// t_n = 0 (mod 3) for n = 0 (mod 3), over t_1..t_count with exact terms.
ResiduePatternReport check_residue_pattern(std::uint64_t count);

/// Prime factors of w, ascending, by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t w);

}  // namespace sigmapair
