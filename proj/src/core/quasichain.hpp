#pragma once

// Quasisolution chains: pairs (p, q) with q | sigma(p^m) and p | sigma(q^m),
// walked upward by q -> sigma(q^m) / p and downward by the mirror step.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "nat.hpp"

namespace sigmapair {

/// Position on a quasichain. `prev` is the term at index n-1, `curr` the
/// term at index n. Indices are 1-based: the principal m = 2 chain has
/// t_1 = t_2 = 1, so its seed state is {m = 2, n = 2, prev = 1, curr = 1}.
struct ChainState {
  unsigned m = 2;
  std::uint64_t n = 2;
  Nat prev{1};
  Nat curr{1};

  friend bool operator==(const ChainState&, const ChainState&) = default;
};

/// State whose two terms are the seed pair, with the seed's first term at index 1.
ChainState seed_state(unsigned m, const Nat& first, const Nat& second);

/// Advance by one: next = sigma(curr^m) / prev. Throws NonIntegralStep when
/// prev does not divide sigma(curr^m).
ChainState chain_next(const ChainState& s);

/// Step back by one: before = sigma(prev^m) / curr. Throws BelowChainStart
/// from index 2 and NonIntegralStep when the division is not exact.
ChainState chain_prev(const ChainState& s);

bool is_quasisolution(const Nat& p, const Nat& q, unsigned m);

/// 5pq = p^2 + q^2 + p + q + 1, evaluated exactly.
bool quadratic_identity_holds(const Nat& p, const Nat& q);

/// (p^2 + q^2 + p + q + 1) / (pq) as a reduced rational; constant along a chain.
mpq_class chain_invariant(const Nat& p, const Nat& q);

/// t_{m,1}, ..., t_{m,count} from the seed (1, 1).
std::vector<Nat> chain_terms(unsigned m, std::size_t count);

/// s_0 .. s_{limit-1}: s_0 = s_1 = 1, s_{n+2} = (s_{n+1}^2 + 1) / s_n.
std::vector<Nat> generate_s(std::size_t limit);

/// u_0 .. u_{limit-1} with the alternating rules
///   u_{2k+2} = (u_{2k+1}^2 + 1) / u_{2k},  u_{2k+3} = (u_{2k+2} + 1) / u_{2k+1}.
std::vector<Nat> generate_u(std::size_t limit);

/// Smallest p > 0 with (u_k, u_{k+1}) == (u_{k+p}, u_{k+p+1}) for the
/// parity-aligned pair state; the u rules alternate, so p is always even.
std::size_t u_period(std::size_t search_limit = 1000);

}  // namespace sigmapair
