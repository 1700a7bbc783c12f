#pragma once

// Brute-force checks of the small-case divisibility lemmas. None of these
// enumerators touch the quasichain code, so agreement with chain-derived
// results is an independent cross-check.

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nat.hpp"

namespace sigmapair {

using Tuple = std::vector<Nat>;

struct OracleReport {
  std::string lemma_id;
  std::uint64_t bound = 0;
  std::vector<Tuple> witnesses;  // sorted, distinct
  std::vector<Tuple> expected;   // the lemma's set, restricted to the bound
  bool agrees = false;
  std::chrono::nanoseconds elapsed{0};
  std::vector<std::string> notes;
};

struct OracleInfo {
  std::string_view id;
  std::uint64_t default_bound;
  std::uint64_t min_bound;
  std::string_view statement;
};

/// Every oracle, in the order `lemmas` runs them.
const std::vector<OracleInfo>& oracle_catalog();

/// Dispatch by id; throws InvalidArgument for unknown ids and
/// PreconditionViolation for bounds below the oracle's minimum.
OracleReport run_oracle(std::string_view id, std::uint64_t bound);

/// Odd p, q <= bound with q | p^2+p+1 and p | q+1. Expected {(1,1), (1,3)}.
OracleReport oracle_p_div_q1(std::uint64_t bound);
/// Primes p, q <= bound with p^2 | q^2+q+1 and q | p^2+p+1. Expected none.
OracleReport oracle_no_square_pair(std::uint64_t bound);
/// Primes p, q <= bound, q | p^2+p+1, with a prime r | q^2+q+1 such that
/// pr | q^2+q+1, p | r+1 and r = 1 (mod 4). Expected none.
OracleReport oracle_pqr(std::uint64_t bound);
/// Distinct odd primes <= bound with (p,q) and (q,r) both sigma_{2,2} pairs,
/// reported as sorted triples. Expected {{3, 13, 61}}.
OracleReport oracle_linked(std::uint64_t bound);
/// gcd(t_n^2+t_n+1, t_{n+1}^2+t_{n+1}+1) over the first chain_terms terms.
/// Witnesses are (p, q, gcd) for consecutive prime terms.
OracleReport oracle_gcd(std::uint64_t chain_terms);
/// Odd primes p, q <= bound with p | q+1, q | sigma(p^4) and p^2 | q+1. Expected none.
OracleReport oracle_sigma41(std::uint64_t bound);
/// Positive p, q <= bound with p | q+1 and q | p+1. Expected five pairs.
OracleReport oracle_p1q1(std::uint64_t bound);
/// Prime version of the above. Expected {(2,3), (3,2)}.
OracleReport oracle_sigma11(std::uint64_t bound);
/// x <= y <= bound with x | y^2+1 and y | x^2+1, against consecutive
/// odd-index Fibonacci numbers.
OracleReport oracle_s_classification(std::uint64_t bound);
/// (a, b) <= bound with b | a^2+1 and a | b+1, against neighbours in the
/// cycle 1, 1, 2, 3, 5, 2.
OracleReport oracle_u_classification(std::uint64_t bound);
/// sigma_{3,3} prime pairs <= bound that fit none of the four divisibility
/// cases. Expected none.
OracleReport oracle_sigma33_breakdown(std::uint64_t bound);

}  // namespace sigmapair
