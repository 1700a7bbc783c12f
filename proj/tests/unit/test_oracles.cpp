#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace sigmapair;

namespace {

using u64 = std::uint64_t;
using Set = std::set<std::vector<u64>>;

Set as_set(const std::vector<Tuple>& v) {
  Set out;
  for (const auto& t : v) {
    std::vector<u64> row;
    for (const Nat& x : t) row.push_back(x.to_u64());
    out.insert(row);
  }
  return out;
}

bool naive_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 tri(u64 x) { return x * x + x + 1; }

}  // namespace

TEST_CASE("catalog and dispatch") {
  const auto& cat = oracle_catalog();
  CHECK(cat.size() == 11);
  for (const auto& info : cat) {
    CHECK(info.default_bound >= info.min_bound);
    CHECK_FALSE(info.statement.empty());
  }
  CHECK(code_of([] { run_oracle("nope", 10); }) == Errc::InvalidArgument);
  CHECK(code_of([] { run_oracle("p1q1", 0); }) == Errc::PreconditionViolation);
  CHECK(code_of([] { run_oracle("gcd", 3); }) == Errc::PreconditionViolation);
  CHECK(code_of([] { run_oracle("p1q1", u64{1} << 30); }) == Errc::PreconditionViolation);
}

TEST_CASE("p_div_q1") {
  CHECK(as_set(oracle_p_div_q1(10000).witnesses) == Set{{1, 1}, {1, 3}});
  CHECK(oracle_p_div_q1(10000).agrees);
  CHECK(as_set(oracle_p_div_q1(3).witnesses) == Set{{1, 1}, {1, 3}});
  const auto one = oracle_p_div_q1(1);
  CHECK(as_set(one.witnesses) == Set{{1, 1}});
  CHECK(one.agrees);
  Set naive;
  for (u64 p = 1; p <= 300; p += 2)
    for (u64 q = 1; q <= 300; q += 2)
      if (tri(p) % q == 0 && (q + 1) % p == 0) naive.insert({p, q});
  CHECK(as_set(oracle_p_div_q1(300).witnesses) == naive);
}

TEST_CASE("no_square_pair") {
  for (u64 b : {100ull, 10000ull}) {
    const auto r = oracle_no_square_pair(b);
    CHECK(r.witnesses.empty());
    CHECK(r.expected.empty());
    CHECK(r.agrees);
  }
}

TEST_CASE("pqr") {
  for (u64 b : {5ull, 61ull, 1000ull}) {
    const auto r = oracle_pqr(b);
    CHECK(r.witnesses.empty());
    CHECK(r.agrees);
  }
  // naive cubic check over a small range
  std::size_t hits = 0;
  for (u64 p = 2; p <= 150; ++p) {
    if (!naive_prime(p)) continue;
    for (u64 q = 2; q <= 150; ++q) {
      if (!naive_prime(q) || tri(p) % q) continue;
      for (u64 r = 2; r <= tri(q); ++r)
        if (tri(q) % r == 0 && naive_prime(r) && (r + 1) % p == 0 && r % 4 == 1 && tri(q) % (p * r) == 0) ++hits;
    }
  }
  CHECK(hits == 0);
}

TEST_CASE("linked") {
  CHECK(as_set(oracle_linked(10000).witnesses) == Set{{3, 13, 61}});
  CHECK(oracle_linked(10000).agrees);
  CHECK(as_set(oracle_linked(61).witnesses) == Set{{3, 13, 61}});
  const auto small = oracle_linked(13);
  CHECK(small.witnesses.empty());
  CHECK(small.agrees);
}

TEST_CASE("gcd along the chain") {
  const auto r = oracle_gcd(100);
  const Set w = as_set({r.witnesses.begin(), r.witnesses.begin() + 3});
  CHECK(w.count({3, 13, 1}) == 1);
  CHECK(w.count({13, 61, 3}) == 1);
  // gcd(6673^2+6673+1, 31971^2+31971+1) = 7: both are 0 mod 7, so the
  // property fails along the chain, and the large prime pair has gcd 21.
  CHECK(tri(6673) % 7 == 0);
  CHECK(tri(31971) % 7 == 0);
  CHECK(w.count({6673, 31971, 7}) == 1);
  const Tuple big{Nat::parse("22419767768701"), Nat::parse("107419560853453"), Nat(21)};
  CHECK(std::find(r.witnesses.begin(), r.witnesses.end(), big) != r.witnesses.end());
  CHECK_FALSE(r.agrees);

  const auto four = oracle_gcd(4);  // pairs (1,3), (3,13)
  CHECK(as_set(four.witnesses) == Set{{3, 13, 1}});
  CHECK(four.agrees);
  CHECK(oracle_gcd(7).agrees);
}

TEST_CASE("sigma41") {
  for (u64 b : {7ull, 100ull, 10000ull}) {
    const auto r = oracle_sigma41(b);
    CHECK(r.witnesses.empty());
    CHECK(r.agrees);
  }
}

TEST_CASE("p1q1 and sigma11") {
  CHECK(as_set(oracle_p1q1(10000).witnesses) == Set{{1, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}});
  CHECK(oracle_p1q1(10000).agrees);
  CHECK(as_set(oracle_p1q1(2).witnesses) == Set{{1, 1}, {1, 2}, {2, 1}});
  CHECK(oracle_p1q1(2).agrees);
  CHECK(as_set(oracle_sigma11(10000).witnesses) == Set{{2, 3}, {3, 2}});
  CHECK(oracle_sigma11(10000).agrees);
  Set naive;
  for (u64 p = 1; p <= 200; ++p)
    for (u64 q = 1; q <= 200; ++q)
      if ((q + 1) % p == 0 && (p + 1) % q == 0) naive.insert({p, q});
  CHECK(as_set(oracle_p1q1(200).witnesses) == naive);
}

TEST_CASE("s classification") {
  const auto r = oracle_s_classification(100);
  CHECK(as_set(r.witnesses) == Set{{1, 1}, {1, 2}, {2, 5}, {5, 13}, {13, 34}, {34, 89}});
  CHECK(r.agrees);
  CHECK(oracle_s_classification(10000).agrees);
  Set naive;
  for (u64 x = 1; x <= 400; ++x)
    for (u64 y = x; y <= 400; ++y)
      if ((y * y + 1) % x == 0 && (x * x + 1) % y == 0) naive.insert({x, y});
  CHECK(as_set(oracle_s_classification(400).witnesses) == naive);
}

TEST_CASE("u classification") {
  const auto r = oracle_u_classification(100);
  CHECK(as_set(r.witnesses) == Set{{1, 1}, {1, 2}, {2, 1}, {3, 2}, {3, 5}, {2, 5}});
  CHECK(r.agrees);
  CHECK(oracle_u_classification(10000).agrees);
  CHECK(as_set(r.witnesses).count({5, 2}) == 0);  // 5 does not divide 3
  Set naive;
  for (u64 a = 1; a <= 300; ++a)
    for (u64 b = 1; b <= 300; ++b)
      if ((a * a + 1) % b == 0 && (b + 1) % a == 0) naive.insert({a, b});
  CHECK(as_set(oracle_u_classification(300).witnesses) == naive);
}

TEST_CASE("sigma33 breakdown") {
  for (u64 b : {3ull, 100ull, 1000ull}) {
    const auto r = oracle_sigma33_breakdown(b);
    CHECK(r.witnesses.empty());
    CHECK(r.agrees);
  }
  for (u64 x = 0; x <= 1000; ++x) CHECK(x * x * x + x * x + x + 1 == (x + 1) * (x * x + 1));
  // (2,3) and (3,2): sigma(2^3) = 15, sigma(3^3) = 40, both in case 1
  const auto three = oracle_sigma33_breakdown(3);
  const std::vector<std::string> notes(three.notes.begin(), three.notes.end());
  CHECK(std::find(notes.begin(), notes.end(), "sigma_{3,3} prime pairs (ordered): 2") != notes.end());
  CHECK(std::find(notes.begin(), notes.end(), "case 1: 2") != notes.end());
}

TEST_CASE("doubling the bound never removes a witness") {
  for (const auto& info : oracle_catalog()) {
    if (info.id == "gcd") continue;
    const u64 b = info.id == "pqr" || info.id == "sigma33_breakdown" ? 200 : 1000;
    const Set small = as_set(run_oracle(info.id, b).witnesses);
    const Set large = as_set(run_oracle(info.id, 2 * b).witnesses);
    for (const auto& t : small) CHECK(large.count(t) == 1);
  }
}
