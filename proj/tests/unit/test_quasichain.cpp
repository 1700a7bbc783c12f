#include <set>
#include <vector>

#include "doctest.h"
#include "quasichain.hpp"
#include "test_util.hpp"

using namespace sigmapair;

namespace {

ChainState state(unsigned m, std::uint64_t n, std::uint64_t prev, std::uint64_t curr) {
  return ChainState{m, n, Nat(prev), Nat(curr)};
}

std::vector<Nat> nats(std::initializer_list<std::uint64_t> v) { return {v.begin(), v.end()}; }

// F_0 = 0, F_1 = 1
std::vector<Nat> fibonacci(std::size_t count) {
  std::vector<Nat> f{Nat(0), Nat(1)};
  while (f.size() < count) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  return f;
}

}  // namespace

TEST_CASE("chain_next") {
  ChainState s = seed_state(2, Nat(1), Nat(1));
  CHECK(s == state(2, 2, 1, 1));
  s = chain_next(s);
  CHECK(s == state(2, 3, 1, 3));
  s = chain_next(s);
  CHECK(s.curr == Nat(13));
  s = chain_next(s);
  CHECK(s == state(2, 5, 13, 61));
  CHECK(chain_next(s).curr == Nat(291));
  CHECK(quadratic_identity_holds(Nat(61), Nat(291)));

  const ChainState m4 = chain_next(state(4, 2, 5, 11));
  CHECK(m4.curr == Nat(3221));
  CHECK(is_quasisolution(Nat(11), Nat(3221), 4));

  CHECK(code_of([] { chain_next(state(2, 2, 2, 3)); }) == Errc::NonIntegralStep);
  CHECK(code_of([] { seed_state(0, Nat(1), Nat(1)); }) == Errc::InvalidArgument);
  CHECK(code_of([] { seed_state(2, Nat(0), Nat(1)); }) == Errc::InvalidArgument);
}

TEST_CASE("chain_prev") {
  CHECK(chain_prev(state(2, 5, 13, 61)) == state(2, 4, 3, 13));
  CHECK(chain_prev(state(2, 3, 1, 3)) == state(2, 2, 1, 1));
  CHECK(chain_prev(state(2, 8, 291, 1393)) == state(2, 7, 61, 291));
  CHECK(code_of([] { chain_prev(state(2, 2, 1, 1)); }) == Errc::BelowChainStart);
  CHECK(code_of([] { chain_prev(state(2, 5, 13, 62)); }) == Errc::NonIntegralStep);
}

TEST_CASE("round trip next/prev") {
  // digit counts grow like m^n, so higher m gets fewer steps
  for (auto [m, steps] : {std::pair{1u, 60}, {2u, 60}, {3u, 12}, {4u, 9}}) {
    ChainState s = seed_state(m, Nat(1), Nat(1));
    for (int i = 0; i < steps; ++i) {
      const ChainState up = chain_next(s);
      CHECK(chain_prev(up) == s);
      s = up;
    }
  }
  ChainState s = seed_state(4, Nat(61), Nat(131));
  for (int i = 0; i < 7; ++i) {
    const ChainState up = chain_next(s);
    CHECK(chain_prev(up) == s);
    s = up;
  }
}

TEST_CASE("is_quasisolution and the quadratic identity") {
  CHECK(is_quasisolution(Nat(3), Nat(13), 2));
  CHECK_FALSE(is_quasisolution(Nat(3), Nat(14), 2));
  CHECK(is_quasisolution(Nat(61), Nat(131), 4));
  CHECK(quadratic_identity_holds(Nat(1), Nat(3)));
  CHECK(quadratic_identity_holds(Nat(13), Nat(61)));
  CHECK_FALSE(quadratic_identity_holds(Nat(3), Nat(5)));
  CHECK(chain_invariant(Nat(1), Nat(1)) == 5);
  CHECK(chain_invariant(Nat(13), Nat(61)) == 5);
  CHECK(chain_invariant(Nat(2), Nat(3)) == mpq_class(19, 6));
}

TEST_CASE("t_n: terms, parity, identity and growth") {
  CHECK(chain_terms(2, 10) == nats({1, 1, 3, 13, 61, 291, 1393, 6673, 31971, 153181}));
  const auto t = chain_terms(2, 400);
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    const std::size_t n = i + 1;
    CHECK(t[i].is_odd());
    CHECK(quadratic_identity_holds(t[i], t[i + 1]));
    CHECK(is_quasisolution(t[i], t[i + 1], 2));
    CHECK(chain_invariant(t[i], t[i + 1]) == 5);
    if (n > 3) {
      CHECK(Nat(4) * t[i] < t[i + 1]);
      CHECK(t[i + 1] < Nat(5) * t[i]);
    }
  }
  CHECK(chain_terms(2, 1) == nats({1}));
  CHECK(chain_terms(4, 4) == nats({1, 1, 5, 781}));
}

TEST_CASE("every m = 2 quasisolution up to 1000 lies on the (1,1) chain") {
  std::set<std::pair<std::uint64_t, std::uint64_t>> chain_pairs;
  const auto t = chain_terms(2, 8);
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    chain_pairs.insert({t[i].to_u64(), t[i + 1].to_u64()});
    chain_pairs.insert({t[i + 1].to_u64(), t[i].to_u64()});
  }
  std::size_t found = 0;
  for (std::uint64_t p = 1; p <= 1000; ++p)
    for (std::uint64_t q = 1; q <= 1000; ++q) {
      const bool quasi = (q * q + q + 1) % p == 0 && (p * p + p + 1) % q == 0;
      CHECK(quasi == is_quasisolution(Nat(p), Nat(q), 2));
      if (quadratic_identity_holds(Nat(p), Nat(q))) CHECK(quasi);
      if (!quasi) continue;
      ++found;
      CHECK(chain_pairs.count({p, q}) == 1);
      // descent from the ordered pair reaches (1, 1)
      ChainState s{2, 1000, Nat(std::min(p, q)), Nat(std::max(p, q))};
      while (!(s.prev.is_one() && s.curr.is_one())) s = chain_prev(s);
      CHECK(s.prev.is_one());
    }
  CHECK(found == 9);  // (1,1), then (1,3) (3,13) (13,61) (61,291) both ways
}

TEST_CASE("s sequence is the odd-index Fibonacci numbers") {
  CHECK(generate_s(6) == nats({1, 1, 2, 5, 13, 34}));
  CHECK(generate_s(2) == nats({1, 1}));
  CHECK(code_of([] { generate_s(1); }) == Errc::PreconditionViolation);
  const auto s = generate_s(50);
  const auto f = fibonacci(100);
  CHECK(s[2] == f[3]);
  for (std::size_t k = 2; k < 50; ++k) CHECK(s[k] == f[2 * k - 1]);
  for (std::size_t k = 0; k + 1 < 50; ++k) {
    CHECK((s[k + 1] * s[k + 1] + Nat(1)).divisible_by(s[k]));
    CHECK((s[k] * s[k] + Nat(1)).divisible_by(s[k + 1]));
  }
}

TEST_CASE("u sequence is periodic") {
  CHECK(generate_u(11) == nats({1, 1, 2, 3, 5, 2, 1, 1, 2, 3, 5}));
  CHECK(generate_u(2) == nats({1, 1}));
  CHECK(code_of([] { generate_u(0); }) == Errc::PreconditionViolation);
  CHECK(u_period() == 6);
  const auto u = generate_u(120);
  for (std::size_t i = 6; i < u.size(); ++i) CHECK(u[i] == u[i - 6]);
}
