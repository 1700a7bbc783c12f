#include <cmath>
#include <random>

#include "doctest.h"
#include "error.hpp"
#include "nat.hpp"
#include "primes.hpp"
#include "test_util.hpp"

using namespace sigmapair;

TEST_CASE("decimal parse and render") {
  CHECK(Nat::parse("0").to_string() == "0");
  CHECK(Nat::parse("000123").to_string() == "123");
  const std::string big = "107419560853453" + std::string(200, '7');
  CHECK(Nat::parse(big).to_string() == big);
  CHECK(Nat(18446744073709551615ull).to_string() == "18446744073709551615");

  CHECK(code_of([] { Nat::parse(""); }) == Errc::Parse);
  CHECK(code_of([] { Nat::parse("-1"); }) == Errc::Parse);
  CHECK(code_of([] { Nat::parse("+1"); }) == Errc::Parse);
  CHECK(code_of([] { Nat::parse("1 000"); }) == Errc::Parse);
  CHECK(code_of([] { Nat::parse("12a"); }) == Errc::Parse);
  CHECK(code_of([] { Nat::from_mpz(mpz_class(-3)); }) == Errc::InvalidArgument);
}

TEST_CASE("arithmetic agrees with 128-bit integers") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t a = rng() >> (rng() % 64);
    const std::uint64_t b = (rng() >> (rng() % 64)) | 1;
    const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
    const Nat p = Nat(a) * Nat(b);
    CHECK(p / Nat(1ull << 32) / Nat(1ull << 32) == Nat(static_cast<std::uint64_t>(prod >> 64)));
    CHECK(p % Nat(1ull << 32) == Nat(static_cast<std::uint64_t>(prod & 0xffffffffu)));
    CHECK((Nat(a) + Nat(b)) - Nat(b) == Nat(a));
    CHECK(Nat(a) / Nat(b) == Nat(a / b));
    CHECK(Nat(a) % Nat(b) == Nat(a % b));
    CHECK(Nat(a).mod_u64(b) == a % b);
    CHECK((Nat(a) < Nat(b)) == (a < b));
  }
}

TEST_CASE("checked operations") {
  CHECK(code_of([] { (void)(Nat(3) - Nat(4)); }) == Errc::InvalidArgument);
  CHECK(code_of([] { (void)(Nat(3) / Nat(0)); }) == Errc::InvalidArgument);
  CHECK(code_of([] { (void)(Nat(3) % Nat(0)); }) == Errc::InvalidArgument);
  CHECK(code_of([] { (void)Nat::parse("18446744073709551616").to_u64(); }) == Errc::InvalidArgument);
  CHECK(Nat::parse("18446744073709551615").to_u64() == 18446744073709551615ull);

  const DivMod dm = divmod(Nat(100), Nat(7));
  CHECK(dm.quotient == Nat(14));
  CHECK(dm.remainder == Nat(2));
  CHECK(exact_div(Nat(183), Nat(61)) == Nat(3));
  CHECK_FALSE(exact_div(Nat(183), Nat(60)).has_value());
  CHECK(pow(Nat(10), 30).to_string() == "1" + std::string(30, '0'));
  CHECK(pow(Nat(7), 0) == Nat(1));
}

TEST_CASE("digits, bits and logs") {
  CHECK(Nat(0).decimal_digits() == 1);
  CHECK(Nat(9).decimal_digits() == 1);
  CHECK(Nat(10).decimal_digits() == 2);
  CHECK(pow(Nat(10), 499).decimal_digits() == 500);
  CHECK((pow(Nat(10), 500) - Nat(1)).decimal_digits() == 500);
  CHECK(Nat(255).bit_length() == 8);
  CHECK(Nat(256).bit_length() == 9);
  CHECK(Nat(1000).log() == doctest::Approx(std::log(1000.0)).epsilon(1e-14));
  CHECK(pow(Nat(10), 4000).log() == doctest::Approx(4000 * std::log(10.0)).epsilon(1e-14));
}

TEST_CASE("sigma_power") {
  CHECK(sigma_power(Nat(3), 2) == Nat(13));
  CHECK(sigma_power(Nat(1), 4) == Nat(5));
  CHECK(sigma_power(Nat(5), 4) == Nat(781));
  CHECK(sigma_power(Nat(13), 2) == Nat(183));
  CHECK(sigma_power(Nat(61), 2) == Nat(3783));
  CHECK(code_of([] { sigma_power(Nat(0), 2); }) == Errc::InvalidArgument);
  CHECK(code_of([] { sigma_power(Nat(3), 0); }) == Errc::InvalidArgument);

  for (std::uint64_t p = 2; p < 300; ++p)
    for (unsigned m = 1; m <= 6; ++m) {
      unsigned __int128 direct = 0;
      unsigned __int128 term = 1;
      for (unsigned k = 0; k <= m; ++k, term *= p) direct += term;
      const Nat s = sigma_power(Nat(p), m);
      CHECK(s.mod_u64(p) == 1);
      CHECK(s == Nat(static_cast<std::uint64_t>(direct >> 64)) * pow(Nat(2), 64) +
                     Nat(static_cast<std::uint64_t>(direct)));
    }
}

TEST_CASE("gcd") {
  CHECK(gcd(Nat(13), Nat(183)) == Nat(1));
  CHECK(gcd(Nat(0), Nat(7)) == Nat(7));
  CHECK(gcd(Nat(7), Nat(0)) == Nat(7));
  CHECK(gcd(sigma_power(Nat(13), 2), sigma_power(Nat(61), 2)) == Nat(3));
  CHECK(code_of([] { gcd(Nat(0), Nat(0)); }) == Errc::InvalidArgument);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Nat a(rng() % 100000 + 1), b(rng() % 100000 + 1), c(rng() % 100000 + 1);
    const Nat g = gcd(a, b);
    CHECK(g == gcd(b, a));
    CHECK(a.divisible_by(g));
    CHECK(b.divisible_by(g));
    CHECK(gcd(gcd(a, b), c) == gcd(a, gcd(b, c)));
  }
}

TEST_CASE("bounded_square_part") {
  CHECK(bounded_square_part(Nat(12), 100) == Nat(4));
  CHECK(bounded_square_part(Nat(13), 100) == Nat(1));
  CHECK(bounded_square_part(Nat(49 * 13), 100) == Nat(49));
  CHECK(bounded_square_part(Nat(1), 2) == Nat(1));
  CHECK(bounded_square_part(Nat(2 * 2 * 2 * 2 * 2), 2) == Nat(16));
  // 101^2 is invisible below the trial bound: a lower bound, not the true square part.
  CHECK(bounded_square_part(Nat(101 * 101 * 9), 100) == Nat(9));
  CHECK(bounded_square_part(Nat(101 * 101 * 9), 101) == Nat(101 * 101 * 9));
  CHECK(code_of([] { bounded_square_part(Nat(0), 100); }) == Errc::InvalidArgument);
  CHECK(code_of([] { bounded_square_part(Nat(12), 1); }) == Errc::InvalidArgument);

  const auto primes = primes_up_to(50);
  for (std::uint64_t x = 1; x <= 20000; ++x) {
    const Nat s = bounded_square_part(Nat(x), 50);
    REQUIRE(Nat(x).divisible_by(s));
    const std::uint64_t rest = x / s.to_u64();
    for (std::uint64_t p : primes) CHECK(rest % (p * p) != 0);
  }
}
