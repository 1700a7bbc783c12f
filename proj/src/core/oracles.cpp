#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>

#include "error.hpp"
#include "primality.hpp"
#include "primes.hpp"

namespace sigmapair {

namespace {

using Clock = std::chrono::steady_clock;
using u64 = std::uint64_t;

Tuple tup(std::initializer_list<u64> xs) {
  Tuple t;
  for (u64 x : xs) t.emplace_back(x);
  return t;
}

void normalize(std::vector<Tuple>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<Tuple> within(std::vector<Tuple> v, const Nat& bound) {
  std::erase_if(v, [&](const Tuple& t) { return std::any_of(t.begin(), t.end(), [&](const Nat& x) { return x > bound; }); });
  normalize(v);
  return v;
}

OracleReport finish(std::string id, u64 bound, std::vector<Tuple> witnesses, std::vector<Tuple> expected,
                    Clock::time_point start, bool extra_ok = true) {
  OracleReport r;
  r.lemma_id = std::move(id);
  r.bound = bound;
  normalize(witnesses);
  normalize(expected);
  r.witnesses = std::move(witnesses);
  r.expected = std::move(expected);
  r.agrees = extra_ok && r.witnesses == r.expected;
  r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return r;
}

bool prime(u64 n) { return is_prime_u64(n); }

/// Distinct prime factors by trial division; fine for n up to ~10^12.
std::vector<u64> factor_distinct(u64 n) {
  std::vector<u64> out;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  u64 rest = n;
  for (u64 p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (rest % p) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  if (rest > 1) {
    const std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * rest);
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 tri(u64 x) { return x * x + x + 1; }  // sigma(x^2); callers keep x < 2^31

std::string count_note(std::string_view what, std::size_t n) { return std::string(what) + ": " + std::to_string(n); }

void require_bound(u64 bound, u64 min_bound, std::string_view id) {
  if (bound < min_bound)
    throw Error(Errc::PreconditionViolation,
                std::string(id) + " requires bound >= " + std::to_string(min_bound));
  if (bound > (u64{1} << 24)) throw Error(Errc::PreconditionViolation, std::string(id) + " bound too large");
}

}  // namespace

// ---------------------------------------------------------------------------

OracleReport oracle_p_div_q1(u64 bound) {
  require_bound(bound, 1, "p_div_q1");
  const auto start = Clock::now();
  std::vector<Tuple> w;
  for (u64 p = 1; p <= bound; p += 2)
    for (u64 q = p - 1; q <= bound; q += p)  // q = kp - 1
      if (q >= 1 && (q & 1) && tri(p) % q == 0) w.push_back(tup({p, q}));
  return finish("p_div_q1", bound, std::move(w), within({tup({1, 1}), tup({1, 3})}, Nat(bound)), start);
}

OracleReport oracle_no_square_pair(u64 bound) {
  require_bound(bound, 1, "no_square_pair");
  const auto start = Clock::now();
  const auto primes = primes_up_to(bound);
  std::vector<Tuple> w;
  std::size_t checked = 0;
  for (u64 q : primes) {
    const u64 v = tri(q);
    for (u64 p : primes) {
      if (p * p > v) break;
      ++checked;
      if (v % (p * p) == 0 && tri(p) % q == 0) w.push_back(tup({p, q}));
    }
  }
  auto r = finish("no_square_pair", bound, std::move(w), {}, start);
  r.notes.push_back(count_note("prime pairs examined", checked));
  return r;
}

OracleReport oracle_pqr(u64 bound) {
  require_bound(bound, 1, "pqr");
  const auto start = Clock::now();
  std::vector<Tuple> w;
  std::size_t pairs = 0;
  for (u64 p : primes_up_to(bound)) {
    // divisor side: q runs over prime factors of p^2 + p + 1
    for (u64 q : factor_distinct(tri(p))) {
      if (q > bound) continue;
      ++pairs;
      const u64 v = tri(q);
      for (u64 r : factor_distinct(v))
        if ((r + 1) % p == 0 && r % 4 == 1 && r != p && v % (p * r) == 0) w.push_back(tup({p, q, r}));
    }
  }
  auto r = finish("pqr", bound, std::move(w), {}, start);
  r.notes.push_back(count_note("pairs with q | p^2+p+1", pairs));
  return r;
}

OracleReport oracle_linked(u64 bound) {
  require_bound(bound, 1, "linked");
  const auto start = Clock::now();
  std::map<u64, std::set<u64>> partners;
  for (u64 q : primes_up_to(bound)) {
    if (q == 2) continue;
    for (u64 p : factor_distinct(tri(q)))
      if (p != 2 && p != q && p <= bound && tri(p) % q == 0) {
        partners[q].insert(p);
        partners[p].insert(q);
      }
  }
  std::vector<Tuple> w;
  std::size_t pair_count = 0;
  for (const auto& [q, ps] : partners) {
    pair_count += ps.size();
    for (auto i = ps.begin(); i != ps.end(); ++i)
      for (auto j = std::next(i); j != ps.end(); ++j) {
        std::array<u64, 3> t{*i, q, *j};
        std::sort(t.begin(), t.end());
        w.push_back(tup({t[0], t[1], t[2]}));
      }
  }
  auto r = finish("linked", bound, std::move(w), within({tup({3, 13, 61})}, Nat(bound)), start);
  r.notes.push_back(count_note("sigma_{2,2} prime pairs", pair_count / 2));
  return r;
}

OracleReport oracle_gcd(u64 chain_terms) {
  if (chain_terms < 4) throw Error(Errc::PreconditionViolation, "gcd oracle requires at least 4 chain terms");
  if (chain_terms > 100000) throw Error(Errc::PreconditionViolation, "gcd oracle term count too large");
  const auto start = Clock::now();

  // Local recurrence t_{n+2} = (t_{n+1}^2 + t_{n+1} + 1) / t_n.
  std::vector<mpz_class> t{1, 1};
  while (t.size() < chain_terms) {
    const mpz_class& a = t[t.size() - 2];
    const mpz_class& b = t.back();
    mpz_class num = b * b + b + 1;
    mpz_class next;
    if (!mpz_divisible_p(num.get_mpz_t(), a.get_mpz_t()))
      throw Error(Errc::NonIntegralStep, "gcd oracle: recurrence not integral");
    mpz_divexact(next.get_mpz_t(), num.get_mpz_t(), a.get_mpz_t());
    t.push_back(std::move(next));
  }

  std::vector<Tuple> w;
  std::vector<std::string> ones;
  bool divides_three = true;
  for (std::size_t n = 2; n + 1 <= t.size(); ++n) {  // (t_n, t_{n+1}), 1-based
    const mpz_class& a = t[n - 1];
    const mpz_class& b = t[n];
    mpz_class g;
    const mpz_class sa = a * a + a + 1;
    const mpz_class sb = b * b + b + 1;
    mpz_gcd(g.get_mpz_t(), sa.get_mpz_t(), sb.get_mpz_t());
    if (g != 1 && g != 3) {
      divides_three = false;
      w.push_back({Nat::from_mpz(a), Nat::from_mpz(b), Nat::from_mpz(g)});
      continue;
    }
    if (g == 1) ones.push_back(std::to_string(n));
    const Nat pa = Nat::from_mpz(a);
    const Nat pb = Nat::from_mpz(b);
    if (is_prime(pa).passes() && is_prime(pb).passes()) w.push_back({pa, pb, Nat::from_mpz(g)});
  }

  std::vector<Tuple> expected{tup({3, 13, 1}), tup({13, 61, 3}),
                              {Nat::parse("22419767768701"), Nat::parse("107419560853453"), Nat(3)}};
  const Nat largest = Nat::from_mpz(t.back());
  std::erase_if(expected, [&](const Tuple& e) { return e[1] > largest; });

  auto r = finish("gcd", chain_terms, std::move(w), std::move(expected), start, divides_three);
  std::string idx;
  for (const auto& s : ones) idx += (idx.empty() ? "" : ",") + s;
  r.notes.push_back("indices n with gcd 1: " + idx);
  r.notes.push_back(std::string("gcd divides 3 for every n >= 2: ") + (divides_three ? "yes" : "no"));
  return r;
}

OracleReport oracle_sigma41(u64 bound) {
  require_bound(bound, 1, "sigma41");
  const auto start = Clock::now();
  std::vector<Tuple> w;
  std::size_t pairs = 0;
  for (u64 p : primes_up_to(bound)) {
    if (p == 2) continue;
    const unsigned __int128 s4 = ((((static_cast<unsigned __int128>(p) + 1) * p + 1) * p + 1) * p + 1);
    for (u64 q = 2 * p - 1; q <= bound; q += p) {  // q = kp - 1, k >= 2
      if (!(q & 1) || !prime(q) || s4 % q != 0) continue;
      ++pairs;
      if ((q + 1) % (p * p) == 0) w.push_back(tup({p, q}));
    }
  }
  auto r = finish("sigma41", bound, std::move(w), {}, start);
  r.notes.push_back(count_note("pairs with p | q+1 and q | sigma(p^4)", pairs));
  return r;
}

OracleReport oracle_p1q1(u64 bound) {
  require_bound(bound, 1, "p1q1");
  const auto start = Clock::now();
  std::vector<Tuple> w;
  for (u64 p = 1; p <= bound; ++p)
    for (u64 q = p - 1; q <= bound; q += p)
      if (q >= 1 && (p + 1) % q == 0) w.push_back(tup({p, q}));
  auto expected = within({tup({1, 1}), tup({1, 2}), tup({2, 1}), tup({2, 3}), tup({3, 2})}, Nat(bound));
  return finish("p1q1", bound, std::move(w), std::move(expected), start);
}

OracleReport oracle_sigma11(u64 bound) {
  require_bound(bound, 1, "sigma11");
  const auto start = Clock::now();
  std::vector<Tuple> w;
  for (u64 p : primes_up_to(bound))
    for (u64 q = p - 1; q <= bound; q += p)
      if (q >= 2 && prime(q) && (p + 1) % q == 0) w.push_back(tup({p, q}));
  return finish("sigma11", bound, std::move(w), within({tup({2, 3}), tup({3, 2})}, Nat(bound)), start);
}

OracleReport oracle_s_classification(u64 bound) {
  require_bound(bound, 1, "s_classification");
  const auto start = Clock::now();
  std::vector<Tuple> w;
  for (u64 x = 1; x <= bound; ++x)
    for (u64 y : divisors(x * x + 1))
      if (y >= x && y <= bound && (y * y + 1) % x == 0) w.push_back(tup({x, y}));

  // s_0 = 1 and s_n = F_{2n-1}: consecutive odd-index Fibonacci numbers.
  std::vector<Tuple> expected;
  u64 f_prev = 1;  // F_{-1}
  u64 f_curr = 1;  // F_1
  while (f_curr <= bound) {
    expected.push_back(tup({f_prev, f_curr}));
    const u64 next = 3 * f_curr - f_prev;  // F_{k+2} = 3 F_k - F_{k-2}
    f_prev = f_curr;
    f_curr = next;
  }
  return finish("s_classification", bound, std::move(w), std::move(expected), start);
}

OracleReport oracle_u_classification(u64 bound) {
  require_bound(bound, 1, "u_classification");
  const auto start = Clock::now();
  const auto rel = [](u64 a, u64 b) { return (a * a + 1) % b == 0 && (b + 1) % a == 0; };
  std::vector<Tuple> w;
  for (u64 a = 1; a <= bound; ++a)
    for (u64 b = a - 1; b <= bound; b += a)  // a | b + 1
      if (b >= 1 && rel(a, b)) w.push_back(tup({a, b}));

  // Neighbours in the periodic cycle, in whichever orientation satisfies the relation.
  static constexpr std::array<u64, 6> cycle{1, 1, 2, 3, 5, 2};
  std::vector<Tuple> expected;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const u64 x = cycle[i];
    const u64 y = cycle[(i + 1) % cycle.size()];
    if (rel(x, y)) expected.push_back(tup({x, y}));
    if (rel(y, x)) expected.push_back(tup({y, x}));
  }
  return finish("u_classification", bound, std::move(w), within(std::move(expected), Nat(bound)), start);
}

OracleReport oracle_sigma33_breakdown(u64 bound) {
  require_bound(bound, 1, "sigma33_breakdown");
  const auto start = Clock::now();
  const auto s3 = [](u64 x) { return static_cast<unsigned __int128>(x) * x * x + x * x + x + 1; };

  bool factorization_ok = true;
  for (u64 x = 0; x <= 1000; ++x)
    factorization_ok = factorization_ok && s3(x) == static_cast<unsigned __int128>(x + 1) * (x * x + 1);

  const auto divides = [](u64 d, unsigned __int128 n) { return n % d == 0; };
  std::vector<Tuple> uncovered;
  std::array<std::size_t, 4> case_counts{};
  std::size_t pairs = 0;
  const auto primes = primes_up_to(bound);
  for (u64 p : primes)
    for (u64 q : primes) {
      if (p == q || !divides(p, s3(q)) || !divides(q, s3(p))) continue;
      ++pairs;
      const bool c1 = divides(p, q + 1) && divides(q, p + 1);
      const bool c2 = divides(p, q * q + 1) && divides(q, p * p + 1);
      const bool c3 = divides(p, q + 1) && divides(q, p * p + 1);
      const bool c4 = divides(p, q * q + 1) && divides(q, p + 1);
      case_counts[0] += c1;
      case_counts[1] += c2;
      case_counts[2] += c3;
      case_counts[3] += c4;
      if (!(c1 || c2 || c3 || c4)) uncovered.push_back(tup({p, q}));
    }
  auto r = finish("sigma33_breakdown", bound, std::move(uncovered), {}, start, factorization_ok);
  r.notes.push_back(count_note("sigma_{3,3} prime pairs (ordered)", pairs));
  for (std::size_t i = 0; i < 4; ++i) r.notes.push_back(count_note("case " + std::to_string(i + 1), case_counts[i]));
  r.notes.push_back(std::string("x^3+x^2+x+1 = (x+1)(x^2+1) for x <= 1000: ") + (factorization_ok ? "yes" : "no"));
  return r;
}

// ---------------------------------------------------------------------------

const std::vector<OracleInfo>& oracle_catalog() {
  static const std::vector<OracleInfo> catalog{
      {"p_div_q1", 10000, 1, "odd p, q with q | p^2+p+1 and p | q+1 are (1,1) or (1,3)"},
      {"no_square_pair", 10000, 1, "no primes with p^2 | q^2+q+1 and q | p^2+p+1"},
      {"pqr", 1000, 1, "no primes with pr | q^2+q+1, q | p^2+p+1, p | r+1, r = 1 mod 4"},
      {"linked", 10000, 1, "linked sigma_{2,2} pairs only come from {3, 13, 61}"},
      {"gcd", 100, 4, "gcd(p^2+p+1, q^2+q+1) divides 3 along the chain; 1 only for {3, 13}"},
      {"sigma41", 10000, 1, "odd primes with p | q+1 and q | sigma(p^4) have p^2 not dividing q+1"},
      {"p1q1", 10000, 1, "p | q+1 and q | p+1 only for five small pairs"},
      {"sigma11", 10000, 1, "the only sigma_{1,1} pairs are (2,3) and (3,2)"},
      {"s_classification", 10000, 1, "x | y^2+1 and y | x^2+1 only for consecutive s_n"},
      {"u_classification", 10000, 1, "b | a^2+1 and a | b+1 only for neighbours in the u_n cycle"},
      {"sigma33_breakdown", 1000, 1, "sigma_{3,3} pairs fall into one of four divisibility cases"},
  };
  return catalog;
}

OracleReport run_oracle(std::string_view id, u64 bound) {
  static const std::map<std::string_view, std::function<OracleReport(u64)>> table{
      {"p_div_q1", oracle_p_div_q1},
      {"no_square_pair", oracle_no_square_pair},
      {"pqr", oracle_pqr},
      {"linked", oracle_linked},
      {"gcd", oracle_gcd},
      {"sigma41", oracle_sigma41},
      {"p1q1", oracle_p1q1},
      {"sigma11", oracle_sigma11},
      {"s_classification", oracle_s_classification},
      {"u_classification", oracle_u_classification},
      {"sigma33_breakdown", oracle_sigma33_breakdown},
  };
  const auto it = table.find(id);
  if (it == table.end()) throw Error(Errc::InvalidArgument, "unknown oracle '" + std::string(id) + "'");
  return it->second(bound);
}

}  // namespace sigmapair
