#include "quasichain.hpp"

#include <string>

#include "error.hpp"

namespace sigmapair {

namespace {

Nat divide_or_throw(const Nat& numerator, const Nat& divisor, const char* what) {
  if (divisor.is_zero()) throw Error(Errc::NonIntegralStep, std::string(what) + ": zero term");
  auto q = exact_div(numerator, divisor);
  if (!q)
    throw Error(Errc::NonIntegralStep, std::string(what) + ": " + divisor.to_string() +
                                           " does not divide " + numerator.to_string());
  return *std::move(q);
}

}  // namespace

ChainState seed_state(unsigned m, const Nat& first, const Nat& second) {
  if (m == 0) throw Error(Errc::InvalidArgument, "chain exponent m must be >= 1");
  if (first.is_zero() || second.is_zero()) throw Error(Errc::InvalidArgument, "chain terms must be >= 1");
  return ChainState{m, 2, first, second};
}

ChainState chain_next(const ChainState& s) {
  Nat next = divide_or_throw(sigma_power(s.curr, s.m), s.prev, "chain_next");
  return ChainState{s.m, s.n + 1, s.curr, std::move(next)};
}

ChainState chain_prev(const ChainState& s) {
  if (s.n <= 2) throw Error(Errc::BelowChainStart, "chain_prev: state at index " + std::to_string(s.n) +
                                                       " has no predecessor on its chain");
  Nat before = divide_or_throw(sigma_power(s.prev, s.m), s.curr, "chain_prev");
  return ChainState{s.m, s.n - 1, std::move(before), s.prev};
}

bool is_quasisolution(const Nat& p, const Nat& q, unsigned m) {
  if (p.is_zero() || q.is_zero()) return false;
  return sigma_power(q, m).divisible_by(p) && sigma_power(p, m).divisible_by(q);
}

bool quadratic_identity_holds(const Nat& p, const Nat& q) {
  const mpz_class& a = p.mpz();
  const mpz_class& b = q.mpz();
  return mpz_class(5 * a * b) == mpz_class(a * a + b * b + a + b + 1);
}

mpq_class chain_invariant(const Nat& p, const Nat& q) {
  if (p.is_zero() || q.is_zero()) throw Error(Errc::InvalidArgument, "chain_invariant requires p, q >= 1");
  const mpz_class& a = p.mpz();
  const mpz_class& b = q.mpz();
  mpq_class v(mpz_class(a * a + b * b + a + b + 1), mpz_class(a * b));
  v.canonicalize();
  return v;
}

std::vector<Nat> chain_terms(unsigned m, std::size_t count) {
  std::vector<Nat> out;
  if (count == 0) return out;
  out.reserve(count);
  ChainState s = seed_state(m, Nat(1), Nat(1));
  out.push_back(s.prev);
  if (count == 1) return out;
  out.push_back(s.curr);
  while (out.size() < count) {
    s = chain_next(s);
    out.push_back(s.curr);
  }
  return out;
}

std::vector<Nat> generate_s(std::size_t limit) {
  if (limit < 2) throw Error(Errc::PreconditionViolation, "generate_s requires limit >= 2");
  std::vector<Nat> s{Nat(1), Nat(1)};
  s.reserve(limit);
  while (s.size() < limit) {
    const Nat& a = s[s.size() - 2];
    const Nat& b = s.back();
    s.push_back(divide_or_throw(b * b + Nat(1), a, "generate_s"));
  }
  return s;
}

std::vector<Nat> generate_u(std::size_t limit) {
  if (limit < 2) throw Error(Errc::PreconditionViolation, "generate_u requires limit >= 2");
  std::vector<Nat> u{Nat(1), Nat(1)};
  u.reserve(limit);
  while (u.size() < limit) {
    const std::size_t k = u.size();  // index being produced
    const Nat& a = u[k - 2];
    const Nat& b = u[k - 1];
    Nat numerator = (k % 2 == 0) ? b * b + Nat(1) : b + Nat(1);
    u.push_back(divide_or_throw(numerator, a, "generate_u"));
  }
  return u;
}

std::size_t u_period(std::size_t search_limit) {
  const std::vector<Nat> u = generate_u(search_limit + 2);
  for (std::size_t p = 2; p < search_limit; p += 2)
    if (u[p] == u[0] && u[p + 1] == u[1]) return p;
  throw Error(Errc::PeriodNotFound, "u sequence did not repeat within the search limit");
}

}  // namespace sigmapair
