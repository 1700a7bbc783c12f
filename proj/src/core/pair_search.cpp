#include "pair_search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

#include "error.hpp"
#include "primes.hpp"

namespace sigmapair {

struct PairSearch::Slot {
  std::uint64_t index = 0;
  Nat p;
  Nat q;
  bool skip = false;
  PrimalityVerdict p_verdict;
  std::optional<PrimalityVerdict> q_verdict;
};

namespace {

Nat power_of_ten(std::size_t digits) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), 10, digits);
  return Nat::from_mpz(std::move(v));
}

void validate_options(const SearchOptions& o) {
  if (o.m == 0) throw Error(Errc::InvalidArgument, "m must be >= 1");
  if (o.digits_limit < 1) throw Error(Errc::InvalidArgument, "digits limit must be >= 1");
  if (o.mr_rounds < 1) throw Error(Errc::InvalidArgument, "mr_rounds must be >= 1");
  if (o.checkpoint_every < 1) throw Error(Errc::InvalidArgument, "checkpoint cadence must be >= 1");
  if (!is_quasisolution(o.seed_first, o.seed_second, o.m))
    throw Error(Errc::NonIntegralStep, "seed (" + o.seed_first.to_string() + ", " + o.seed_second.to_string() +
                                           ") is not a quasisolution for m = " + std::to_string(o.m));
}

}  // namespace

PairSearch::PairSearch(SearchOptions options) : opts_(std::move(options)) {
  validate_options(opts_);
  const ChainState s = seed_state(opts_.m, opts_.seed_first, opts_.seed_second);
  cp_ = SearchCheckpoint{s.m, s.n, s.prev, s.curr, {}, opts_.digits_limit};
  limit_value_ = power_of_ten(opts_.digits_limit);
  principal_chain_ = opts_.m == 2 && opts_.seed_first.is_one() && opts_.seed_second.is_one();
}

PairSearch::PairSearch(SearchOptions options, const SearchCheckpoint& resume_from) : PairSearch(std::move(options)) {
  const auto mismatch = [](const std::string& why) { throw Error(Errc::CheckpointMismatch, why); };
  if (resume_from.m != opts_.m)
    mismatch("checkpoint is for m = " + std::to_string(resume_from.m) + ", search for m = " + std::to_string(opts_.m));
  if (!is_quasisolution(resume_from.prev, resume_from.curr, opts_.m))
    mismatch("checkpoint state is not a quasisolution");

  std::uint64_t last_index = 0;
  for (const PairRecord& r : resume_from.found) {
    if (r.index < 1 || r.index + 1 >= resume_from.n || (last_index != 0 && r.index <= last_index))
      mismatch("checkpoint pair index " + std::to_string(r.index) + " is out of order");
    last_index = r.index;
  }

  // The state must descend to the seed in exactly n - 2 steps, passing every
  // recorded pair at its recorded index.
  ChainState s{opts_.m, resume_from.n, resume_from.prev, resume_from.curr};
  auto pending = resume_from.found.rbegin();
  const auto check_pending = [&] {
    if (pending != resume_from.found.rend() && pending->index == s.n - 1) {
      if (pending->p != s.prev || pending->q != s.curr)
        mismatch("checkpoint pair at index " + std::to_string(pending->index) + " is not on the chain");
      ++pending;
    }
  };
  try {
    check_pending();
    while (s.n > 2) {
      s = chain_prev(s);
      check_pending();
    }
  } catch (const Error& e) {
    if (e.code() == Errc::CheckpointMismatch) throw;
    mismatch(std::string("checkpoint state does not descend to the seed: ") + e.what());
  }
  if (s.prev != opts_.seed_first || s.curr != opts_.seed_second)
    mismatch("checkpoint state lies on a different chain than the seed");
  if (pending != resume_from.found.rend())
    mismatch("checkpoint pair at index " + std::to_string(pending->index) + " is not on the chain");

  for (const PairRecord& r : resume_from.found) {
    PairRecord rec = r;
    rec.m = opts_.m;
    rec.p_verdict = is_prime(r.p, opts_.mr_rounds);
    rec.q_verdict = is_prime(r.q, opts_.mr_rounds);
    rec.digits_q = r.q.decimal_digits();
    if (!rec.p_verdict.passes() || !rec.q_verdict.passes()) mismatch("checkpoint pair is not a prime pair");
    cp_.found.push_back(std::move(rec));
  }
  cp_.n = resume_from.n;
  cp_.prev = resume_from.prev;
  cp_.curr = resume_from.curr;
}

bool PairSearch::exceeds_limit(const Nat& prev, const Nat& curr) const {
  return std::max(prev, curr) >= limit_value_;
}

bool PairSearch::pre_rejected(std::uint64_t index, const Nat& p, const Nat& q) const {
  const Nat three(3);
  if (principal_chain_) {
    // On the principal m = 2 chain, 3 | t_n exactly when 3 | n.
    return (index % 3 == 0 && p > three) || ((index + 1) % 3 == 0 && q > three);
  }
  return (p > three && p.divisible_by(3)) || (q > three && q.divisible_by(3));
}

void PairSearch::test_slots(std::vector<Slot>& slots) const {
  const auto test_one = [this](Slot& s) {
    s.p_verdict = is_prime(s.p, opts_.mr_rounds);
    if (s.p_verdict.passes()) s.q_verdict = is_prime(s.q, opts_.mr_rounds);
  };

  std::vector<Slot*> work;
  for (Slot& s : slots)
    if (!s.skip) work.push_back(&s);

  const unsigned workers = std::min<std::size_t>(std::max(1u, opts_.threads), work.size());
  if (workers <= 1) {
    for (Slot* s : work) test_one(*s);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < work.size(); i = next++) test_one(*work[i]);
    });
}

bool PairSearch::run(std::optional<std::uint64_t> max_steps) {
  std::uint64_t budget = max_steps.value_or(UINT64_MAX);
  const std::uint64_t batch_cap = std::max(1u, opts_.threads) * 4u;

  while (!finished_ && budget > 0) {
    // Batches never straddle a checkpoint boundary, so checkpoints land on
    // the same indices whatever the thread count.
    const std::uint64_t to_boundary = opts_.checkpoint_every - (cp_.n % opts_.checkpoint_every);
    const std::uint64_t batch = std::min({batch_cap, budget, to_boundary});

    std::vector<Slot> slots;
    ChainState s{cp_.m, cp_.n, cp_.prev, cp_.curr};
    while (slots.size() < batch) {
      if (exceeds_limit(s.prev, s.curr)) {
        finished_ = true;
        break;
      }
      Slot slot;
      slot.index = s.n - 1;
      slot.p = s.prev;
      slot.q = s.curr;
      slot.skip = pre_rejected(slot.index, slot.p, slot.q);
      slots.push_back(std::move(slot));
      s = chain_next(s);
    }

    test_slots(slots);
    for (Slot& slot : slots) {
      if (slot.skip || !slot.p_verdict.passes() || !slot.q_verdict || !slot.q_verdict->passes()) continue;
      PairRecord rec;
      rec.m = cp_.m;
      rec.index = slot.index;
      rec.digits_q = slot.q.decimal_digits();
      rec.p = std::move(slot.p);
      rec.q = std::move(slot.q);
      rec.p_verdict = std::move(slot.p_verdict);
      rec.q_verdict = std::move(*slot.q_verdict);
      cp_.found.push_back(std::move(rec));
    }

    cp_.n = s.n;
    cp_.prev = std::move(s.prev);
    cp_.curr = std::move(s.curr);
    steps_ += slots.size();
    budget -= std::min<std::uint64_t>(budget, slots.size());
    if (cp_.n % opts_.checkpoint_every == 0) save();
  }
  save();
  return finished_;
}

void PairSearch::save() const {
  if (opts_.checkpoint_path) write_checkpoint_atomic(*opts_.checkpoint_path, cp_);
}

std::vector<PairRecord> search_pairs(const SearchOptions& options, const std::optional<SearchCheckpoint>& resume) {
  PairSearch search = resume ? PairSearch(options, *resume) : PairSearch(options);
  search.run();
  return search.pairs();
}

// ---------------------------------------------------------------------------
// seeds and chain positions

namespace {

std::uint64_t sigma_mod(std::uint64_t x, unsigned m, std::uint64_t mod) {
  std::uint64_t acc = 1 % mod;
  const std::uint64_t xr = x % mod;
  for (unsigned i = 0; i < m; ++i) acc = (mulmod_u64(acc, xr, mod) + 1) % mod;
  return acc;
}

}  // namespace

std::pair<Nat, Nat> reduce_to_seed(Nat a, Nat b, unsigned m, std::uint64_t step_budget) {
  if (b < a) std::swap(a, b);
  for (std::uint64_t step = 0; step < step_budget; ++step) {
    auto x = exact_div(sigma_power(a, m), b);
    if (!x || *x >= b || x->is_zero()) return {std::move(a), std::move(b)};
    Nat lo = std::move(*x);
    Nat hi = a;
    if (hi < lo) std::swap(lo, hi);
    if (!is_quasisolution(lo, hi, m)) return {std::move(a), std::move(b)};
    a = std::move(lo);
    b = std::move(hi);
  }
  throw Error(Errc::NotOnKnownChain, "seed descent exceeded its step budget");
}

std::vector<std::pair<Nat, Nat>> enumerate_seeds(unsigned m, std::uint64_t bound) {
  if (m == 0) throw Error(Errc::InvalidArgument, "m must be >= 1");
  if (bound < 1) throw Error(Errc::InvalidArgument, "bound must be >= 1");
  std::vector<std::pair<Nat, Nat>> seeds;
  for (std::uint64_t q = 1; q <= bound; ++q) {
    for (std::uint64_t p = 1; p <= q; ++p) {
      if (sigma_mod(q, m, p) != 0 || sigma_mod(p, m, q) != 0) continue;
      seeds.push_back(reduce_to_seed(Nat(p), Nat(q), m));
    }
  }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  return seeds;
}

const std::vector<std::pair<Nat, Nat>>& known_seeds(unsigned m) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<std::pair<Nat, Nat>>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, enumerate_seeds(m, 1000)).first;
  return it->second;
}

std::uint64_t locate_pair_index(const Nat& p, const Nat& q, unsigned m, std::uint64_t step_budget) {
  if (!is_quasisolution(p, q, m))
    throw Error(Errc::NotOnKnownChain, "(" + p.to_string() + ", " + q.to_string() + ") is not a quasisolution");
  Nat a = p;
  Nat b = q;
  std::uint64_t steps = 0;
  for (;;) {
    auto x = exact_div(sigma_power(a, m), b);
    if (!x || *x >= b || x->is_zero() || !is_quasisolution(*x, a, m)) break;
    b = std::move(a);
    a = std::move(*x);
    if (++steps > step_budget) throw Error(Errc::NotOnKnownChain, "descent exceeded its step budget");
  }
  const auto& seeds = known_seeds(m);
  if (std::find(seeds.begin(), seeds.end(), std::pair{a, b}) == seeds.end())
    throw Error(Errc::NotOnKnownChain, "descent ends at (" + a.to_string() + ", " + b.to_string() +
                                           "), which is not a known seed for m = " + std::to_string(m));
  return steps + 1;
}

// ---------------------------------------------------------------------------
// heuristics and square-divisor probe

HeuristicTail heuristic_tail(std::uint64_t start_index, std::optional<std::uint64_t> horizon) {
  if (start_index < 3) throw Error(Errc::PreconditionViolation, "heuristic_tail requires start_index >= 3");
  HeuristicTail out;
  out.horizon = horizon;
  out.exact_terms = kHeuristicExactTerms;
  if (horizon && *horizon < start_index) return out;

  const std::vector<Nat> t = chain_terms(2, kHeuristicExactTerms);
  std::vector<double> ln(t.size() + 1, 0.0);  // ln[n] = ln t_n, 1-based
  for (std::size_t n = 1; n <= t.size(); ++n) ln[n] = t[n - 1].log();

  const double ln4 = std::log(4.0);
  double c = -HUGE_VAL;
  for (std::size_t n = 3; n <= t.size(); ++n) c = std::max(c, static_cast<double>(n) - ln[n] / ln4);
  out.offset = c;

  const std::uint64_t last = horizon.value_or(UINT64_MAX);
  const std::uint64_t exact_end = std::min<std::uint64_t>(last, kHeuristicExactTerms - 1);
  double sum = 0;
  for (std::uint64_t n = start_index; n <= exact_end; ++n) sum += 1.0 / (ln[n] * ln[n + 1]);

  // Beyond the exact range, 1 / ((n - c)(n + 1 - c) ln^2 4) telescopes.
  const std::uint64_t tail_from = std::max<std::uint64_t>(start_index, kHeuristicExactTerms);
  if (last >= tail_from) {
    const double head = 1.0 / (static_cast<double>(tail_from) - c);
    const double rest = horizon ? 1.0 / (static_cast<double>(*horizon) + 1.0 - c) : 0.0;
    sum += (head - rest) / (ln4 * ln4);
  }
  out.value = sum;
  return out;
}

std::vector<SquareProbeRow> square_divisor_probe(std::uint64_t n_terms, std::uint64_t trial_bound) {
  if (n_terms < 3) throw Error(Errc::PreconditionViolation, "square_divisor_probe requires n_terms >= 3");
  if (trial_bound < 2) throw Error(Errc::PreconditionViolation, "trial bound must be >= 2");
  const std::vector<Nat> t = chain_terms(2, n_terms + 1);
  std::vector<SquareProbeRow> rows;
  rows.reserve(n_terms);
  Nat next_sigma = sigma_power(t[0], 2);
  for (std::uint64_t n = 1; n <= n_terms; ++n) {
    const Nat here = next_sigma;
    next_sigma = sigma_power(t[n], 2);
    rows.push_back({n, bounded_square_part(here, trial_bound), bounded_square_part(here * next_sigma, trial_bound)});
  }
  return rows;
}

}  // namespace sigmapair
