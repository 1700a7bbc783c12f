#pragma once

// Walks a quasichain looking for consecutive terms that are both prime,
// i.e. sigma_{m,m} prime pairs, with resumable text checkpoints.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nat.hpp"
#include "primality.hpp"
#include "quasichain.hpp"

namespace sigmapair {

struct PairRecord {
  unsigned m = 2;
  std::uint64_t index = 0;  // chain index of p; q sits at index + 1
  Nat p;
  Nat q;
  PrimalityVerdict p_verdict;
  PrimalityVerdict q_verdict;
  std::size_t digits_q = 0;

  friend bool operator==(const PairRecord&, const PairRecord&) = default;
};

/// Search position. The pair (prev, curr) at index n has not been tested yet;
/// every pair with a smaller index has, and the primes among them are in `found`.
struct SearchCheckpoint {
  unsigned m = 2;
  std::uint64_t n = 2;
  Nat prev{1};
  Nat curr{1};
  std::vector<PairRecord> found;
  std::size_t digits_limit = 0;
};

inline constexpr std::string_view kCheckpointHeader = "sigma-chain-checkpoint v1";
inline constexpr std::uint64_t kDefaultCheckpointEvery = 25;

/// Text form: header, m=, n=, prev=, curr=, then one `pair <index> <p> <q>` per
/// found pair. ASCII, newline terminated.
std::string render_checkpoint(const SearchCheckpoint& cp);

/// Syntax only; throws CheckpointMismatch on a bad header, unknown version or
/// malformed line. Verdicts of the listed pairs are left empty.
SearchCheckpoint parse_checkpoint(std::string_view text);

/// Writes `path` via a temporary sibling file and rename.
void write_checkpoint_atomic(const std::filesystem::path& path, const SearchCheckpoint& cp);
SearchCheckpoint read_checkpoint(const std::filesystem::path& path);

struct SearchOptions {
  unsigned m = 2;
  Nat seed_first{1};
  Nat seed_second{1};
  std::size_t digits_limit = 20;
  unsigned mr_rounds = kDefaultRounds;
  unsigned threads = 1;
  std::uint64_t checkpoint_every = kDefaultCheckpointEvery;
  std::optional<std::filesystem::path> checkpoint_path;
};

/// Incremental search session. Output depends only on the options and the
/// starting checkpoint, never on `threads` or on how run() calls are split.
class PairSearch {
 public:
  /// Fresh search from the seed. Throws NonIntegralStep / InvalidArgument
  /// when the seed is not a quasisolution for m.
  explicit PairSearch(SearchOptions options);

  /// Resume. The checkpoint must be a state on the chain of options' seed at
  /// its recorded index, and each recorded pair must be a prime quasisolution;
  /// otherwise CheckpointMismatch.
  PairSearch(SearchOptions options, const SearchCheckpoint& resume_from);

  /// Advances at most max_steps chain positions (nullopt: until done).
  /// Returns true once the digit limit has been passed.
  bool run(std::optional<std::uint64_t> max_steps = std::nullopt);

  bool finished() const noexcept { return finished_; }
  const std::vector<PairRecord>& pairs() const noexcept { return cp_.found; }
  const SearchCheckpoint& checkpoint() const noexcept { return cp_; }
  const SearchOptions& options() const noexcept { return opts_; }
  std::uint64_t steps_taken() const noexcept { return steps_; }

  /// Writes the current checkpoint if a path is configured.
  void save() const;

 private:
  struct Slot;
  bool exceeds_limit(const Nat& prev, const Nat& curr) const;
  bool pre_rejected(std::uint64_t index, const Nat& p, const Nat& q) const;
  void test_slots(std::vector<Slot>& slots) const;

  SearchOptions opts_;
  SearchCheckpoint cp_;
  Nat limit_value_;  // 10^digits_limit
  bool principal_chain_ = false;
  bool finished_ = false;
  std::uint64_t steps_ = 0;
};

/// One-shot convenience wrapper: optional resume, run to completion.
std::vector<PairRecord> search_pairs(const SearchOptions& options,
                                     const std::optional<SearchCheckpoint>& resume = std::nullopt);

/// Chain index of p, found by descending to a known seed. Throws
/// NotOnKnownChain when descent ends elsewhere or exceeds step_budget.
std::uint64_t locate_pair_index(const Nat& p, const Nat& q, unsigned m, std::uint64_t step_budget = 1000000);

/// Minimal seeds known for m: the brute-force seed list up to 1000.
const std::vector<std::pair<Nat, Nat>>& known_seeds(unsigned m);

/// All 1 <= p <= q <= bound that are quasisolutions for m, each reduced by
/// descent to a pair with no smaller valid predecessor; distinct, sorted.
std::vector<std::pair<Nat, Nat>> enumerate_seeds(unsigned m, std::uint64_t bound);

/// Descent used by enumerate_seeds: replace the larger term b of {a, b} by
/// sigma(a^m) / b while that is integral, strictly smaller than b and still a
/// quasisolution.
std::pair<Nat, Nat> reduce_to_seed(Nat a, Nat b, unsigned m, std::uint64_t step_budget = 1000000);

struct HeuristicTail {
  double value = 0;
  double offset = 0;               // c in ln t_n >= (n - c) ln 4 beyond the exact range
  std::uint64_t exact_terms = 0;   // terms t_1..t_exact_terms were computed exactly
  std::optional<std::uint64_t> horizon;
};

inline constexpr std::uint64_t kHeuristicExactTerms = 2000;

/// Sum over n = start..horizon (nullopt: infinity) of 1 / (ln t_n ln t_{n+1}),
/// exact terms while available and the 4^n growth bound afterwards.
/// Requires start_index >= 3.
HeuristicTail heuristic_tail(std::uint64_t start_index, std::optional<std::uint64_t> horizon = std::nullopt);

struct SquareProbeRow {
  std::uint64_t n = 0;
  Nat l_lower;  // bounded square part of t_n^2 + t_n + 1
  Nat s_lower;  // bounded square part of (t_n^2 + t_n + 1)(t_{n+1}^2 + t_{n+1} + 1)
};

/// Rows n = 1..n_terms. Both columns are lower bounds for the true largest
/// square divisors. Requires n_terms >= 3.
std::vector<SquareProbeRow> square_divisor_probe(std::uint64_t n_terms, std::uint64_t trial_bound);

}  // namespace sigmapair
