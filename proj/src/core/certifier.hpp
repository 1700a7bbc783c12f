#pragma once

// Exact-rational bookkeeping for inequalities that are linear in
//   alpha = log a, beta = log b, gamma = log c, log N, log 2, log 3,
// where a < b < c are the three largest prime factors of N.

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace sigmapair {

struct LogLinearForm {
  mpq_class ca, cb, cc;  // alpha, beta, gamma
  mpq_class cn;          // log N
  mpq_class c2, c3;      // log 2, log 3

  friend bool operator==(const LogLinearForm& x, const LogLinearForm& y) {
    return x.ca == y.ca && x.cb == y.cb && x.cc == y.cc && x.cn == y.cn && x.c2 == y.c2 && x.c3 == y.c3;
  }
  LogLinearForm& operator+=(const LogLinearForm& o);
  friend LogLinearForm operator+(LogLinearForm x, const LogLinearForm& y) { return x += y; }
  friend LogLinearForm operator-(const LogLinearForm& x, const LogLinearForm& y);
  friend LogLinearForm operator*(const mpq_class& k, const LogLinearForm& x);

  static LogLinearForm abc(const mpq_class& a, const mpq_class& b, const mpq_class& c);
  static LogLinearForm constants(const mpq_class& n, const mpq_class& two, const mpq_class& three);
  bool is_zero() const;
};

/// lhs <= rhs, read under alpha, beta, gamma, log N, log 2, log 3 > 0.
struct Inequality {
  std::string label;
  LogLinearForm lhs;
  LogLinearForm rhs;

  friend bool operator==(const Inequality& x, const Inequality& y) { return x.lhs == y.lhs && x.rhs == y.rhs; }
};

/// Same inequality with every alpha/beta/gamma term on the left and every
/// log N / log 2 / log 3 term on the right.
Inequality normalized(const Inequality& in);

struct Certificate {
  std::vector<std::pair<std::string, mpq_class>> multipliers;  // one per input inequality, in order
  Inequality derived;
};

/// Coefficient-wise weighted sum. Throws NegativeMultiplier for a negative
/// weight and InvalidArgument when the lengths differ.
Inequality combine(std::span<const Inequality> ineqs, std::span<const mpq_class> multipliers);

/// Coefficient-wise implication on normalized forms: the derived left side
/// dominates the target's and the derived right side is dominated by it.
bool entails(const Inequality& derived, const Inequality& target);

/// Nonnegative multipliers whose combined left side covers `objective` in
/// every alpha/beta/gamma coefficient, minimizing the log N coefficient and
/// then c2 ln 2 + c3 ln 3. Exact: every basic solution of the covering
/// system is enumerated. Throws Infeasible when nothing covers the
/// objective, and InvalidArgument when a normalized right side has a
/// negative coefficient (the minimum would not be bounded).
Certificate optimize(std::span<const Inequality> ineqs, const LogLinearForm& objective);

/// Sign of (a2 - b2) ln 2 + (a3 - b3) ln 3, decided exactly by comparing
/// powers of 2 and 3.
int compare_log_constants(const mpq_class& a2, const mpq_class& a3, const mpq_class& b2, const mpq_class& b3);

/// The fourteen log-form inequalities used by the abc arguments. The prior
/// bc bound is stored as 2 beta + 2 gamma <= log N + (1/2) log 2 + (1/2) log 3.
std::vector<Inequality> builtin_registry();

/// The same bound transcribed literally as 2 alpha + 2 beta on the left.
Inequality literal_bc_reading();

/// Looks up labels in `pool`; throws InvalidArgument for a missing label.
std::vector<Inequality> select(std::span<const Inequality> pool, std::span<const std::string_view> labels);

struct Verification {
  std::string name;
  std::vector<std::pair<std::string, mpq_class>> multipliers;
  Inequality derived;
  Inequality stated;  // the bound as printed alongside the combination
  bool matches = false;
};

/// Applies every printed multiplier set and compares with the printed result.
std::vector<Verification> verify_printed_combinations();

struct Discrepancy {
  std::string id;
  std::string description;
  std::string stated;
  std::string computed;
};

/// Places where printed constants or exponents disagree with what the
/// arithmetic produces. Computed, never hard-coded.
std::vector<Discrepancy> printed_discrepancies();

/// `label: ca cb cc <= cn c2 c3`, rationals as p/q. Blank lines and lines
/// starting with '#' are skipped. Throws Parse on malformed input or
/// duplicate labels.
std::vector<Inequality> parse_inequalities(std::string_view text);
std::string render_inequality(const Inequality& in);  // file-format line, normalized

/// Human-readable form, e.g. "alpha + beta + gamma <= 11/18 logN + 5/12 log2".
std::string describe(const Inequality& in);

}  // namespace sigmapair
