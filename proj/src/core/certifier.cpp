#include "certifier.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <sstream>

#include "error.hpp"

namespace sigmapair {

LogLinearForm& LogLinearForm::operator+=(const LogLinearForm& o) {
  ca += o.ca;
  cb += o.cb;
  cc += o.cc;
  cn += o.cn;
  c2 += o.c2;
  c3 += o.c3;
  return *this;
}

LogLinearForm operator-(const LogLinearForm& x, const LogLinearForm& y) {
  LogLinearForm r;
  r.ca = x.ca - y.ca;
  r.cb = x.cb - y.cb;
  r.cc = x.cc - y.cc;
  r.cn = x.cn - y.cn;
  r.c2 = x.c2 - y.c2;
  r.c3 = x.c3 - y.c3;
  return r;
}

LogLinearForm operator*(const mpq_class& k, const LogLinearForm& x) {
  LogLinearForm r;
  r.ca = k * x.ca;
  r.cb = k * x.cb;
  r.cc = k * x.cc;
  r.cn = k * x.cn;
  r.c2 = k * x.c2;
  r.c3 = k * x.c3;
  return r;
}

LogLinearForm LogLinearForm::abc(const mpq_class& a, const mpq_class& b, const mpq_class& c) {
  LogLinearForm f;
  f.ca = a;
  f.cb = b;
  f.cc = c;
  return f;
}

LogLinearForm LogLinearForm::constants(const mpq_class& n, const mpq_class& two, const mpq_class& three) {
  LogLinearForm f;
  f.cn = n;
  f.c2 = two;
  f.c3 = three;
  return f;
}

bool LogLinearForm::is_zero() const {
  return sgn(ca) == 0 && sgn(cb) == 0 && sgn(cc) == 0 && sgn(cn) == 0 && sgn(c2) == 0 && sgn(c3) == 0;
}

Inequality normalized(const Inequality& in) {
  const LogLinearForm d = in.lhs - in.rhs;  // d <= 0
  Inequality out;
  out.label = in.label;
  out.lhs = LogLinearForm::abc(d.ca, d.cb, d.cc);
  out.rhs = LogLinearForm::constants(-d.cn, -d.c2, -d.c3);
  return out;
}

Inequality combine(std::span<const Inequality> ineqs, std::span<const mpq_class> multipliers) {
  if (ineqs.size() != multipliers.size())
    throw Error(Errc::InvalidArgument, "combine: " + std::to_string(ineqs.size()) + " inequalities but " +
                                           std::to_string(multipliers.size()) + " multipliers");
  Inequality out;
  out.label = "combined";
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    if (sgn(multipliers[i]) < 0)
      throw Error(Errc::NegativeMultiplier, "combine: multiplier for '" + ineqs[i].label + "' is negative");
    out.lhs += multipliers[i] * ineqs[i].lhs;
    out.rhs += multipliers[i] * ineqs[i].rhs;
  }
  return out;
}

bool entails(const Inequality& derived, const Inequality& target) {
  const Inequality d = normalized(derived);
  const Inequality t = normalized(target);
  return d.lhs.ca >= t.lhs.ca && d.lhs.cb >= t.lhs.cb && d.lhs.cc >= t.lhs.cc &&  //
         d.rhs.cn <= t.rhs.cn && d.rhs.c2 <= t.rhs.c2 && d.rhs.c3 <= t.rhs.c3;
}

// ---------------------------------------------------------------------------

int compare_log_constants(const mpq_class& a2, const mpq_class& a3, const mpq_class& b2, const mpq_class& b3) {
  const mpq_class d2 = a2 - b2;
  const mpq_class d3 = a3 - b3;
  const int s2 = sgn(d2);
  const int s3 = sgn(d3);
  if (s2 >= 0 && s3 >= 0) return (s2 > 0 || s3 > 0) ? 1 : 0;
  if (s2 <= 0 && s3 <= 0) return -1;

  // Opposite signs: compare |d2| ln 2 with |d3| ln 3, i.e. 2^(n2 D3) with 3^(n3 D2).
  const mpq_class m2 = abs(d2);
  const mpq_class m3 = abs(d3);
  const mpz_class e2 = m2.get_num() * m3.get_den();
  const mpz_class e3 = m3.get_num() * m2.get_den();
  if (e2 > (1 << 22) || e3 > (1 << 22))
    throw Error(Errc::InvalidArgument, "log-constant comparison exponents too large");
  mpz_class p2;
  mpz_class p3;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, e2.get_ui());
  mpz_ui_pow_ui(p3.get_mpz_t(), 3, e3.get_ui());
  const int two_side = p2 > p3 ? 1 : -1;  // sign of |d2| ln 2 - |d3| ln 3; never zero
  return s2 > 0 ? two_side : -two_side;
}

namespace {

using Mat3 = std::array<std::array<mpq_class, 3>, 3>;

std::optional<std::array<mpq_class, 3>> solve3(Mat3 a, std::array<mpq_class, 3> b) {
  for (int col = 0; col < 3; ++col) {
    int pivot = -1;
    for (int r = col; r < 3; ++r)
      if (sgn(a[r][col]) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (int r = 0; r < 3; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const mpq_class f = a[r][col] / a[col][col];
      for (int c = col; c < 3; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::array<mpq_class, 3> x;
  for (int i = 0; i < 3; ++i) x[i] = b[i] / a[i][i];
  return x;
}

struct Candidate {
  std::vector<mpq_class> lambda;
  mpq_class cn, c2, c3;
};

// true when x is strictly better than y
bool better(const Candidate& x, const Candidate& y) {
  if (x.cn != y.cn) return x.cn < y.cn;
  const int c = compare_log_constants(x.c2, x.c3, y.c2, y.c3);
  if (c != 0) return c < 0;
  return std::lexicographical_compare(x.lambda.begin(), x.lambda.end(), y.lambda.begin(), y.lambda.end());
}

}  // namespace

Certificate optimize(std::span<const Inequality> ineqs, const LogLinearForm& objective) {
  if (ineqs.empty()) throw Error(Errc::InvalidArgument, "optimize: no inequalities");
  if (sgn(objective.cn) != 0 || sgn(objective.c2) != 0 || sgn(objective.c3) != 0)
    throw Error(Errc::InvalidArgument, "optimize: objective may only involve alpha, beta, gamma");

  std::vector<Inequality> norm;
  for (const Inequality& in : ineqs) {
    norm.push_back(normalized(in));
    const LogLinearForm& r = norm.back().rhs;
    if (sgn(r.cn) < 0 || sgn(r.c2) < 0 || sgn(r.c3) < 0)
      throw Error(Errc::InvalidArgument, "optimize: '" + in.label + "' has a negative right-hand coefficient");
  }

  // Columns 0..k-1 are the inequalities, k..k+2 are surplus variables.
  const std::size_t k = norm.size();
  const std::size_t cols = k + 3;
  const auto column = [&](std::size_t j) {
    std::array<mpq_class, 3> v{0, 0, 0};
    if (j < k) {
      v = {norm[j].lhs.ca, norm[j].lhs.cb, norm[j].lhs.cc};
    } else {
      v[j - k] = -1;
    }
    return v;
  };
  const std::array<mpq_class, 3> target{objective.ca, objective.cb, objective.cc};

  std::optional<Candidate> best;
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = i + 1; j < cols; ++j)
      for (std::size_t l = j + 1; l < cols; ++l) {
        const std::array<std::size_t, 3> basis{i, j, l};
        Mat3 m;
        for (int c = 0; c < 3; ++c) {
          const auto v = column(basis[c]);
          for (int r = 0; r < 3; ++r) m[r][c] = v[r];
        }
        const auto x = solve3(m, target);
        if (!x || std::any_of(x->begin(), x->end(), [](const mpq_class& v) { return sgn(v) < 0; })) continue;

        Candidate cand;
        cand.lambda.assign(k, mpq_class(0));
        for (int c = 0; c < 3; ++c)
          if (basis[c] < k) cand.lambda[basis[c]] = (*x)[c];
        for (std::size_t t = 0; t < k; ++t) {
          cand.cn += cand.lambda[t] * norm[t].rhs.cn;
          cand.c2 += cand.lambda[t] * norm[t].rhs.c2;
          cand.c3 += cand.lambda[t] * norm[t].rhs.c3;
        }
        if (!best || better(cand, *best)) best = std::move(cand);
      }

  if (!best) throw Error(Errc::Infeasible, "optimize: no nonnegative combination covers the objective");

  Certificate cert;
  for (std::size_t t = 0; t < k; ++t) cert.multipliers.emplace_back(ineqs[t].label, best->lambda[t]);
  cert.derived = combine(norm, best->lambda);
  cert.derived.label = "optimized";
  return cert;
}

// ---------------------------------------------------------------------------

namespace {

mpq_class q(long num, long den = 1) {
  mpq_class v(num, den);
  v.canonicalize();
  return v;
}

Inequality make(std::string label, const mpq_class& a, const mpq_class& b, const mpq_class& c, const mpq_class& n,
                const mpq_class& two, const mpq_class& three) {
  return Inequality{std::move(label), LogLinearForm::abc(a, b, c), LogLinearForm::constants(n, two, three)};
}

Inequality apply_multipliers(std::span<const Inequality> pool, std::span<const std::pair<std::string_view, mpq_class>> mult,
                 std::vector<std::pair<std::string, mpq_class>>* used = nullptr) {
  std::vector<std::string_view> labels;
  std::vector<mpq_class> weights;
  for (const auto& [label, w] : mult) {
    labels.push_back(label);
    weights.push_back(w);
    if (used) used->emplace_back(std::string(label), w);
  }
  const auto chosen = select(pool, labels);
  return combine(chosen, weights);
}

std::string fmt_q(const mpq_class& v) { return v.get_str(10); }

}  // namespace

std::vector<Inequality> builtin_registry() {
  return {
      make("AK", 0, 0, 3, 1, 0, 1),                    // c < (3N)^(1/3)
      make("bc_prior", 0, 2, 2, 1, q(1, 2), q(1, 2)),  // bc < 6^(1/4) N^(1/2)
      make("b_bound", 0, 5, 0, 1, 1, 0),               // b < (2N)^(1/5)
      make("R2", 3, 2, 1, 1, 1, 0),                    // a^3 b^2 c <= 2N
      make("a5b2c", 5, 2, 1, 1, 1, 0),
      make("a3b2c2", 3, 2, 2, 1, 1, 0),
      make("b4c2", 0, 4, 2, 1, 0, 0),
      make("a2b2c3", 2, 2, 3, 1, 1, 0),
      make("b3c3", 0, 3, 3, 1, 0, 0),
      make("a2b3c3", 2, 3, 3, 1, 0, 0),
      make("a2b4c", 2, 4, 1, 1, 0, 0),
      make("ac_b2", 1, -2, 1, 0, 1, 0),  // ac < 2 b^2
      make("a_le_b", 1, -1, 0, 0, 0, 0),
      make("b_le_c", 0, 1, -1, 0, 0, 0),
  };
}

Inequality literal_bc_reading() { return make("bc_prior_literal", 2, 2, 0, 1, q(1, 2), q(1, 2)); }

std::vector<Inequality> select(std::span<const Inequality> pool, std::span<const std::string_view> labels) {
  std::vector<Inequality> out;
  for (std::string_view label : labels) {
    const auto it = std::find_if(pool.begin(), pool.end(), [&](const Inequality& in) { return in.label == label; });
    if (it == pool.end()) throw Error(Errc::InvalidArgument, "no inequality labelled '" + std::string(label) + "'");
    out.push_back(*it);
  }
  return out;
}

namespace {

struct PrintedCombination {
  std::string_view name;
  std::vector<std::pair<std::string_view, mpq_class>> multipliers;
  Inequality stated;
};

std::vector<PrintedCombination> printed_combinations() {
  const LogLinearForm sum = LogLinearForm::abc(1, 1, 1);
  const auto target = [&](const mpq_class& n, const mpq_class& two, const mpq_class& three) {
    return Inequality{"stated", sum, LogLinearForm::constants(n, two, three)};
  };
  return {
      {"easy_abc_11_18", {{"AK", q(1, 9)}, {"bc_prior", q(1, 6)}, {"R2", q(1, 3)}}, target(q(11, 18), q(5, 12), q(7, 36))},
      {"fourth_power_17_30", {{"AK", q(1, 15)}, {"bc_prior", q(3, 10)}, {"a5b2c", q(1, 5)}}, target(q(17, 30), q(7, 20), q(13, 60))},
      {"all_squared_17_36", {{"AK", q(1, 18)}, {"a3b2c2", q(1, 3)}, {"b4c2", q(1, 12)}}, target(q(17, 36), q(1, 3), q(1, 18))},
      {"c_divides_sigma_a2_3_7", {{"a_le_b", q(1, 7)}, {"b_le_c", q(2, 7)}, {"a2b2c3", q(3, 7)}}, target(q(3, 7), q(3, 7), 0)},
      {"b_coprime_sigma_c2_4_9", {{"a3b2c2", q(1, 3)}, {"b3c3", q(1, 9)}}, target(q(4, 9), q(1, 3), 0)},
      {"a_coprime_3_8", {{"b_le_c", q(1, 8)}, {"a_le_b", q(1, 4)}, {"a2b3c3", q(3, 8)}}, target(q(17, 36), 0, 0)},
      {"ac_coprime_sigma_b2_5_9", {{"AK", q(2, 9)}, {"a_le_b", q(1, 3)}, {"a2b4c", q(1, 3)}}, target(q(5, 9), 0, q(2, 9))},
      {"final_3_5", {{"b_bound", q(3, 5)}, {"ac_b2", q(1)}}, target(q(3, 5), q(3, 5), 0)},
  };
}

}  // namespace

std::vector<Verification> verify_printed_combinations() {
  const auto registry = builtin_registry();
  std::vector<Verification> out;
  for (const auto& pc : printed_combinations()) {
    Verification v;
    v.name = std::string(pc.name);
    v.derived = apply_multipliers(registry, pc.multipliers, &v.multipliers);
    v.derived.label = v.name;
    v.stated = pc.stated;
    v.stated.label = v.name;
    v.matches = v.derived == v.stated;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Discrepancy> printed_discrepancies() {
  std::vector<Discrepancy> out;
  const auto registry = builtin_registry();

  {
    std::vector<Inequality> pool = registry;
    pool.push_back(literal_bc_reading());
    const std::array<std::pair<std::string_view, mpq_class>, 3> mult{
        {{"AK", q(1, 9)}, {"bc_prior_literal", q(1, 6)}, {"R2", q(1, 3)}}};
    const Inequality lit = apply_multipliers(pool, mult);
    if (!(lit.lhs == LogLinearForm::abc(1, 1, 1)))
      out.push_back({"bc_prior_reading",
                     "prior bc bound printed with 2 alpha + 2 beta on the left; only the 2 beta + 2 gamma reading "
                     "balances the 11/18 combination, so the registry uses that reading",
                     describe(literal_bc_reading()), "1/9 AK + 1/6 (literal) + 1/3 R2 gives " + describe(lit)});
  }

  for (const Verification& v : verify_printed_combinations()) {
    if (v.matches) continue;
    if (v.name == "a_coprime_3_8") {
      out.push_back({"coprime_a_exponent",
                     "combination printed as giving exponent 17/36; the multipliers give 3/8 (a stronger bound)",
                     describe(v.stated), describe(v.derived)});
    } else if (v.name == "final_3_5") {
      out.push_back({"final_log2_constant",
                     "final (2N)^(3/5) step prints (3/5) log 2; the multipliers give 8/5 log 2",
                     describe(v.stated), describe(v.derived)});
    } else {
      out.push_back({v.name, "printed combination does not reproduce the printed bound", describe(v.stated),
                     describe(v.derived)});
    }
  }

  {
    // bc with b^2 || N, c^2 || N, c not dividing sigma(b^2): bound beta + gamma.
    const std::vector<Inequality> sys{make("b4c2_2N", 0, 4, 2, 1, 1, 0), select(registry, std::array<std::string_view, 1>{"AK"})[0],
                                      select(registry, std::array<std::string_view, 1>{"b_le_c"})[0]};
    const Certificate cert = optimize(sys, LogLinearForm::abc(0, 1, 1));
    const auto& r = cert.derived.rhs;
    // headline: log2 + 1/3 log3
    if (r.cn != q(5, 12) || r.c2 != 1 || r.c3 != q(1, 3))
      out.push_back({"bc_constant",
                     "bc bound headline constant is 2 * 3^(1/3), the proof ends with 2 * 3^(1/6); the optimal "
                     "combination gives the constants below",
                     "beta + gamma <= 5/12 logN + log2 + 1/3 log3 (headline) / + 1/6 log3 (proof)",
                     describe(cert.derived)});
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

mpq_class parse_rational(std::string_view tok, std::size_t line_no) {
  const auto fail = [&] {
    throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": bad rational '" + std::string(tok) + "'");
  };
  std::string_view body = tok;
  if (!body.empty() && body[0] == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  const auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!digits(num) || (slash != std::string_view::npos && !digits(den))) fail();
  mpq_class v;
  v.get_num().set_str(std::string(num), 10);
  if (slash != std::string_view::npos) {
    v.get_den().set_str(std::string(den), 10);
    if (v.get_den() == 0) fail();
  }
  v.canonicalize();
  if (tok[0] == '-') v = -v;
  return v;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<Inequality> parse_inequalities(std::string_view text) {
  std::vector<Inequality> out;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line[0] == '#') continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": expected 'label: ca cb cc <= cn c2 c3'");
    const std::string label(trim(line.substr(0, colon)));
    if (label.empty()) throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": empty label");
    if (!seen.insert(label).second)
      throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": duplicate label '" + label + "'");

    const auto tok = split_ws(line.substr(colon + 1));
    if (tok.size() != 7 || (tok[3] != "<=" && tok[3] != "<"))
      throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": expected 'label: ca cb cc <= cn c2 c3'");
    out.push_back(make(label, parse_rational(tok[0], line_no), parse_rational(tok[1], line_no),
                       parse_rational(tok[2], line_no), parse_rational(tok[4], line_no),
                       parse_rational(tok[5], line_no), parse_rational(tok[6], line_no)));
  }
  return out;
}

std::string render_inequality(const Inequality& in) {
  const Inequality n = normalized(in);
  std::ostringstream out;
  out << in.label << ": " << fmt_q(n.lhs.ca) << ' ' << fmt_q(n.lhs.cb) << ' ' << fmt_q(n.lhs.cc) << " <= "
      << fmt_q(n.rhs.cn) << ' ' << fmt_q(n.rhs.c2) << ' ' << fmt_q(n.rhs.c3);
  return out.str();
}

std::string describe(const Inequality& in) {
  const Inequality n = normalized(in);
  const auto side = [](std::initializer_list<std::pair<const mpq_class*, std::string_view>> terms) {
    std::string s;
    for (const auto& [coef, name] : terms) {
      if (sgn(*coef) == 0) continue;
      const bool neg = sgn(*coef) < 0;
      const mpq_class mag = abs(*coef);
      if (s.empty()) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      if (mag != 1) s += mag.get_str(10) + " ";
      s += name;
    }
    return s.empty() ? std::string("0") : s;
  };
  return side({{&n.lhs.ca, "alpha"}, {&n.lhs.cb, "beta"}, {&n.lhs.cc, "gamma"}}) + " <= " +
         side({{&n.rhs.cn, "logN"}, {&n.rhs.c2, "log2"}, {&n.rhs.c3, "log3"}});
}

}  // namespace sigmapair
