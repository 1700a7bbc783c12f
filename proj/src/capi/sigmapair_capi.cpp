#include "sigmapair/sigmapair.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <optional>
#include <string>

#include "certifier.hpp"
#include "error.hpp"
#include "json_codec.hpp"
#include "nat.hpp"
#include "oracles.hpp"
#include "pair_search.hpp"
#include "primality.hpp"
#include "quasichain.hpp"
#include "residue.hpp"

using namespace sigmapair;

struct sp_chain {
  ChainState state;
};

struct sp_report {
  std::string results = "[]";
  std::string discrepancies = "[]";
  bool ok = true;
};

struct sp_search {
  PairSearch search;
};

namespace {

thread_local std::string g_last_error;

sp_status from_errc(Errc c) {
  switch (c) {
    case Errc::InvalidArgument: return SP_E_INVALID_ARGUMENT;
    case Errc::Parse: return SP_E_PARSE;
    case Errc::PreconditionViolation: return SP_E_PRECONDITION;
    case Errc::NonIntegralStep: return SP_E_NON_INTEGRAL_STEP;
    case Errc::BelowChainStart: return SP_E_BELOW_CHAIN_START;
    case Errc::PeriodNotFound: return SP_E_PERIOD_NOT_FOUND;
    case Errc::NonUnitResidue: return SP_E_NON_UNIT_RESIDUE;
    case Errc::CheckpointMismatch: return SP_E_CHECKPOINT_MISMATCH;
    case Errc::NotOnKnownChain: return SP_E_NOT_ON_KNOWN_CHAIN;
    case Errc::Infeasible: return SP_E_INFEASIBLE;
    case Errc::NegativeMultiplier: return SP_E_NEGATIVE_MULTIPLIER;
    case Errc::Io: return SP_E_IO;
  }
  return SP_E_INTERNAL;
}

sp_status fail(sp_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
sp_status guarded(F&& f) noexcept {
  try {
    g_last_error.clear();
    f();
    return SP_OK;
  } catch (const Error& e) {
    return fail(from_errc(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SP_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SP_E_INTERNAL, e.what());
  } catch (...) {
    return fail(SP_E_INTERNAL, "unknown exception");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw Error(Errc::InvalidArgument, std::string(what) + " must not be NULL");
}

Nat nat_arg(const char* s, const char* fallback, const char* what) {
  if (!s) {
    if (!fallback) throw Error(Errc::InvalidArgument, std::string(what) + " must not be NULL");
    s = fallback;
  }
  return Nat::parse(s);
}

sp_report* make_report(const Json& results, bool ok = true, const Json& discrepancies = Json::array()) {
  auto* r = new sp_report;
  r->results = results.dump();
  r->discrepancies = discrepancies.dump();
  r->ok = ok;
  return r;
}

Json pairs_json(const std::vector<PairRecord>& pairs) {
  Json j = Json::array();
  for (const auto& r : pairs) j.push_back(to_json(r));
  return j;
}

SearchOptions search_options(const sp_search_options* o) {
  require(o, "options");
  SearchOptions s;
  s.m = o->m;
  s.seed_first = nat_arg(o->seed_first, "1", "seed_first");
  s.seed_second = nat_arg(o->seed_second, "1", "seed_second");
  s.digits_limit = o->digits;
  s.mr_rounds = o->mr_rounds;
  s.threads = o->threads;
  s.checkpoint_every = o->checkpoint_every;
  if (o->checkpoint_path) s.checkpoint_path = std::filesystem::path(o->checkpoint_path);
  return s;
}

}  // namespace

extern "C" {

const char* sp_version(void) { return "1.0.0"; }

const char* sp_status_name(sp_status status) {
  switch (status) {
    case SP_OK: return "ok";
    case SP_E_INVALID_ARGUMENT: return "invalid_argument";
    case SP_E_PARSE: return "parse_error";
    case SP_E_PRECONDITION: return "precondition_violation";
    case SP_E_NON_INTEGRAL_STEP: return "non_integral_step";
    case SP_E_BELOW_CHAIN_START: return "below_chain_start";
    case SP_E_PERIOD_NOT_FOUND: return "period_not_found";
    case SP_E_NON_UNIT_RESIDUE: return "non_unit_residue";
    case SP_E_CHECKPOINT_MISMATCH: return "checkpoint_mismatch";
    case SP_E_NOT_ON_KNOWN_CHAIN: return "not_on_known_chain";
    case SP_E_INFEASIBLE: return "infeasible";
    case SP_E_NEGATIVE_MULTIPLIER: return "negative_multiplier";
    case SP_E_IO: return "io_error";
    case SP_E_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* sp_last_error(void) { return g_last_error.c_str(); }

void sp_string_free(char* s) { std::free(s); }

sp_status sp_is_prime(const char* decimal, unsigned rounds, char** verdict_json) {
  return guarded([&] {
    require(verdict_json, "verdict_json");
    *verdict_json = dup(to_json(is_prime(nat_arg(decimal, nullptr, "decimal"), rounds)).dump());
  });
}

sp_status sp_sigma_power(const char* p, unsigned m, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup(sigma_power(nat_arg(p, nullptr, "p"), m).to_string());
  });
}

// ---- chains

sp_status sp_chain_new(unsigned m, const char* first, const char* second, sp_chain** out) {
  return guarded([&] {
    require(out, "out");
    *out = new sp_chain{seed_state(m, nat_arg(first, "1", "first"), nat_arg(second, "1", "second"))};
  });
}

sp_status sp_chain_next(sp_chain* chain) {
  return guarded([&] {
    require(chain, "chain");
    chain->state = chain_next(chain->state);
  });
}

sp_status sp_chain_prev(sp_chain* chain) {
  return guarded([&] {
    require(chain, "chain");
    chain->state = chain_prev(chain->state);
  });
}

uint64_t sp_chain_index(const sp_chain* chain) { return chain ? chain->state.n : 0; }

sp_status sp_chain_terms(const sp_chain* chain, char** prev, char** curr) {
  return guarded([&] {
    require(chain, "chain");
    std::string a = chain->state.prev.to_string();
    std::string b = chain->state.curr.to_string();
    char* pa = prev ? dup(a) : nullptr;
    if (curr) {
      try {
        *curr = dup(b);
      } catch (...) {
        std::free(pa);
        throw;
      }
    }
    if (prev) *prev = pa;
  });
}

void sp_chain_free(sp_chain* chain) { delete chain; }

sp_status sp_locate_pair(const char* p, const char* q, unsigned m, uint64_t* index) {
  return guarded([&] {
    require(index, "index");
    *index = locate_pair_index(nat_arg(p, nullptr, "p"), nat_arg(q, nullptr, "q"), m);
  });
}

// ---- reports

const char* sp_report_results_json(const sp_report* report) { return report ? report->results.c_str() : "[]"; }
const char* sp_report_discrepancies_json(const sp_report* report) {
  return report ? report->discrepancies.c_str() : "[]";
}
int sp_report_ok(const sp_report* report) { return report && report->ok ? 1 : 0; }
void sp_report_free(sp_report* report) { delete report; }

sp_status sp_chain_report(unsigned m, uint64_t terms, sp_report** out) {
  return guarded([&] {
    require(out, "out");
    if (terms < 1) throw Error(Errc::PreconditionViolation, "terms must be >= 1");
    if (terms > 100000) throw Error(Errc::PreconditionViolation, "terms must be <= 100000");
    const auto t = chain_terms(m, terms);
    Json j = Json::array();
    for (std::size_t i = 0; i < t.size(); ++i) j.push_back({{"n", i + 1}, {"value", t[i].to_string()}});
    *out = make_report(j);
  });
}

sp_status sp_sequence_report(char which, uint64_t count, sp_report** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 100000) throw Error(Errc::PreconditionViolation, "count must be <= 100000");
    std::vector<Nat> v;
    if (which == 's')
      v = generate_s(count);
    else if (which == 'u')
      v = generate_u(count);
    else
      throw Error(Errc::InvalidArgument, "sequence must be 's' or 'u'");
    Json j = Json::array();
    for (std::size_t i = 0; i < v.size(); ++i) j.push_back({{"n", i}, {"value", v[i].to_string()}});
    *out = make_report(j);
  });
}

sp_status sp_u_period(uint64_t* period) {
  return guarded([&] {
    require(period, "period");
    *period = u_period();
  });
}

sp_status sp_seeds_report(unsigned m, uint64_t bound, sp_report** out) {
  return guarded([&] {
    require(out, "out");
    if (bound > 100000) throw Error(Errc::PreconditionViolation, "seed bound must be <= 100000");
    Json j = Json::array();
    for (const auto& [p, q] : enumerate_seeds(m, bound)) j.push_back({{"p", p.to_string()}, {"q", q.to_string()}});
    *out = make_report(j);
  });
}

sp_status sp_residues_report(uint64_t modulus, sp_report** out) {
  return guarded([&] {
    require(out, "out");
    *out = make_report(Json::array({to_json(residue_profile(modulus))}));
  });
}

sp_status sp_residue_pattern_report(uint64_t terms, sp_report** out) {
  return guarded([&] {
    require(out, "out");
    const auto r = check_residue_pattern(terms);
    *out = make_report(Json::array({to_json(r)}), r.violations.empty());
  });
}

sp_status sp_oracle_catalog(char** json) {
  return guarded([&] {
    require(json, "json");
    Json j = Json::array();
    for (const auto& info : oracle_catalog())
      j.push_back({{"id", info.id},
                   {"default_bound", info.default_bound},
                   {"min_bound", info.min_bound},
                   {"statement", info.statement}});
    *json = dup(j.dump());
  });
}

sp_status sp_lemmas_report(const char* only, uint64_t bound, sp_report** out) {
  return guarded([&] {
    require(out, "out");
    Json j = Json::array();
    bool ok = true;
    bool matched = false;
    for (const auto& info : oracle_catalog()) {
      if (only && info.id != only) continue;
      matched = true;
      const OracleReport r = run_oracle(info.id, bound ? bound : info.default_bound);
      ok = ok && r.agrees;
      j.push_back(to_json(r));
    }
    if (!matched) throw Error(Errc::InvalidArgument, std::string("unknown oracle '") + (only ? only : "") + "'");
    *out = make_report(j, ok);
  });
}

sp_status sp_certify_verify_report(sp_report** out) {
  return guarded([&] {
    require(out, "out");
    Json v = Json::array();
    for (const auto& x : verify_printed_combinations()) v.push_back(to_json(x));
    Json d = Json::array();
    for (const auto& x : printed_discrepancies()) d.push_back(to_json(x));
    *out = make_report(v, true, d);
  });
}

sp_status sp_certify_optimize_report(const char* ineqs, const char* objective, sp_report** out) {
  return guarded([&] {
    require(out, "out");
    std::vector<Inequality> system;
    if (ineqs) {
      system = parse_inequalities(ineqs);
    } else {
      const auto registry = builtin_registry();
      const std::string_view labels[] = {"AK", "bc_prior", "R2", "a_le_b", "b_le_c"};
      system = select(registry, labels);
    }
    LogLinearForm target = LogLinearForm::abc(1, 1, 1);
    if (objective) {
      const auto parsed = parse_inequalities(std::string("objective: ") + objective + " <= 0 0 0");
      target = parsed.at(0).lhs;
    }
    const Certificate cert = optimize(system, target);
    Json j = to_json(cert);
    const std::string text = describe(Inequality{"objective", target, {}});
    j["objective"] = text.substr(0, text.find(" <="));
    Json inputs = Json::array();
    for (const auto& in : system) inputs.push_back(to_json(in));
    j["inequalities"] = std::move(inputs);
    *out = make_report(Json::array({j}));
  });
}

sp_status sp_certify_registry(char** text) {
  return guarded([&] {
    require(text, "text");
    std::string s;
    for (const auto& in : builtin_registry()) s += render_inequality(in) + "\n";
    *text = dup(s);
  });
}

sp_status sp_heuristic_report(uint64_t start_index, uint64_t horizon, sp_report** out) {
  return guarded([&] {
    require(out, "out");
    const std::optional<std::uint64_t> h = horizon ? std::optional<std::uint64_t>(horizon) : std::nullopt;
    *out = make_report(Json::array({to_json(heuristic_tail(start_index, h), start_index)}));
  });
}

sp_status sp_squares_report(uint64_t terms, uint64_t trial_bound, sp_report** out) {
  return guarded([&] {
    require(out, "out");
    if (terms > 5000) throw Error(Errc::PreconditionViolation, "terms must be <= 5000");
    Json j = Json::array();
    for (const auto& row : square_divisor_probe(terms, trial_bound)) j.push_back(to_json(row));
    *out = make_report(j);
  });
}

// ---- search

void sp_search_options_default(sp_search_options* options) {
  if (!options) return;
  const SearchOptions d;
  options->m = d.m;
  options->seed_first = nullptr;
  options->seed_second = nullptr;
  options->digits = d.digits_limit;
  options->mr_rounds = d.mr_rounds;
  options->threads = d.threads;
  options->checkpoint_every = d.checkpoint_every;
  options->checkpoint_path = nullptr;
}

sp_status sp_search_new(const sp_search_options* options, sp_search** out) {
  return guarded([&] {
    require(out, "out");
    *out = new sp_search{PairSearch(search_options(options))};
  });
}

sp_status sp_search_resume(const sp_search_options* options, sp_search** out) {
  return guarded([&] {
    require(out, "out");
    SearchOptions opts = search_options(options);
    if (!opts.checkpoint_path) throw Error(Errc::InvalidArgument, "resume needs a checkpoint path");
    const SearchCheckpoint cp = read_checkpoint(*opts.checkpoint_path);
    *out = new sp_search{PairSearch(std::move(opts), cp)};
  });
}

sp_status sp_search_run(sp_search* search, uint64_t max_steps, int* finished) {
  return guarded([&] {
    require(search, "search");
    const bool done = search->search.run(max_steps ? std::optional<std::uint64_t>(max_steps) : std::nullopt);
    if (finished) *finished = done ? 1 : 0;
  });
}

sp_status sp_search_results_json(const sp_search* search, char** json) {
  return guarded([&] {
    require(search, "search");
    require(json, "json");
    *json = dup(pairs_json(search->search.pairs()).dump());
  });
}

sp_status sp_search_position_json(const sp_search* search, char** json) {
  return guarded([&] {
    require(search, "search");
    require(json, "json");
    const SearchCheckpoint& cp = search->search.checkpoint();
    Json j;
    j["n"] = cp.n;
    j["prev"] = cp.prev.to_string();
    j["curr"] = cp.curr.to_string();
    j["pairs"] = cp.found.size();
    j["finished"] = search->search.finished();
    *json = dup(j.dump());
  });
}

sp_status sp_search_save(const sp_search* search) {
  return guarded([&] {
    require(search, "search");
    search->search.save();
  });
}

void sp_search_free(sp_search* search) { delete search; }

}  // extern "C"
