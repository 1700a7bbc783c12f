// sigmapair command-line front end. Talks to the library only through the C API.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sigmapair/sigmapair.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitDisagreement = 3;
constexpr int kExitUsage = 64;

struct ApiError {
  sp_status status;
  std::string message;
};

void check(sp_status s) {
  if (s != SP_OK) throw ApiError{s, sp_last_error()};
}

struct ReportDeleter {
  void operator()(sp_report* r) const { sp_report_free(r); }
};
using Report = std::unique_ptr<sp_report, ReportDeleter>;

struct SearchDeleter {
  void operator()(sp_search* s) const { sp_search_free(s); }
};
using Search = std::unique_ptr<sp_search, SearchDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  sp_string_free(s);
  return out;
}

template <class F>
Report report(F&& call) {
  sp_report* raw = nullptr;
  const sp_status s = call(&raw);
  Report owned(raw);
  check(s);
  return owned;
}

int exit_code_for(sp_status s) {
  switch (s) {
    case SP_E_CHECKPOINT_MISMATCH: return kExitDisagreement;
    case SP_E_IO:
    case SP_E_INTERNAL: return kExitFailure;
    default: return kExitPrecondition;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ApiError{SP_E_IO, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// What a subcommand produced, before rendering.
struct Outcome {
  Json results = Json::array();
  std::optional<Json> discrepancies;
  std::optional<Json> progress;
  bool ok = true;
  std::string text;  // plain-text rendering
};

struct Command {
  std::string name;
  Json params = Json::object();
  std::function<Outcome(Json&)> run;
};

std::string join_values(const Json& arr, const char* key, const char* sep) {
  std::string out;
  for (const auto& row : arr) {
    if (!out.empty()) out += sep;
    out += row[key].get<std::string>();
  }
  return out;
}

std::string tuple_text(const Json& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + t[i].get<std::string>();
  return s + ")";
}

// ---- subcommands

Outcome run_chain(unsigned m, std::uint64_t terms) {
  const Report rep = report([&](sp_report** out) { return sp_chain_report(m, terms, out); });
  Outcome o;
  o.results = Json::parse(sp_report_results_json(rep.get()));
  o.text = join_values(o.results, "value", " ") + "\n";
  return o;
}

struct SearchArgs {
  unsigned m = 2;
  std::vector<std::string> seed{"1", "1"};
  std::uint64_t digits = 20;
  std::optional<std::string> checkpoint;
  unsigned mr_rounds = 40;
  unsigned threads = 1;
  std::uint64_t checkpoint_every = 25;
  std::uint64_t max_steps = 0;
};

Outcome run_search(const SearchArgs& a, Json& params) {
  sp_search_options opts;
  sp_search_options_default(&opts);
  opts.m = a.m;
  opts.seed_first = a.seed[0].c_str();
  opts.seed_second = a.seed[1].c_str();
  opts.digits = a.digits;
  opts.mr_rounds = a.mr_rounds;
  opts.threads = a.threads;
  opts.checkpoint_every = a.checkpoint_every;
  opts.checkpoint_path = a.checkpoint ? a.checkpoint->c_str() : nullptr;

  const bool resume = a.checkpoint && std::filesystem::exists(*a.checkpoint);
  params["resumed"] = resume;

  sp_search* raw = nullptr;
  const sp_status s = resume ? sp_search_resume(&opts, &raw) : sp_search_new(&opts, &raw);
  Search search(raw);
  check(s);
  int finished = 0;
  check(sp_search_run(search.get(), a.max_steps, &finished));

  char* results = nullptr;
  check(sp_search_results_json(search.get(), &results));
  char* position = nullptr;
  check(sp_search_position_json(search.get(), &position));

  Outcome o;
  o.results = Json::parse(take(results));
  o.progress = Json::parse(take(position));
  std::ostringstream text;
  for (const auto& r : o.results)
    text << "n=" << r["index"].get<std::uint64_t>() << "  p=" << r["p"].get<std::string>()
         << "  q=" << r["q"].get<std::string>() << "  (" << r["q_verdict"]["status"].get<std::string>() << ")\n";
  text << o.results.size() << " pair(s); ";
  if (finished)
    text << "searched to " << a.digits << " digits\n";
  else
    text << "stopped at n=" << (*o.progress)["n"].get<std::uint64_t>() << ", resume with the same checkpoint\n";
  o.text = text.str();
  return o;
}

Outcome run_seeds(unsigned m, std::uint64_t bound) {
  const Report rep = report([&](sp_report** out) { return sp_seeds_report(m, bound, out); });
  Outcome o;
  o.results = Json::parse(sp_report_results_json(rep.get()));
  for (const auto& s : o.results) o.text += "(" + s["p"].get<std::string>() + ", " + s["q"].get<std::string>() + ")\n";
  return o;
}

Outcome run_residues(std::uint64_t modulus) {
  const Report rep = report([&](sp_report** out) { return sp_residues_report(modulus, out); });
  Outcome o;
  o.results = Json::parse(sp_report_results_json(rep.get()));
  const Json& p = o.results.at(0);
  std::ostringstream text;
  text << "modulus " << p["modulus"] << ", period " << p["period"] << "\ncycle";
  for (const auto& c : p["cycle"]) text << ' ' << c;
  text << "\npalindromic " << (p["palindromic"].get<bool>() ? "yes" : "no");
  if (!p["mirror_shift"].is_null()) text << " (cycle[i] = cycle[" << p["mirror_shift"] << " - i mod period])";
  text << '\n';
  o.text = text.str();
  return o;
}

Outcome run_lemmas(const std::optional<std::string>& only, std::uint64_t bound, Json& params) {
  char* catalog = nullptr;
  check(sp_oracle_catalog(&catalog));
  Json bounds = Json::object();
  for (const auto& info : Json::parse(take(catalog))) {
    const std::string id = info["id"];
    if (!only || *only == id) bounds[id] = bound ? bound : info["default_bound"].get<std::uint64_t>();
  }
  params["bounds"] = bounds;

  const Report rep =
      report([&](sp_report** out) { return sp_lemmas_report(only ? only->c_str() : nullptr, bound, out); });
  Outcome o;
  o.results = Json::parse(sp_report_results_json(rep.get()));
  o.ok = sp_report_ok(rep.get()) != 0;
  std::ostringstream text;
  for (const auto& rep_j : o.results) {
    text << (rep_j["agrees"].get<bool>() ? "agrees   " : "DISAGREES") << "  " << rep_j["lemma_id"].get<std::string>()
         << "  bound " << rep_j["bound"] << "  found";
    if (rep_j["witnesses"].empty()) text << " nothing";
    for (const auto& t : rep_j["witnesses"]) text << ' ' << tuple_text(t);
    text << '\n';
    if (!rep_j["agrees"].get<bool>()) {
      text << "           expected";
      if (rep_j["expected"].empty()) text << " nothing";
      for (const auto& t : rep_j["expected"]) text << ' ' << tuple_text(t);
      text << '\n';
    }
    for (const auto& n : rep_j["notes"]) text << "           " << n.get<std::string>() << '\n';
  }
  o.text = text.str();
  return o;
}

Outcome run_certify(const std::optional<std::string>& ineqs, bool optimize, const std::optional<std::string>& objective) {
  Outcome o;
  std::ostringstream text;
  if (!optimize) {
      const Report rep = report([&](sp_report** out) { return sp_certify_verify_report(out); });
    o.results = Json::parse(sp_report_results_json(rep.get()));
    o.discrepancies = Json::parse(sp_report_discrepancies_json(rep.get()));
    for (const auto& v : o.results) {
      text << (v["matches"].get<bool>() ? "ok        " : "MISMATCH  ") << v["name"].get<std::string>() << '\n'
           << "    derived  " << v["derived"]["text"].get<std::string>() << '\n';
      if (!v["matches"].get<bool>()) text << "    printed  " << v["stated"]["text"].get<std::string>() << '\n';
    }
    for (const auto& d : *o.discrepancies)
      text << "discrepancy " << d["id"].get<std::string>() << ": " << d["description"].get<std::string>() << '\n'
           << "    printed  " << d["stated"].get<std::string>() << '\n'
           << "    computed " << d["computed"].get<std::string>() << '\n';
  } else {
    const std::optional<std::string> body = ineqs ? std::optional<std::string>(read_file(*ineqs)) : std::nullopt;
    const Report rep = report([&](sp_report** out) {
      return sp_certify_optimize_report(body ? body->c_str() : nullptr, objective ? objective->c_str() : nullptr, out);
    });
    o.results = Json::parse(sp_report_results_json(rep.get()));
    const Json& c = o.results.at(0);
    text << "best bound for " << c["objective"].get<std::string>() << '\n';
    for (const auto& [label, w] : c["multipliers"].items())
      if (w.get<std::string>() != "0") text << "    " << w.get<std::string>() << " x " << label << '\n';
    text << "gives " << c["derived"]["text"].get<std::string>() << '\n';
  }
  o.text = text.str();
  return o;
}

Outcome run_heuristic(std::uint64_t from, std::uint64_t horizon) {
  const Report rep = report([&](sp_report** out) { return sp_heuristic_report(from, horizon, out); });
  Outcome o;
  o.results = Json::parse(sp_report_results_json(rep.get()));
  const Json& h = o.results.at(0);
  std::ostringstream text;
  text.precision(12);
  text << "sum_{n>=" << from << "} 1/(ln t_n ln t_{n+1}) ~ " << h["value"].get<double>() << "\n(exact terms to t_"
       << h["exact_terms"] << ", then ln t_n >= (n - " << h["offset"].get<double>() << ") ln 4)\n";
  o.text = text.str();
  return o;
}

Outcome run_squares(std::uint64_t terms, std::uint64_t trial_bound) {
  const Report rep = report([&](sp_report** out) { return sp_squares_report(terms, trial_bound, out); });
  Outcome o;
  o.results = Json::parse(sp_report_results_json(rep.get()));
  std::ostringstream text;
  text << "n  L_lower(n)  S_lower(n)   (square divisors found below the trial bound)\n";
  for (const auto& row : o.results)
    text << row["n"] << "  " << row["l_lower"].get<std::string>() << "  " << row["s_lower"].get<std::string>() << '\n';
  o.text = text.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sigmapair: quasichains, sigma_{m,m} prime pairs and abc log-bound certificates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sp_version()));

  bool json = false;
  Command cmd;

  // chain
  unsigned chain_m = 2;
  std::uint64_t chain_terms = 10;
  auto* chain = app.add_subcommand("chain", "print t_{m,1..K}");
  chain->add_option("--m", chain_m, "exponent m")->capture_default_str()->check(CLI::PositiveNumber);
  chain->add_option("--terms", chain_terms, "number of terms K")->capture_default_str()->check(CLI::PositiveNumber);

  // search
  SearchArgs sa;
  auto* search = app.add_subcommand("search", "search a chain for consecutive prime terms");
  search->add_option("--m", sa.m, "exponent m")->capture_default_str()->check(CLI::PositiveNumber);
  search->add_option("--seed", sa.seed, "seed pair P Q")->expected(2)->capture_default_str();
  search->add_option("--digits", sa.digits, "stop once a term has more than D digits")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  search->add_option("--checkpoint", sa.checkpoint, "checkpoint file; resumed from when it exists");
  search->add_option("--mr-rounds", sa.mr_rounds, "probable-prime rounds")->capture_default_str()->check(CLI::PositiveNumber);
  search->add_option("--threads", sa.threads, "primality worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  search->add_option("--checkpoint-every", sa.checkpoint_every, "chain steps between checkpoints")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  search->add_option("--max-steps", sa.max_steps, "stop after this many chain steps (0: no limit)")->capture_default_str();

  // seeds
  unsigned seeds_m = 2;
  std::uint64_t seeds_bound = 1000;
  auto* seeds = app.add_subcommand("seeds", "minimal quasisolution seeds with terms up to a bound");
  seeds->add_option("--m", seeds_m, "exponent m")->capture_default_str()->check(CLI::PositiveNumber);
  seeds->add_option("--bound", seeds_bound, "largest term to enumerate")->capture_default_str();

  // residues
  std::uint64_t modulus = 0;
  auto* residues = app.add_subcommand("residues", "period of t_n modulo w");
  residues->add_option("--mod", modulus, "modulus w")->required();

  // lemmas
  std::optional<std::string> only;
  std::uint64_t lemma_bound = 0;
  auto* lemmas = app.add_subcommand("lemmas", "brute-force checks of the divisibility lemmas");
  lemmas->add_option("--only", only, "run a single oracle by id");
  lemmas->add_option("--bound", lemma_bound, "search bound (0: each oracle's default)")->capture_default_str();

  // certify
  std::optional<std::string> ineqs;
  std::optional<std::string> objective;
  bool verify_printed = false;
  bool do_optimize = false;
  auto* certify = app.add_subcommand("certify", "exact checks of log-linear inequality combinations");
  auto* ineqs_opt = certify->add_option("--ineqs", ineqs, "inequality file (label: ca cb cc <= cn c2 c3)")
                        ->check(CLI::ExistingFile);
  auto* verify_opt = certify->add_flag("--verify-paper", verify_printed, "check the built-in multiplier sets");
  auto* optimize_opt = certify->add_flag("--optimize", do_optimize, "find the best certificate");
  certify->add_option("--objective", objective, "objective coefficients \"ca cb cc\" (default \"1 1 1\")");
  verify_opt->excludes(optimize_opt);
  verify_opt->excludes(ineqs_opt);

  // heuristic
  std::uint64_t from = 0;
  std::uint64_t horizon = 0;
  auto* heuristic = app.add_subcommand("heuristic", "tail of sum 1/(ln t_n ln t_{n+1})");
  heuristic->add_option("--from", from, "first index N0 (>= 3)")->required();
  heuristic->add_option("--horizon", horizon, "last index (0: infinity)")->capture_default_str();

  // squares
  std::uint64_t sq_terms = 20;
  std::uint64_t sq_trial = 100000;
  auto* squares = app.add_subcommand("squares", "square divisors of t_n^2+t_n+1 found by trial division");
  squares->add_option("--terms", sq_terms, "rows n = 1..K")->capture_default_str();
  squares->add_option("--trial-bound", sq_trial, "trial division bound")->capture_default_str();

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->add_flag("--json", json, "emit one JSON document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*chain) {
    cmd = {"chain", {{"m", chain_m}, {"terms", chain_terms}}, [&](Json&) { return run_chain(chain_m, chain_terms); }};
  } else if (*search) {
    cmd = {"search",
           {{"m", sa.m},
            {"seed", sa.seed},
            {"digits", sa.digits},
            {"checkpoint", sa.checkpoint ? Json(*sa.checkpoint) : Json(nullptr)},
            {"mr_rounds", sa.mr_rounds},
            {"threads", sa.threads},
            {"checkpoint_every", sa.checkpoint_every},
            {"max_steps", sa.max_steps ? Json(sa.max_steps) : Json(nullptr)}},
           [&](Json& p) { return run_search(sa, p); }};
  } else if (*seeds) {
    cmd = {"seeds", {{"m", seeds_m}, {"bound", seeds_bound}}, [&](Json&) { return run_seeds(seeds_m, seeds_bound); }};
  } else if (*residues) {
    cmd = {"residues", {{"mod", modulus}}, [&](Json&) { return run_residues(modulus); }};
  } else if (*lemmas) {
    cmd = {"lemmas",
           {{"only", only ? Json(*only) : Json(nullptr)}, {"bound", lemma_bound ? Json(lemma_bound) : Json(nullptr)}},
           [&](Json& p) { return run_lemmas(only, lemma_bound, p); }};
  } else if (*certify) {
    const bool optimizing = do_optimize || (ineqs && !verify_printed);
    cmd = {"certify",
           {{"mode", optimizing ? "optimize" : "verify-paper"},
            {"ineqs", ineqs ? Json(*ineqs) : Json(nullptr)},
            {"objective", optimizing ? Json(objective.value_or("1 1 1")) : Json(nullptr)}},
           [&, optimizing](Json&) { return run_certify(ineqs, optimizing, objective); }};
  } else if (*heuristic) {
    cmd = {"heuristic",
           {{"from", from}, {"horizon", horizon ? Json(horizon) : Json(nullptr)}},
           [&](Json&) { return run_heuristic(from, horizon); }};
  } else if (*squares) {
    cmd = {"squares", {{"terms", sq_terms}, {"trial_bound", sq_trial}}, [&](Json&) { return run_squares(sq_terms, sq_trial); }};
  }

  const auto start = std::chrono::steady_clock::now();
  const auto elapsed_ms = [&] {
    const auto d = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    return static_cast<double>(d.count()) / 1000.0;
  };

  Json doc;
  doc["command"] = cmd.name;
  try {
    Outcome o = cmd.run(cmd.params);
    doc["params"] = cmd.params;
    doc["results"] = std::move(o.results);
    if (o.discrepancies) doc["discrepancies"] = std::move(*o.discrepancies);
    if (o.progress) doc["progress"] = std::move(*o.progress);
    doc["elapsed_ms"] = elapsed_ms();
    if (json)
      std::cout << doc.dump(2) << '\n';
    else
      std::cout << o.text;
    return o.ok ? kExitOk : kExitDisagreement;
  } catch (const ApiError& e) {
    std::cerr << "sigmapair " << cmd.name << ": " << sp_status_name(e.status) << ": " << e.message << '\n';
    if (json) {
      doc["params"] = cmd.params;
      doc["error"] = {{"status", sp_status_name(e.status)}, {"message", e.message}};
      doc["elapsed_ms"] = elapsed_ms();
      std::cout << doc.dump(2) << '\n';
    }
    return exit_code_for(e.status);
  } catch (const std::exception& e) {
    std::cerr << "sigmapair " << cmd.name << ": " << e.what() << '\n';
    return kExitFailure;
  }
}
