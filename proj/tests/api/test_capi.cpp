#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <unistd.h>

#include <gmpxx.h>

#include "doctest.h"
#include "json.hpp"
#include "process.hpp"
#include "sigmapair/sigmapair.h"

using nlohmann::json;

namespace {

struct Owned {
  char* p = nullptr;
  ~Owned() { sp_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Report {
  sp_report* r = nullptr;
  ~Report() { sp_report_free(r); }
  json results() const { return json::parse(sp_report_results_json(r)); }
  json discrepancies() const { return json::parse(sp_report_discrepancies_json(r)); }
};

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / ("sp_api_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

}  // namespace

TEST_CASE("status names and last error") {
  CHECK(std::string(sp_version()) == "1.0.0");
  CHECK(std::string(sp_status_name(SP_OK)) == "ok");
  CHECK(std::string(sp_status_name(SP_E_CHECKPOINT_MISMATCH)) == "checkpoint_mismatch");
  for (int s = SP_OK; s <= SP_E_INTERNAL; ++s) CHECK(std::string(sp_status_name(static_cast<sp_status>(s))).size() > 0);

  Owned v;
  CHECK(sp_is_prime("12x", 10, &v.p) == SP_E_PARSE);
  CHECK(std::string(sp_last_error()).size() > 0);
  CHECK(v.p == nullptr);
  CHECK(sp_is_prime(nullptr, 10, &v.p) == SP_E_INVALID_ARGUMENT);
  CHECK(sp_is_prime("97", 10, nullptr) == SP_E_INVALID_ARGUMENT);
  CHECK(sp_is_prime("97", 10, &v.p) == SP_OK);
  CHECK(std::string(sp_last_error()).empty());
  CHECK(json::parse(v.str())["status"] == "prime");
}

TEST_CASE("integers") {
  Owned v, w, s;
  REQUIRE(sp_is_prime("618970019642690137449562111", 20, &v.p) == SP_OK);  // 2^89 - 1
  CHECK(json::parse(v.str())["status"] == "probable_prime");
  REQUIRE(sp_is_prime("147573952589676412927", 20, &w.p) == SP_OK);  // 2^67 - 1
  const json c = json::parse(w.str());
  CHECK(c["status"] == "composite");
  REQUIRE(c.contains("witness"));
  CHECK(c["witness"].is_string());

  REQUIRE(sp_sigma_power("22419767768701", 2, &s.p) == SP_OK);
  const mpz_class p("22419767768701");
  CHECK(mpz_class(s.str()) == 1 + p + p * p);
  Owned bad;
  CHECK(sp_sigma_power("-3", 2, &bad.p) == SP_E_PARSE);
}

TEST_CASE("chain handle") {
  sp_chain* c = nullptr;
  REQUIRE(sp_chain_new(2, nullptr, nullptr, &c) == SP_OK);
  CHECK(sp_chain_index(c) == 2);
  for (int i = 0; i < 3; ++i) REQUIRE(sp_chain_next(c) == SP_OK);
  CHECK(sp_chain_index(c) == 5);
  {
    Owned prev, curr;
    REQUIRE(sp_chain_terms(c, &prev.p, &curr.p) == SP_OK);
    CHECK(prev.str() == "13");
    CHECK(curr.str() == "61");
  }
  Owned only;
  CHECK(sp_chain_terms(c, nullptr, &only.p) == SP_OK);
  CHECK(only.str() == "61");
  for (int i = 0; i < 3; ++i) REQUIRE(sp_chain_prev(c) == SP_OK);
  CHECK(sp_chain_prev(c) == SP_E_BELOW_CHAIN_START);
  CHECK(sp_chain_index(c) == 2);
  sp_chain_free(c);

  sp_chain* bad = nullptr;
  REQUIRE(sp_chain_new(2, "2", "3", &bad) == SP_OK);
  CHECK(sp_chain_next(bad) == SP_E_NON_INTEGRAL_STEP);
  sp_chain_free(bad);
  CHECK(sp_chain_new(0, nullptr, nullptr, &bad) == SP_E_INVALID_ARGUMENT);
  CHECK(sp_chain_new(2, "0", "1", &bad) == SP_E_INVALID_ARGUMENT);
  CHECK(sp_chain_index(nullptr) == 0);
  sp_chain_free(nullptr);
}

TEST_CASE("locate pair") {
  uint64_t n = 0;
  REQUIRE(sp_locate_pair("22419767768701", "107419560853453", 2, &n) == SP_OK);
  CHECK(n == 22);
  REQUIRE(sp_locate_pair("61", "131", 4, &n) == SP_OK);
  CHECK(n == 1);
  CHECK(sp_locate_pair("3", "14", 2, &n) == SP_E_NOT_ON_KNOWN_CHAIN);
}

TEST_CASE("big integers round-trip through JSON") {
  Report r;
  REQUIRE(sp_chain_report(2, 200, &r.r) == SP_OK);
  const json j = r.results();
  REQUIRE(j.size() == 200);
  sp_chain* c = nullptr;
  REQUIRE(sp_chain_new(2, nullptr, nullptr, &c) == SP_OK);
  for (std::size_t i = 2; i < j.size(); ++i) {
    REQUIRE(sp_chain_next(c) == SP_OK);
    Owned curr;
    REQUIRE(sp_chain_terms(c, nullptr, &curr.p) == SP_OK);
    CHECK(j[i]["value"].is_string());
    CHECK(j[i]["n"] == i + 1);
    const mpz_class parsed(j[i]["value"].get<std::string>());
    CHECK(parsed.get_str() == curr.str());
  }
  sp_chain_free(c);
  CHECK(j[199]["value"].get<std::string>().size() > 100);
}

TEST_CASE("sequence, residue and seed reports") {
  Report s, u, bad;
  REQUIRE(sp_sequence_report('s', 6, &s.r) == SP_OK);
  CHECK(s.results()[5]["value"] == "34");
  REQUIRE(sp_sequence_report('u', 8, &u.r) == SP_OK);
  CHECK(u.results().size() == 8);
  CHECK(sp_sequence_report('x', 6, &bad.r) == SP_E_INVALID_ARGUMENT);
  uint64_t period = 0;
  REQUIRE(sp_u_period(&period) == SP_OK);
  CHECK(period == 6);

  Report r11, r9, r7, pattern, seeds;
  REQUIRE(sp_residues_report(11, &r11.r) == SP_OK);
  CHECK(r11.results()[0]["period"] == 12);
  CHECK(sp_residues_report(9, &r9.r) == SP_E_NON_UNIT_RESIDUE);
  CHECK(sp_residues_report(7, &r7.r) == SP_E_PRECONDITION);
  REQUIRE(sp_residue_pattern_report(200, &pattern.r) == SP_OK);
  CHECK(sp_report_ok(pattern.r) == 1);
  CHECK(pattern.results()[0]["violations"].empty());
  REQUIRE(sp_seeds_report(4, 1000, &seeds.r) == SP_OK);
  CHECK(seeds.results().size() == 4);
  CHECK(sp_report_discrepancies_json(seeds.r) == std::string("[]"));
}

TEST_CASE("lemma reports") {
  Owned cat;
  REQUIRE(sp_oracle_catalog(&cat.p) == SP_OK);
  const json c = json::parse(cat.str());
  CHECK(c.size() == 11);
  for (const auto& e : c) {
    CHECK(e["default_bound"].get<uint64_t>() >= e["min_bound"].get<uint64_t>());
    CHECK_FALSE(e["statement"].get<std::string>().empty());
  }

  Report p1q1, gcd, none, tiny;
  REQUIRE(sp_lemmas_report("p1q1", 100, &p1q1.r) == SP_OK);
  CHECK(sp_report_ok(p1q1.r) == 1);
  CHECK(p1q1.results()[0]["witnesses"].size() == 5);
  REQUIRE(sp_lemmas_report("gcd", 0, &gcd.r) == SP_OK);
  CHECK(sp_report_ok(gcd.r) == 0);
  CHECK(sp_lemmas_report("nope", 0, &none.r) == SP_E_INVALID_ARGUMENT);
  CHECK(sp_lemmas_report("gcd", 1, &tiny.r) == SP_E_PRECONDITION);
}

TEST_CASE("certifier reports") {
  Report v;
  REQUIRE(sp_certify_verify_report(&v.r) == SP_OK);
  CHECK(v.results().size() == 8);
  CHECK(v.discrepancies().size() == 4);

  Report def;
  REQUIRE(sp_certify_optimize_report(nullptr, nullptr, &def.r) == SP_OK);
  CHECK(def.results()[0]["derived"]["rhs"]["logN"] == "11/18");

  Report custom;
  REQUIRE(sp_certify_optimize_report("b: 0 5 0 <= 1 1 0\nac: 1 -2 1 <= 0 1 0\n", nullptr, &custom.r) == SP_OK);
  CHECK(custom.results()[0]["derived"]["rhs"]["logN"] == "3/5");
  CHECK(custom.results()[0]["derived"]["rhs"]["log2"] == "8/5");

  Report bc;
  REQUIRE(sp_certify_optimize_report("x: 0 4 2 <= 1 1 0\nAK: 0 0 3 <= 1 0 1\nord: 0 1 -1 <= 0 0 0\n", "0 1 1", &bc.r) ==
          SP_OK);
  CHECK(bc.results()[0]["derived"]["text"] == "beta + gamma <= 5/12 logN + 1/4 log2 + 1/6 log3");

  Report parse, infeasible, objective;
  CHECK(sp_certify_optimize_report("garbage", nullptr, &parse.r) == SP_E_PARSE);
  CHECK(sp_certify_optimize_report("o: 1 -1 0 <= 0 0 0\n", nullptr, &infeasible.r) == SP_E_INFEASIBLE);
  CHECK(sp_certify_optimize_report(nullptr, "1 1", &objective.r) == SP_E_PARSE);

  Owned reg;
  REQUIRE(sp_certify_registry(&reg.p) == SP_OK);
  std::istringstream lines(reg.str());
  int count = 0;
  for (std::string line; std::getline(lines, line);) count += !line.empty();
  CHECK(count == 14);
  Report again;
  CHECK(sp_certify_optimize_report(reg.p, nullptr, &again.r) == SP_OK);
}

TEST_CASE("heuristic and squares reports") {
  Report h, bad, sq;
  REQUIRE(sp_heuristic_report(30, 0, &h.r) == SP_OK);
  CHECK(h.results()[0]["start_index"] == 30);
  CHECK(sp_heuristic_report(2, 0, &bad.r) == SP_E_PRECONDITION);
  REQUIRE(sp_squares_report(10, 1000, &sq.r) == SP_OK);
  CHECK(sq.results().size() == 10);
}

TEST_CASE("search handle") {
  sp_search_options o;
  sp_search_options_default(&o);
  CHECK(o.m == 2);
  CHECK(o.mr_rounds == 40);
  CHECK(o.checkpoint_path == nullptr);
  o.digits = 20;

  sp_search* s = nullptr;
  REQUIRE(sp_search_new(&o, &s) == SP_OK);
  int finished = -1;
  REQUIRE(sp_search_run(s, 0, &finished) == SP_OK);
  CHECK(finished == 1);
  Owned results, pos;
  REQUIRE(sp_search_results_json(s, &results.p) == SP_OK);
  const json r = json::parse(results.str());
  REQUIRE(r.size() == 3);
  CHECK(r[2]["p"] == "22419767768701");
  CHECK(r[2]["index"] == 22);
  REQUIRE(sp_search_position_json(s, &pos.p) == SP_OK);
  CHECK(json::parse(pos.str())["finished"] == true);
  CHECK(sp_search_save(s) == SP_OK);
  sp_search_free(s);

  o.digits = 0;
  CHECK(sp_search_new(&o, &s) == SP_E_INVALID_ARGUMENT);
  CHECK(sp_search_new(nullptr, &s) == SP_E_INVALID_ARGUMENT);
}

TEST_CASE("search checkpoint and resume") {
  TempDir dir;
  const std::string path = (dir.path / "run.ckpt").string();
  sp_search_options o;
  sp_search_options_default(&o);
  o.digits = 40;
  o.checkpoint_every = 7;
  o.checkpoint_path = path.c_str();

  sp_search* full = nullptr;
  REQUIRE(sp_search_new(&o, &full) == SP_OK);
  REQUIRE(sp_search_run(full, 0, nullptr) == SP_OK);
  Owned expected;
  REQUIRE(sp_search_results_json(full, &expected.p) == SP_OK);
  sp_search_free(full);

  sp_search* part = nullptr;
  REQUIRE(sp_search_new(&o, &part) == SP_OK);
  int finished = -1;
  REQUIRE(sp_search_run(part, 15, &finished) == SP_OK);
  CHECK(finished == 0);
  REQUIRE(sp_search_save(part) == SP_OK);
  sp_search_free(part);

  sp_search* resumed = nullptr;
  REQUIRE(sp_search_resume(&o, &resumed) == SP_OK);
  REQUIRE(sp_search_run(resumed, 0, &finished) == SP_OK);
  CHECK(finished == 1);
  Owned got;
  REQUIRE(sp_search_results_json(resumed, &got.p) == SP_OK);
  CHECK(got.str() == expected.str());
  sp_search_free(resumed);

  sp_search_options other = o;
  other.m = 3;
  sp_search* wrong = nullptr;
  CHECK(sp_search_resume(&other, &wrong) == SP_E_CHECKPOINT_MISMATCH);

  std::ofstream(path) << "not a checkpoint\n";
  CHECK(sp_search_resume(&o, &wrong) == SP_E_CHECKPOINT_MISMATCH);
  const std::string missing = (dir.path / "missing.ckpt").string();
  o.checkpoint_path = missing.c_str();
  CHECK(sp_search_resume(&o, &wrong) == SP_E_IO);
}

TEST_CASE("only sp_ symbols are exported") {
  const auto r = sptest::run_command("nm -D --defined-only " + sptest::quoted(SIGMAPAIR_LIBRARY));
  REQUIRE(r.status == 0);
  std::istringstream lines(r.out);
  int exported = 0;
  for (std::string line; std::getline(lines, line);) {
    std::istringstream fields(line);
    std::string addr, type, name;
    fields >> addr >> type >> name;
    if (name.empty() || type == "A") continue;
    CAPTURE(name);
    CHECK(name.rfind("sp_", 0) == 0);
    ++exported;
  }
  CHECK(exported > 30);
}
