#include "json_codec.hpp"

#include <cmath>

namespace sigmapair {

namespace {

std::string q_str(const mpq_class& v) { return v.get_str(10); }

double ms(std::chrono::nanoseconds d) { return std::round(static_cast<double>(d.count()) / 1e3) / 1e3; }

}  // namespace

Json to_json(const PrimalityVerdict& v) {
  Json j;
  switch (v.status) {
    case PrimalityStatus::Prime: j["status"] = "prime"; break;
    case PrimalityStatus::ProbablePrime: j["status"] = "probable_prime"; break;
    case PrimalityStatus::Composite: j["status"] = "composite"; break;
  }
  j["rounds"] = v.rounds;
  if (v.witness) j["witness"] = v.witness->to_string();
  return j;
}

Json to_json(const PairRecord& r) {
  Json j;
  j["m"] = r.m;
  j["index"] = r.index;
  j["p"] = r.p.to_string();
  j["q"] = r.q.to_string();
  j["p_verdict"] = to_json(r.p_verdict);
  j["q_verdict"] = to_json(r.q_verdict);
  j["digits_q"] = r.digits_q;
  return j;
}

Json to_json(const ResidueProfile& p) {
  Json j;
  j["modulus"] = p.modulus;
  j["period"] = p.period;
  j["cycle"] = p.cycle;
  j["palindromic"] = p.palindromic;
  j["mirror_shift"] = p.mirror_shift ? Json(*p.mirror_shift) : Json(nullptr);
  return j;
}

Json to_json(const ResiduePatternReport& r) {
  Json j;
  j["terms"] = r.terms;
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"n", x.n}, {"modulus", x.modulus}, {"residue", x.residue}});
  j["violations"] = std::move(v);
  j["exceptions"] = r.exceptions;
  return j;
}

Json tuple_json(const Tuple& t) {
  Json j = Json::array();
  for (const Nat& x : t) j.push_back(x.to_string());
  return j;
}

Json to_json(const OracleReport& r) {
  Json j;
  j["lemma_id"] = r.lemma_id;
  j["bound"] = r.bound;
  Json w = Json::array();
  for (const auto& t : r.witnesses) w.push_back(tuple_json(t));
  Json e = Json::array();
  for (const auto& t : r.expected) e.push_back(tuple_json(t));
  j["witnesses"] = std::move(w);
  j["expected"] = std::move(e);
  j["agrees"] = r.agrees;
  j["notes"] = r.notes;
  j["elapsed_ms"] = ms(r.elapsed);
  return j;
}

Json to_json(const Inequality& in) {
  const Inequality n = normalized(in);
  Json j;
  j["label"] = in.label;
  j["lhs"] = {{"alpha", q_str(n.lhs.ca)}, {"beta", q_str(n.lhs.cb)}, {"gamma", q_str(n.lhs.cc)}};
  j["rhs"] = {{"logN", q_str(n.rhs.cn)}, {"log2", q_str(n.rhs.c2)}, {"log3", q_str(n.rhs.c3)}};
  j["text"] = describe(in);
  return j;
}

Json multipliers_json(const std::vector<std::pair<std::string, mpq_class>>& m) {
  Json j = Json::object();
  for (const auto& [label, w] : m) j[label] = q_str(w);
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["multipliers"] = multipliers_json(c.multipliers);
  j["derived"] = to_json(c.derived);
  return j;
}

Json to_json(const Verification& v) {
  Json j;
  j["name"] = v.name;
  j["multipliers"] = multipliers_json(v.multipliers);
  j["derived"] = to_json(v.derived);
  j["stated"] = to_json(v.stated);
  j["matches"] = v.matches;
  return j;
}

Json to_json(const Discrepancy& d) {
  return {{"id", d.id}, {"description", d.description}, {"stated", d.stated}, {"computed", d.computed}};
}

Json to_json(const HeuristicTail& h, std::uint64_t start_index) {
  Json j;
  j["start_index"] = start_index;
  j["horizon"] = h.horizon ? Json(*h.horizon) : Json(nullptr);
  j["value"] = h.value;
  j["offset"] = h.offset;
  j["exact_terms"] = h.exact_terms;
  return j;
}

Json to_json(const SquareProbeRow& row) {
  return {{"n", row.n}, {"l_lower", row.l_lower.to_string()}, {"s_lower", row.s_lower.to_string()}};
}

}  // namespace sigmapair
