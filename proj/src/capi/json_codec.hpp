#pragma once

// JSON encodings of the core types. Big integers and rationals are strings
// ("12345", "-7/36") so nothing is lost to floating point.

#include "json.hpp"

#include "certifier.hpp"
#include "oracles.hpp"
#include "pair_search.hpp"
#include "primality.hpp"
#include "residue.hpp"

namespace sigmapair {

using Json = nlohmann::ordered_json;

Json to_json(const PrimalityVerdict& v);
Json to_json(const PairRecord& r);
Json to_json(const ResidueProfile& p);
Json to_json(const ResiduePatternReport& r);
Json to_json(const OracleReport& r);
Json to_json(const Inequality& in);
Json to_json(const Certificate& c);
Json to_json(const Verification& v);
Json to_json(const Discrepancy& d);
Json to_json(const HeuristicTail& h, std::uint64_t start_index);
Json to_json(const SquareProbeRow& row);

Json multipliers_json(const std::vector<std::pair<std::string, mpq_class>>& m);
Json tuple_json(const Tuple& t);

}  // namespace sigmapair
