#pragma once

#include <vector>

#include <json.hpp>

#include "netmatch/harness.hpp"
#include "netmatch/market.hpp"
#include "netmatch/topology.hpp"

namespace netmatch {

// {n, m, average_degree, degree_histogram, apl, reachable_pairs, connectivity, dep}
// apl is null when no pair is reachable; histogram keys are decimal strings.
nlohmann::json to_json(const TopologyReport& report);

// {pairs: [{woman, man, distance, pair_utility}], unmatched_women,
//  unmatched_men, average_utility}
nlohmann::json matching_to_json(const Market& market, const SocialCircle& circle, const Matching& matching);

// {n, sides: ["W"|"M", ...], preferences: [[...], ...]}
nlohmann::json market_to_json(const Market& market);
// Throws InvalidParameter on malformed input.
Market market_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const ExperimentResult& result);
nlohmann::json to_json(const std::vector<ExperimentResult>& results);

}  // namespace netmatch
