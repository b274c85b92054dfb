#include "netmatch/serialize.hpp"

#include <string>

#include "netmatch/errors.hpp"

namespace netmatch {

using nlohmann::json;

json to_json(const TopologyReport& report) {
  json histogram = json::object();
  for (const auto& [degree, count] : report.degree_histogram) {
    histogram[std::to_string(degree)] = count;
  }
  return json{{"n", report.n},
              {"m", report.m},
              {"average_degree", report.average_degree},
              {"degree_histogram", histogram},
              {"apl", report.apl ? json(*report.apl) : json(nullptr)},
              {"reachable_pairs", report.reachable_pairs},
              {"connectivity", report.connectivity},
              {"dep", report.dep}};
}

json matching_to_json(const Market& market, const SocialCircle& circle, const Matching& matching) {
  json pairs = json::array();
  for (const MatchedPair& p : matching.pairs()) {
    pairs.push_back({{"woman", p.woman},
                     {"man", p.man},
                     {"distance", circle.distances()(p.woman, p.man)},
                     {"pair_utility", pair_utility(market, matching, p.woman, p.man)}});
  }
  json unmatched_women = json::array();
  for (NodeId w : market.women()) {
    if (!matching.is_matched(w)) {
      unmatched_women.push_back(w);
    }
  }
  json unmatched_men = json::array();
  for (NodeId m : market.men()) {
    if (!matching.is_matched(m)) {
      unmatched_men.push_back(m);
    }
  }
  return json{{"pairs", pairs},
              {"unmatched_women", unmatched_women},
              {"unmatched_men", unmatched_men},
              {"average_utility", average_utility(market, matching)}};
}

json market_to_json(const Market& market) {
  json sides = json::array();
  json preferences = json::array();
  for (NodeId a = 0; a < market.agent_count(); ++a) {
    sides.push_back(market.side(a) == Side::Woman ? "W" : "M");
    const auto list = market.preferences(a);
    preferences.push_back(std::vector<NodeId>(list.begin(), list.end()));
  }
  return json{{"n", market.agent_count()}, {"sides", sides}, {"preferences", preferences}};
}

Market market_from_json(const json& doc) {
  try {
    const auto& sides_doc = doc.at("sides");
    std::vector<Side> sides;
    for (const auto& s : sides_doc) {
      const auto tag = s.get<std::string>();
      if (tag == "W") {
        sides.push_back(Side::Woman);
      } else if (tag == "M") {
        sides.push_back(Side::Man);
      } else {
        throw InvalidParameter("market: side must be \"W\" or \"M\", got \"" + tag + "\"");
      }
    }
    auto preferences = doc.at("preferences").get<std::vector<std::vector<NodeId>>>();
    if (doc.contains("n") && doc.at("n").get<std::size_t>() != sides.size()) {
      throw InvalidParameter("market: n does not match the number of sides");
    }
    return Market(std::move(sides), std::move(preferences));
  } catch (const json::exception& e) {
    throw InvalidParameter(std::string("market: malformed JSON: ") + e.what());
  }
}

json to_json(const ExperimentResult& r) {
  return json{{"model", model_name(r.model)},
              {"n", r.n},
              {"k", r.k},
              {"dep", r.dep},
              {"p_rewire", r.p_rewire},
              {"seed", r.seed},
              {"average_utility", r.average_utility},
              {"apl", r.apl ? json(*r.apl) : json(nullptr)},
              {"connectivity", r.connectivity},
              {"matched_pairs", r.matched_pairs},
              {"runtime_ms", r.runtime_ms}};
}

json to_json(const std::vector<ExperimentResult>& results) {
  json rows = json::array();
  for (const auto& r : results) {
    rows.push_back(to_json(r));
  }
  return rows;
}

}  // namespace netmatch
