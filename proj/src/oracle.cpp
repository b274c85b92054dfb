#include "netmatch/oracle.hpp"

#include <string>

#include "netmatch/errors.hpp"

namespace netmatch::oracle {
namespace {

void extend(const Market& market, const SocialCircle& circle, std::size_t woman_index, std::vector<bool>& used,
            std::vector<MatchedPair>& pairs, std::vector<Matching>& out) {
  const auto& women = market.women();
  if (woman_index == women.size()) {
    Matching candidate(market.agent_count(), pairs);
    if (is_stable(market, circle, candidate)) {
      out.push_back(std::move(candidate));
    }
    return;
  }
  const NodeId woman = women[woman_index];
  extend(market, circle, woman_index + 1, used, pairs, out);
  for (std::size_t m = 0; m < market.men().size(); ++m) {
    const NodeId man = market.men()[m];
    if (used[m] || !circle.contains(woman, man)) {
      continue;
    }
    used[m] = true;
    pairs.push_back({woman, man});
    extend(market, circle, woman_index + 1, used, pairs, out);
    pairs.pop_back();
    used[m] = false;
  }
}

}  // namespace

std::vector<Matching> enumerate_stable_matchings(const Market& market, const SocialCircle& circle) {
  if (market.agent_count() > kMaxEnumerationAgents) {
    throw CapacityError("exhaustive enumeration is limited to " + std::to_string(kMaxEnumerationAgents) +
                        " agents, got " + std::to_string(market.agent_count()));
  }
  if (circle.node_count() != market.agent_count()) {
    throw InvalidParameter("market and social circle cover different node counts");
  }
  std::vector<Matching> stable;
  std::vector<bool> used(market.men().size(), false);
  std::vector<MatchedPair> pairs;
  extend(market, circle, 0, used, pairs, stable);
  if (stable.empty()) {
    throw OracleViolation("no stable matching found");
  }
  return stable;
}

bool man_weakly_prefers(const Market& market, NodeId man, const Matching& a, const Matching& b) {
  const auto in_a = a.partner(man);
  const auto in_b = b.partner(man);
  if (!in_b) {
    return true;
  }
  if (!in_a) {
    return false;
  }
  return *in_a == *in_b || market.prefers(man, *in_a, *in_b);
}

Matching man_optimal(const std::vector<Matching>& candidates, const Market& market) {
  const Matching* best = nullptr;
  for (const Matching& c : candidates) {
    bool dominates = true;
    for (const Matching& other : candidates) {
      for (NodeId man : market.men()) {
        if (!man_weakly_prefers(market, man, c, other)) {
          dominates = false;
          break;
        }
      }
      if (!dominates) {
        break;
      }
    }
    if (!dominates) {
      continue;
    }
    if (best == nullptr) {
      best = &c;
    } else if (!(*best == c)) {
      throw OracleViolation("two distinct man-optimal candidates");
    }
  }
  if (best == nullptr) {
    throw OracleViolation("no candidate is weakly preferred by every man");
  }
  return *best;
}

}  // namespace netmatch::oracle
