#include "netmatch/market.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "netmatch/errors.hpp"

namespace netmatch {
namespace {

constexpr NodeId kFree = std::numeric_limits<NodeId>::max();

Side opposite(Side s) { return s == Side::Woman ? Side::Man : Side::Woman; }

void check_agent(const Market& market, NodeId a) {
  if (a >= market.agent_count()) {
    throw InvalidParameter("unknown agent id " + std::to_string(a));
  }
}

void check_compatible(const Market& market, const SocialCircle& circle) {
  if (market.agent_count() != circle.node_count()) {
    throw InvalidParameter("market and social circle cover different node counts");
  }
}

// Man-proposing deferred acceptance restricted by `recognizes(man, woman)`.
// `pick` chooses which free man moves next; he then keeps proposing until he
// is engaged (run_until_engaged) or makes a single proposal.
template <typename Recognizes, typename Pick>
Matching deferred_acceptance(const Market& market, Recognizes recognizes, Pick pick, bool run_until_engaged) {
  const std::size_t n = market.agent_count();
  std::vector<std::size_t> next(n, 0);
  std::vector<NodeId> fiance(n, kFree);

  std::vector<NodeId> free_men(market.men().rbegin(), market.men().rend());
  while (!free_men.empty()) {
    const std::size_t slot = pick(free_men);
    const NodeId man = free_men[slot];
    const auto prefs = market.preferences(man);
    bool settled = false;  // engaged, or out of candidates
    do {
      if (next[man] >= prefs.size()) {
        settled = true;
        break;
      }
      const NodeId woman = prefs[next[man]++];
      if (!recognizes(man, woman)) {
        continue;
      }
      const NodeId current = fiance[woman];
      if (current == kFree) {
        fiance[woman] = man;
        settled = true;
      } else if (market.prefers(woman, man, current)) {
        fiance[woman] = man;
        free_men.push_back(current);
        settled = true;
      }
      if (!run_until_engaged) {
        break;
      }
    } while (!settled);

    if (settled) {
      // The displaced man, if any, was appended; remove `man` without
      // disturbing the order of the others.
      free_men.erase(free_men.begin() + static_cast<std::ptrdiff_t>(slot));
    }
  }

  std::vector<MatchedPair> pairs;
  for (NodeId woman : market.women()) {
    if (fiance[woman] != kFree) {
      pairs.push_back({woman, fiance[woman]});
    }
  }
  return Matching(n, std::move(pairs));
}

}  // namespace

double score_for_rank(std::size_t rank, std::size_t candidates) {
  if (candidates == 0 || rank < 1 || rank > candidates) {
    throw InvalidParameter("rank out of range");
  }
  if (candidates == 1) {
    return 10.0;
  }
  return 1.0 + 9.0 * static_cast<double>(candidates - rank) / static_cast<double>(candidates - 1);
}

Market::Market(std::vector<Side> sides, std::vector<std::vector<NodeId>> preferences)
    : sides_(std::move(sides)), preferences_(std::move(preferences)) {
  const std::size_t n = sides_.size();
  if (n == 0 || n % 2 != 0) {
    throw InvalidParameter("market needs a positive even agent count, got " + std::to_string(n));
  }
  if (preferences_.size() != n) {
    throw InvalidParameter("one preference list per agent is required");
  }
  for (NodeId a = 0; a < n; ++a) {
    (sides_[a] == Side::Woman ? women_ : men_).push_back(a);
  }
  if (women_.size() != men_.size()) {
    throw InvalidParameter("market sides must be balanced");
  }
  rank_.assign(n * n, 0);
  for (NodeId a = 0; a < n; ++a) {
    const auto& list = preferences_[a];
    if (list.size() != women_.size()) {
      throw InvalidParameter("preference list of agent " + std::to_string(a) + " does not cover the opposite side");
    }
    for (std::size_t pos = 0; pos < list.size(); ++pos) {
      const NodeId b = list[pos];
      if (b >= n || sides_[b] != opposite(sides_[a]) || rank_[a * n + b] != 0) {
        throw InvalidParameter("preference list of agent " + std::to_string(a) + " is not a permutation");
      }
      rank_[a * n + b] = static_cast<std::uint32_t>(pos + 1);
    }
  }
}

std::size_t Market::rank_of(NodeId a, NodeId b) const {
  const std::size_t n = agent_count();
  if (a >= n || b >= n || rank_[a * n + b] == 0) {
    throw InvalidParameter("agents " + std::to_string(a) + " and " + std::to_string(b) + " are not on opposite sides");
  }
  return rank_[a * n + b];
}

double Market::score(NodeId a, NodeId b) const { return score_for_rank(rank_of(a, b), side_size()); }

Market build_market(std::size_t n, RandomSource& rng) {
  if (n < 2 || n % 2 != 0) {
    throw InvalidParameter("market size must be even and at least 2, got " + std::to_string(n));
  }
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  rng.shuffle(std::span<NodeId>(order));
  std::vector<Side> sides(n, Side::Man);
  for (std::size_t i = 0; i < n / 2; ++i) {
    sides[order[i]] = Side::Woman;
  }

  std::vector<NodeId> women;
  std::vector<NodeId> men;
  for (NodeId a = 0; a < n; ++a) {
    (sides[a] == Side::Woman ? women : men).push_back(a);
  }
  std::vector<std::vector<NodeId>> preferences(n);
  for (NodeId a = 0; a < n; ++a) {
    preferences[a] = sides[a] == Side::Woman ? men : women;
    rng.shuffle(std::span<NodeId>(preferences[a]));
  }
  return Market(std::move(sides), std::move(preferences));
}

SocialCircle::SocialCircle(DistanceMatrix distances, unsigned dep) : distances_(std::move(distances)), dep_(dep) {
  if (dep_ < 1) {
    throw InvalidParameter("dep must be at least 1");
  }
}

SocialCircle SocialCircle::everyone(std::size_t n) {
  DistanceMatrix dm(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b) {
        dm(a, b) = 1;
      }
    }
  }
  return SocialCircle(std::move(dm), 1);
}

bool in_circle(const SocialCircle& circle, NodeId a, NodeId b) {
  if (a >= circle.node_count() || b >= circle.node_count()) {
    throw InvalidParameter("agent id out of range");
  }
  return circle.contains(a, b);
}

Matching::Matching(std::size_t n, std::vector<MatchedPair> pairs) : pairs_(std::move(pairs)), partner_(n, kNone) {
  for (const MatchedPair& p : pairs_) {
    if (p.woman >= n || p.man >= n || p.woman == p.man) {
      throw InvalidParameter("matched pair has an invalid agent id");
    }
    if (partner_[p.woman] != kNone || partner_[p.man] != kNone) {
      throw InvalidParameter("agent matched twice");
    }
    partner_[p.woman] = p.man;
    partner_[p.man] = p.woman;
  }
  std::sort(pairs_.begin(), pairs_.end());
}

std::optional<NodeId> Matching::partner(NodeId a) const {
  if (a >= partner_.size()) {
    throw InvalidParameter("unknown agent id " + std::to_string(a));
  }
  if (partner_[a] == kNone) {
    return std::nullopt;
  }
  return partner_[a];
}

Matching restricted_deferred_acceptance(const Market& market, const SocialCircle& circle) {
  check_compatible(market, circle);
  return deferred_acceptance(
      market, [&](NodeId m, NodeId w) { return circle.contains(m, w); },
      [](const std::vector<NodeId>& free_men) { return free_men.size() - 1; }, true);
}

Matching restricted_deferred_acceptance(const Market& market, const SocialCircle& circle, RandomSource& order) {
  check_compatible(market, circle);
  return deferred_acceptance(
      market, [&](NodeId m, NodeId w) { return circle.contains(m, w); },
      [&](const std::vector<NodeId>& free_men) {
        return static_cast<std::size_t>(order.uniform_index(free_men.size()));
      },
      false);
}

Matching classical_gs(const Market& market) {
  return deferred_acceptance(
      market, [](NodeId, NodeId) { return true; },
      [](const std::vector<NodeId>& free_men) { return free_men.size() - 1; }, true);
}

double agent_utility(const Market& market, const Matching& matching, NodeId a) {
  check_agent(market, a);
  if (matching.agent_count() != market.agent_count()) {
    throw InvalidParameter("matching and market cover different node counts");
  }
  const auto partner = matching.partner(a);
  return partner ? market.score(a, *partner) : 0.0;
}

double pair_utility(const Market& market, const Matching& matching, NodeId woman, NodeId man) {
  check_agent(market, woman);
  check_agent(market, man);
  if (matching.partner(woman) != man) {
    throw InvalidParameter("agents " + std::to_string(woman) + " and " + std::to_string(man) + " are not matched");
  }
  return (agent_utility(market, matching, woman) + agent_utility(market, matching, man)) / 2.0;
}

double average_utility(const Market& market, const Matching& matching) {
  double total = 0.0;
  for (const MatchedPair& p : matching.pairs()) {
    total += pair_utility(market, matching, p.woman, p.man);
  }
  return total / static_cast<double>(market.side_size());
}

StabilityResult is_stable(const Market& market, const SocialCircle& circle, const Matching& matching) {
  check_compatible(market, circle);
  for (const MatchedPair& p : matching.pairs()) {
    if (market.side(p.woman) != Side::Woman || market.side(p.man) != Side::Man) {
      throw InvalidParameter("matched pair does not join a woman and a man");
    }
    if (!circle.contains(p.woman, p.man)) {
      throw InvalidParameter("matched pair lies outside the social circle");
    }
  }
  for (NodeId woman : market.women()) {
    const auto her_partner = matching.partner(woman);
    for (NodeId man : market.men()) {
      if (her_partner == man || !circle.contains(woman, man)) {
        continue;
      }
      const bool woman_gains = !her_partner || market.prefers(woman, man, *her_partner);
      if (!woman_gains) {
        continue;
      }
      const auto his_partner = matching.partner(man);
      const bool man_gains = !his_partner || market.prefers(man, woman, *his_partner);
      if (man_gains) {
        return {false, MatchedPair{woman, man}};
      }
    }
  }
  return {};
}

}  // namespace netmatch
