#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "netmatch/graph.hpp"
#include "netmatch/random.hpp"
#include "netmatch/topology.hpp"

namespace netmatch {

enum class Side : std::uint8_t { Woman, Man };

/// Two-sided marriage market over node ids 0..n-1.
///
/// Every agent holds a strict ranking of the whole opposite side. Scores are a
/// fixed function of rank position: the favourite scores 10, the least
/// favourite 1, linear in between. Proposals and acceptances compare ranks, so
/// no ties arise even when there are more than ten candidates.
class Market {
 public:
  Market() = default;
  // `preferences[a]` lists the opposite side of agent a, best first. Throws
  // InvalidParameter unless the sides are balanced and every list is a
  // permutation of the opposite side.
  Market(std::vector<Side> sides, std::vector<std::vector<NodeId>> preferences);

  std::size_t agent_count() const { return sides_.size(); }
  // Candidates per agent, n/2.
  std::size_t side_size() const { return women_.size(); }

  Side side(NodeId a) const { return sides_.at(a); }
  const std::vector<NodeId>& women() const { return women_; }
  const std::vector<NodeId>& men() const { return men_; }

  std::span<const NodeId> preferences(NodeId a) const { return preferences_.at(a); }
  // 1-based position of b in a's ranking.
  std::size_t rank_of(NodeId a, NodeId b) const;
  // True when a ranks b strictly ahead of c.
  bool prefers(NodeId a, NodeId b, NodeId c) const { return rank_of(a, b) < rank_of(a, c); }
  double score(NodeId a, NodeId b) const;

  friend bool operator==(const Market& x, const Market& y) {
    return x.sides_ == y.sides_ && x.preferences_ == y.preferences_;
  }

 private:
  std::vector<Side> sides_;
  std::vector<NodeId> women_;
  std::vector<NodeId> men_;
  std::vector<std::vector<NodeId>> preferences_;
  std::vector<std::uint32_t> rank_;  // n*n, 1-based, 0 for same-side pairs
};

// Score of the candidate at 1-based rank position `rank` among `candidates`.
double score_for_rank(std::size_t rank, std::size_t candidates);

/// Random balanced gender split followed by an independent uniform ranking
/// per agent. Requires even n >= 2.
Market build_market(std::size_t n, RandomSource& rng);

/// Agents within `dep` hops of each other recognise each other.
class SocialCircle {
 public:
  SocialCircle(DistanceMatrix distances, unsigned dep);
  // Everybody within reach of everybody: the complete-information setting.
  static SocialCircle everyone(std::size_t n);

  const DistanceMatrix& distances() const { return distances_; }
  unsigned dep() const { return dep_; }
  std::size_t node_count() const { return distances_.node_count(); }
  bool contains(NodeId a, NodeId b) const { return distances_(a, b) <= dep_; }

 private:
  DistanceMatrix distances_;
  unsigned dep_;
};

bool in_circle(const SocialCircle& circle, NodeId a, NodeId b);

struct MatchedPair {
  NodeId woman;
  NodeId man;

  friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
  friend auto operator<=>(const MatchedPair&, const MatchedPair&) = default;
};

/// Partial one-to-one pairing. Pairs are kept sorted by woman id.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::size_t n) : partner_(n, kNone) {}
  // Throws InvalidParameter when an id repeats or is out of range.
  Matching(std::size_t n, std::vector<MatchedPair> pairs);

  std::size_t agent_count() const { return partner_.size(); }
  const std::vector<MatchedPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  std::optional<NodeId> partner(NodeId a) const;
  bool is_matched(NodeId a) const { return partner(a).has_value(); }

  friend bool operator==(const Matching& a, const Matching& b) { return a.partner_ == b.partner_; }

 private:
  static constexpr NodeId kNone = std::numeric_limits<NodeId>::max();
  std::vector<MatchedPair> pairs_;
  std::vector<NodeId> partner_;
};

/// Man-proposing deferred acceptance where each man only proposes to women in
/// his social circle. Free men wait on a stack that starts with the lowest id
/// on top. Men who exhaust their recognised women stay unmatched.
Matching restricted_deferred_acceptance(const Market& market, const SocialCircle& circle);

/// Same algorithm, but at every step a uniformly random free man makes one
/// proposal. The outcome does not depend on the order.
Matching restricted_deferred_acceptance(const Market& market, const SocialCircle& circle, RandomSource& order);

/// Complete-information man-proposing Gale–Shapley. Always perfect.
Matching classical_gs(const Market& market);

// Score the agent gives its partner; 0 when unmatched.
double agent_utility(const Market& market, const Matching& matching, NodeId a);
// Mean of both partners' utilities. Throws unless (woman, man) is matched.
double pair_utility(const Market& market, const Matching& matching, NodeId woman, NodeId man);
// Sum of pair utilities over the n/2 potential pairs.
double average_utility(const Market& market, const Matching& matching);

struct StabilityResult {
  bool stable = true;
  std::optional<MatchedPair> blocking_pair;

  explicit operator bool() const { return stable; }
};

/// Looks for an in-circle (woman, man) pair who both strictly prefer each
/// other to their current state, unmatched counting as worst. The first pair
/// found in (woman id, man id) order is reported. Throws InvalidParameter if
/// the matching pairs agents outside each other's circle or of the same side.
StabilityResult is_stable(const Market& market, const SocialCircle& circle, const Matching& matching);

}  // namespace netmatch
