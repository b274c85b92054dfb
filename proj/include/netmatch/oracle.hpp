#pragma once

#include <cstddef>
#include <vector>

#include "netmatch/market.hpp"

namespace netmatch::oracle {

inline constexpr std::size_t kMaxEnumerationAgents = 12;

/// Every partial matching whose pairs all lie inside the circle and which
/// passes is_stable. Throws CapacityError above kMaxEnumerationAgents and
/// OracleViolation if no stable matching turns up.
std::vector<Matching> enumerate_stable_matchings(const Market& market, const SocialCircle& circle);

/// The candidate every man weakly prefers to every other candidate (being
/// unmatched is worst). Equal duplicates are allowed; the first is returned.
/// Throws OracleViolation when no such candidate exists or two distinct ones
/// qualify.
Matching man_optimal(const std::vector<Matching>& candidates, const Market& market);

// True when `man` weakly prefers his partner in `a` to his partner in `b`.
bool man_weakly_prefers(const Market& market, NodeId man, const Matching& a, const Matching& b);

}  // namespace netmatch::oracle
