#pragma once

#include <cstddef>

#include "netmatch/graph.hpp"
#include "netmatch/random.hpp"

namespace netmatch {

/// Nearest-neighbor coupled ring: node i is linked to i±1, ..., i±k/2 (mod n).
/// Requires n >= 3, k even and 2 <= k <= n-1. Deterministic.
Graph generate_ncn(std::size_t n, std::size_t k);

/// Erdős–Rényi G(n, M): exactly `m` distinct edges, each added uniformly
/// from the pairs not yet present. Requires m <= n(n-1)/2.
Graph generate_er(std::size_t n, std::size_t m, RandomSource& rng);

/// G(n, p) convenience form: draws M ~ Binomial(n(n-1)/2, p) and delegates to
/// generate_er.
Graph generate_er_gnp(std::size_t n, double p, RandomSource& rng);

/// Watts–Strogatz rewiring of generate_ncn(n, k). Each lattice edge (u, u+j),
/// visited in order of u then j, keeps u and with probability p_rewire moves
/// its other end to a uniform random node. Candidates forming a self-loop or
/// a duplicate are redrawn, at most n times, after which the edge stays put.
/// Edge count is always nk/2.
Graph generate_ws(std::size_t n, std::size_t k, double p_rewire, RandomSource& rng);

/// Barabási–Albert growth. Seeds a complete graph on m_attach+1 nodes, then
/// each new node links to m_attach distinct existing nodes drawn with
/// probability proportional to degree (without replacement). Requires
/// 1 <= m_attach < n. The result is connected with
/// C(m_attach+1, 2) + m_attach*(n - m_attach - 1) edges.
Graph generate_ba(std::size_t n, std::size_t m_attach, RandomSource& rng);

}  // namespace netmatch
