#include "netmatch/netgen.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "netmatch/errors.hpp"

namespace netmatch {
namespace {

std::size_t max_edges(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

void validate_ring(std::size_t n, std::size_t k) {
  if (n < 3) {
    throw InvalidParameter("ring lattice needs n >= 3, got " + std::to_string(n));
  }
  if (k % 2 != 0) {
    throw InvalidParameter("coupling degree k must be even, got " + std::to_string(k));
  }
  if (k < 2 || k > n - 1) {
    throw InvalidParameter("coupling degree k must satisfy 2 <= k <= n-1, got k=" + std::to_string(k) +
                           " n=" + std::to_string(n));
  }
}

std::uint64_t pair_key(NodeId a, NodeId b) {
  if (a > b) {
    std::swap(a, b);
  }
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

bool contains(const std::vector<NodeId>& list, NodeId v) {
  return std::find(list.begin(), list.end(), v) != list.end();
}

void erase_value(std::vector<NodeId>& list, NodeId v) {
  list.erase(std::find(list.begin(), list.end(), v));
}

}  // namespace

Graph generate_ncn(std::size_t n, std::size_t k) {
  validate_ring(n, k);
  std::vector<Edge> edges;
  edges.reserve(n * k / 2);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t j = 1; j <= k / 2; ++j) {
      edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>((u + j) % n)});
    }
  }
  return Graph(n, std::move(edges));
}

Graph generate_er(std::size_t n, std::size_t m, RandomSource& rng) {
  const std::size_t limit = max_edges(n);
  if (m > limit) {
    throw InvalidParameter("edge count m=" + std::to_string(m) + " exceeds n(n-1)/2=" + std::to_string(limit));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  if (2 * m <= limit) {
    // Sparse: draw ordered pairs uniformly and reject loops and existing edges.
    std::unordered_set<std::uint64_t> present;
    present.reserve(2 * m);
    while (edges.size() < m) {
      const auto a = static_cast<NodeId>(rng.uniform_index(n));
      const auto b = static_cast<NodeId>(rng.uniform_index(n));
      if (a == b || !present.insert(pair_key(a, b)).second) {
        continue;
      }
      edges.push_back({a, b});
    }
  } else {
    // Dense: partial Fisher-Yates over the full pair list.
    std::vector<Edge> all;
    all.reserve(limit);
    for (NodeId a = 0; a < n; ++a) {
      for (NodeId b = a + 1; b < n; ++b) {
        all.push_back({a, b});
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.uniform_index(all.size() - i));
      std::swap(all[i], all[j]);
      edges.push_back(all[i]);
    }
  }
  return Graph(n, std::move(edges));
}

Graph generate_er_gnp(std::size_t n, double p, RandomSource& rng) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidParameter("edge probability must lie in [0, 1]");
  }
  const std::size_t limit = max_edges(n);
  std::size_t m = 0;
  for (std::size_t i = 0; i < limit; ++i) {
    m += rng.bernoulli(p) ? 1 : 0;
  }
  return generate_er(n, m, rng);
}

Graph generate_ws(std::size_t n, std::size_t k, double p_rewire, RandomSource& rng) {
  validate_ring(n, k);
  if (!(p_rewire >= 0.0 && p_rewire <= 1.0)) {
    throw InvalidParameter("rewiring probability must lie in [0, 1]");
  }
  std::vector<std::vector<NodeId>> adj(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t j = 1; j <= k / 2; ++j) {
      const auto v = static_cast<NodeId>((u + j) % n);
      adj[u].push_back(v);
      adj[v].push_back(static_cast<NodeId>(u));
    }
  }

  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t j = 1; j <= k / 2; ++j) {
      if (!rng.bernoulli(p_rewire)) {
        continue;
      }
      const auto from = static_cast<NodeId>(u);
      const auto old_end = static_cast<NodeId>((u + j) % n);
      for (std::size_t attempt = 0; attempt < n; ++attempt) {
        const auto w = static_cast<NodeId>(rng.uniform_index(n));
        if (w == from || contains(adj[from], w)) {
          continue;
        }
        erase_value(adj[from], old_end);
        erase_value(adj[old_end], from);
        adj[from].push_back(w);
        adj[w].push_back(from);
        break;
      }
    }
  }

  std::vector<Edge> edges;
  edges.reserve(n * k / 2);
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b : adj[a]) {
      if (a < b) {
        edges.push_back({a, b});
      }
    }
  }
  return Graph(n, std::move(edges));
}

Graph generate_ba(std::size_t n, std::size_t m_attach, RandomSource& rng) {
  if (m_attach < 1 || m_attach >= n) {
    throw InvalidParameter("attachment count must satisfy 1 <= m_attach < n, got m_attach=" +
                           std::to_string(m_attach) + " n=" + std::to_string(n));
  }
  const std::size_t seed_nodes = m_attach + 1;
  std::vector<Edge> edges;
  edges.reserve(max_edges(seed_nodes) + m_attach * (n - seed_nodes));
  // Every edge contributes both endpoints, so a uniform draw from this list is
  // a degree-proportional draw over nodes.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * edges.capacity());

  for (NodeId a = 0; a < seed_nodes; ++a) {
    for (NodeId b = a + 1; b < seed_nodes; ++b) {
      edges.push_back({a, b});
      endpoints.push_back(a);
      endpoints.push_back(b);
    }
  }

  std::vector<NodeId> targets;
  targets.reserve(m_attach);
  for (auto v = static_cast<NodeId>(seed_nodes); v < n; ++v) {
    targets.clear();
    while (targets.size() < m_attach) {
      const NodeId t = endpoints[rng.uniform_index(endpoints.size())];
      if (!contains(targets, t)) {
        targets.push_back(t);
      }
    }
    for (NodeId t : targets) {
      edges.push_back({t, v});
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace netmatch
