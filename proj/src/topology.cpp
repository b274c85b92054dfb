#include "netmatch/topology.hpp"

#include <cmath>
#include <string>

#include "netmatch/errors.hpp"

namespace netmatch {

DistanceMatrix all_pairs_shortest(const Graph& graph) {
  const std::size_t n = graph.node_count();
  DistanceMatrix dm(n);
  std::vector<NodeId> queue(n);
  for (NodeId source = 0; source < n; ++source) {
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = source;
    while (head < tail) {
      const NodeId v = queue[head++];
      const auto next = dm(source, v) + 1;
      for (NodeId w : graph.neighbors(v)) {
        if (dm(source, w) == DistanceMatrix::kUnreachable) {
          dm(source, w) = next;
          queue[tail++] = w;
        }
      }
    }
  }
  return dm;
}

double average_degree(const Graph& graph) {
  if (graph.node_count() == 0) {
    throw InvalidParameter("average degree of an empty graph is undefined");
  }
  return 2.0 * static_cast<double>(graph.edge_count()) / static_cast<double>(graph.node_count());
}

std::map<std::size_t, std::size_t> degree_distribution(const Graph& graph) {
  std::map<std::size_t, std::size_t> histogram;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    ++histogram[graph.degree(v)];
  }
  return histogram;
}

PathLengthStats average_path_length(const DistanceMatrix& dm) {
  PathLengthStats stats;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < dm.node_count(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (dm.reachable(i, j)) {
        total += dm(i, j);
        ++stats.reachable_pairs;
      }
    }
  }
  if (stats.reachable_pairs > 0) {
    stats.mean = static_cast<double>(total) / static_cast<double>(stats.reachable_pairs);
  }
  return stats;
}

DistanceMatrix::Distance diameter(const DistanceMatrix& dm) {
  DistanceMatrix::Distance widest = 0;
  for (std::size_t i = 0; i < dm.node_count(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (dm.reachable(i, j) && dm(i, j) > widest) {
        widest = dm(i, j);
      }
    }
  }
  return widest;
}

bool is_connected(const DistanceMatrix& dm) {
  for (std::size_t j = 1; j < dm.node_count(); ++j) {
    if (!dm.reachable(0, j)) {
      return false;
    }
  }
  return true;
}

double connectivity(const DistanceMatrix& dm, unsigned dep) {
  if (dep < 1) {
    throw InvalidParameter("dep must be at least 1");
  }
  const std::size_t n = dm.node_count();
  if (n < 2) {
    return 0.0;
  }
  std::uint64_t within = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (dm(i, j) <= dep) {
        ++within;
      }
    }
  }
  return static_cast<double>(within) / (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
}

double poisson_connectivity(double lambda, unsigned dep) {
  if (!(lambda > 0.0)) {
    throw InvalidParameter("poisson_connectivity requires lambda > 0");
  }
  if (dep < 1) {
    throw InvalidParameter("dep must be at least 1");
  }
  double term = std::exp(-lambda);  // l = 0
  double sum = 0.0;
  for (unsigned l = 1; l <= dep; ++l) {
    term *= lambda / static_cast<double>(l);
    sum += term;
  }
  return sum;
}

TopologyReport topology_report(const Graph& graph, const DistanceMatrix& dm, unsigned dep) {
  if (dm.node_count() != graph.node_count()) {
    throw InvalidParameter("distance matrix size does not match graph");
  }
  TopologyReport report;
  report.n = graph.node_count();
  report.m = graph.edge_count();
  report.average_degree = average_degree(graph);
  report.degree_histogram = degree_distribution(graph);
  const PathLengthStats paths = average_path_length(dm);
  report.apl = paths.mean;
  report.reachable_pairs = paths.reachable_pairs;
  report.connectivity = connectivity(dm, dep);
  report.dep = dep;
  return report;
}

}  // namespace netmatch
