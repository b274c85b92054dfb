#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "netmatch/graph.hpp"

namespace netmatch {

/// All-pairs hop distances. Unreachable pairs hold kUnreachable, which compares
/// greater than every real distance so `distance(a, b) <= dep` is safe to use
/// directly.
class DistanceMatrix {
 public:
  using Distance = std::uint32_t;
  static constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), dist_(n * n, kUnreachable) {
    for (std::size_t i = 0; i < n; ++i) {
      dist_[i * n + i] = 0;
    }
  }

  std::size_t node_count() const { return n_; }
  Distance operator()(std::size_t a, std::size_t b) const { return dist_[a * n_ + b]; }
  Distance& operator()(std::size_t a, std::size_t b) { return dist_[a * n_ + b]; }
  bool reachable(std::size_t a, std::size_t b) const { return (*this)(a, b) != kUnreachable; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Distance> dist_;
};

struct PathLengthStats {
  std::optional<double> mean;         // empty when no pair is reachable
  std::uint64_t reachable_pairs = 0;  // unordered pairs i > j
};

struct TopologyReport {
  std::size_t n = 0;
  std::size_t m = 0;
  double average_degree = 0.0;
  std::map<std::size_t, std::size_t> degree_histogram;
  std::optional<double> apl;
  std::uint64_t reachable_pairs = 0;
  double connectivity = 0.0;
  unsigned dep = 0;
};

// Breadth-first search from every node.
DistanceMatrix all_pairs_shortest(const Graph& graph);

double average_degree(const Graph& graph);
std::map<std::size_t, std::size_t> degree_distribution(const Graph& graph);

// Mean distance over reachable unordered pairs.
PathLengthStats average_path_length(const DistanceMatrix& dm);

// Largest finite distance; 0 for graphs with fewer than two nodes.
DistanceMatrix::Distance diameter(const DistanceMatrix& dm);
bool is_connected(const DistanceMatrix& dm);

// Fraction of all n(n-1)/2 unordered pairs at distance <= dep.
double connectivity(const DistanceMatrix& dm, unsigned dep);

// Truncated Poisson series sum_{l=1..dep} lambda^l e^-lambda / l!. Predicts
// the connectivity of an ER graph whose APL is lambda.
double poisson_connectivity(double lambda, unsigned dep);

TopologyReport topology_report(const Graph& graph, const DistanceMatrix& dm, unsigned dep);

}  // namespace netmatch
