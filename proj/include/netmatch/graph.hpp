#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace netmatch {

using NodeId = std::uint32_t;

// Undirected edge with first < second.
struct Edge {
  NodeId u;
  NodeId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph over node ids 0..n-1.
///
/// Construction validates the edge set: no self-loops, no repeated edges and
/// no out-of-range endpoints. Edges are kept sorted by (min id, max id) and
/// each adjacency list is sorted ascending, so two graphs with the same edge
/// set compare equal and serialize identically.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  // Endpoints may be given in either order. Throws InvalidParameter on a
  // self-loop, duplicate, or out-of-range endpoint.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_.at(v); }
  std::size_t degree(NodeId v) const { return adjacency_.at(v).size(); }
  bool has_edge(NodeId a, NodeId b) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.node_count() == b.node_count(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> adjacency_;
};

// Edge-list text format: a header line "N M", then M lines "u v" with u < v.
void write_edge_list(std::ostream& out, const Graph& graph);
Graph read_edge_list(std::istream& in);

void save_edge_list(const std::string& path, const Graph& graph);
Graph load_edge_list(const std::string& path);

}  // namespace netmatch
