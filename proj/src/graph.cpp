#include "netmatch/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "netmatch/errors.hpp"

namespace netmatch {

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph::Graph(std::size_t n, std::vector<Edge> edges) : edges_(std::move(edges)), adjacency_(n) {
  for (Edge& e : edges_) {
    if (e.u == e.v) {
      throw InvalidParameter("self-loop on node " + std::to_string(e.u));
    }
    if (e.u >= n || e.v >= n) {
      throw InvalidParameter("edge endpoint out of range for n=" + std::to_string(n));
    }
    if (e.u > e.v) {
      std::swap(e.u, e.v);
    }
  }
  std::sort(edges_.begin(), edges_.end());
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InvalidParameter("repeated edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v));
  }
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
  }
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  if (a >= node_count() || b >= node_count()) {
    return false;
  }
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

void write_edge_list(std::ostream& out, const Graph& graph) {
  out << graph.node_count() << ' ' << graph.edge_count() << '\n';
  for (const Edge& e : graph.edges()) {
    out << e.u << ' ' << e.v << '\n';
  }
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw InvalidParameter("edge list: missing header line");
  }
  std::istringstream header(line);
  long long n = -1;
  long long m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0) {
    throw InvalidParameter("edge list: malformed header '" + line + "'");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!std::getline(in, line)) {
      throw InvalidParameter("edge list: expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    if (!(row >> u >> v) || u < 0 || v < 0) {
      throw InvalidParameter("edge list: malformed edge line '" + line + "'");
    }
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
  }
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

void save_edge_list(const std::string& path, const Graph& graph) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  write_edge_list(out, graph);
  if (!out) {
    throw IoError("write to '" + path + "' failed");
  }
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path + "' for reading");
  }
  return read_edge_list(in);
}

}  // namespace netmatch
