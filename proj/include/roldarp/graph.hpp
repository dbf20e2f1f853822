#pragma once

#include <optional>
#include <vector>

#include "roldarp/types.hpp"

namespace roldarp {

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  Weight w = 0;

  bool operator==(const Edge&) const = default;
};

// Weighted undirected graph on nodes 0..n-1 with a designated origin. Stored
// as a dense symmetric matrix; a zero entry off the diagonal means "no edge".
class Graph {
 public:
  Graph() = default;

  // Throws InvalidEdge / DuplicateEdge on malformed entries. Completeness is
  // not required here; validate_instance checks it.
  static Graph from_edges(int node_count, NodeId origin, const std::vector<Edge>& edges,
                          bool unit_flag);

  // Complete graph with every weight equal to 1.
  static Graph unit_complete(int node_count, NodeId origin);

  int node_count() const { return n_; }
  NodeId origin() const { return origin_; }
  bool unit_flag() const { return unit_flag_; }

  bool has_edge(NodeId a, NodeId b) const;
  // Travel time between two nodes; 0 when a == b. Throws InvalidEdge when the
  // pair has no edge.
  Weight weight(NodeId a, NodeId b) const;

  bool contains(NodeId v) const { return v >= 0 && v < n_; }
  bool is_complete() const;
  bool all_unit() const;
  // At least two distinct pairs carry different weights, or the graph is a
  // single edge heavier than 1.
  bool is_varying() const;

  // Edges in (u < v) lexicographic order.
  std::vector<Edge> edges() const;

  // Copy without edges heavier than `limit`.
  Graph without_edges_above(Weight limit) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  NodeId origin_ = 0;
  bool unit_flag_ = false;
  std::vector<Weight> w_;
};

// All-pairs shortest path completion of a connected graph. Throws
// Disconnected if some pair has no path.
Graph metric_closure(const Graph& g);

}  // namespace roldarp
