#include "roldarp/graph.hpp"

#include <algorithm>
#include <limits>

namespace roldarp {

Graph Graph::from_edges(int node_count, NodeId origin, const std::vector<Edge>& edges,
                        bool unit_flag) {
  Graph g;
  g.n_ = std::max(node_count, 0);
  g.origin_ = origin;
  g.unit_flag_ = unit_flag;
  g.w_.assign(static_cast<std::size_t>(g.n_) * g.n_, 0);
  for (const Edge& e : edges) {
    if (!g.contains(e.u) || !g.contains(e.v) || e.u == e.v) {
      throw Error(ErrorCode::InvalidEdge, "edge (" + std::to_string(e.u) + "," +
                                              std::to_string(e.v) + ") is not a pair of distinct nodes");
    }
    if (e.w < 1) {
      throw Error(ErrorCode::InvalidEdge, "edge (" + std::to_string(e.u) + "," +
                                              std::to_string(e.v) + ") has weight < 1");
    }
    auto& slot = g.w_[static_cast<std::size_t>(e.u) * g.n_ + e.v];
    if (slot != 0) {
      throw Error(ErrorCode::DuplicateEdge, "pair (" + std::to_string(e.u) + "," +
                                                std::to_string(e.v) + ") listed twice");
    }
    slot = e.w;
    g.w_[static_cast<std::size_t>(e.v) * g.n_ + e.u] = e.w;
  }
  return g;
}

Graph Graph::unit_complete(int node_count, NodeId origin) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < node_count; ++u) {
    for (NodeId v = u + 1; v < node_count; ++v) edges.push_back({u, v, 1});
  }
  return from_edges(node_count, origin, edges, true);
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  if (!contains(a) || !contains(b)) return false;
  return a == b || w_[static_cast<std::size_t>(a) * n_ + b] != 0;
}

Weight Graph::weight(NodeId a, NodeId b) const {
  if (a == b && contains(a)) return 0;
  if (!has_edge(a, b)) {
    throw Error(ErrorCode::InvalidEdge,
                "no edge between " + std::to_string(a) + " and " + std::to_string(b));
  }
  return w_[static_cast<std::size_t>(a) * n_ + b];
}

bool Graph::is_complete() const {
  for (NodeId u = 0; u < n_; ++u) {
    for (NodeId v = u + 1; v < n_; ++v) {
      if (w_[static_cast<std::size_t>(u) * n_ + v] == 0) return false;
    }
  }
  return true;
}

bool Graph::all_unit() const {
  for (const Edge& e : edges()) {
    if (e.w != 1) return false;
  }
  return true;
}

bool Graph::is_varying() const {
  std::vector<Edge> es = edges();
  if (es.size() == 1) return es.front().w > 1;
  return std::any_of(es.begin(), es.end(), [&](const Edge& e) { return e.w != es.front().w; });
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (NodeId u = 0; u < n_; ++u) {
    for (NodeId v = u + 1; v < n_; ++v) {
      Weight w = w_[static_cast<std::size_t>(u) * n_ + v];
      if (w != 0) out.push_back({u, v, w});
    }
  }
  return out;
}

Graph Graph::without_edges_above(Weight limit) const {
  Graph g = *this;
  for (Weight& w : g.w_) {
    if (w > limit) w = 0;
  }
  return g;
}

Graph metric_closure(const Graph& g) {
  const int n = g.node_count();
  constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;
  std::vector<Weight> dist(static_cast<std::size_t>(n) * n, kInf);
  auto at = [&](int a, int b) -> Weight& { return dist[static_cast<std::size_t>(a) * n + b]; };
  for (int v = 0; v < n; ++v) at(v, v) = 0;
  for (const Edge& e : g.edges()) {
    at(e.u, e.v) = std::min(at(e.u, e.v), e.w);
    at(e.v, e.u) = at(e.u, e.v);
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        at(i, j) = std::min(at(i, j), at(i, k) + at(k, j));
      }
    }
  }

  std::vector<Edge> complete;
  bool unit = true;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (at(u, v) >= kInf) {
        throw Error(ErrorCode::Disconnected,
                    "no path between " + std::to_string(u) + " and " + std::to_string(v));
      }
      complete.push_back({u, v, at(u, v)});
      unit = unit && at(u, v) == 1;
    }
  }
  return Graph::from_edges(n, g.origin(), complete, unit);
}

}  // namespace roldarp
