#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ctrlset {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

using Edge = std::pair<NodeId, NodeId>;  // (src, dst)

/// Directed graph over dense node ids [0, n). Immutable after construction.
/// Adjacency is CSR in both directions, sorted by neighbor id, duplicate-free.
/// Self-loops are legal edges and are kept.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  NodeId node_count() const { return n_; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(out_nbr_.size()); }

  std::span<const NodeId> out_neighbors(NodeId u) const {
    return {out_nbr_.data() + out_off_[u], static_cast<std::size_t>(out_off_[u + 1] - out_off_[u])};
  }
  std::span<const NodeId> in_neighbors(NodeId v) const {
    return {in_nbr_.data() + in_off_[v], static_cast<std::size_t>(in_off_[v + 1] - in_off_[v])};
  }

  std::int64_t out_degree(NodeId u) const { return out_off_[u + 1] - out_off_[u]; }
  std::int64_t in_degree(NodeId v) const { return in_off_[v + 1] - in_off_[v]; }

  /// The deduplicated edge set, sorted by (src, dst).
  std::vector<Edge> edges() const;

  template <typename Fn>
  void for_each_edge(Fn&& fn) const {
    for (NodeId u = 0; u < n_; ++u)
      for (NodeId v : out_neighbors(u)) fn(u, v);
  }

  friend DirectedGraph build_graph(NodeId n, std::vector<Edge> edge_pairs);

 private:
  NodeId n_ = 0;
  std::vector<std::int64_t> out_off_{0};
  std::vector<std::int64_t> in_off_{0};
  std::vector<NodeId> out_nbr_;
  std::vector<NodeId> in_nbr_;
};

/// Builds a graph from an arbitrary edge list. Duplicates are collapsed.
/// Throws std::invalid_argument naming the offending pair if an endpoint
/// falls outside [0, n).
DirectedGraph build_graph(NodeId n, std::vector<Edge> edge_pairs);

/// Matching view of a digraph: every node u splits into u_out (left part)
/// and u_in (right part); a directed edge u->v becomes the undirected pair
/// (u_out, v_in). Non-owning: valid only while the source graph is alive.
class BipartiteView {
 public:
  explicit BipartiteView(const DirectedGraph& g) : g_(&g) {}
  explicit BipartiteView(const DirectedGraph&&) = delete;

  NodeId node_count() const { return g_->node_count(); }
  std::int64_t edge_count() const { return g_->edge_count(); }

  /// Right-part neighbors (v_in ids) of left node u_out; sorted ascending.
  std::span<const NodeId> left_neighbors(NodeId u_out) const { return g_->out_neighbors(u_out); }
  /// Left-part neighbors (u_out ids) of right node v_in; sorted ascending.
  std::span<const NodeId> right_neighbors(NodeId v_in) const { return g_->in_neighbors(v_in); }

 private:
  const DirectedGraph* g_;
};

inline BipartiteView to_bipartite(const DirectedGraph& g) { return BipartiteView(g); }
BipartiteView to_bipartite(const DirectedGraph&&) = delete;

struct DegreeStats {
  double avg_degree = 0.0;  // 2L/n: every edge contributes one in- and one out-degree
  std::int64_t min_in = 0, max_in = 0;
  std::int64_t min_out = 0, max_out = 0;
};

/// Throws std::invalid_argument for n = 0 (average undefined).
DegreeStats degree_stats(const DirectedGraph& g);

}  // namespace ctrlset
