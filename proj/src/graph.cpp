#include "ctrlset/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ctrlset {

DirectedGraph build_graph(NodeId n, std::vector<Edge> edge_pairs) {
  if (n < 0) throw std::invalid_argument("node count must be non-negative");
  for (const Edge& e : edge_pairs) {
    if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.first) + ", " +
                                  std::to_string(e.second) + ") out of range for n=" +
                                  std::to_string(n));
    }
  }
  std::sort(edge_pairs.begin(), edge_pairs.end());
  edge_pairs.erase(std::unique(edge_pairs.begin(), edge_pairs.end()), edge_pairs.end());

  DirectedGraph g;
  g.n_ = n;
  const std::int64_t l = static_cast<std::int64_t>(edge_pairs.size());
  g.out_off_.assign(static_cast<std::size_t>(n) + 1, 0);
  g.in_off_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : edge_pairs) {
    ++g.out_off_[static_cast<std::size_t>(e.first) + 1];
    ++g.in_off_[static_cast<std::size_t>(e.second) + 1];
  }
  std::partial_sum(g.out_off_.begin(), g.out_off_.end(), g.out_off_.begin());
  std::partial_sum(g.in_off_.begin(), g.in_off_.end(), g.in_off_.begin());

  g.out_nbr_.resize(static_cast<std::size_t>(l));
  g.in_nbr_.resize(static_cast<std::size_t>(l));
  // Edges are sorted by (src, dst): appending dst fills the out-CSR directly,
  // and walking in ascending src keeps every in-bucket sorted as well.
  std::vector<std::int64_t> in_cur(g.in_off_.begin(), g.in_off_.end() - 1);
  std::int64_t k = 0;
  for (const Edge& e : edge_pairs) {
    g.out_nbr_[static_cast<std::size_t>(k++)] = e.second;
    g.in_nbr_[static_cast<std::size_t>(in_cur[e.second]++)] = e.first;
  }
  return g;
}

std::vector<Edge> DirectedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(out_nbr_.size());
  for (NodeId u = 0; u < n_; ++u)
    for (NodeId v : out_neighbors(u)) out.emplace_back(u, v);
  return out;
}

DegreeStats degree_stats(const DirectedGraph& g) {
  const NodeId n = g.node_count();
  if (n == 0) throw std::invalid_argument("degree statistics are undefined for n=0");
  DegreeStats s;
  s.avg_degree = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n);
  s.min_in = s.max_in = g.in_degree(0);
  s.min_out = s.max_out = g.out_degree(0);
  for (NodeId v = 1; v < n; ++v) {
    s.min_in = std::min(s.min_in, g.in_degree(v));
    s.max_in = std::max(s.max_in, g.in_degree(v));
    s.min_out = std::min(s.min_out, g.out_degree(v));
    s.max_out = std::max(s.max_out, g.out_degree(v));
  }
  return s;
}

}  // namespace ctrlset
