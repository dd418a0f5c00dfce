#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ctrlset/graph.hpp"
#include "ctrlset/matching.hpp"
#include "ctrlset/rng.hpp"

namespace testutil {

// Arbitrary digraph: self-loops and duplicate pairs allowed in the input
// (build_graph collapses duplicates), so parser- and generator-independent.
inline ctrlset::DirectedGraph random_raw_graph(ctrlset::Rng& rng, ctrlset::NodeId max_n,
                                               double edges_per_node = 2.0) {
  const auto n = static_cast<ctrlset::NodeId>(1 + rng.below(static_cast<std::uint64_t>(max_n)));
  const auto max_l = static_cast<std::uint64_t>(edges_per_node * n) + 1;
  const auto l = rng.below(max_l);
  std::vector<ctrlset::Edge> edges;
  edges.reserve(l);
  for (std::uint64_t i = 0; i < l; ++i) {
    edges.emplace_back(static_cast<ctrlset::NodeId>(rng.below(n)),
                       static_cast<ctrlset::NodeId>(rng.below(n)));
  }
  return ctrlset::build_graph(n, std::move(edges));
}

// Decision-problem certificate: v is a possible input iff deleting v_in
// (dropping all in-edges of v) keeps the maximum matching size unchanged.
inline bool possible_by_deletion(const ctrlset::DirectedGraph& g, ctrlset::NodeId v,
                                 std::int32_t full_size) {
  std::vector<ctrlset::Edge> kept;
  g.for_each_edge([&](ctrlset::NodeId s, ctrlset::NodeId d) {
    if (d != v) kept.emplace_back(s, d);
  });
  const ctrlset::DirectedGraph h = ctrlset::build_graph(g.node_count(), std::move(kept));
  return ctrlset::hopcroft_karp(ctrlset::to_bipartite(h)).size == full_size;
}

inline bool contains(const std::vector<ctrlset::NodeId>& sorted_set, ctrlset::NodeId v) {
  return std::binary_search(sorted_set.begin(), sorted_set.end(), v);
}

}  // namespace testutil
