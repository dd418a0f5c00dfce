#pragma once

#include <vector>

#include "ctrlset/graph.hpp"

namespace ctrlset {

/// Partner maps for both parts of a BipartiteView; kNoNode marks unmatched.
struct Matching {
  std::vector<NodeId> match_of_left;   // u_out -> v_in
  std::vector<NodeId> match_of_right;  // v_in -> u_out
  std::int32_t size = 0;               // matched pair count
};

/// Everything a Hopcroft-Karp run produces beyond the matching itself.
///
/// final_layer_rights lists, in ascending order, the right-part (v_in) nodes
/// labeled by the last BFS layering: the one that failed to find an
/// augmenting path. Because every layering is rooted at all unmatched right
/// nodes, that final layer set is exactly the set of v_in nodes reachable
/// from an unmatched v_in along an alternating path, and it always contains
/// the unmatched right nodes themselves.
struct HkRun {
  Matching matching;
  std::int32_t phases = 0;  // BFS layerings performed, including the final failed one
  std::vector<NodeId> final_layer_rights;
};

/// Maximum bipartite matching in O(sqrt(n) * L).
///
/// Phase structure: a greedy maximal seed, then repeat { BFS layering rooted
/// at all unmatched right nodes; extract a maximal set of vertex-disjoint
/// shortest augmenting paths by layered DFS; flip them } until the layering
/// reaches no unmatched left node. Deterministic: adjacency is scanned in
/// sorted order and ties break toward the ascending node index.
HkRun hopcroft_karp_run(const BipartiteView& b);

/// Convenience wrapper returning just the matching.
Matching hopcroft_karp(const BipartiteView& b);

/// True iff the partner maps are mutually consistent, every matched pair is
/// an edge of b, and size equals the matched pair count. Throws
/// std::invalid_argument if the map dimensions do not match b.
bool verify_valid(const BipartiteView& b, const Matching& m);

/// True iff no augmenting path exists, i.e. m is maximum. Independent single
/// BFS over the alternating structure, not a rerun of hopcroft_karp.
/// Throws std::invalid_argument if m is not valid for b.
bool verify_maximum(const BipartiteView& b, const Matching& m);

}  // namespace ctrlset
