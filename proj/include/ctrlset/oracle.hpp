#pragma once

#include <cstddef>
#include <vector>

#include "ctrlset/control.hpp"
#include "ctrlset/graph.hpp"
#include "ctrlset/matching.hpp"

namespace ctrlset {

/// All maximum matchings of a bipartite view, in the canonical order of the
/// include/exclude enumeration over the sorted edge list.
struct MatchingList {
  std::vector<Matching> matchings;
};

/// Exhaustively enumerates every maximum matching. Intended for tiny
/// instances (n <= 12 or L <= 32). Throws std::runtime_error if more than
/// `limit` maximum matchings exist or the search budget is exhausted.
MatchingList enumerate_max_matchings(const BipartiteView& b, std::size_t limit);

/// Ground-truth control report: possible_inputs is the union of unmatched
/// v_in sets over every maximum matching, mis comes from the first matching
/// in canonical order. Enforces the same size limits; throws for n = 0 or
/// oversized graphs.
ControlReport oracle_possible_inputs(const DirectedGraph& g);

}  // namespace ctrlset
