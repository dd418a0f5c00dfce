#pragma once

#include <vector>

#include "ctrlset/graph.hpp"
#include "ctrlset/matching.hpp"

namespace ctrlset {

/// Sorted, duplicate-free list of node ids.
using NodeSet = std::vector<NodeId>;

enum class Method { all_input, baseline, oracle };
const char* method_name(Method m);

struct ControlReport {
  NodeId n = 0;
  std::int64_t l = 0;
  std::int32_t matching_size = 0;
  NodeSet mis;              // one minimum input set: unmatched v_in nodes
  NodeSet possible_inputs;  // union of the MIS over all maximum matchings
  double n_pd = 0.0;        // |possible_inputs| / n
  bool perfect_matching = false;
  Method method = Method::all_input;
};

/// The unmatched right-part nodes of a maximum matching, ascending. These
/// are the input (driver) nodes of one minimum input set; a perfect matching
/// yields the empty set. Throws if m is not a maximum matching of b.
NodeSet extract_mis(const BipartiteView& b, const Matching& m);

/// Reference implementation of the alternating-path candidate search: the
/// v_in nodes reachable from `sources` along alternating paths (sources
/// included). `sources` must be exactly the unmatched right nodes of m and
/// m must be maximum; reaching an unmatched left node would mean an
/// augmenting path exists and raises std::logic_error.
NodeSet alternating_candidates(const BipartiteView& b, const Matching& m, const NodeSet& sources);

/// Flips one alternating path from some unmatched v_in to target_in and
/// returns the resulting matching: same size, target_in unmatched. Returns
/// m unchanged if target_in is already unmatched; throws
/// std::invalid_argument if target_in is not reachable (not a possible
/// input node).
Matching flip_alternating_path(const BipartiteView& b, const Matching& m, NodeId target_in);

/// Single-run analysis: one Hopcroft-Karp run yields the matching, one MIS,
/// and all possible input nodes (candidates collected from the final failed
/// layering). Total cost stays O(sqrt(n) * L). Throws for n = 0.
ControlReport all_input(const DirectedGraph& g);

/// Prior-generation O(n * L) method, kept as the differential check: after
/// one maximum matching, each matched v_in is probed by deleting it, freeing
/// its partner u_out, and searching for a single augmenting path from u_out.
/// Probe state is undone via stamps, never copied. Throws for n = 0.
ControlReport baseline_all_input(const DirectedGraph& g);

/// |possible| / n. Throws for n <= 0.
double input_density(const NodeSet& possible, NodeId n);

}  // namespace ctrlset
