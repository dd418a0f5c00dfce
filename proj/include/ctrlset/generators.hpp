#pragma once

#include <cstdint>

#include "ctrlset/graph.hpp"

namespace ctrlset {

enum class GraphModel { er, scale_free };

struct GenSpec {
  GraphModel model = GraphModel::er;
  NodeId n = 0;           // >= 1
  double k_avg = 0.0;     // >= 0; L = round(n * k_avg / 2)
  double gamma_in = 3.0;  // > 2, scale-free only
  double gamma_out = 3.0; // > 2, scale-free only
  std::uint64_t seed = 0;
};

/// round(n * k_avg / 2), the edge count both models aim for.
std::int64_t target_edge_count(NodeId n, double k_avg);

/// Erdos-Renyi digraph: exactly L distinct ordered pairs, no self-loops,
/// sampled uniformly without replacement. Throws if L exceeds n*(n-1).
DirectedGraph gen_er(NodeId n, double k_avg, std::uint64_t seed);

/// Static-model scale-free digraph: node i carries out-weight (i+1)^-a_out
/// and in-weight (i+1)^-a_in with a = 1/(gamma-1); each edge draws src from
/// the out-weight distribution and dst from the in-weight distribution,
/// rejecting self-loops and duplicates, until L distinct edges exist.
/// Throws std::runtime_error if the rejection loop exceeds 50 * L attempts.
DirectedGraph gen_scale_free(const GenSpec& spec);

/// Dispatch on spec.model.
DirectedGraph generate(const GenSpec& spec);

}  // namespace ctrlset
