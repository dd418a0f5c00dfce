#include "ctrlset/matching.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ctrlset {

namespace {
constexpr std::int32_t kUnreached = std::numeric_limits<std::int32_t>::max();
}

HkRun hopcroft_karp_run(const BipartiteView& b) {
  const NodeId n = b.node_count();
  HkRun run;
  auto& ml = run.matching.match_of_left;
  auto& mr = run.matching.match_of_right;
  ml.assign(static_cast<std::size_t>(n), kNoNode);
  mr.assign(static_cast<std::size_t>(n), kNoNode);
  std::int32_t size = 0;

  // Greedy maximal seed: ascending left node, first free right neighbor.
  // Cuts the number of phases; the phase contract below is unaffected.
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : b.left_neighbors(u)) {
      if (mr[v] == kNoNode) {
        ml[u] = v;
        mr[v] = u;
        ++size;
        break;
      }
    }
  }

  // Scratch state, allocated once and reset per phase.
  std::vector<std::int32_t> dist(static_cast<std::size_t>(n));  // right-part BFS layers
  std::vector<NodeId> queue(static_cast<std::size_t>(n));
  std::vector<char> visited(static_cast<std::size_t>(n));  // rights touched by this phase's DFS
  std::vector<NodeId> frame_v(static_cast<std::size_t>(n) + 1);
  std::vector<NodeId> frame_u(static_cast<std::size_t>(n) + 1);
  std::vector<std::int32_t> frame_i(static_cast<std::size_t>(n) + 1);

  std::int32_t phases = 0;
  for (;;) {
    ++phases;

    // BFS layering rooted at every unmatched right node. Walking any edge
    // right->left and then the left node's matching edge back to the right
    // part traces exactly the alternating paths that start at a free v_in.
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::int32_t qt = 0;
    for (NodeId v = 0; v < n; ++v) {
      if (mr[v] == kNoNode) {
        dist[v] = 0;
        queue[qt++] = v;
      }
    }
    std::int32_t found_len = kUnreached;  // shortest augmenting path length (in layers)
    for (std::int32_t qh = 0; qh < qt; ++qh) {
      const NodeId v = queue[qh];
      if (dist[v] >= found_len) continue;  // deeper layers cannot shorten anything
      for (NodeId u : b.right_neighbors(v)) {
        const NodeId w = ml[u];
        if (w == kNoNode) {
          if (dist[v] + 1 < found_len) found_len = dist[v] + 1;
        } else if (dist[w] == kUnreached) {
          dist[w] = dist[v] + 1;
          queue[qt++] = w;
        }
      }
    }
    if (found_len == kUnreached) break;  // maximum reached; dist[] is the final layering

    // Extract a maximal set of vertex-disjoint shortest augmenting paths.
    // Iterative DFS: frame_v is the right-node path, frame_u the left node
    // chosen to leave each frame, frame_i the adjacency cursor.
    std::fill(visited.begin(), visited.end(), 0);
    for (NodeId root = 0; root < n; ++root) {
      if (mr[root] != kNoNode) continue;
      visited[root] = 1;
      std::int32_t depth = 0;
      frame_v[0] = root;
      frame_i[0] = 0;
      bool augmented = false;
      while (depth >= 0) {
        const NodeId v = frame_v[depth];
        const auto nbrs = b.right_neighbors(v);
        bool descended = false;
        while (frame_i[depth] < static_cast<std::int32_t>(nbrs.size())) {
          const NodeId u = nbrs[frame_i[depth]++];
          const NodeId w = ml[u];
          if (w == kNoNode) {
            if (dist[v] + 1 != found_len) continue;  // only shortest completions
            ml[u] = v;
            mr[v] = u;
            for (std::int32_t d = depth - 1; d >= 0; --d) {
              ml[frame_u[d]] = frame_v[d];
              mr[frame_v[d]] = frame_u[d];
            }
            ++size;
            augmented = true;
            break;
          }
          if (dist[w] == dist[v] + 1 && !visited[w]) {
            visited[w] = 1;
            frame_u[depth] = u;
            ++depth;
            frame_v[depth] = w;
            frame_i[depth] = 0;
            descended = true;
            break;
          }
        }
        if (augmented) break;
        if (!descended) --depth;  // v exhausted; stays visited, dead for this phase
      }
    }
  }

  run.matching.size = size;
  run.phases = phases;
  for (NodeId v = 0; v < n; ++v)
    if (dist[v] != kUnreached) run.final_layer_rights.push_back(v);
  return run;
}

Matching hopcroft_karp(const BipartiteView& b) { return hopcroft_karp_run(b).matching; }

bool verify_valid(const BipartiteView& b, const Matching& m) {
  const NodeId n = b.node_count();
  if (static_cast<NodeId>(m.match_of_left.size()) != n ||
      static_cast<NodeId>(m.match_of_right.size()) != n) {
    throw std::invalid_argument("matching dimensions do not match the graph");
  }
  std::int32_t count = 0;
  for (NodeId u = 0; u < n; ++u) {
    const NodeId v = m.match_of_left[u];
    if (v == kNoNode) continue;
    if (v < 0 || v >= n) return false;
    if (m.match_of_right[v] != u) return false;
    const auto nbrs = b.left_neighbors(u);
    if (!std::binary_search(nbrs.begin(), nbrs.end(), v)) return false;
    ++count;
  }
  for (NodeId v = 0; v < n; ++v) {
    const NodeId u = m.match_of_right[v];
    if (u == kNoNode) continue;
    if (u < 0 || u >= n) return false;
    if (m.match_of_left[u] != v) return false;
  }
  return count == m.size;
}

bool verify_maximum(const BipartiteView& b, const Matching& m) {
  if (!verify_valid(b, m)) throw std::invalid_argument("matching is not valid for this graph");
  const NodeId n = b.node_count();

  // Single BFS over the alternating structure from every unmatched right
  // node; in a bipartite graph any augmenting path has one unmatched
  // endpoint on each side, so hitting an unmatched left node is necessary
  // and sufficient for m not being maximum.
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<NodeId> queue;
  queue.reserve(static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v) {
    if (m.match_of_right[v] == kNoNode) {
      seen[v] = 1;
      queue.push_back(v);
    }
  }
  for (std::size_t qh = 0; qh < queue.size(); ++qh) {
    const NodeId v = queue[qh];
    for (NodeId u : b.right_neighbors(v)) {
      const NodeId w = m.match_of_left[u];
      if (w == kNoNode) return false;
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return true;
}

}  // namespace ctrlset
