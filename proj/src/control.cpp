#include "ctrlset/control.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctrlset {

const char* method_name(Method m) {
  switch (m) {
    case Method::all_input: return "all_input";
    case Method::baseline: return "baseline";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

double input_density(const NodeSet& possible, NodeId n) {
  if (n <= 0) throw std::invalid_argument("input density is undefined for n=0");
  return static_cast<double>(possible.size()) / static_cast<double>(n);
}

NodeSet extract_mis(const BipartiteView& b, const Matching& m) {
  if (!verify_maximum(b, m)) throw std::invalid_argument("matching is not maximum");
  NodeSet mis;
  const NodeId n = b.node_count();
  for (NodeId v = 0; v < n; ++v)
    if (m.match_of_right[v] == kNoNode) mis.push_back(v);
  return mis;
}

NodeSet alternating_candidates(const BipartiteView& b, const Matching& m, const NodeSet& sources) {
  const NodeId n = b.node_count();
  NodeSet unmatched;
  for (NodeId v = 0; v < n; ++v)
    if (m.match_of_right[v] == kNoNode) unmatched.push_back(v);
  if (sources != unmatched)
    throw std::invalid_argument("sources must be exactly the unmatched right-part nodes");

  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<NodeId> queue;
  queue.reserve(static_cast<std::size_t>(n));
  for (NodeId v : sources) {
    seen[v] = 1;
    queue.push_back(v);
  }
  for (std::size_t qh = 0; qh < queue.size(); ++qh) {
    const NodeId v = queue[qh];
    for (NodeId u : b.right_neighbors(v)) {
      if (u == m.match_of_right[v]) continue;  // cannot reuse v's matching edge
      const NodeId w = m.match_of_left[u];
      if (w == kNoNode)
        throw std::logic_error("augmenting path found: the matching was not maximum");
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  NodeSet out;
  for (NodeId v = 0; v < n; ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

Matching flip_alternating_path(const BipartiteView& b, const Matching& m, NodeId target_in) {
  const NodeId n = b.node_count();
  if (target_in < 0 || target_in >= n) throw std::invalid_argument("target node out of range");
  if (m.match_of_right[target_in] == kNoNode) return m;

  // BFS with predecessor tracking. A right node w is always entered through
  // its matching edge, so the left node on the path before w is just
  // match_of_right[w]; only the previous right node needs recording.
  std::vector<NodeId> pred(static_cast<std::size_t>(n), kNoNode);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<NodeId> queue;
  for (NodeId v = 0; v < n; ++v) {
    if (m.match_of_right[v] == kNoNode) {
      seen[v] = 1;
      queue.push_back(v);
    }
  }
  bool reached = false;
  for (std::size_t qh = 0; qh < queue.size() && !reached; ++qh) {
    const NodeId v = queue[qh];
    for (NodeId u : b.right_neighbors(v)) {
      if (u == m.match_of_right[v]) continue;
      const NodeId w = m.match_of_left[u];
      if (w == kNoNode)
        throw std::logic_error("augmenting path found: the matching was not maximum");
      if (!seen[w]) {
        seen[w] = 1;
        pred[w] = v;
        queue.push_back(w);
        if (w == target_in) {
          reached = true;
          break;
        }
      }
    }
  }
  if (!reached) throw std::invalid_argument("node is not a possible input: no alternating path");

  Matching out = m;
  NodeId w = target_in;
  out.match_of_right[target_in] = kNoNode;
  while (w != kNoNode) {
    const NodeId u = m.match_of_right[w];  // left node entering w on the path
    const NodeId v = pred[w];              // right node before u; unmatched source when last
    out.match_of_left[u] = v;
    out.match_of_right[v] = u;
    w = v == kNoNode ? kNoNode : (m.match_of_right[v] == kNoNode ? kNoNode : v);
  }
  return out;
}

ControlReport all_input(const DirectedGraph& g) {
  const NodeId n = g.node_count();
  if (n == 0) throw std::invalid_argument("analysis is undefined for n=0");
  const BipartiteView b = to_bipartite(g);
  const HkRun run = hopcroft_karp_run(b);

  ControlReport r;
  r.n = n;
  r.l = g.edge_count();
  r.matching_size = run.matching.size;
  for (NodeId v = 0; v < n; ++v)
    if (run.matching.match_of_right[v] == kNoNode) r.mis.push_back(v);
  r.possible_inputs = run.final_layer_rights;  // already ascending
  r.n_pd = input_density(r.possible_inputs, n);
  r.perfect_matching = run.matching.size == n;
  r.method = Method::all_input;
  return r;
}

ControlReport baseline_all_input(const DirectedGraph& g) {
  const NodeId n = g.node_count();
  if (n == 0) throw std::invalid_argument("analysis is undefined for n=0");
  const BipartiteView b = to_bipartite(g);
  const Matching m = hopcroft_karp(b);

  ControlReport r;
  r.n = n;
  r.l = g.edge_count();
  r.matching_size = m.size;
  r.perfect_matching = m.size == n;
  r.method = Method::baseline;

  // Probe state: stamps instead of clearing, an explicit stack instead of
  // recursion. Nothing about the matching itself is ever mutated, so each
  // probe needs no undo beyond bumping the stamp.
  std::vector<std::int32_t> stamp(static_cast<std::size_t>(n), -1);
  std::vector<NodeId> stack;
  stack.reserve(static_cast<std::size_t>(n));

  for (NodeId v = 0; v < n; ++v) {
    const NodeId partner = m.match_of_right[v];
    if (partner == kNoNode) {
      r.mis.push_back(v);
      r.possible_inputs.push_back(v);
      continue;
    }
    // Delete v_in, freeing partner = v's u_out; v is a possible input iff a
    // single augmenting path from partner exists in the reduced graph.
    bool found = false;
    stack.clear();
    stack.push_back(partner);
    while (!stack.empty() && !found) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (NodeId w : b.left_neighbors(u)) {
        if (w == v || stamp[w] == v) continue;
        stamp[w] = v;
        const NodeId next = m.match_of_right[w];
        if (next == kNoNode) {
          found = true;
          break;
        }
        stack.push_back(next);
      }
    }
    if (found) r.possible_inputs.push_back(v);
  }
  r.n_pd = input_density(r.possible_inputs, n);
  return r;
}

}  // namespace ctrlset
