#include "ctrlset/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctrlset {

namespace {

constexpr std::int64_t kSearchBudget = 100'000'000;

void check_size_gate(NodeId n, std::int64_t l) {
  if (n > 12 && l > 32)
    throw std::runtime_error("graph too large for the exhaustive oracle (need n <= 12 or L <= 32)");
}

// Include/exclude search over the sorted bipartite edge list. Branches that
// cannot reach the target size are cut with the bound
// size + min(edges left, free nodes per side).
class Enumerator {
 public:
  explicit Enumerator(const BipartiteView& b) : n_(b.node_count()) {
    for (NodeId u = 0; u < n_; ++u)
      for (NodeId v : b.left_neighbors(u)) edges_.emplace_back(u, v);
    mol_.assign(static_cast<std::size_t>(n_), kNoNode);
    mor_.assign(static_cast<std::size_t>(n_), kNoNode);
  }

  std::int32_t max_size() {
    best_ = 0;
    descend_max(0);
    return best_;
  }

  // Visits every matching of exactly `target` pairs, in canonical
  // include-first order, calling fn(mol, mor).
  template <typename Fn>
  void for_each_of_size(std::int32_t target, Fn&& fn) {
    descend_emit(0, target, fn);
  }

 private:
  void spend() {
    if (--budget_ < 0)
      throw std::runtime_error("oracle search budget exhausted; use a smaller instance");
  }

  std::int64_t headroom() const {
    return static_cast<std::int64_t>(n_) - size_;
  }

  void descend_max(std::size_t i) {
    spend();
    best_ = std::max(best_, size_);
    if (i == edges_.size()) return;
    const auto remaining = static_cast<std::int64_t>(edges_.size() - i);
    if (size_ + std::min(remaining, headroom()) <= best_) return;
    const auto [u, v] = edges_[i];
    if (mol_[u] == kNoNode && mor_[v] == kNoNode) {
      mol_[u] = v;
      mor_[v] = u;
      ++size_;
      descend_max(i + 1);
      mol_[u] = kNoNode;
      mor_[v] = kNoNode;
      --size_;
    }
    descend_max(i + 1);
  }

  template <typename Fn>
  void descend_emit(std::size_t i, std::int32_t target, Fn&& fn) {
    spend();
    if (i == edges_.size()) {
      if (size_ == target) fn(mol_, mor_);
      return;
    }
    const auto remaining = static_cast<std::int64_t>(edges_.size() - i);
    if (size_ + std::min(remaining, headroom()) < target) return;
    const auto [u, v] = edges_[i];
    if (mol_[u] == kNoNode && mor_[v] == kNoNode) {
      mol_[u] = v;
      mor_[v] = u;
      ++size_;
      descend_emit(i + 1, target, fn);
      mol_[u] = kNoNode;
      mor_[v] = kNoNode;
      --size_;
    }
    descend_emit(i + 1, target, fn);
  }

  NodeId n_;
  std::vector<Edge> edges_;
  std::vector<NodeId> mol_, mor_;
  std::int32_t size_ = 0;
  std::int32_t best_ = 0;
  std::int64_t budget_ = kSearchBudget;
};

}  // namespace

MatchingList enumerate_max_matchings(const BipartiteView& b, std::size_t limit) {
  check_size_gate(b.node_count(), b.edge_count());
  Enumerator e(b);
  const std::int32_t target = e.max_size();
  MatchingList out;
  e.for_each_of_size(target, [&](const std::vector<NodeId>& mol, const std::vector<NodeId>& mor) {
    if (out.matchings.size() == limit)
      throw std::runtime_error("more than " + std::to_string(limit) +
                               " maximum matchings; use a smaller instance or a higher limit");
    out.matchings.push_back(Matching{mol, mor, target});
  });
  return out;
}

ControlReport oracle_possible_inputs(const DirectedGraph& g) {
  const NodeId n = g.node_count();
  if (n == 0) throw std::invalid_argument("analysis is undefined for n=0");
  check_size_gate(n, g.edge_count());

  const BipartiteView b = to_bipartite(g);
  Enumerator e(b);
  const std::int32_t target = e.max_size();

  std::vector<char> possible(static_cast<std::size_t>(n), 0);
  ControlReport r;
  r.n = n;
  r.l = g.edge_count();
  r.matching_size = target;
  r.perfect_matching = target == n;
  r.method = Method::oracle;

  bool first = true;
  e.for_each_of_size(target, [&](const std::vector<NodeId>&, const std::vector<NodeId>& mor) {
    for (NodeId v = 0; v < n; ++v) {
      if (mor[v] == kNoNode) {
        possible[v] = 1;
        if (first) r.mis.push_back(v);
      }
    }
    first = false;
  });
  for (NodeId v = 0; v < n; ++v)
    if (possible[v]) r.possible_inputs.push_back(v);
  r.n_pd = input_density(r.possible_inputs, n);
  return r;
}

}  // namespace ctrlset
