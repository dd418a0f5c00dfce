#include "ctrlset/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "ctrlset/rng.hpp"

namespace ctrlset {

std::int64_t target_edge_count(NodeId n, double k_avg) {
  return std::llround(static_cast<double>(n) * k_avg / 2.0);
}

namespace {

void check_common(NodeId n, double k_avg) {
  if (n < 1) throw std::invalid_argument("generator needs n >= 1");
  if (k_avg < 0.0 || !std::isfinite(k_avg))
    throw std::invalid_argument("average degree must be finite and non-negative");
}

}  // namespace

DirectedGraph gen_er(NodeId n, double k_avg, std::uint64_t seed) {
  check_common(n, k_avg);
  const std::int64_t l = target_edge_count(n, k_avg);
  const std::int64_t max_pairs = static_cast<std::int64_t>(n) * (n - 1);
  if (l > max_pairs)
    throw std::invalid_argument("infeasible spec: " + std::to_string(l) + " edges requested but only " +
                                std::to_string(max_pairs) + " distinct non-loop pairs exist");

  // Floyd's sampling over the n*(n-1) non-loop ordered pairs, indexed so
  // that pair p = (src, dst) with src = p / (n-1) and the diagonal skipped.
  Rng rng(seed);
  std::unordered_set<std::int64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(l) * 2);
  for (std::int64_t t = max_pairs - l; t < max_pairs; ++t) {
    const auto r = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(t) + 1));
    if (!chosen.insert(r).second) chosen.insert(t);
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(l));
  for (const std::int64_t p : chosen) {
    const auto src = static_cast<NodeId>(p / (n - 1));
    const auto off = static_cast<NodeId>(p % (n - 1));
    edges.emplace_back(src, off < src ? off : off + 1);
  }
  return build_graph(n, std::move(edges));
}

DirectedGraph gen_scale_free(const GenSpec& spec) {
  check_common(spec.n, spec.k_avg);
  if (spec.gamma_in <= 2.0 || spec.gamma_out <= 2.0)
    throw std::invalid_argument("scale-free exponent must exceed 2");
  const NodeId n = spec.n;
  const std::int64_t l = target_edge_count(n, spec.k_avg);

  // Static model: node i gets weight (i+1)^-a with a = 1/(gamma-1); the
  // resulting degree distribution has tail exponent gamma.
  const double a_in = 1.0 / (spec.gamma_in - 1.0);
  const double a_out = 1.0 / (spec.gamma_out - 1.0);
  std::vector<double> cum_in(static_cast<std::size_t>(n));
  std::vector<double> cum_out(static_cast<std::size_t>(n));
  double sum_in = 0.0, sum_out = 0.0;
  for (NodeId i = 0; i < n; ++i) {
    sum_in += std::pow(static_cast<double>(i) + 1.0, -a_in);
    sum_out += std::pow(static_cast<double>(i) + 1.0, -a_out);
    cum_in[i] = sum_in;
    cum_out[i] = sum_out;
  }
  const auto draw = [n](Rng& rng, const std::vector<double>& cum, double total) {
    const double x = rng.next_double() * total;
    const auto it = std::upper_bound(cum.begin(), cum.end(), x);
    const auto idx = static_cast<NodeId>(it - cum.begin());
    return std::min(idx, static_cast<NodeId>(n - 1));
  };

  Rng rng(spec.seed);
  std::unordered_set<std::int64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(l) * 2);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(l));
  std::int64_t attempts = 0;
  while (static_cast<std::int64_t>(edges.size()) < l) {
    if (++attempts > 50 * l)
      throw std::runtime_error("scale-free sampling stalled after " + std::to_string(attempts) +
                               " attempts; the spec leaves too few distinct pairs");
    const NodeId src = draw(rng, cum_out, sum_out);
    const NodeId dst = draw(rng, cum_in, sum_in);
    if (src == dst) continue;
    if (!chosen.insert(static_cast<std::int64_t>(src) * n + dst).second) continue;
    edges.emplace_back(src, dst);
  }
  return build_graph(n, std::move(edges));
}

DirectedGraph generate(const GenSpec& spec) {
  return spec.model == GraphModel::er ? gen_er(spec.n, spec.k_avg, spec.seed)
                                      : gen_scale_free(spec);
}

}  // namespace ctrlset
