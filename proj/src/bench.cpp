#include "ctrlset/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <vector>

#include "ctrlset/control.hpp"
#include "ctrlset/generators.hpp"
#include "ctrlset/oracle.hpp"
#include "ctrlset/rng.hpp"

namespace ctrlset {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t k = xs.size();
  return k % 2 ? xs[k / 2] : 0.5 * (xs[k / 2 - 1] + xs[k / 2]);
}

std::string dump_edges(const DirectedGraph& g) {
  std::string out;
  g.for_each_edge([&](NodeId u, NodeId v) {
    out += std::to_string(u) + "->" + std::to_string(v) + " ";
  });
  return out;
}

}  // namespace

BenchResult run_benchmark(const DirectedGraph& g, int trials) {
  if (trials < 1) throw std::invalid_argument("benchmark needs at least one trial");

  // One untimed warmup per method, then timed trials; the possible-input
  // sets are compared on every run because a fast wrong answer is worthless.
  ControlReport warm_new = all_input(g);
  ControlReport warm_old = baseline_all_input(g);
  if (warm_new.possible_inputs != warm_old.possible_inputs ||
      warm_new.matching_size != warm_old.matching_size)
    throw VerificationError("methods disagree on the benchmark instance");

  std::vector<double> t_new, t_old;
  for (int t = 0; t < trials; ++t) {
    auto t0 = Clock::now();
    const ControlReport rn = all_input(g);
    t_new.push_back(seconds_since(t0));
    t0 = Clock::now();
    const ControlReport ro = baseline_all_input(g);
    t_old.push_back(seconds_since(t0));
    if (rn.possible_inputs != ro.possible_inputs || rn.matching_size != ro.matching_size ||
        rn.possible_inputs != warm_new.possible_inputs)
      throw VerificationError("methods disagree on the benchmark instance");
  }

  BenchResult res;
  res.n = g.node_count();
  res.l = g.edge_count();
  res.n_pd = warm_new.n_pd;
  res.t_new_s = median(t_new);
  res.t_old_s = median(t_old);
  res.speedup = res.t_old_s / res.t_new_s;
  res.trials = trials;
  return res;
}

SweepResult verify_sweep(const SweepOptions& opts, std::ostream* log) {
  if (opts.n_max < 1 || opts.n_max > 12)
    throw std::invalid_argument("verify sweep needs 1 <= n_max <= 12");
  if (opts.trials < 1) throw std::invalid_argument("verify sweep needs at least one trial");

  Rng rng(opts.seed);
  SweepResult res;
  for (int t = 0; t < opts.trials; ++t) {
    const auto n = static_cast<NodeId>(1 + rng.below(static_cast<std::uint64_t>(opts.n_max)));
    // Mixed densities, capped so the exhaustive oracle stays tractable.
    const double k_cap = std::min(4.0, 2.0 * (n - 1));
    const double k_avg = rng.next_double() * k_cap;
    const DirectedGraph g = gen_er(n, k_avg, rng.next_u64());

    const ControlReport a = all_input(g);
    const ControlReport bl = baseline_all_input(g);
    const ControlReport o = oracle_possible_inputs(g);

    NodeSet candidates = a.possible_inputs;
    if (opts.inject_fault) {
      // Test-only corruption: toggle node 0's membership so the alarm path
      // is provably live.
      if (!candidates.empty() && candidates.front() == 0)
        candidates.erase(candidates.begin());
      else
        candidates.insert(candidates.begin(), 0);
    }

    const bool ok = candidates == o.possible_inputs && bl.possible_inputs == o.possible_inputs &&
                    a.matching_size == o.matching_size && bl.matching_size == o.matching_size;
    if (ok) {
      ++res.passed;
      continue;
    }
    ++res.failed;
    if (res.first_failure.empty()) {
      res.first_failure = "trial " + std::to_string(t) + " n=" + std::to_string(n) +
                          " edges: " + dump_edges(g);
      if (log) *log << "verify mismatch: " << res.first_failure << '\n';
    }
  }
  return res;
}

}  // namespace ctrlset
