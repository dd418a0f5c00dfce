#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ctrlset/graph.hpp"

namespace ctrlset {

/// Raised when two methods that must agree disagree: a wrong-answer alarm,
/// never an expected condition.
class VerificationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BenchResult {
  std::string instance;  // input path or generator spec
  NodeId n = 0;
  std::int64_t l = 0;
  double n_pd = 0.0;
  double t_new_s = 0.0;  // median all_input seconds
  double t_old_s = 0.0;  // median baseline_all_input seconds
  double speedup = 0.0;  // t_old / t_new
  int trials = 0;
};

/// Times all_input vs baseline_all_input on a prebuilt graph: one untimed
/// warmup pair, then `trials` timed runs each, median taken, single thread.
/// Every run's possible-input sets are compared; any mismatch throws
/// VerificationError. Parsing/generation time is excluded by construction.
BenchResult run_benchmark(const DirectedGraph& g, int trials);

struct SweepOptions {
  NodeId n_max = 10;  // <= 12 so the oracle stays tractable
  int trials = 1000;
  std::uint64_t seed = 42;
  bool inject_fault = false;  // test-only: corrupts the candidate set to prove the alarm fires
};

struct SweepResult {
  int passed = 0;
  int failed = 0;
  std::string first_failure;  // repro dump of the first offending graph
};

/// Differential sweep: random ER digraphs with n in [1, n_max] and mixed
/// densities; all_input, baseline_all_input and the exhaustive oracle must
/// produce identical possible-input sets and matching sizes. Disagreements
/// are counted and the offending edge list is dumped to `log` when given.
SweepResult verify_sweep(const SweepOptions& opts, std::ostream* log);

}  // namespace ctrlset
