#include <doctest.h>

#include <algorithm>
#include <string>

#include "ctrlset/control.hpp"
#include "ctrlset/oracle.hpp"
#include "ctrlset/rng.hpp"
#include "helpers.hpp"

using namespace ctrlset;

namespace {

Matching manual_matching(NodeId n, const std::vector<Edge>& pairs) {
  Matching m;
  m.match_of_left.assign(n, kNoNode);
  m.match_of_right.assign(n, kNoNode);
  for (const auto& [u, v] : pairs) {
    m.match_of_left[u] = v;
    m.match_of_right[v] = u;
  }
  m.size = static_cast<std::int32_t>(pairs.size());
  return m;
}

}  // namespace

TEST_CASE("method_name") {
  CHECK(std::string(method_name(Method::all_input)) == "all_input");
  CHECK(std::string(method_name(Method::baseline)) == "baseline");
  CHECK(std::string(method_name(Method::oracle)) == "oracle");
}

TEST_CASE("input_density") {
  CHECK(input_density({0, 1, 2}, 3) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(input_density({}, 4) == doctest::Approx(0.0));
  CHECK_THROWS_AS(input_density({0}, 0), std::invalid_argument);
}

TEST_CASE("extract_mis lists the unmatched right-part nodes") {
  const DirectedGraph g = build_graph(3, {{0, 1}, {0, 2}});
  const BipartiteView b = to_bipartite(g);
  CHECK(extract_mis(b, manual_matching(3, {{0, 1}})) == NodeSet{0, 2});
  CHECK(extract_mis(b, manual_matching(3, {{0, 2}})) == NodeSet{0, 1});

  const DirectedGraph cycle = build_graph(2, {{0, 1}, {1, 0}});
  CHECK(extract_mis(to_bipartite(cycle), manual_matching(2, {{0, 1}, {1, 0}})).empty());

  SUBCASE("non-maximum matching is rejected") {
    const DirectedGraph path = build_graph(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(extract_mis(to_bipartite(path), manual_matching(3, {})), std::invalid_argument);
  }
}

TEST_CASE("alternating_candidates") {
  SUBCASE("star reaches everything") {
    const DirectedGraph g = build_graph(3, {{0, 1}, {0, 2}});
    const BipartiteView b = to_bipartite(g);
    const Matching m = manual_matching(3, {{0, 1}});
    CHECK(alternating_candidates(b, m, {0, 2}) == NodeSet{0, 1, 2});
  }
  SUBCASE("fully matched path reaches only its source") {
    const DirectedGraph g = build_graph(3, {{0, 1}, {1, 2}});
    const Matching m = manual_matching(3, {{0, 1}, {1, 2}});
    CHECK(alternating_candidates(to_bipartite(g), m, {0}) == NodeSet{0});
  }
  SUBCASE("wrong source set is rejected") {
    const DirectedGraph g = build_graph(3, {{0, 1}, {0, 2}});
    const BipartiteView b = to_bipartite(g);
    const Matching m = manual_matching(3, {{0, 1}});
    CHECK_THROWS_AS(alternating_candidates(b, m, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(alternating_candidates(b, m, {0}), std::invalid_argument);
  }
  SUBCASE("a reachable unmatched left node means the matching was not maximum") {
    const DirectedGraph g = build_graph(3, {{0, 1}, {1, 2}});
    const Matching m = manual_matching(3, {{1, 2}});
    CHECK_THROWS_AS(alternating_candidates(to_bipartite(g), m, {0, 1}), std::logic_error);
  }
}

TEST_CASE("all_input on pinned instances") {
  SUBCASE("star") {
    const ControlReport r = all_input(build_graph(3, {{0, 1}, {0, 2}}));
    CHECK(r.n == 3);
    CHECK(r.l == 2);
    CHECK(r.matching_size == 1);
    CHECK(r.mis == NodeSet{0, 2});
    CHECK(r.possible_inputs == NodeSet{0, 1, 2});
    CHECK(r.n_pd == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(r.perfect_matching);
    CHECK(r.method == Method::all_input);
  }
  SUBCASE("path") {
    const ControlReport r = all_input(build_graph(3, {{0, 1}, {1, 2}}));
    CHECK(r.matching_size == 2);
    CHECK(r.mis == NodeSet{0});
    CHECK(r.possible_inputs == NodeSet{0});
    CHECK(r.n_pd == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  }
  SUBCASE("2-cycle: perfect matching, empty sets") {
    const ControlReport r = all_input(build_graph(2, {{0, 1}, {1, 0}}));
    CHECK(r.perfect_matching);
    CHECK(r.mis.empty());
    CHECK(r.possible_inputs.empty());
    CHECK(r.n_pd == doctest::Approx(0.0));
  }
  SUBCASE("matched self-loop keeps its node out of every input set") {
    const ControlReport r = all_input(build_graph(1, {{0, 0}}));
    CHECK(r.perfect_matching);
    CHECK(r.possible_inputs.empty());
  }
  SUBCASE("n=0 is an error") { CHECK_THROWS_AS(all_input(build_graph(0, {})), std::invalid_argument); }
}

TEST_CASE("baseline_all_input on pinned instances") {
  CHECK(baseline_all_input(build_graph(3, {{0, 1}, {0, 2}})).possible_inputs == NodeSet{0, 1, 2});
  CHECK(baseline_all_input(build_graph(3, {{0, 1}, {1, 2}})).possible_inputs == NodeSet{0});
  CHECK(baseline_all_input(build_graph(2, {{0, 1}, {1, 0}})).possible_inputs.empty());
  CHECK_THROWS_AS(baseline_all_input(build_graph(0, {})), std::invalid_argument);
}

TEST_CASE("zero in-degree nodes are always inputs and possible inputs") {
  const ControlReport r = all_input(build_graph(4, {{0, 1}, {2, 1}, {2, 3}}));
  CHECK(testutil::contains(r.mis, 0));
  CHECK(testutil::contains(r.mis, 2));
  CHECK(testutil::contains(r.possible_inputs, 0));
  CHECK(testutil::contains(r.possible_inputs, 2));

  Rng rng(31);
  for (int it = 0; it < 60; ++it) {
    const DirectedGraph g = testutil::random_raw_graph(rng, 25);
    const ControlReport rep = all_input(g);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (g.in_degree(v) == 0) {
        CHECK(testutil::contains(rep.mis, v));
        CHECK(testutil::contains(rep.possible_inputs, v));
      }
    }
  }
}

TEST_CASE("fused candidate collection equals the reference search") {
  Rng rng(32);
  for (int it = 0; it < 150; ++it) {
    const DirectedGraph g = testutil::random_raw_graph(rng, 30);
    const ControlReport r = all_input(g);
    const BipartiteView b = to_bipartite(g);
    const Matching m = hopcroft_karp(b);
    CHECK(r.possible_inputs == alternating_candidates(b, m, r.mis));
  }
}

TEST_CASE("all_input invariants on random graphs") {
  Rng rng(33);
  for (int it = 0; it < 150; ++it) {
    const DirectedGraph g = testutil::random_raw_graph(rng, 30);
    const ControlReport r = all_input(g);
    CHECK(static_cast<std::int64_t>(r.mis.size()) == r.n - r.matching_size);
    CHECK(std::includes(r.possible_inputs.begin(), r.possible_inputs.end(), r.mis.begin(),
                        r.mis.end()));
    CHECK(r.n_pd ==
          doctest::Approx(double(r.possible_inputs.size()) / double(r.n)).epsilon(1e-12));
    if (r.perfect_matching) {
      CHECK(r.mis.empty());
      CHECK(r.possible_inputs.empty());
    }
  }
}

TEST_CASE("all three methods agree on random small graphs") {
  Rng rng(34);
  for (int it = 0; it < 200; ++it) {
    const DirectedGraph g = testutil::random_raw_graph(rng, 10);
    const ControlReport a = all_input(g);
    const ControlReport bl = baseline_all_input(g);
    const ControlReport o = oracle_possible_inputs(g);
    CHECK(a.possible_inputs == o.possible_inputs);
    CHECK(bl.possible_inputs == o.possible_inputs);
    CHECK(a.matching_size == o.matching_size);
    CHECK(bl.matching_size == o.matching_size);
    CHECK(a.mis.size() == o.mis.size());
  }
}

TEST_CASE("baseline agrees with all_input on mid-sized graphs") {
  Rng rng(35);
  for (int it = 0; it < 25; ++it) {
    const DirectedGraph g = testutil::random_raw_graph(rng, 120, 3.0);
    const ControlReport a = all_input(g);
    const ControlReport bl = baseline_all_input(g);
    CHECK(a.possible_inputs == bl.possible_inputs);
    CHECK(a.mis == bl.mis);
  }
}

TEST_CASE("flip_alternating_path turns candidates into certificates") {
  Rng rng(36);
  for (int it = 0; it < 80; ++it) {
    const DirectedGraph g = testutil::random_raw_graph(rng, 20);
    const BipartiteView b = to_bipartite(g);
    const Matching m = hopcroft_karp(b);
    const ControlReport r = all_input(g);
    for (NodeId v : r.possible_inputs) {
      const Matching flipped = flip_alternating_path(b, m, v);
      CHECK(verify_valid(b, flipped));
      CHECK(verify_maximum(b, flipped));
      CHECK(flipped.size == m.size);
      CHECK(flipped.match_of_right[v] == kNoNode);
    }
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (!testutil::contains(r.possible_inputs, v))
        CHECK_THROWS_AS(flip_alternating_path(b, m, v), std::invalid_argument);
    }
  }
}

TEST_CASE("membership matches the delete-and-resolve certificate") {
  Rng rng(37);
  for (int it = 0; it < 30; ++it) {
    const DirectedGraph g = testutil::random_raw_graph(rng, 30);
    const ControlReport r = all_input(g);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      CHECK(testutil::contains(r.possible_inputs, v) ==
            testutil::possible_by_deletion(g, v, r.matching_size));
    }
  }
}
