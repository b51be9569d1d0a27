#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "magic24/construct.hpp"
#include "magic24/error.hpp"
#include "magic24/incidence.hpp"
#include "magic24/solver.hpp"
#include "magic24/symmetry.hpp"

using namespace magic24;

namespace {

/// Independent oracle: checks every one of the 8! assignments of 1..8 to the
/// cube's vertices directly against the face sums.
std::vector<Labeling> cube_oracle(long long target) {
  IncidenceStructure cube = build_cube();
  Labeling labels(8);
  std::iota(labels.begin(), labels.end(), 1);
  std::vector<Labeling> magic;
  do {
    bool ok = true;
    for (const Cell& c : cube.cells) {
      long long sum = 0;
      for (int v : c.members) sum += labels[static_cast<std::size_t>(v)];
      if (sum != target) {
        ok = false;
        break;
      }
    }
    if (ok) magic.push_back(labels);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return magic;
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("cube at sum 18: complete, 144 solutions, equal to the 8! oracle") {
  IncidenceStructure cube = build_cube();
  SearchConfig cfg;
  cfg.target_sum = 18;
  SearchOutcome outcome = solve(cube, cfg);
  CHECK(outcome.complete);
  CHECK_FALSE(outcome.checkpoint.has_value());
  CHECK(outcome.emitted == 144);
  REQUIRE(outcome.labelings.size() == 144);

  std::vector<Labeling> oracle = cube_oracle(18);
  REQUIRE(oracle.size() == 144);
  std::vector<Labeling> sorted_solver = outcome.labelings;
  std::sort(sorted_solver.begin(), sorted_solver.end());
  CHECK(sorted_solver == oracle);  // next_permutation emits in sorted order

  // orbit structure: 48 automorphisms, 3 classes, frozen representatives
  SymmetryGroup g = automorphisms(cube, 1000);
  REQUIRE(g.order() == 48);
  OrbitCount orbits = orbit_report(outcome, g);
  REQUIRE(orbits.count() == 3);
  CHECK(orbits.representatives[0] == Labeling{1, 4, 6, 7, 8, 5, 3, 2});
  CHECK(orbits.representatives[1] == Labeling{1, 4, 7, 6, 8, 5, 2, 3});
  CHECK(orbits.representatives[2] == Labeling{1, 6, 7, 4, 8, 3, 2, 5});
  CHECK(orbit_report(SearchOutcome{}, g).count() == 0);
}

TEST_CASE("cube at sum 17 is exhaustively infeasible") {
  SearchConfig cfg;
  cfg.target_sum = 17;
  SearchOutcome outcome = solve(build_cube(), cfg);
  CHECK(outcome.complete);
  CHECK(outcome.emitted == 0);
  CHECK(cube_oracle(17).empty());
}

TEST_CASE("target sum must be positive") {
  SearchConfig cfg;
  cfg.target_sum = 0;
  try {
    solve(build_cube(), cfg);
    FAIL("expected BadTargetSum");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadTargetSum);
  }
}

TEST_CASE("every emission is verified magic (streaming sink)") {
  IncidenceStructure cube = build_cube();
  SearchConfig cfg;
  cfg.target_sum = 18;
  std::size_t streamed = 0;
  SearchOutcome outcome = solve(cube, cfg, [&](const Labeling& labels) {
    CHECK(verify_labeling(cube, labels).magic);
    ++streamed;
    return true;
  });
  CHECK(outcome.complete);
  CHECK(streamed == 144);
  CHECK(outcome.labelings.empty());  // streaming overload does not collect
}

TEST_CASE("identical configuration gives identical emission order") {
  SearchConfig cfg;
  cfg.target_sum = 18;
  SearchOutcome a = solve(build_cube(), cfg);
  SearchOutcome b = solve(build_cube(), cfg);
  CHECK(a.labelings == b.labelings);
  CHECK(a.nodes_explored == b.nodes_explored);
}

TEST_CASE("raising the node budget only ever extends the emission sequence") {
  IncidenceStructure cube = build_cube();
  SearchConfig unbounded;
  unbounded.target_sum = 18;
  SearchOutcome full = solve(cube, unbounded);

  std::vector<Labeling> previous;
  for (std::uint64_t budget : {100, 400, 700, 1000, 1296}) {
    SearchConfig cfg;
    cfg.target_sum = 18;
    cfg.node_budget = budget;
    SearchOutcome partial = solve(cube, cfg);
    CHECK(partial.nodes_explored <= budget);
    REQUIRE(partial.labelings.size() >= previous.size());
    CHECK(std::equal(previous.begin(), previous.end(), partial.labelings.begin()));
    REQUIRE(partial.labelings.size() <= full.labelings.size());
    CHECK(std::equal(partial.labelings.begin(), partial.labelings.end(), full.labelings.begin()));
    previous = partial.labelings;
  }
  CHECK(previous == full.labelings);  // budget 1296 covers the whole tree
}

TEST_CASE("budgeted legs chained by checkpoints reproduce the full run exactly") {
  IncidenceStructure cube = build_cube();
  SearchConfig unbounded;
  unbounded.target_sum = 18;
  SearchOutcome full = solve(cube, unbounded);

  std::vector<Labeling> stitched;
  std::optional<ResumeState> checkpoint;
  std::uint64_t legs = 0;
  for (std::uint64_t budget = 150;; budget += 150) {
    SearchConfig cfg;
    cfg.target_sum = 18;
    cfg.node_budget = budget;
    cfg.resume = checkpoint;
    SearchOutcome leg = solve(cube, cfg);
    stitched.insert(stitched.end(), leg.labelings.begin(), leg.labelings.end());
    ++legs;
    if (leg.complete) {
      CHECK_FALSE(leg.checkpoint.has_value());
      break;
    }
    REQUIRE(leg.checkpoint.has_value());
    CHECK(leg.nodes_explored == budget);
    checkpoint = leg.checkpoint;
  }
  CHECK(legs == 9);  // 1296 nodes / 150 per leg
  CHECK(stitched == full.labelings);
}

TEST_CASE("emit_limit pauses the search resumably") {
  IncidenceStructure cube = build_cube();
  SearchConfig cfg;
  cfg.target_sum = 18;
  cfg.emit_limit = 10;
  SearchOutcome first = solve(cube, cfg);
  CHECK_FALSE(first.complete);
  CHECK(first.emitted == 10);
  REQUIRE(first.checkpoint.has_value());

  SearchConfig rest;
  rest.target_sum = 18;
  rest.resume = first.checkpoint;
  SearchOutcome second = solve(cube, rest);
  CHECK(second.complete);
  CHECK(second.emitted == 144);  // cumulative counter
  CHECK(second.labelings.size() == 134);

  SearchConfig plain;
  plain.target_sum = 18;
  SearchOutcome full = solve(cube, plain);
  std::vector<Labeling> stitched = first.labelings;
  stitched.insert(stitched.end(), second.labelings.begin(), second.labelings.end());
  CHECK(stitched == full.labelings);
}

TEST_CASE("a sink returning false pauses exactly like an emit limit") {
  IncidenceStructure cube = build_cube();
  SearchConfig cfg;
  cfg.target_sum = 18;
  int seen = 0;
  SearchOutcome outcome = solve(cube, cfg, [&](const Labeling&) { return ++seen < 3; });
  CHECK_FALSE(outcome.complete);
  CHECK(outcome.emitted == 3);
  REQUIRE(outcome.checkpoint.has_value());
  CHECK(outcome.checkpoint->emitted == 3);
}

TEST_CASE("symmetry reduction pins label 1 to vertex 1 and loses no orbit") {
  IncidenceStructure cube = build_cube();
  SearchConfig pinned;
  pinned.target_sum = 18;
  pinned.symmetry_reduction = true;
  SearchOutcome reduced = solve(cube, pinned);
  CHECK(reduced.complete);
  REQUIRE(!reduced.labelings.empty());
  for (const Labeling& labels : reduced.labelings) CHECK(labels[0] == 1);

  SearchConfig plain;
  plain.target_sum = 18;
  SearchOutcome full = solve(cube, plain);
  std::vector<Labeling> expected;
  for (const Labeling& labels : full.labelings)
    if (labels[0] == 1) expected.push_back(labels);
  CHECK(reduced.labelings == expected);  // same subtree, same order

  SymmetryGroup g = automorphisms(cube, 1000);
  CHECK(orbit_report(reduced, g).representatives == orbit_report(full, g).representatives);
}

TEST_CASE("checkpoint validation rejects tampered paths") {
  IncidenceStructure cube = build_cube();
  SearchConfig probe;
  probe.target_sum = 18;
  probe.node_budget = 500;
  SearchOutcome paused = solve(cube, probe);
  REQUIRE(paused.checkpoint.has_value());

  auto expect_bad = [&](ResumeState rs) {
    SearchConfig cfg;
    cfg.target_sum = 18;
    cfg.resume = rs;
    try {
      solve(cube, cfg);
      FAIL("expected BadCheckpoint");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::BadCheckpoint);
    }
  };

  ResumeState wrong_vertex = *paused.checkpoint;
  REQUIRE(wrong_vertex.path.size() >= 2);
  std::swap(wrong_vertex.path[0], wrong_vertex.path[1]);
  expect_bad(wrong_vertex);

  ResumeState bad_label = *paused.checkpoint;
  bad_label.path[0].second = 9;
  expect_bad(bad_label);

  ResumeState reused_label = *paused.checkpoint;
  reused_label.path[1].second = reused_label.path[0].second;
  expect_bad(reused_label);

  ResumeState bad_next = *paused.checkpoint;
  bad_next.next_label = 0;
  expect_bad(bad_next);

  ResumeState too_long = *paused.checkpoint;
  too_long.path.resize(9, {0, 1});
  expect_bad(too_long);
}

TEST_CASE("a full-depth seed makes the target labeling the first emission") {
  IncidenceStructure s = build_24cell();
  ConstructionResult family = construct_all(s, 4);
  const Labeling& target = family.labelings[12345].labels;

  SearchConfig cfg;
  cfg.target_sum = 75;
  cfg.emit_limit = 1;
  cfg.resume = seed_from_labeling(s, cfg, target);
  SearchOutcome outcome = solve(s, cfg);
  CHECK_FALSE(outcome.complete);  // paused right after the rediscovery
  REQUIRE(outcome.labelings.size() == 1);
  CHECK(outcome.labelings[0] == target);
}

TEST_CASE("a prefix seed rediscovers the seeded labeling") {
  IncidenceStructure s = build_24cell();
  ConstructionResult family = construct_all(s, 4);
  const Labeling& target = family.labelings.front().labels;

  SearchConfig cfg;
  cfg.target_sum = 75;
  cfg.node_budget = 2000000;
  cfg.resume = seed_from_labeling(s, cfg, target, 20);  // leave 4 vertices open
  bool found = false;
  SearchOutcome outcome = solve(s, cfg, [&](const Labeling& labels) {
    found = labels == target;
    return !found;
  });
  CHECK(found);
  CHECK_FALSE(outcome.complete);
}

TEST_CASE("seed validation rejects labelings that contradict the configuration") {
  IncidenceStructure s = build_24cell();
  SearchConfig cfg;
  cfg.target_sum = 75;
  Labeling not_perm(24, 1);
  CHECK_THROWS_AS(seed_from_labeling(s, cfg, not_perm), Error);

  // magic labeling whose vertex 1 label is not 1 cannot seed a pinned search
  ConstructionResult family = construct_all(s, 4);
  auto it = std::find_if(family.labelings.begin(), family.labelings.end(),
                         [](const MagicLabeling& ml) { return ml.labels[0] != 1; });
  REQUIRE(it != family.labelings.end());
  SearchConfig pinned;
  pinned.target_sum = 75;
  pinned.symmetry_reduction = true;
  try {
    seed_from_labeling(s, pinned, it->labels);
    FAIL("expected BadCheckpoint");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadCheckpoint);
  }
}

TEST_CASE("magic-sum mismatch: no emissions at an off-by-one target on the 24-cell") {
  SearchConfig cfg;
  cfg.target_sum = 74;
  cfg.node_budget = 200000;
  SearchOutcome outcome = solve(build_24cell(), cfg);
  CHECK(outcome.emitted == 0);  // 74 is arithmetically impossible
}

}  // TEST_SUITE
