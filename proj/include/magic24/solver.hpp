#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "magic24/incidence.hpp"
#include "magic24/symmetry.hpp"

namespace magic24 {

/// A paused search position: the committed (vertex, label) decisions in
/// order, plus the next label to try at the recomputed frontier vertex.
/// Counters are cumulative so a resumed run continues them.
struct ResumeState {
  std::vector<std::pair<int, int>> path;  // 0-based vertex, label 1..n
  int next_label = 1;
  std::uint64_t nodes = 0;
  std::uint64_t emitted = 0;

  bool operator==(const ResumeState&) const = default;
};

struct SearchConfig {
  long long target_sum = 0;
  std::optional<std::uint64_t> node_budget;  // cumulative cap on committed decisions
  std::optional<std::uint64_t> emit_limit;   // cumulative cap on emissions
  bool symmetry_reduction = false;           // pin label 1 to vertex 0 (vertex-transitive case)
  std::optional<ResumeState> resume;
};

struct SearchOutcome {
  std::vector<Labeling> labelings;  // in emission order (collecting overload only)
  std::uint64_t nodes_explored = 0;
  std::uint64_t emitted = 0;
  bool complete = false;
  std::optional<ResumeState> checkpoint;  // set iff the run paused
};

/// Return false to stop the search (pausing with a checkpoint).
using EmitSink = std::function<bool(const Labeling&)>;

/// Depth-first exact search for labelings of 1..|V| with every cell summing
/// to target_sum. Vertex order: lowest-indexed vertex in the incomplete cell
/// with fewest unassigned members (lowest cell index on ties); labels tried
/// in increasing order. A branch is pruned when some cell's partial sum plus
/// the smallest/largest completion from unused labels cannot reach the
/// target. Fully deterministic. Throws BadTargetSum, BadCheckpoint.
SearchOutcome solve(const IncidenceStructure& s, const SearchConfig& cfg);

/// Streaming variant; emitted labelings go to the sink and are not collected.
SearchOutcome solve(const IncidenceStructure& s, const SearchConfig& cfg, const EmitSink& sink);

/// Builds the checkpoint that walks the search toward `labels`: frames are
/// (vertex, labels[vertex]) in the solver's own vertex order, truncated to
/// `depth` frames (-1 = all of them). Resuming from the full-depth seed makes
/// the target labeling the first emission. Counters start at zero. Throws
/// BadCheckpoint if the labeling contradicts the configuration (e.g. a pinned
/// vertex or a pruned branch).
ResumeState seed_from_labeling(const IncidenceStructure& s, const SearchConfig& cfg,
                               const Labeling& labels, int depth = -1);

/// Canonical-form deduplication of the emitted labelings.
OrbitCount orbit_report(const SearchOutcome& outcome, const SymmetryGroup& g);

}  // namespace magic24
