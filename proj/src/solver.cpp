#include "magic24/solver.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "magic24/error.hpp"

namespace magic24 {

namespace {

struct Frame {
  int vertex;
  int label;
};

class Engine {
 public:
  Engine(const IncidenceStructure& s, const SearchConfig& cfg, const EmitSink* sink,
         std::vector<Labeling>* collect)
      : s_(s), cfg_(cfg), sink_(sink), collect_(collect), n_(s.vertex_count()) {
    if (cfg.target_sum <= 0) fail(Errc::BadTargetSum, "target sum must be positive");
    validate(s);
    cells_of_.resize(n_);
    for (int ci = 0; ci < s.cell_count(); ++ci)
      for (int v : s.cells[ci].members) cells_of_[v].push_back(ci);
    label_of_.assign(n_, 0);
    used_.assign(n_ + 1, 0);
    cell_sum_.assign(s.cell_count(), 0);
    cell_missing_.resize(s.cell_count());
    for (int ci = 0; ci < s.cell_count(); ++ci)
      cell_missing_[ci] = static_cast<int>(s.cells[ci].members.size());
    low_.resize(n_ + 1);
    high_.resize(n_ + 1);
    scratch_.resize(n_);
  }

  ResumeState seed(const Labeling& labels, int depth) {
    if (static_cast<int>(labels.size()) != n_)
      fail(Errc::BadCheckpoint, "seed labeling length mismatch");
    int target_depth = n_;
    if (cfg_.symmetry_reduction && n_ > 0) {
      if (labels[0] != 1)
        fail(Errc::BadCheckpoint, "seed labeling contradicts the pinned vertex");
      apply(0, 1);
      --target_depth;
      if (!feasible()) fail(Errc::BadCheckpoint, "pinned assignment fails the bound check");
    }
    if (depth < 0) depth = target_depth;
    if (depth > target_depth) fail(Errc::BadCheckpoint, "seed depth exceeds the search depth");
    ResumeState rs;
    for (int step = 0; step < depth; ++step) {
      int v = pick_vertex();
      int l = labels[static_cast<std::size_t>(v)];
      if (l < 1 || l > n_ || used_[l])
        fail(Errc::BadCheckpoint, "seed labeling is not a permutation of 1..n");
      apply(v, l);
      if (!feasible()) fail(Errc::BadCheckpoint, "seed labeling walks into a pruned branch");
      rs.path.emplace_back(v, l);
    }
    return rs;
  }

  SearchOutcome run() {
    SearchOutcome out;
    int target_depth = n_;
    if (cfg_.symmetry_reduction && n_ > 0) {
      apply(0, 1);
      --target_depth;
      if (!feasible()) {
        // The pinned assignment already violates a bound; nothing to search.
        out.complete = true;
        return out;
      }
    }

    std::vector<Frame> stack;
    stack.reserve(target_depth);
    int next_label = 1;
    if (cfg_.resume) replay(*cfg_.resume, stack, next_label, target_depth);

    bool paused = false;
    auto pause = [&](int label) {
      ResumeState rs;
      rs.path.reserve(stack.size());
      for (const Frame& f : stack) rs.path.emplace_back(f.vertex, f.label);
      rs.next_label = label;
      rs.nodes = nodes_;
      rs.emitted = emitted_;
      out.checkpoint = std::move(rs);
      paused = true;
    };

    while (true) {
      if (static_cast<int>(stack.size()) == target_depth) {
        bool keep_going = emit();
        if (cfg_.emit_limit && emitted_ >= *cfg_.emit_limit) keep_going = false;
        if (stack.empty()) {  // degenerate: every vertex was pinned
          out.complete = true;
          break;
        }
        Frame f = stack.back();
        stack.pop_back();
        undo(f.vertex, f.label);
        next_label = f.label + 1;
        if (!keep_going) {
          pause(next_label);
          break;
        }
        continue;
      }

      int v = pick_vertex();
      bool descended = false;
      for (int l = next_label; l <= n_; ++l) {
        if (used_[l]) continue;
        apply(v, l);
        if (!feasible()) {
          undo(v, l);
          continue;
        }
        if (cfg_.node_budget && nodes_ >= *cfg_.node_budget) {
          undo(v, l);
          pause(l);
          break;
        }
        ++nodes_;
        stack.push_back({v, l});
        next_label = 1;
        descended = true;
        break;
      }
      if (paused) break;
      if (descended) continue;

      if (stack.empty()) {
        out.complete = true;
        break;
      }
      Frame f = stack.back();
      stack.pop_back();
      undo(f.vertex, f.label);
      next_label = f.label + 1;
    }

    out.nodes_explored = nodes_;
    out.emitted = emitted_;
    if (collect_) out.labelings = std::move(*collect_);
    return out;
  }

 private:
  void apply(int v, int l) {
    label_of_[v] = l;
    used_[l] = 1;
    for (int ci : cells_of_[v]) {
      cell_sum_[ci] += l;
      --cell_missing_[ci];
    }
  }

  void undo(int v, int l) {
    label_of_[v] = 0;
    used_[l] = 0;
    for (int ci : cells_of_[v]) {
      cell_sum_[ci] -= l;
      ++cell_missing_[ci];
    }
  }

  /// Lowest unassigned vertex of the incomplete cell with fewest unassigned
  /// members (lowest cell index on ties); falls back to the lowest unassigned
  /// vertex if every cell is complete.
  int pick_vertex() const {
    int best_cell = -1;
    int best_missing = std::numeric_limits<int>::max();
    for (int ci = 0; ci < s_.cell_count(); ++ci) {
      int m = cell_missing_[ci];
      if (m > 0 && m < best_missing) {
        best_missing = m;
        best_cell = ci;
      }
    }
    if (best_cell >= 0) {
      for (int v : s_.cells[best_cell].members)
        if (label_of_[v] == 0) return v;
    }
    for (int v = 0; v < n_; ++v)
      if (label_of_[v] == 0) return v;
    throw std::logic_error("pick_vertex called on a full assignment");
  }

  /// Interval bound: for every cell, the partial sum plus the k smallest
  /// (resp. largest) unused labels must bracket the target, where k is the
  /// cell's unassigned count. k = 0 degenerates to an exact-sum check.
  bool feasible() {
    int m = 0;
    for (int l = 1; l <= n_; ++l)
      if (!used_[l]) scratch_[m++] = l;
    low_[0] = 0;
    for (int i = 0; i < m; ++i) low_[i + 1] = low_[i] + scratch_[i];
    high_[0] = 0;
    for (int i = 0; i < m; ++i) high_[i + 1] = high_[i] + scratch_[m - 1 - i];
    for (int ci = 0; ci < s_.cell_count(); ++ci) {
      int k = cell_missing_[ci];
      long long sum = cell_sum_[ci];
      if (sum + low_[k] > cfg_.target_sum || sum + high_[k] < cfg_.target_sum) return false;
    }
    return true;
  }

  bool emit() {
    LabelingReport report = verify_labeling(s_, label_of_);
    if (!report.magic || report.magic_sum != cfg_.target_sum)
      throw std::logic_error("search reached a non-magic leaf");
    ++emitted_;
    if (collect_) collect_->push_back(label_of_);
    if (sink_) return (*sink_)(label_of_);
    return true;
  }

  /// Re-commit a checkpointed path, verifying each step against the current
  /// structure and configuration. Counters are restored, not re-counted.
  void replay(const ResumeState& rs, std::vector<Frame>& stack, int& next_label,
              int target_depth) {
    if (static_cast<int>(rs.path.size()) > target_depth)
      fail(Errc::BadCheckpoint, "checkpoint path longer than the search depth");
    for (auto [v, l] : rs.path) {
      if (v < 0 || v >= n_ || l < 1 || l > n_)
        fail(Errc::BadCheckpoint, "checkpoint entry out of range");
      if (pick_vertex() != v)
        fail(Errc::BadCheckpoint, "checkpoint path disagrees with the vertex order");
      if (used_[l]) fail(Errc::BadCheckpoint, "checkpoint reuses a label");
      apply(v, l);
      if (!feasible()) fail(Errc::BadCheckpoint, "checkpoint path fails the bound check");
      stack.push_back({v, l});
    }
    if (rs.next_label < 1 || rs.next_label > n_ + 1)
      fail(Errc::BadCheckpoint, "checkpoint next label out of range");
    next_label = rs.next_label;
    nodes_ = rs.nodes;
    emitted_ = rs.emitted;
  }

  const IncidenceStructure& s_;
  const SearchConfig& cfg_;
  const EmitSink* sink_;
  std::vector<Labeling>* collect_;
  int n_;
  std::vector<std::vector<int>> cells_of_;
  std::vector<int> label_of_;
  std::vector<char> used_;
  std::vector<long long> cell_sum_;
  std::vector<int> cell_missing_;
  std::vector<long long> low_, high_;
  std::vector<int> scratch_;
  std::uint64_t nodes_ = 0;
  std::uint64_t emitted_ = 0;
};

}  // namespace

SearchOutcome solve(const IncidenceStructure& s, const SearchConfig& cfg) {
  std::vector<Labeling> collected;
  Engine engine(s, cfg, nullptr, &collected);
  return engine.run();
}

SearchOutcome solve(const IncidenceStructure& s, const SearchConfig& cfg, const EmitSink& sink) {
  Engine engine(s, cfg, &sink, nullptr);
  return engine.run();
}

OrbitCount orbit_report(const SearchOutcome& outcome, const SymmetryGroup& g) {
  return count_orbits(outcome.labelings, g);
}

ResumeState seed_from_labeling(const IncidenceStructure& s, const SearchConfig& cfg,
                               const Labeling& labels, int depth) {
  Engine engine(s, cfg, nullptr, nullptr);
  return engine.seed(labels, depth);
}

}  // namespace magic24
