#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "magic24/construct.hpp"
#include "magic24/incidence.hpp"
#include "magic24/labelings.hpp"
#include "magic24/solver.hpp"
#include "magic24/symmetry.hpp"

namespace magic24 {

/// All on-disk formats are JSON / JSON lines. Indices are 1-based in files
/// and 0-based in memory; conversion happens here and nowhere else.
/// Coordinates are exact: integers as integers, half-integers as 0.5-style
/// doubles (the only denominators that occur are 1 and 2).

// ---- raw file helpers ----------------------------------------------------

std::string read_text_file(const std::string& path);                       // IoFailure
void write_text_file(const std::string& path, std::string_view content);   // IoFailure

std::uint64_t fnv1a64(std::string_view bytes);
std::string digest_hex(std::string_view bytes);       // "fnv1a64:" + 16 hex digits
std::string digest_file(const std::string& path);     // digest of the file's bytes

// ---- structure file: {"name", "vertices", "cells"} -----------------------

std::string structure_to_json(const IncidenceStructure& s);
IncidenceStructure structure_from_json(const std::string& text);           // ParseError

// ---- labeling file: {"structure", "labels"} ------------------------------

std::string labeling_to_json(const std::string& structure_name, const Labeling& labels);
std::pair<std::string, Labeling> labeling_from_json(const std::string& text);

// ---- group file: {"order", "elements"} (1-based images, sorted) ----------

std::string group_to_json(const SymmetryGroup& g);
SymmetryGroup group_from_json(const std::string& text);

// ---- parity file: {"total_candidates", "solutions", "balanced"} ----------

std::string parity_to_json(const ParityClassification& pc);
ParityClassification parity_from_json(const std::string& text);  // unbalanced = solutions \ balanced

// ---- labelings JSON lines ------------------------------------------------
// With provenance: {"labels":[...],"b1":int,"b2":int,"b3":int,
//                   "trit_perm":"012→...","scheme":0..3}
// Without: {"labels":[...]}

std::string trit_perm_to_string(const std::array<int, 3>& pi);
std::array<int, 3> trit_perm_from_string(const std::string& text);

std::string labeling_line(const MagicLabeling& ml);               // no trailing newline
MagicLabeling labeling_from_line(const std::string& line);

std::string labelings_to_jsonl(const std::vector<MagicLabeling>& labelings);
std::vector<MagicLabeling> labelings_from_jsonl(const std::string& text);

std::string construct_summary_json(std::uint64_t raw, std::uint64_t distinct, std::uint64_t orbits);

// ---- solver config / checkpoint / summary --------------------------------

struct SolveFileConfig {
  std::string structure_path;
  long long target_sum = 0;
  std::optional<std::uint64_t> node_budget;
  std::optional<std::uint64_t> emit_limit;
  bool symmetry_reduction = false;
};

SolveFileConfig solve_config_from_json(const std::string& text);
std::string solve_config_to_json(const SolveFileConfig& cfg);

std::string resume_to_json(const ResumeState& rs);   // vertices 1-based in the file
ResumeState resume_from_json(const std::string& text);

std::string solve_summary_json(std::uint64_t nodes, bool complete, std::uint64_t count);

// ---- run manifest --------------------------------------------------------

struct RunManifest {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<std::pair<std::string, std::string>> inputs;   // path -> digest
  std::vector<std::pair<std::string, std::string>> outputs;  // path -> digest
  std::int64_t elapsed_ms = 0;
};

std::string manifest_to_json(const RunManifest& m);
std::string manifest_path_for(const std::string& out_path);  // out_path + ".manifest.json"

}  // namespace magic24
