#include "magic24/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "magic24/error.hpp"

namespace magic24 {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kArrow = "\xE2\x86\x92";  // UTF-8 RIGHTWARDS ARROW

json parse_or_fail(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::ParseError, std::string("invalid JSON in ") + what);
  return j;
}

[[noreturn]] void bad(const char* what, const std::string& detail) {
  fail(Errc::ParseError, std::string(what) + ": " + detail);
}

const json& field(const json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end()) bad(what, std::string("missing key \"") + key + '"');
  return *it;
}

long long int_field(const json& j, const char* key, const char* what) {
  const json& v = field(j, key, what);
  if (!v.is_number_integer()) bad(what, std::string('"' + std::string(key) + "\" is not an integer"));
  return v.get<long long>();
}

/// Exact coordinate -> doubled int. Accepts integers and *.5 halves only.
int coord_to_doubled(const json& v, const char* what) {
  if (v.is_number_integer()) {
    long long c = v.get<long long>();
    if (c < -1000000 || c > 1000000) bad(what, "coordinate out of range");
    return static_cast<int>(2 * c);
  }
  if (v.is_number_float()) {
    double d = v.get<double>() * 2.0;
    if (d != std::floor(d) || std::abs(d) > 2000000.0)
      bad(what, "coordinate is not an integer or half-integer");
    return static_cast<int>(d);
  }
  bad(what, "coordinate is not a number");
}

json doubled_to_coord(int c2x) {
  if (c2x % 2 == 0) return json(c2x / 2);
  return json(static_cast<double>(c2x) / 2.0);  // halves are exact in binary
}

std::vector<int> perm_1based_from_json(const json& arr, int expect_n, const char* what) {
  if (!arr.is_array()) bad(what, "element is not an array");
  std::vector<int> perm;
  perm.reserve(arr.size());
  for (const json& x : arr) {
    if (!x.is_number_integer()) bad(what, "permutation image is not an integer");
    long long v = x.get<long long>();
    if (v < 1 || v > static_cast<long long>(arr.size()))
      bad(what, "permutation image out of range");
    perm.push_back(static_cast<int>(v - 1));
  }
  if (expect_n >= 0 && static_cast<int>(perm.size()) != expect_n)
    bad(what, "permutation length mismatch");
  std::vector<char> seen(perm.size(), 0);
  for (int v : perm) {
    if (seen[static_cast<std::size_t>(v)]) bad(what, "repeated permutation image");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return perm;
}

}  // namespace

// ---- raw file helpers ----------------------------------------------------

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoFailure, "cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(Errc::IoFailure, "read error: " + path);
  return std::move(buf).str();
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::IoFailure, "cannot open for writing: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) fail(Errc::IoFailure, "write error: " + path);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_hex(std::string_view bytes) {
  static const char* hex = "0123456789abcdef";
  std::uint64_t h = fnv1a64(bytes);
  std::string out = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4) out.push_back(hex[(h >> shift) & 0xF]);
  return out;
}

std::string digest_file(const std::string& path) { return digest_hex(read_text_file(path)); }

// ---- structure -----------------------------------------------------------

std::string structure_to_json(const IncidenceStructure& s) {
  json j;
  j["name"] = s.name;
  json verts = json::array();
  for (const Coords2x& v : s.vertices) {
    json row = json::array();
    for (int c : v) row.push_back(doubled_to_coord(c));
    verts.push_back(std::move(row));
  }
  j["vertices"] = std::move(verts);
  json cells = json::array();
  for (const Cell& c : s.cells) {
    json row = json::array();
    for (int m : c.members) row.push_back(m + 1);
    cells.push_back(std::move(row));
  }
  j["cells"] = std::move(cells);
  return j.dump() + "\n";
}

IncidenceStructure structure_from_json(const std::string& text) {
  const char* what = "structure file";
  json j = parse_or_fail(text, what);
  IncidenceStructure s;
  const json& name = field(j, "name", what);
  if (!name.is_string()) bad(what, "\"name\" is not a string");
  s.name = name.get<std::string>();
  const json& verts = field(j, "vertices", what);
  if (!verts.is_array() || verts.empty()) bad(what, "\"vertices\" is not a nonempty array");
  for (const json& row : verts) {
    if (!row.is_array()) bad(what, "vertex is not an array");
    Coords2x v;
    v.reserve(row.size());
    for (const json& c : row) v.push_back(coord_to_doubled(c, what));
    s.vertices.push_back(std::move(v));
  }
  const int n = s.vertex_count();
  const json& cells = field(j, "cells", what);
  if (!cells.is_array()) bad(what, "\"cells\" is not an array");
  for (const json& row : cells) {
    if (!row.is_array()) bad(what, "cell is not an array");
    Cell cell;
    for (const json& m : row) {
      if (!m.is_number_integer()) bad(what, "cell member is not an integer");
      long long v = m.get<long long>();
      if (v < 1 || v > n) bad(what, "cell member out of range");
      cell.members.push_back(static_cast<int>(v - 1));
    }
    std::sort(cell.members.begin(), cell.members.end());
    if (std::adjacent_find(cell.members.begin(), cell.members.end()) != cell.members.end())
      bad(what, "cell lists a vertex twice");
    s.cells.push_back(std::move(cell));
  }
  return s;
}

// ---- labeling ------------------------------------------------------------

std::string labeling_to_json(const std::string& structure_name, const Labeling& labels) {
  json j;
  j["structure"] = structure_name;
  j["labels"] = labels;
  return j.dump() + "\n";
}

std::pair<std::string, Labeling> labeling_from_json(const std::string& text) {
  const char* what = "labeling file";
  json j = parse_or_fail(text, what);
  const json& name = field(j, "structure", what);
  if (!name.is_string()) bad(what, "\"structure\" is not a string");
  const json& arr = field(j, "labels", what);
  if (!arr.is_array()) bad(what, "\"labels\" is not an array");
  Labeling labels;
  labels.reserve(arr.size());
  for (const json& x : arr) {
    if (!x.is_number_integer()) bad(what, "label is not an integer");
    labels.push_back(x.get<int>());
  }
  return {name.get<std::string>(), std::move(labels)};
}

// ---- group ---------------------------------------------------------------

std::string group_to_json(const SymmetryGroup& g) {
  json j;
  j["order"] = g.order();
  json elems = json::array();
  for (const Perm& p : g.elements) {
    json row = json::array();
    for (int v : p) row.push_back(v + 1);
    elems.push_back(std::move(row));
  }
  j["elements"] = std::move(elems);
  return j.dump() + "\n";
}

SymmetryGroup group_from_json(const std::string& text) {
  const char* what = "group file";
  json j = parse_or_fail(text, what);
  long long order = int_field(j, "order", what);
  const json& elems = field(j, "elements", what);
  if (!elems.is_array() || elems.empty()) bad(what, "\"elements\" is not a nonempty array");
  SymmetryGroup g;
  g.degree = static_cast<int>(elems.front().size());
  for (const json& e : elems) g.elements.push_back(perm_1based_from_json(e, g.degree, what));
  if (order != static_cast<long long>(g.elements.size()))
    bad(what, "\"order\" disagrees with the element count");
  std::sort(g.elements.begin(), g.elements.end());
  if (std::adjacent_find(g.elements.begin(), g.elements.end()) != g.elements.end())
    bad(what, "repeated group element");
  return g;
}

// ---- parity --------------------------------------------------------------

std::string parity_to_json(const ParityClassification& pc) {
  json j;
  j["total_candidates"] = pc.total_candidates;
  j["solutions"] = pc.solutions;
  j["balanced"] = pc.balanced;
  return j.dump() + "\n";
}

ParityClassification parity_from_json(const std::string& text) {
  const char* what = "parity file";
  json j = parse_or_fail(text, what);
  ParityClassification pc;
  long long total = int_field(j, "total_candidates", what);
  if (total < 0) bad(what, "negative candidate count");
  pc.total_candidates = static_cast<std::uint64_t>(total);
  auto masks = [&](const char* key) {
    const json& arr = field(j, key, what);
    if (!arr.is_array()) bad(what, std::string('"' + std::string(key) + "\" is not an array"));
    std::vector<BinaryLabeling> out;
    out.reserve(arr.size());
    for (const json& x : arr) {
      if (!x.is_number_integer()) bad(what, "bit mask is not an integer");
      long long v = x.get<long long>();
      if (v < 0 || v > kVertexMask24) bad(what, "bit mask out of 24-bit range");
      out.push_back(static_cast<BinaryLabeling>(v));
    }
    if (!std::is_sorted(out.begin(), out.end())) bad(what, "bit masks are not ascending");
    return out;
  };
  pc.solutions = masks("solutions");
  pc.balanced = masks("balanced");
  std::set_difference(pc.solutions.begin(), pc.solutions.end(), pc.balanced.begin(),
                      pc.balanced.end(), std::back_inserter(pc.unbalanced));
  if (pc.balanced.size() + pc.unbalanced.size() != pc.solutions.size())
    bad(what, "\"balanced\" is not a subset of \"solutions\"");
  return pc;
}

// ---- labelings JSON lines ------------------------------------------------

std::string trit_perm_to_string(const std::array<int, 3>& pi) {
  std::string out = "012";
  out += kArrow;
  for (int v : pi) out.push_back(static_cast<char>('0' + v));
  return out;
}

std::array<int, 3> trit_perm_from_string(const std::string& text) {
  const std::string prefix = std::string("012") + kArrow;
  if (text.size() != prefix.size() + 3 || text.compare(0, prefix.size(), prefix) != 0)
    fail(Errc::ParseError, "trit permutation must look like 012" + std::string(kArrow) + "120");
  std::array<int, 3> pi{};
  std::array<char, 3> seen{};
  for (int i = 0; i < 3; ++i) {
    char c = text[prefix.size() + static_cast<std::size_t>(i)];
    if (c < '0' || c > '2') fail(Errc::ParseError, "trit permutation digit out of range");
    pi[static_cast<std::size_t>(i)] = c - '0';
    if (seen[static_cast<std::size_t>(c - '0')]++)
      fail(Errc::ParseError, "trit permutation repeats a digit");
  }
  return pi;
}

std::string labeling_line(const MagicLabeling& ml) {
  json j;
  j["labels"] = ml.labels;
  if (ml.provenance) {
    const Provenance& p = *ml.provenance;
    j["b1"] = p.b1;
    j["b2"] = p.b2;
    j["b3"] = p.b3;
    j["trit_perm"] = trit_perm_to_string(p.trit_perm);
    j["scheme"] = p.scheme;
  }
  return j.dump();
}

MagicLabeling labeling_from_line(const std::string& line) {
  const char* what = "labelings line";
  json j = parse_or_fail(line, what);
  MagicLabeling ml;
  const json& arr = field(j, "labels", what);
  if (!arr.is_array()) bad(what, "\"labels\" is not an array");
  for (const json& x : arr) {
    if (!x.is_number_integer()) bad(what, "label is not an integer");
    ml.labels.push_back(x.get<int>());
  }
  if (j.contains("b1")) {
    Provenance p;
    p.b1 = static_cast<BinaryLabeling>(int_field(j, "b1", what));
    p.b2 = static_cast<BinaryLabeling>(int_field(j, "b2", what));
    p.b3 = static_cast<BinaryLabeling>(int_field(j, "b3", what));
    const json& tp = field(j, "trit_perm", what);
    if (!tp.is_string()) bad(what, "\"trit_perm\" is not a string");
    p.trit_perm = trit_perm_from_string(tp.get<std::string>());
    long long scheme = int_field(j, "scheme", what);
    if (scheme < 0 || scheme > 3) bad(what, "\"scheme\" out of range");
    p.scheme = static_cast<int>(scheme);
    ml.provenance = p;
  }
  return ml;
}

std::string labelings_to_jsonl(const std::vector<MagicLabeling>& labelings) {
  std::string out;
  for (const MagicLabeling& ml : labelings) {
    out += labeling_line(ml);
    out += '\n';
  }
  return out;
}

std::vector<MagicLabeling> labelings_from_jsonl(const std::string& text) {
  std::vector<MagicLabeling> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(labeling_from_line(line));
  }
  return out;
}

std::string construct_summary_json(std::uint64_t raw, std::uint64_t distinct,
                                   std::uint64_t orbits) {
  json j;
  j["raw"] = raw;
  j["distinct"] = distinct;
  j["orbits"] = orbits;
  return j.dump() + "\n";
}

// ---- solver config / checkpoint / summary --------------------------------

SolveFileConfig solve_config_from_json(const std::string& text) {
  const char* what = "solve config";
  json j = parse_or_fail(text, what);
  SolveFileConfig cfg;
  const json& sp = field(j, "structure", what);
  if (!sp.is_string()) bad(what, "\"structure\" is not a string");
  cfg.structure_path = sp.get<std::string>();
  cfg.target_sum = int_field(j, "target_sum", what);
  if (j.contains("node_budget") && !j["node_budget"].is_null()) {
    long long v = int_field(j, "node_budget", what);
    if (v <= 0) bad(what, "\"node_budget\" must be positive");
    cfg.node_budget = static_cast<std::uint64_t>(v);
  }
  if (j.contains("emit_limit") && !j["emit_limit"].is_null()) {
    long long v = int_field(j, "emit_limit", what);
    if (v <= 0) bad(what, "\"emit_limit\" must be positive");
    cfg.emit_limit = static_cast<std::uint64_t>(v);
  }
  if (j.contains("symmetry_reduction")) {
    const json& b = j["symmetry_reduction"];
    if (!b.is_boolean()) bad(what, "\"symmetry_reduction\" is not a boolean");
    cfg.symmetry_reduction = b.get<bool>();
  }
  return cfg;
}

std::string solve_config_to_json(const SolveFileConfig& cfg) {
  json j;
  j["structure"] = cfg.structure_path;
  j["target_sum"] = cfg.target_sum;
  if (cfg.node_budget) j["node_budget"] = *cfg.node_budget;
  if (cfg.emit_limit) j["emit_limit"] = *cfg.emit_limit;
  j["symmetry_reduction"] = cfg.symmetry_reduction;
  return j.dump() + "\n";
}

std::string resume_to_json(const ResumeState& rs) {
  json j;
  json path = json::array();
  for (auto [v, l] : rs.path) path.push_back(json::array({v + 1, l}));
  j["path"] = std::move(path);
  j["next_label"] = rs.next_label;
  j["nodes"] = rs.nodes;
  j["emitted"] = rs.emitted;
  return j.dump() + "\n";
}

ResumeState resume_from_json(const std::string& text) {
  const char* what = "checkpoint file";
  json j = parse_or_fail(text, what);
  ResumeState rs;
  const json& path = field(j, "path", what);
  if (!path.is_array()) bad(what, "\"path\" is not an array");
  for (const json& step : path) {
    if (!step.is_array() || step.size() != 2 || !step[0].is_number_integer() ||
        !step[1].is_number_integer())
      bad(what, "path step is not a [vertex, label] pair");
    rs.path.emplace_back(step[0].get<int>() - 1, step[1].get<int>());
  }
  rs.next_label = static_cast<int>(int_field(j, "next_label", what));
  long long nodes = int_field(j, "nodes", what);
  long long emitted = int_field(j, "emitted", what);
  if (nodes < 0 || emitted < 0) bad(what, "negative counter");
  rs.nodes = static_cast<std::uint64_t>(nodes);
  rs.emitted = static_cast<std::uint64_t>(emitted);
  return rs;
}

std::string solve_summary_json(std::uint64_t nodes, bool complete, std::uint64_t count) {
  json j;
  j["nodes"] = nodes;
  j["complete"] = complete;
  j["count"] = count;
  return j.dump() + "\n";
}

// ---- run manifest --------------------------------------------------------

std::string manifest_to_json(const RunManifest& m) {
  json j;
  j["command"] = m.command;
  j["parameters"] = m.parameters;
  json in = json::object();
  for (const auto& [path, digest] : m.inputs) in[path] = digest;
  j["inputs"] = std::move(in);
  json out = json::object();
  for (const auto& [path, digest] : m.outputs) out[path] = digest;
  j["outputs"] = std::move(out);
  j["elapsed_ms"] = m.elapsed_ms;
  return j.dump() + "\n";
}

std::string manifest_path_for(const std::string& out_path) {
  return out_path + ".manifest.json";
}

}  // namespace magic24
