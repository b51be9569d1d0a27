#include "magic24/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "magic24/construct.hpp"
#include "magic24/error.hpp"
#include "magic24/incidence.hpp"
#include "magic24/json_io.hpp"
#include "magic24/labelings.hpp"
#include "magic24/solver.hpp"
#include "magic24/symmetry.hpp"

namespace magic24 {

namespace {

IncidenceStructure build_by_name(const std::string& name) {
  if (name == "24cell") return build_24cell();
  if (name == "cube") return build_cube();
  if (name == "tesseract") return build_tesseract();
  fail(Errc::UnknownStructure, "unknown structure \"" + name + "\" (expected 24cell, cube, or tesseract)");
}

/// --workers beats MAGIC24_WORKERS beats 1.
int resolve_workers(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("MAGIC24_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 1024)
      fail(Errc::ParseError, std::string("MAGIC24_WORKERS must be an integer in 1..1024, got \"") + env + '"');
    return static_cast<int>(v);
  }
  return 1;
}

void require_24cell(const IncidenceStructure& s) {
  IncidenceStructure ref = build_24cell();
  bool ok = s.vertices == ref.vertices && s.cell_count() == ref.cell_count();
  for (int i = 0; ok && i < ref.cell_count(); ++i)
    ok = s.cells[static_cast<std::size_t>(i)].members == ref.cells[static_cast<std::size_t>(i)].members;
  if (!ok) fail(Errc::WrongStructure, "this command requires the 24-cell structure file");
}

class Timer {
 public:
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

void emit_manifest(const std::string& primary_out, RunManifest m, const Timer& timer) {
  m.elapsed_ms = timer.ms();
  write_text_file(manifest_path_for(primary_out), manifest_to_json(m));
}

/// Group for canonicalize / count-orbits: an explicit file wins; otherwise
/// the structure must be the 24-cell, whose group is generated here.
SymmetryGroup load_group(const std::string& group_path, const std::string& structure_name,
                         RunManifest& manifest) {
  if (!group_path.empty()) {
    std::string text = read_text_file(group_path);
    manifest.inputs.emplace_back(group_path, digest_hex(text));
    return group_from_json(text);
  }
  if (structure_name != "24cell")
    fail(Errc::ParseError, "--group is required unless the structure is the 24-cell");
  return symmetry_24cell(build_24cell());
}

// ---- subcommands ---------------------------------------------------------

int cmd_gen_structure(const std::string& name, const std::string& out) {
  Timer timer;
  IncidenceStructure s = build_by_name(name);
  std::string text = structure_to_json(s);
  write_text_file(out, text);
  RunManifest m;
  m.command = "gen-structure";
  m.parameters["name"] = name;
  m.parameters["out"] = out;
  m.outputs.emplace_back(out, digest_hex(text));
  emit_manifest(out, std::move(m), timer);
  std::cout << s.vertex_count() << " vertices, " << s.cell_count() << " cells, magic sum "
            << magic_sum(s) << "\n";
  return 0;
}

int cmd_parity_search(const std::string& structure_path, const std::string& out, int workers_flag,
                      bool gf2_check) {
  Timer timer;
  int workers = resolve_workers(workers_flag);
  std::string structure_text = read_text_file(structure_path);
  IncidenceStructure s = structure_from_json(structure_text);
  require_24cell(s);

  ParityClassification pc = enumerate_parity_binary(s, workers);
  std::string text = parity_to_json(pc);
  write_text_file(out, text);

  RunManifest m;
  m.command = "parity-search";
  m.parameters["structure"] = structure_path;
  m.parameters["out"] = out;
  m.parameters["workers"] = workers;
  m.parameters["gf2_check"] = gf2_check;
  m.inputs.emplace_back(structure_path, digest_hex(structure_text));
  m.outputs.emplace_back(out, digest_hex(text));
  emit_manifest(out, std::move(m), timer);

  std::cout << "candidates=" << pc.total_candidates << " solutions=" << pc.solutions.size()
            << " balanced=" << pc.balanced.size() << " unbalanced=" << pc.unbalanced.size()
            << "\n";
  if (gf2_check) {
    Gf2ParityResult gf2 = parity_solutions_gf2(s);
    if (gf2.solutions == pc.solutions) {
      std::cout << "gf2: agree\n";
    } else {
      std::cout << "gf2: DISAGREE\n";
      return 1;
    }
  }
  return 0;
}

int cmd_ternary(const std::string& structure_path, const std::string& out) {
  Timer timer;
  std::string structure_text = read_text_file(structure_path);
  IncidenceStructure s = structure_from_json(structure_text);
  require_24cell(s);

  TernaryLabeling t = ternary_16cell(s);
  nlohmann::ordered_json j;
  j["structure"] = s.name;
  j["trits"] = t;
  std::string text = j.dump() + "\n";
  write_text_file(out, text);

  RunManifest m;
  m.command = "ternary";
  m.parameters["structure"] = structure_path;
  m.parameters["out"] = out;
  m.inputs.emplace_back(structure_path, digest_hex(structure_text));
  m.outputs.emplace_back(out, digest_hex(text));
  emit_manifest(out, std::move(m), timer);

  std::array<int, 3> counts{};
  for (std::uint8_t trit : t) ++counts[trit];
  std::cout << "24 trits; counts 0:" << counts[0] << " 1:" << counts[1] << " 2:" << counts[2]
            << "\n";
  return 0;
}

int cmd_construct(const std::string& out, int workers_flag) {
  Timer timer;
  int workers = resolve_workers(workers_flag);
  IncidenceStructure s = build_24cell();
  ConstructionResult result = construct_all(s, workers);

  std::vector<Labeling> labels_only;
  labels_only.reserve(result.labelings.size());
  for (const MagicLabeling& ml : result.labelings) labels_only.push_back(ml.labels);
  SymmetryGroup g = symmetry_24cell(s);
  OrbitCount orbits = count_orbits(labels_only, g, workers);

  std::string jsonl = labelings_to_jsonl(result.labelings);
  write_text_file(out, jsonl);
  std::string summary = construct_summary_json(result.raw_count, result.labelings.size(),
                                               orbits.representatives.size());
  std::string summary_path = out + ".summary.json";
  write_text_file(summary_path, summary);

  RunManifest m;
  m.command = "construct";
  m.parameters["out"] = out;
  m.parameters["workers"] = workers;
  m.outputs.emplace_back(out, digest_hex(jsonl));
  m.outputs.emplace_back(summary_path, digest_hex(summary));
  emit_manifest(out, std::move(m), timer);

  std::cout << "raw=" << result.raw_count << " distinct=" << result.labelings.size()
            << " orbits=" << orbits.representatives.size() << "\n";
  return 0;
}

int cmd_canonicalize(const std::string& labeling_path, const std::string& group_path,
                     const std::string& out) {
  Timer timer;
  std::string labeling_text = read_text_file(labeling_path);
  auto [structure_name, labels] = labeling_from_json(labeling_text);

  RunManifest m;
  m.command = "canonicalize";
  m.parameters["labeling"] = labeling_path;
  m.parameters["group"] = group_path;
  m.parameters["out"] = out;
  m.inputs.emplace_back(labeling_path, digest_hex(labeling_text));

  SymmetryGroup g = load_group(group_path, structure_name, m);
  Labeling canonical = canonical_form(labels, g);
  std::string text = labeling_to_json(structure_name, canonical);
  write_text_file(out, text);
  m.outputs.emplace_back(out, digest_hex(text));
  emit_manifest(out, std::move(m), timer);

  std::cout << "canonical:";
  for (int l : canonical) std::cout << ' ' << l;
  std::cout << "\n";
  return 0;
}

int cmd_count_orbits(const std::string& labelings_path, const std::string& group_path,
                     const std::string& structure_name, const std::string& out,
                     int workers_flag) {
  Timer timer;
  int workers = resolve_workers(workers_flag);
  std::string jsonl_text = read_text_file(labelings_path);
  std::vector<MagicLabeling> labelings = labelings_from_jsonl(jsonl_text);
  std::vector<Labeling> labels_only;
  labels_only.reserve(labelings.size());
  for (const MagicLabeling& ml : labelings) labels_only.push_back(ml.labels);

  RunManifest m;
  m.command = "count-orbits";
  m.parameters["labelings"] = labelings_path;
  m.parameters["group"] = group_path;
  m.parameters["structure"] = structure_name;
  m.parameters["out"] = out;
  m.parameters["workers"] = workers;
  m.inputs.emplace_back(labelings_path, digest_hex(jsonl_text));

  SymmetryGroup g = load_group(group_path, structure_name, m);
  OrbitCount orbits = count_orbits(labels_only, g, workers);

  if (!out.empty()) {
    std::vector<MagicLabeling> reps;
    reps.reserve(orbits.representatives.size());
    for (const Labeling& rep : orbits.representatives) reps.push_back({rep, std::nullopt});
    std::string text = labelings_to_jsonl(reps);
    write_text_file(out, text);
    m.outputs.emplace_back(out, digest_hex(text));
    emit_manifest(out, std::move(m), timer);
  }

  std::cout << "orbits=" << orbits.representatives.size() << "\n";
  return 0;
}

int cmd_solve(const std::string& config_path, const std::string& out, long long budget_flag,
              const std::string& resume_path) {
  Timer timer;
  std::string config_text = read_text_file(config_path);
  SolveFileConfig file_cfg = solve_config_from_json(config_text);

  // A relative structure path is taken relative to the config file.
  std::filesystem::path structure_path(file_cfg.structure_path);
  if (structure_path.is_relative())
    structure_path = std::filesystem::path(config_path).parent_path() / structure_path;
  std::string structure_text = read_text_file(structure_path.string());
  IncidenceStructure s = structure_from_json(structure_text);

  SearchConfig cfg;
  cfg.target_sum = file_cfg.target_sum;
  cfg.node_budget = file_cfg.node_budget;
  cfg.emit_limit = file_cfg.emit_limit;
  cfg.symmetry_reduction = file_cfg.symmetry_reduction;
  if (budget_flag > 0) cfg.node_budget = static_cast<std::uint64_t>(budget_flag);

  RunManifest m;
  m.command = "solve";
  m.parameters["config"] = config_path;
  m.parameters["out"] = out;
  if (budget_flag > 0) m.parameters["budget"] = budget_flag;
  m.parameters["resume"] = resume_path;
  m.inputs.emplace_back(config_path, digest_hex(config_text));
  m.inputs.emplace_back(structure_path.string(), digest_hex(structure_text));

  if (!resume_path.empty()) {
    std::string resume_text = read_text_file(resume_path);
    cfg.resume = resume_from_json(resume_text);
    m.inputs.emplace_back(resume_path, digest_hex(resume_text));
  }

  std::string jsonl;
  SearchOutcome outcome = solve(s, cfg, [&jsonl](const Labeling& labels) {
    jsonl += labeling_line({labels, std::nullopt});
    jsonl += '\n';
    return true;
  });

  write_text_file(out, jsonl);
  m.outputs.emplace_back(out, digest_hex(jsonl));
  std::string summary = solve_summary_json(outcome.nodes_explored, outcome.complete, outcome.emitted);
  std::string summary_path = out + ".summary.json";
  write_text_file(summary_path, summary);
  m.outputs.emplace_back(summary_path, digest_hex(summary));

  std::string checkpoint_path;
  if (outcome.checkpoint) {
    checkpoint_path = out + ".checkpoint.json";
    std::string text = resume_to_json(*outcome.checkpoint);
    write_text_file(checkpoint_path, text);
    m.outputs.emplace_back(checkpoint_path, digest_hex(text));
  }
  emit_manifest(out, std::move(m), timer);

  std::cout << "nodes=" << outcome.nodes_explored << " complete="
            << (outcome.complete ? "true" : "false") << " count=" << outcome.emitted << "\n";
  if (!checkpoint_path.empty()) std::cout << "checkpoint: " << checkpoint_path << "\n";
  return 0;
}

int cmd_verify(const std::string& structure_path, const std::string& labeling_path) {
  std::string structure_text = read_text_file(structure_path);
  IncidenceStructure s = structure_from_json(structure_text);
  auto [structure_name, labels] = labeling_from_json(read_text_file(labeling_path));
  if (structure_name != s.name)
    fail(Errc::WrongStructure, "labeling file is for \"" + structure_name + "\", structure file is \"" + s.name + '"');

  LabelingReport report = verify_labeling(s, labels);
  if (report.magic) {
    std::cout << "magic sum " << *report.magic_sum << "\n";
    return 0;
  }
  if (!report.is_permutation)
    std::cout << "labels are not a permutation of 1.." << s.vertex_count() << "\n";
  std::cout << "not magic; cell sums:";
  for (long long sum : report.cell_sums) std::cout << ' ' << sum;
  std::cout << "\n";
  return 1;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Exact combinatorial toolkit for facet-magic labelings of the 24-cell"};
  app.require_subcommand(1);

  // gen-structure
  std::string gen_name, gen_out = "structure.json";
  CLI::App* gen = app.add_subcommand("gen-structure", "Write a built-in incidence structure");
  gen->add_option("name", gen_name, "24cell, cube, or tesseract")->required();
  gen->add_option("--out", gen_out, "output structure file");

  // parity-search
  std::string par_structure, par_out = "parity.json";
  int par_workers = 0;
  bool par_gf2 = false;
  CLI::App* par = app.add_subcommand("parity-search", "Enumerate the parity-feasible binary labelings");
  par->add_option("--structure", par_structure, "24-cell structure file")->required();
  par->add_option("--out", par_out, "output parity file");
  par->add_option("--workers", par_workers, "worker count")->check(CLI::Range(1, 1024));
  par->add_flag("--gf2-check", par_gf2, "cross-check against the GF(2) solver");

  // ternary
  std::string ter_structure, ter_out = "ternary.json";
  CLI::App* ter = app.add_subcommand("ternary", "Write the three-16-cell ternary labeling");
  ter->add_option("--structure", ter_structure, "24-cell structure file")->required();
  ter->add_option("--out", ter_out, "output ternary file");

  // construct
  std::string con_out = "labelings.jsonl";
  int con_workers = 0;
  CLI::App* con = app.add_subcommand("construct", "Build the full linear-combination family");
  con->add_option("--out", con_out, "output labelings file (JSON lines)");
  con->add_option("--workers", con_workers, "worker count")->check(CLI::Range(1, 1024));

  // canonicalize
  std::string can_labeling, can_group, can_out = "canonical.json";
  CLI::App* can = app.add_subcommand("canonicalize", "Reduce a labeling to its canonical form");
  can->add_option("--labeling", can_labeling, "labeling file")->required();
  can->add_option("--group", can_group, "group file (default: 24-cell symmetry group)");
  can->add_option("--out", can_out, "output labeling file");

  // count-orbits
  std::string orb_labelings, orb_group, orb_structure = "24cell", orb_out;
  int orb_workers = 0;
  CLI::App* orb = app.add_subcommand("count-orbits", "Count symmetry classes of labelings");
  orb->add_option("--labelings", orb_labelings, "labelings file (JSON lines)")->required();
  orb->add_option("--group", orb_group, "group file (default: 24-cell symmetry group)");
  orb->add_option("--structure", orb_structure, "structure name for the default group");
  orb->add_option("--out", orb_out, "optional output file for orbit representatives");
  orb->add_option("--workers", orb_workers, "worker count")->check(CLI::Range(1, 1024));

  // solve
  std::string sol_config, sol_out = "solutions.jsonl", sol_resume;
  long long sol_budget = 0;
  CLI::App* sol = app.add_subcommand("solve", "Run the exact backtracking search");
  sol->add_option("--config", sol_config, "search config file")->required();
  sol->add_option("--out", sol_out, "output labelings file (JSON lines)");
  sol->add_option("--budget", sol_budget, "node budget override")->check(CLI::PositiveNumber);
  sol->add_option("--resume", sol_resume, "checkpoint file to resume from");

  // verify
  std::string ver_structure, ver_labeling;
  CLI::App* ver = app.add_subcommand("verify", "Check a labeling against a structure");
  ver->add_option("--structure", ver_structure, "structure file")->required();
  ver->add_option("--labeling", ver_labeling, "labeling file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_gen_structure(gen_name, gen_out);
    if (par->parsed()) return cmd_parity_search(par_structure, par_out, par_workers, par_gf2);
    if (ter->parsed()) return cmd_ternary(ter_structure, ter_out);
    if (con->parsed()) return cmd_construct(con_out, con_workers);
    if (can->parsed()) return cmd_canonicalize(can_labeling, can_group, can_out);
    if (orb->parsed())
      return cmd_count_orbits(orb_labelings, orb_group, orb_structure, orb_out, orb_workers);
    if (sol->parsed()) return cmd_solve(sol_config, sol_out, sol_budget, sol_resume);
    if (ver->parsed()) return cmd_verify(ver_structure, ver_labeling);
  } catch (const Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::ParseError:
      case Errc::UnknownStructure:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;  // unreachable with require_subcommand(1)
}

}  // namespace magic24
