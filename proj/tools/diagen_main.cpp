// diagen: deterministic generator for geometry/function diagram datasets.
//
// Subcommands: gen-captions, gen-instruct, render, stats, validate,
// templates-check. All generation randomness flows from --seed; there is no
// implicit time-based seeding. Exit codes: 0 success, 1 validation or
// generation failure, 2 configuration/usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "diagen/caption/templates.hpp"
#include "diagen/errors.hpp"
#include "diagen/pipeline/pipeline.hpp"
#include "diagen/pipeline/refine_http.hpp"

namespace {

using diagen::pipeline::GenConfig;

constexpr const char* kRefineEnvVar = "DIAGEN_REFINE_URL";

/// The flag values of one gen-* subcommand before merging.
struct GenFlags {
  std::uint64_t seed = 0;
  int plane = 0, analytic = 0, function = 0;
  std::string hops;
  std::string version_mix;
  double mc_fraction = 0.3;
  bool refine = false;
  int jobs = 0;
  bool force = false;
  std::string out;
  std::string config_path;
  std::string templates_path;
};

void add_gen_options(CLI::App* cmd, GenFlags& f, bool instruct) {
  cmd->add_option("--seed", f.seed,
                  "Master seed; required (also settable via --config)");
  cmd->add_option("--out", f.out, "Output dataset directory")
      ->default_val("dataset");
  cmd->add_option("--plane", f.plane, "Number of plane-geometry records");
  cmd->add_option("--analytic", f.analytic,
                  instruct ? "Must stay 0: analytic records are caption-only"
                           : "Number of analytic-geometry records");
  cmd->add_option("--function", f.function, "Number of function records");
  cmd->add_option("--hops", f.hops,
                  "Reasoning hops per figure as MIN:MAX (default 1:3)");
  if (instruct) {
    cmd->add_option("--version-mix", f.version_mix,
                    "Version weights TD:TL:VD:VO (default 1:1:1:1)");
    cmd->add_option("--mc-fraction", f.mc_fraction,
                    "Fraction of multiple-choice questions (default 0.3)");
  } else {
    cmd->add_flag("--refine", f.refine,
                  std::string("Rewrite captions via the HTTP endpoint in $") +
                      kRefineEnvVar);
  }
  cmd->add_option("--jobs", f.jobs,
                  "Worker threads; 0 = all cores (output is identical for any value)");
  cmd->add_flag("--force", f.force, "Overwrite an existing dataset directory");
  cmd->add_option("--config", f.config_path,
                  "JSON config file; flags override its values");
  cmd->add_option("--templates", f.templates_path,
                  "Sentence template corpus file (default: embedded corpus)");
}

/// defaults < config file < explicitly passed flags.
GenConfig merge_config(const CLI::App* cmd, const GenFlags& f) {
  GenConfig cfg;
  bool seed_set = false;
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    if (!in) throw diagen::ConfigError("cannot open config file " + f.config_path);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded())
      throw diagen::ConfigError(f.config_path + ": invalid JSON");
    diagen::pipeline::apply_config_json(cfg, j);
    seed_set = j.contains("master_seed");
  }
  auto given = [&](const char* name) {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--seed")) {
    cfg.master_seed = f.seed;
    seed_set = true;
  }
  if (given("--plane")) cfg.plane = f.plane;
  if (given("--analytic")) cfg.analytic = f.analytic;
  if (given("--function")) cfg.function = f.function;
  if (given("--hops")) {
    int lo = 0, hi = 0;
    if (std::sscanf(f.hops.c_str(), "%d:%d", &lo, &hi) != 2)
      throw diagen::ConfigError("--hops wants MIN:MAX, got " + f.hops);
    cfg.hop_min = lo;
    cfg.hop_max = hi;
  }
  if (given("--version-mix")) {
    double w[4];
    if (std::sscanf(f.version_mix.c_str(), "%lf:%lf:%lf:%lf", &w[0], &w[1], &w[2],
                    &w[3]) != 4)
      throw diagen::ConfigError("--version-mix wants TD:TL:VD:VO, got " +
                                f.version_mix);
    cfg.version_mix.assign(w, w + 4);
  }
  if (given("--mc-fraction")) cfg.mc_fraction = f.mc_fraction;
  if (given("--refine")) cfg.refine = f.refine;
  if (given("--jobs")) cfg.jobs = f.jobs;
  if (given("--force")) cfg.force = f.force;
  if (given("--out") || cfg.out_dir.empty()) cfg.out_dir = f.out;
  if (given("--templates")) cfg.templates_path = f.templates_path;
  if (!seed_set)
    throw diagen::ConfigError("--seed is required (reproducibility contract)");
  return cfg;
}

void print_summary(const char* command, const GenConfig& cfg,
                   const diagen::pipeline::DatasetManifest& manifest) {
  std::int64_t records = 0;
  for (const auto& [key, n] : manifest.counts) records += n;
  nlohmann::ordered_json j;
  j["command"] = command;
  j["records"] = records;
  j["plane"] = cfg.plane;
  j["analytic"] = cfg.analytic;
  j["function"] = cfg.function;
  j["out"] = cfg.out_dir;
  j["seed"] = cfg.master_seed;
  std::cout << j.dump() << "\n";
}

int run_gen_captions(const CLI::App* cmd, const GenFlags& f) {
  GenConfig cfg = merge_config(cmd, f);
  std::unique_ptr<diagen::pipeline::HttpRefinementClient> client;
  if (cfg.refine) {
    const char* url = std::getenv(kRefineEnvVar);
    if (!url || !*url)
      throw diagen::ConfigError(std::string("--refine needs $") + kRefineEnvVar);
    client = std::make_unique<diagen::pipeline::HttpRefinementClient>(url);
  }
  auto manifest = diagen::pipeline::gen_captions(cfg, client.get());
  print_summary("gen-captions", cfg, manifest);
  return 0;
}

int run_gen_instruct(const CLI::App* cmd, const GenFlags& f) {
  GenConfig cfg = merge_config(cmd, f);
  auto manifest = diagen::pipeline::gen_instruct(cfg);
  print_summary("gen-instruct", cfg, manifest);
  return 0;
}

int run_render(const std::string& dataset, const std::string& id,
               const std::string& out) {
  auto manifest = diagen::pipeline::load_manifest(dataset);
  bool instruct = id.rfind("ins-", 0) == 0;
  if (!instruct && id.rfind("cap-", 0) != 0)
    throw diagen::ConfigError("record id must start with cap- or ins-: " + id);
  int index = 0;
  try {
    index = std::stoi(id.substr(4));
  } catch (const std::exception&) {
    throw diagen::ConfigError("malformed record id: " + id);
  }
  GenConfig cfg = manifest.config;
  if (index < 0 || index >= cfg.total())
    throw diagen::ConfigError(id + " is outside this dataset (records: " +
                              std::to_string(cfg.total()) + ")");
  auto templates = cfg.templates_path.empty()
                       ? diagen::caption::default_templates()
                       : diagen::caption::TemplateSet::load_file(cfg.templates_path);
  auto rec = instruct
                 ? diagen::pipeline::build_instruct_record(cfg, templates, index)
                 : diagen::pipeline::build_caption_record(cfg, templates, index, nullptr);
  if (out.empty()) {
    std::cout << rec.svg;
  } else {
    std::ofstream os(out, std::ios::binary | std::ios::trunc);
    if (!os) throw diagen::Error("cannot write " + out);
    os << rec.svg;
    nlohmann::ordered_json j;
    j["command"] = "render";
    j["id"] = rec.id;
    j["out"] = out;
    std::cout << j.dump() << "\n";
  }
  return 0;
}

int run_stats(const std::vector<std::string>& files, bool as_json) {
  auto report = diagen::pipeline::compute_stats(files);
  if (as_json)
    std::cout << diagen::pipeline::stats_json(report).dump(2) << "\n";
  else
    std::cout << diagen::pipeline::stats_text(report);
  return 0;
}

int run_validate(const std::string& dataset) {
  auto report = diagen::pipeline::validate_dataset(dataset);
  for (const auto& issue : report.issues)
    std::cout << issue.id << "\t" << issue.reason << "\n";
  nlohmann::ordered_json j;
  j["command"] = "validate";
  j["dataset"] = dataset;
  j["failures"] = report.issues.size();
  std::cout << j.dump() << "\n";
  return report.ok() ? 0 : 1;
}

int run_templates_check(const std::string& path) {
  diagen::caption::TemplateSet templates =
      path.empty() ? diagen::caption::default_templates()
                   : diagen::caption::TemplateSet::load_file(path);
  auto problems = diagen::caption::validate_templates(templates);
  for (const auto& p : problems) std::cout << p << "\n";
  nlohmann::ordered_json j;
  j["command"] = "templates-check";
  j["source"] = path.empty() ? "embedded" : path;
  j["issues"] = problems.size();
  std::cout << j.dump() << "\n";
  return problems.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic plane/analytic/function diagram dataset generator"};
  app.require_subcommand(1);

  GenFlags cap_flags, ins_flags;
  auto* cap = app.add_subcommand("gen-captions",
                                 "Generate diagram-caption pairs (captions.jsonl)");
  add_gen_options(cap, cap_flags, false);
  auto* ins = app.add_subcommand(
      "gen-instruct", "Generate question/rationale records (instruct.jsonl)");
  add_gen_options(ins, ins_flags, true);

  std::string render_dataset, render_id, render_out;
  auto* ren = app.add_subcommand("render",
                                 "Regenerate one record's SVG from a dataset");
  ren->add_option("dataset", render_dataset, "Dataset directory with manifest.json")
      ->required();
  ren->add_option("--id", render_id, "Record id, e.g. ins-000002")->required();
  ren->add_option("--out", render_out, "Output file (default: stdout)");

  std::vector<std::string> stats_files;
  bool stats_as_json = false;
  auto* sta = app.add_subcommand("stats", "Corpus statistics for JSONL files");
  sta->add_option("files", stats_files, "captions.jsonl / instruct.jsonl paths")
      ->required();
  sta->add_flag("--json", stats_as_json, "Emit the report as JSON");

  std::string validate_dir;
  auto* val = app.add_subcommand(
      "validate", "Re-verify a dataset directory against its manifest");
  val->add_option("dataset", validate_dir, "Dataset directory with manifest.json")
      ->required();

  std::string templates_path;
  auto* tpl = app.add_subcommand("templates-check",
                                 "Check a sentence template corpus for problems");
  tpl->add_option("--templates", templates_path,
                  "Corpus file (default: embedded corpus)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (cap->parsed()) return run_gen_captions(cap, cap_flags);
    if (ins->parsed()) return run_gen_instruct(ins, ins_flags);
    if (ren->parsed()) return run_render(render_dataset, render_id, render_out);
    if (sta->parsed()) return run_stats(stats_files, stats_as_json);
    if (val->parsed()) return run_validate(validate_dir);
    if (tpl->parsed()) return run_templates_check(templates_path);
  } catch (const diagen::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const diagen::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const diagen::OutputExists& e) {
    std::cerr << "refusing to overwrite: " << e.what() << "\n";
    return 2;
  } catch (const diagen::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
