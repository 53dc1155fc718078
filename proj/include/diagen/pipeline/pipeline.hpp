#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "diagen/caption/compose.hpp"
#include "diagen/record.hpp"

namespace diagen::pipeline {

inline constexpr std::string_view kEngineVersion = "0.1.0";

/// Everything a generation run depends on. Counts are per subject; caption
/// runs accept all three subjects, instruct runs only plane geometry and
/// functions. Fields not echoed into the manifest (jobs, out_dir, force) do
/// not influence output bytes.
struct GenConfig {
  std::uint64_t master_seed = 0;
  int plane = 0;
  int analytic = 0;
  int function = 0;
  int hop_min = 1;
  int hop_max = 3;
  // Version weights in text_dominant, text_lite, vision_dominant,
  // vision_only order (instruct runs only).
  std::vector<double> version_mix = {1, 1, 1, 1};
  double mc_fraction = 0.3;
  bool refine = false;
  std::string templates_path;  // empty = embedded corpus

  // Run mechanics, not part of the dataset identity.
  std::string out_dir = "dataset";
  int jobs = 0;  // 0 = hardware parallelism
  bool force = false;

  int total() const { return plane + analytic + function; }
};

/// Materializes the dataset-identity fields (everything except out_dir,
/// jobs, force) as the manifest's config echo.
nlohmann::ordered_json config_json(const GenConfig& cfg);

/// Applies echoed fields onto `cfg`; unknown keys raise ConfigError.
void apply_config_json(GenConfig& cfg, const nlohmann::json& j);

/// Sanity checks counts, hops, weights and fractions; throws ConfigError.
void check_config(const GenConfig& cfg, bool instruct);

/// Index of the dataset directory: engine version, config echo, per-key
/// record counts ("captions/<subject>" or "instruct/<subject>/<version>"),
/// and the SHA-256 of every output file, keyed by dataset-relative path.
struct DatasetManifest {
  std::string engine{kEngineVersion};
  GenConfig config;
  std::map<std::string, std::int64_t> counts;
  std::map<std::string, std::string> files;
};

nlohmann::ordered_json manifest_json(const DatasetManifest& m);
DatasetManifest manifest_from_json(const nlohmann::json& j);
DatasetManifest load_manifest(const std::string& dataset_dir);

/// One fully generated record: the JSONL line (no trailing newline), the
/// SVG bytes, and bookkeeping for counts and warnings.
struct BuiltRecord {
  std::string id;
  std::string count_key;  // manifest counts key
  std::string line;
  std::string svg_name;  // dataset-relative path, svg/<id>.svg
  std::string svg;
  std::string warning;  // refinement fallback note, empty otherwise
};

/// Deterministic single-record builders; `index` selects the subject by the
/// configured count blocks and seeds an rng stream independent of every
/// other record. `client` may be null (no refinement attempted).
BuiltRecord build_caption_record(const GenConfig& cfg,
                                 const caption::TemplateSet& templates, int index,
                                 caption::RefinementClient* client);
BuiltRecord build_instruct_record(const GenConfig& cfg,
                                  const caption::TemplateSet& templates, int index);

/// Generates captions.jsonl + svg/ + manifest.json under cfg.out_dir.
/// Refuses to touch a directory holding a manifest unless cfg.force.
DatasetManifest gen_captions(const GenConfig& cfg,
                             caption::RefinementClient* client = nullptr);

/// Generates instruct.jsonl + svg/ + manifest.json under cfg.out_dir. Every
/// record re-passed its subject verifier before being written.
DatasetManifest gen_instruct(const GenConfig& cfg);

/// Accumulated text metrics for one record field. Counts are absolute so
/// equality against an independent recount is exact; averages are derived.
struct TextStats {
  std::int64_t records = 0;
  std::int64_t words = 0;
  std::int64_t chars = 0;  // line terminators excluded
  std::int64_t unique = 0;  // distinct exact strings
};

struct SubjectStats {
  std::int64_t records = 0;
  TextStats caption;
  TextStats question;
  TextStats answer;  // instruct: the rationale lines joined by single spaces
  std::int64_t vocabulary = 0;     // distinct cleaned tokens over all fields
  std::int64_t unique_images = 0;  // distinct SVG content digests
};

/// Keyed by subject name plus an "all" aggregate row.
struct StatsReport {
  std::map<std::string, SubjectStats> subjects;
};

/// Reads caption/instruct JSONL files (SVGs resolved against each file's
/// directory). Throws ParseError with file:line context on malformed input.
StatsReport compute_stats(const std::vector<std::string>& jsonl_paths);

nlohmann::ordered_json stats_json(const StatsReport& report);
std::string stats_text(const StatsReport& report);

struct ValidationIssue {
  std::string id;  // record id, or the offending file name
  std::string reason;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Re-verifies a dataset directory against its manifest: file digests,
/// line-by-line regeneration from the config echo (relaxed to numeral
/// fidelity for refined captions), SVG byte equality, and count totals.
/// Throws ParseError / ConfigError when the manifest itself is unusable.
ValidationReport validate_dataset(const std::string& dataset_dir);

}  // namespace diagen::pipeline
