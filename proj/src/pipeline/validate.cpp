#include <algorithm>
#include <filesystem>
#include <fstream>

#include "diagen/errors.hpp"
#include "diagen/pipeline/pipeline.hpp"
#include "diagen/util/hash.hpp"
#include "diagen/util/text.hpp"

namespace diagen::pipeline {

namespace fs = std::filesystem;

namespace {

std::string read_file_or_empty(const fs::path& path, bool& ok) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ok = false;
    return {};
  }
  ok = true;
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

/// "svg/cap-000123.svg" -> "cap-000123"; other paths name themselves.
std::string id_of_path(const std::string& rel) {
  fs::path p(rel);
  if (p.extension() == ".svg") return p.stem().string();
  return rel;
}

std::vector<std::string> read_lines(const std::string& data) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < data.size()) {
    std::size_t nl = data.find('\n', pos);
    if (nl == std::string::npos) {
      lines.push_back(data.substr(pos));
      break;
    }
    lines.push_back(data.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

/// Sorted numeral multiset of a caption text.
std::vector<std::string> numeral_multiset(const std::string& text) {
  std::vector<std::string> numerals = util::extract_numerals(text);
  std::sort(numerals.begin(), numerals.end());
  return numerals;
}

}  // namespace

ValidationReport validate_dataset(const std::string& dataset_dir) {
  DatasetManifest manifest = load_manifest(dataset_dir);
  ValidationReport report;
  fs::path base(dataset_dir);

  const bool instruct = manifest.files.count("instruct.jsonl") > 0;
  const std::string jsonl_name = instruct ? "instruct.jsonl" : "captions.jsonl";
  if (!manifest.files.count(jsonl_name))
    throw ParseError("manifest lists no " + jsonl_name);

  // File digests against the manifest. SVG issues carry their record id.
  for (const auto& [rel, sha] : manifest.files) {
    bool ok = false;
    std::string bytes = read_file_or_empty(base / rel, ok);
    if (!ok) {
      report.issues.push_back({id_of_path(rel), "missing file: " + rel});
      continue;
    }
    if (util::sha256_hex(bytes) != sha)
      report.issues.push_back({id_of_path(rel), "digest mismatch: " + rel});
  }

  // Regenerate every record from the config echo and compare.
  GenConfig cfg = manifest.config;
  check_config(cfg, instruct);
  caption::TemplateSet templates = cfg.templates_path.empty()
                                       ? caption::default_templates()
                                       : caption::TemplateSet::load_file(cfg.templates_path);

  bool jsonl_ok = false;
  std::string jsonl_data = read_file_or_empty(base / jsonl_name, jsonl_ok);
  std::vector<std::string> lines =
      jsonl_ok ? read_lines(jsonl_data) : std::vector<std::string>{};
  int total = cfg.total();
  if (jsonl_ok && static_cast<int>(lines.size()) != total)
    report.issues.push_back(
        {jsonl_name, "expected " + std::to_string(total) + " lines, found " +
                         std::to_string(lines.size())});

  std::map<std::string, std::int64_t> counts;
  int compared = std::min<int>(total, static_cast<int>(lines.size()));
  for (int i = 0; i < compared; ++i) {
    BuiltRecord want;
    try {
      want = instruct ? build_instruct_record(cfg, templates, i)
                      : build_caption_record(cfg, templates, i, nullptr);
    } catch (const Error& e) {
      report.issues.push_back({jsonl_name, std::string("regeneration failed at line ") +
                                               std::to_string(i + 1) + ": " + e.what()});
      break;
    }
    ++counts[want.count_key];

    bool line_matches = lines[i] == want.line;
    if (!line_matches && !instruct && cfg.refine) {
      // Refined captions cannot be regenerated byte-for-byte; check the
      // stable fields and the numeral multiset instead.
      nlohmann::json stored = nlohmann::json::parse(lines[i], nullptr, false);
      nlohmann::json expect = nlohmann::json::parse(want.line, nullptr, false);
      line_matches =
          !stored.is_discarded() && stored.is_object() && stored.contains("caption") &&
          stored.value("id", "") == expect.value("id", "") &&
          stored.value("subject", "") == expect.value("subject", "") &&
          stored.value("svg", "") == expect.value("svg", "") &&
          stored.value("seed", std::uint64_t(0)) ==
              expect.value("seed", std::uint64_t(0)) &&
          stored.contains("refined") && stored.at("refined").is_boolean() &&
          numeral_multiset(stored.value("caption", "")) ==
              numeral_multiset(expect.value("caption", ""));
      if (!line_matches)
        report.issues.push_back({want.id, "caption departs from the regenerated record"});
    } else if (!line_matches) {
      report.issues.push_back({want.id, "line differs from regeneration"});
    }

    bool svg_ok = false;
    std::string svg_bytes = read_file_or_empty(base / want.svg_name, svg_ok);
    if (svg_ok && svg_bytes != want.svg)
      report.issues.push_back({want.id, "svg differs from regeneration"});
    // A missing SVG was already reported by the digest pass.
  }

  // Manifest counts must match the regenerated tally.
  if (static_cast<int>(lines.size()) == total && counts != manifest.counts)
    report.issues.push_back({"manifest.json", "counts do not match the dataset"});

  return report;
}

}  // namespace diagen::pipeline
