#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "diagen/errors.hpp"
#include "diagen/pipeline/pipeline.hpp"
#include "diagen/util/hash.hpp"
#include "doctest.h"

using namespace diagen;
using pipeline::GenConfig;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("diagen_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

void spit(const fs::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  REQUIRE(out.good());
  out << data;
}

std::vector<std::string> lines_of(const std::string& data) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < data.size()) {
    std::size_t nl = data.find('\n', pos);
    if (nl == std::string::npos) nl = data.size();
    lines.push_back(data.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

/// Byte-compare two dataset directories (every regular file).
bool datasets_equal(const fs::path& a, const fs::path& b) {
  std::set<fs::path> rel_a, rel_b;
  for (const auto& e : fs::recursive_directory_iterator(a))
    if (e.is_regular_file()) rel_a.insert(fs::relative(e.path(), a));
  for (const auto& e : fs::recursive_directory_iterator(b))
    if (e.is_regular_file()) rel_b.insert(fs::relative(e.path(), b));
  if (rel_a != rel_b) return false;
  for (const auto& rel : rel_a)
    if (slurp(a / rel) != slurp(b / rel)) return false;
  return true;
}

GenConfig small_caption_config(const fs::path& out) {
  GenConfig cfg;
  cfg.master_seed = 42;
  cfg.plane = 6;
  cfg.analytic = 4;
  cfg.function = 4;
  cfg.out_dir = out.string();
  cfg.jobs = 1;
  return cfg;
}

GenConfig small_instruct_config(const fs::path& out) {
  GenConfig cfg;
  cfg.master_seed = 43;
  cfg.plane = 8;
  cfg.function = 6;
  cfg.out_dir = out.string();
  cfg.jobs = 1;
  return cfg;
}

/// Accepts every caption, appending a harmless clause (numerals preserved).
class RewriteClient final : public caption::RefinementClient {
 public:
  std::string refine(const std::string& caption) override {
    return caption + " Indeed.";
  }
};

/// Destroys the numerals; every rewrite must be rejected.
class NumeralEatingClient final : public caption::RefinementClient {
 public:
  std::string refine(const std::string&) override { return "A shape exists."; }
};

}  // namespace

TEST_CASE("gen_captions writes a coherent dataset") {
  fs::path dir = fresh_dir("cap_basic");
  GenConfig cfg = small_caption_config(dir);
  pipeline::DatasetManifest manifest = pipeline::gen_captions(cfg);

  auto lines = lines_of(slurp(dir / "captions.jsonl"));
  CHECK(lines.size() == 14);
  CHECK(manifest.counts.at("captions/plane_geometry") == 6);
  CHECK(manifest.counts.at("captions/analytic_geometry") == 4);
  CHECK(manifest.counts.at("captions/function") == 4);

  // Every file listed in the manifest exists with the recorded digest.
  for (const auto& [rel, sha] : manifest.files)
    CHECK(util::sha256_hex(slurp(dir / rel)) == sha);
  CHECK(manifest.files.size() == 15);  // 14 SVGs + the JSONL

  // Lines carry the documented fields in stable order.
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto j = nlohmann::ordered_json::parse(lines[i]);
    std::vector<std::string> keys;
    for (const auto& [key, value] : j.items()) keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"id", "subject", "caption", "svg", "seed",
                                           "refined"});
    CHECK(j["id"].get<std::string>().substr(0, 4) == "cap-");
    CHECK(fs::exists(dir / j["svg"].get<std::string>()));
    CHECK(j["refined"].get<bool>() == false);
  }

  // Manifest on disk parses back to the same content.
  pipeline::DatasetManifest reloaded = pipeline::load_manifest(dir.string());
  CHECK(reloaded.files == manifest.files);
  CHECK(reloaded.counts == manifest.counts);
  CHECK(reloaded.config.master_seed == cfg.master_seed);

  CHECK(pipeline::validate_dataset(dir.string()).ok());
}

TEST_CASE("gen_captions refuses to overwrite without force") {
  fs::path dir = fresh_dir("cap_force");
  GenConfig cfg = small_caption_config(dir);
  cfg.plane = 1;
  cfg.analytic = 0;
  cfg.function = 0;
  pipeline::gen_captions(cfg);
  CHECK_THROWS_AS(pipeline::gen_captions(cfg), OutputExists);
  cfg.force = true;
  CHECK_NOTHROW(pipeline::gen_captions(cfg));
}

TEST_CASE("generation is deterministic across runs and worker counts") {
  fs::path a = fresh_dir("det_a"), b = fresh_dir("det_b"), c = fresh_dir("det_c");
  GenConfig cfg = small_instruct_config(a);
  pipeline::gen_instruct(cfg);
  cfg.out_dir = b.string();
  pipeline::gen_instruct(cfg);
  CHECK(datasets_equal(a, b));
  cfg.out_dir = c.string();
  cfg.jobs = 4;
  pipeline::gen_instruct(cfg);
  CHECK(datasets_equal(a, c));

  fs::path d = fresh_dir("det_d"), e = fresh_dir("det_e");
  GenConfig cap = small_caption_config(d);
  pipeline::gen_captions(cap);
  cap.out_dir = e.string();
  cap.jobs = 4;
  pipeline::gen_captions(cap);
  CHECK(datasets_equal(d, e));
}

TEST_CASE("gen_instruct obeys version mix and mc fraction") {
  fs::path dir = fresh_dir("ins_mix");
  GenConfig cfg;
  cfg.master_seed = 5;
  cfg.plane = 60;
  cfg.function = 40;
  cfg.out_dir = dir.string();
  cfg.jobs = 1;
  cfg.version_mix = {0, 0, 1, 0};  // vision-dominant only
  cfg.mc_fraction = 1.0;
  pipeline::DatasetManifest manifest = pipeline::gen_instruct(cfg);

  CHECK(manifest.counts.at("instruct/plane_geometry/vision_dominant") == 60);
  CHECK(manifest.counts.at("instruct/function/vision_dominant") == 40);
  CHECK(manifest.counts.size() == 2);

  for (const auto& line : lines_of(slurp(dir / "instruct.jsonl"))) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["version"] == "vision_dominant");
    CHECK(j["choices"].size() == 4);
    std::string answer = j["answer"].get<std::string>();
    CHECK(answer.size() == 1);  // multiple choice answers are option letters
    CHECK(answer[0] >= 'A');
    CHECK(answer[0] <= 'D');
  }
}

TEST_CASE("instruct records expose the documented schema") {
  fs::path dir = fresh_dir("ins_schema");
  GenConfig cfg = small_instruct_config(dir);
  pipeline::gen_instruct(cfg);
  for (const auto& line : lines_of(slurp(dir / "instruct.jsonl"))) {
    auto j = nlohmann::ordered_json::parse(line);
    std::vector<std::string> keys;
    for (const auto& [key, value] : j.items()) keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"id", "subject", "version", "question_text",
                                           "choices", "answer", "rationale",
                                           "numeric_answer", "svg", "chain_digest"});
    CHECK(!j["rationale"].empty());
    CHECK(!j["chain_digest"].get<std::string>().empty());
    if (j["version"] == "vision_only")
      CHECK(j["question_text"].get<std::string>().empty());
    else
      CHECK(!j["question_text"].get<std::string>().empty());
  }
}

TEST_CASE("validate pinpoints tampered records by id") {
  fs::path dir = fresh_dir("val_tamper");
  GenConfig cfg = small_instruct_config(dir);
  pipeline::gen_instruct(cfg);
  REQUIRE(pipeline::validate_dataset(dir.string()).ok());

  SUBCASE("mutated answer") {
    auto lines = lines_of(slurp(dir / "instruct.jsonl"));
    auto j = nlohmann::ordered_json::parse(lines[3]);
    j["answer"] = "999";
    lines[3] = j.dump();
    std::string joined;
    for (const auto& l : lines) joined += l + "\n";
    spit(dir / "instruct.jsonl", joined);

    auto report = pipeline::validate_dataset(dir.string());
    REQUIRE(!report.ok());
    std::set<std::string> record_ids;
    for (const auto& issue : report.issues)
      if (issue.id.rfind("ins-", 0) == 0) record_ids.insert(issue.id);
    CHECK(record_ids == std::set<std::string>{"ins-000003"});
  }

  SUBCASE("broken partition: condition sentence moved into the text") {
    auto lines = lines_of(slurp(dir / "instruct.jsonl"));
    auto j = nlohmann::ordered_json::parse(lines[5]);
    j["question_text"] = "Edge QQ measures 5. " + j["question_text"].get<std::string>();
    lines[5] = j.dump();
    std::string joined;
    for (const auto& l : lines) joined += l + "\n";
    spit(dir / "instruct.jsonl", joined);

    auto report = pipeline::validate_dataset(dir.string());
    REQUIRE(!report.ok());
    std::set<std::string> record_ids;
    for (const auto& issue : report.issues)
      if (issue.id.rfind("ins-", 0) == 0) record_ids.insert(issue.id);
    CHECK(record_ids == std::set<std::string>{"ins-000005"});
  }

  SUBCASE("truncated SVG") {
    fs::path svg = dir / "svg" / "ins-000007.svg";
    std::string bytes = slurp(svg);
    spit(svg, bytes.substr(0, 90));

    auto report = pipeline::validate_dataset(dir.string());
    REQUIRE(!report.ok());
    std::set<std::string> record_ids;
    for (const auto& issue : report.issues)
      if (issue.id.rfind("ins-", 0) == 0) record_ids.insert(issue.id);
    CHECK(record_ids == std::set<std::string>{"ins-000007"});
  }

  SUBCASE("missing SVG file") {
    fs::remove(dir / "svg" / "ins-000002.svg");
    auto report = pipeline::validate_dataset(dir.string());
    REQUIRE(!report.ok());
    bool found = false;
    for (const auto& issue : report.issues)
      found = found || (issue.id == "ins-000002" &&
                        issue.reason.find("missing") != std::string::npos);
    CHECK(found);
  }

  SUBCASE("line count mismatch") {
    std::string data = slurp(dir / "instruct.jsonl");
    auto lines = lines_of(data);
    std::string joined;
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) joined += lines[i] + "\n";
    spit(dir / "instruct.jsonl", joined);
    auto report = pipeline::validate_dataset(dir.string());
    REQUIRE(!report.ok());
    bool found = false;
    for (const auto& issue : report.issues)
      found = found || (issue.id == "instruct.jsonl" &&
                        issue.reason.find("lines") != std::string::npos);
    CHECK(found);
  }
}

TEST_CASE("refinement flows through generation and validation") {
  SUBCASE("accepted rewrites set the refined flag and still validate") {
    fs::path dir = fresh_dir("refine_ok");
    GenConfig cfg = small_caption_config(dir);
    cfg.refine = true;
    RewriteClient client;
    pipeline::gen_captions(cfg, &client);
    int refined = 0;
    for (const auto& line : lines_of(slurp(dir / "captions.jsonl"))) {
      auto j = nlohmann::json::parse(line);
      if (j["refined"].get<bool>()) ++refined;
      CHECK(j["caption"].get<std::string>().find(" Indeed.") != std::string::npos);
    }
    CHECK(refined == 14);
    CHECK(pipeline::validate_dataset(dir.string()).ok());
  }

  SUBCASE("numeral-destroying rewrites fall back to the original") {
    fs::path dir = fresh_dir("refine_bad");
    GenConfig cfg = small_caption_config(dir);
    cfg.refine = true;
    NumeralEatingClient client;
    pipeline::gen_captions(cfg, &client);
    for (const auto& line : lines_of(slurp(dir / "captions.jsonl"))) {
      auto j = nlohmann::json::parse(line);
      CHECK(j["refined"].get<bool>() == false);
      CHECK(j["caption"].get<std::string>() != "A shape exists.");
    }
    CHECK(pipeline::validate_dataset(dir.string()).ok());
  }

  SUBCASE("validate rejects a tampered caption even under refine") {
    fs::path dir = fresh_dir("refine_tamper");
    GenConfig cfg = small_caption_config(dir);
    cfg.refine = true;
    RewriteClient client;
    pipeline::gen_captions(cfg, &client);
    auto lines = lines_of(slurp(dir / "captions.jsonl"));
    auto j = nlohmann::ordered_json::parse(lines[2]);
    std::string caption = j["caption"].get<std::string>();
    // Change a numeral: fidelity must fail even though text may differ.
    auto digit = caption.find_first_of("0123456789");
    REQUIRE(digit != std::string::npos);
    caption[digit] = caption[digit] == '9' ? '8' : static_cast<char>(caption[digit] + 1);
    j["caption"] = caption;
    lines[2] = j.dump();
    std::string joined;
    for (const auto& l : lines) joined += l + "\n";
    spit(dir / "captions.jsonl", joined);

    auto report = pipeline::validate_dataset(dir.string());
    REQUIRE(!report.ok());
    bool found = false;
    for (const auto& issue : report.issues) found = found || issue.id == "cap-000002";
    CHECK(found);
  }
}

TEST_CASE("stats match the spec's hand-counted example") {
  fs::path dir = fresh_dir("stats_hand");
  fs::create_directories(dir / "svg");
  spit(dir / "svg" / "cap-000000.svg", "<svg/>");
  nlohmann::ordered_json j;
  j["id"] = "cap-000000";
  j["subject"] = "plane_geometry";
  j["caption"] = "A square.";
  j["svg"] = "svg/cap-000000.svg";
  j["seed"] = 1;
  j["refined"] = false;
  spit(dir / "captions.jsonl", j.dump() + "\n");

  auto report = pipeline::compute_stats({(dir / "captions.jsonl").string()});
  const auto& s = report.subjects.at("plane_geometry");
  CHECK(s.records == 1);
  CHECK(s.caption.words == 2);
  CHECK(s.caption.chars == 9);
  CHECK(s.vocabulary == 2);
  CHECK(s.unique_images == 1);
  CHECK(s.caption.unique == 1);

  // A duplicated line drops the unique count below the total.
  spit(dir / "captions.jsonl", j.dump() + "\n" + j.dump() + "\n");
  report = pipeline::compute_stats({(dir / "captions.jsonl").string()});
  CHECK(report.subjects.at("plane_geometry").records == 2);
  CHECK(report.subjects.at("plane_geometry").caption.unique == 1);
  CHECK(report.subjects.at("plane_geometry").unique_images == 1);
}

TEST_CASE("stats recomputation is reproducible and parse errors carry lines") {
  fs::path dir = fresh_dir("stats_repro");
  GenConfig cfg = small_caption_config(dir);
  pipeline::gen_captions(cfg);
  std::string path = (dir / "captions.jsonl").string();
  auto a = pipeline::compute_stats({path});
  auto b = pipeline::compute_stats({path});
  CHECK(pipeline::stats_json(a) == pipeline::stats_json(b));
  CHECK(a.subjects.at("all").records == 14);

  std::string data = slurp(dir / "captions.jsonl");
  spit(dir / "captions.jsonl", data + "this is not json\n");
  try {
    pipeline::compute_stats({path});
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(":15:") != std::string::npos);
  }
}

TEST_CASE("config json round-trips and rejects unknown keys") {
  GenConfig cfg;
  cfg.master_seed = 77;
  cfg.plane = 3;
  cfg.analytic = 2;
  cfg.function = 1;
  cfg.hop_min = 2;
  cfg.hop_max = 4;
  cfg.version_mix = {2, 1, 1, 0};
  cfg.mc_fraction = 0.5;
  cfg.refine = true;
  cfg.templates_path = "x.txt";

  GenConfig back;
  pipeline::apply_config_json(back, pipeline::config_json(cfg));
  CHECK(back.master_seed == cfg.master_seed);
  CHECK(back.plane == cfg.plane);
  CHECK(back.analytic == cfg.analytic);
  CHECK(back.function == cfg.function);
  CHECK(back.hop_min == cfg.hop_min);
  CHECK(back.hop_max == cfg.hop_max);
  CHECK(back.version_mix == cfg.version_mix);
  CHECK(back.mc_fraction == cfg.mc_fraction);
  CHECK(back.refine == cfg.refine);
  CHECK(back.templates_path == cfg.templates_path);

  nlohmann::json bad = {{"master_seed", 1}, {"bogus", 2}};
  GenConfig target;
  CHECK_THROWS_AS(pipeline::apply_config_json(target, bad), ConfigError);
  CHECK_THROWS_AS(pipeline::check_config([] {
                    GenConfig c;
                    c.plane = -1;
                    return c;
                  }(),
                  false),
                  ConfigError);
  CHECK_THROWS_AS(pipeline::check_config([] {
                    GenConfig c;
                    c.analytic = 1;
                    return c;
                  }(),
                  true),
                  ConfigError);
}
