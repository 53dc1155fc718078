#include "diagen/pipeline/pipeline.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <thread>

#include "diagen/analytic/scene.hpp"
#include "diagen/errors.hpp"
#include "diagen/fn/qa.hpp"
#include "diagen/geom/build.hpp"
#include "diagen/plane/problem.hpp"
#include "diagen/render/svg.hpp"
#include "diagen/util/hash.hpp"

namespace diagen::pipeline {

namespace fs = std::filesystem;

namespace {

constexpr int kChunk = 256;  // records generated per parallel batch

std::string record_id(const char* prefix, int index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s-%06d", prefix, index);
  return buf;
}

Subject caption_subject(const GenConfig& cfg, int index) {
  if (index < cfg.plane) return Subject::PlaneGeometry;
  if (index < cfg.plane + cfg.analytic) return Subject::AnalyticGeometry;
  return Subject::Function;
}

Subject instruct_subject(const GenConfig& cfg, int index) {
  return index < cfg.plane ? Subject::PlaneGeometry : Subject::Function;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return data;
}

void write_file(const fs::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

int effective_jobs(const GenConfig& cfg) {
  if (cfg.jobs > 0) return cfg.jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

caption::TemplateSet load_templates(const GenConfig& cfg) {
  if (cfg.templates_path.empty()) return caption::default_templates();
  return caption::TemplateSet::load_file(cfg.templates_path);
}

void prepare_output_dir(const GenConfig& cfg, const std::string& jsonl_name) {
  fs::path out = cfg.out_dir;
  if (!cfg.force) {
    if (fs::exists(out / "manifest.json"))
      throw OutputExists(cfg.out_dir + " already holds a dataset (use force)");
    if (fs::exists(out / jsonl_name))
      throw OutputExists(cfg.out_dir + "/" + jsonl_name +
                         " already exists (use force)");
  }
  fs::create_directories(out / "svg");
}

/// Generates records [0, total) through `build`, possibly on several
/// threads, and writes lines/SVG files strictly in index order.
void run_generation(int total, int jobs, const fs::path& out_dir,
                    const std::string& jsonl_name,
                    const std::function<BuiltRecord(int)>& build,
                    DatasetManifest& manifest) {
  std::ofstream jsonl(out_dir / jsonl_name, std::ios::binary | std::ios::trunc);
  if (!jsonl) throw Error("cannot write " + (out_dir / jsonl_name).string());

  for (int base = 0; base < total; base += kChunk) {
    int n = std::min(kChunk, total - base);
    std::vector<BuiltRecord> results(n);
    std::vector<std::exception_ptr> errors(n);
    int workers = std::min(jobs, n);
    if (workers <= 1) {
      for (int i = 0; i < n; ++i) {
        try {
          results[i] = build(base + i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    } else {
      std::atomic<int> next{0};
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
          for (int i; (i = next.fetch_add(1)) < n;) {
            try {
              results[i] = build(base + i);
            } catch (...) {
              errors[i] = std::current_exception();
            }
          }
        });
      for (auto& th : pool) th.join();
    }
    for (int i = 0; i < n; ++i)
      if (errors[i]) std::rethrow_exception(errors[i]);

    for (int i = 0; i < n; ++i) {
      BuiltRecord& rec = results[i];
      jsonl << rec.line << '\n';
      write_file(out_dir / rec.svg_name, rec.svg);
      manifest.files[rec.svg_name] = util::sha256_hex(rec.svg);
      ++manifest.counts[rec.count_key];
      if (!rec.warning.empty()) std::cerr << rec.warning << '\n';
    }
  }
  jsonl.close();
  manifest.files[jsonl_name] = util::sha256_hex(read_file(out_dir / jsonl_name));
}

}  // namespace

nlohmann::ordered_json config_json(const GenConfig& cfg) {
  nlohmann::ordered_json j;
  j["master_seed"] = cfg.master_seed;
  j["plane"] = cfg.plane;
  j["analytic"] = cfg.analytic;
  j["function"] = cfg.function;
  j["hop_min"] = cfg.hop_min;
  j["hop_max"] = cfg.hop_max;
  j["version_mix"] = cfg.version_mix;
  j["mc_fraction"] = cfg.mc_fraction;
  j["refine"] = cfg.refine;
  j["templates"] = cfg.templates_path;
  return j;
}

void apply_config_json(GenConfig& cfg, const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "master_seed")
        cfg.master_seed = value.get<std::uint64_t>();
      else if (key == "plane")
        cfg.plane = value.get<int>();
      else if (key == "analytic")
        cfg.analytic = value.get<int>();
      else if (key == "function")
        cfg.function = value.get<int>();
      else if (key == "hop_min")
        cfg.hop_min = value.get<int>();
      else if (key == "hop_max")
        cfg.hop_max = value.get<int>();
      else if (key == "version_mix")
        cfg.version_mix = value.get<std::vector<double>>();
      else if (key == "mc_fraction")
        cfg.mc_fraction = value.get<double>();
      else if (key == "refine")
        cfg.refine = value.get<bool>();
      else if (key == "templates")
        cfg.templates_path = value.get<std::string>();
      else if (key == "out")
        cfg.out_dir = value.get<std::string>();
      else if (key == "jobs")
        cfg.jobs = value.get<int>();
      else
        throw ConfigError("unknown config key: " + key);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
}

void check_config(const GenConfig& cfg, bool instruct) {
  if (cfg.plane < 0 || cfg.analytic < 0 || cfg.function < 0)
    throw ConfigError("record counts must be non-negative");
  if (instruct && cfg.analytic > 0)
    throw ConfigError(
        "analytic geometry has no instruct records; use it for captions only");
  if (cfg.hop_min < 1 || cfg.hop_max < cfg.hop_min || cfg.hop_max > 8)
    throw ConfigError("hops must satisfy 1 <= min <= max <= 8");
  if (cfg.version_mix.size() != 4)
    throw ConfigError("version mix needs exactly 4 weights");
  double mix_total = 0;
  for (double w : cfg.version_mix) {
    if (w < 0) throw ConfigError("version mix weights must be non-negative");
    mix_total += w;
  }
  if (mix_total <= 0) throw ConfigError("version mix needs a positive weight");
  if (cfg.mc_fraction < 0 || cfg.mc_fraction > 1)
    throw ConfigError("mc fraction must lie in [0, 1]");
}

nlohmann::ordered_json manifest_json(const DatasetManifest& m) {
  nlohmann::ordered_json j;
  j["engine"] = m.engine;
  j["config"] = config_json(m.config);
  j["counts"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : m.counts) j["counts"][key] = value;
  j["files"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : m.files) j["files"][key] = value;
  return j;
}

DatasetManifest manifest_from_json(const nlohmann::json& j) {
  DatasetManifest m;
  try {
    m.engine = j.at("engine").get<std::string>();
    apply_config_json(m.config, j.at("config"));
    for (const auto& [key, value] : j.at("counts").items())
      m.counts[key] = value.get<std::int64_t>();
    for (const auto& [key, value] : j.at("files").items())
      m.files[key] = value.get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("manifest: ") + e.what());
  }
  return m;
}

DatasetManifest load_manifest(const std::string& dataset_dir) {
  fs::path path = fs::path(dataset_dir) / "manifest.json";
  std::string text = read_file(path);
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(path.string() + ": invalid JSON");
  return manifest_from_json(j);
}

BuiltRecord build_caption_record(const GenConfig& cfg,
                                 const caption::TemplateSet& templates, int index,
                                 caption::RefinementClient* client) {
  std::uint64_t seed = util::derive_seed(cfg.master_seed, "caption", index);
  util::Rng rng(seed);
  Subject subject = caption_subject(cfg, index);
  render::RenderStyle style;

  caption::Caption cap;
  std::string svg;
  switch (subject) {
    case Subject::PlaneGeometry: {
      geom::FigureConfig fc;
      fc.min_hops = cfg.hop_min;
      fc.max_hops = cfg.hop_max;
      geom::CompositeFigure fig = geom::sample_figure(rng, fc);
      cap = caption::compose_plane_caption(rng, templates, fig);
      svg = render::render_plane(fig, {}, style);
      break;
    }
    case Subject::AnalyticGeometry: {
      analytic::AnalyticConfig ac;
      analytic::Scene scene = analytic::sample_scene(rng, ac);
      cap = caption::compose_analytic_caption(rng, templates, scene);
      svg = render::render_analytic(scene, style);
      break;
    }
    case Subject::Function: {
      fn::FunctionSpec spec = fn::sample_function(rng);
      fn::FunctionFeatures features = fn::scan_features(spec);
      cap = caption::compose_function_caption(rng, templates, spec, features);
      svg = render::render_function(spec, features, style);
      break;
    }
  }

  BuiltRecord rec;
  rec.id = record_id("cap", index);
  rec.count_key = std::string("captions/") + std::string(subject_name(subject));
  rec.svg_name = "svg/" + rec.id + ".svg";
  rec.svg = std::move(svg);

  std::string text = cap.text;
  bool refined = false;
  if (client) {
    caption::RefineResult refined_result = caption::refine_caption(cap, *client);
    text = refined_result.text;
    refined = refined_result.refined;
    if (!refined_result.warning.empty())
      rec.warning = rec.id + ": " + refined_result.warning;
  }

  nlohmann::ordered_json j;
  j["id"] = rec.id;
  j["subject"] = subject_name(subject);
  j["caption"] = text;
  j["svg"] = rec.svg_name;
  j["seed"] = seed;
  j["refined"] = refined;
  rec.line = j.dump();
  return rec;
}

BuiltRecord build_instruct_record(const GenConfig& cfg,
                                  const caption::TemplateSet& templates, int index) {
  std::uint64_t seed = util::derive_seed(cfg.master_seed, "instruct", index);
  util::Rng rng(seed);
  Subject subject = instruct_subject(cfg, index);
  render::RenderStyle style;

  BuiltRecord rec;
  rec.id = record_id("ins", index);
  rec.svg_name = "svg/" + rec.id + ".svg";

  ProblemRecord out;
  if (subject == Subject::PlaneGeometry) {
    plane::PlaneConfig pc;
    pc.figure.min_hops = cfg.hop_min;
    pc.figure.max_hops = cfg.hop_max;
    plane::BaseProblem base =
        plane::synthesize_problem(rng, pc, templates, cfg.mc_fraction);
    VersionTag tag = all_versions()[rng.pick_weighted(cfg.version_mix)];
    out = plane::emit_version(base, rng, tag);
    out.id = rec.id;
    out.svg_path = rec.svg_name;
    out.seed = seed;
    VerificationReport rep = plane::verify_problem(base, {out});
    if (!rep.ok)
      throw Error("verification gate failed for " + rec.id + ": " + rep.issues.front());
    rec.svg = render::render_plane(base.chain.figure, out.diagram_annotations, style,
                                   out.render_question ? base.question_sentence : "");
  } else {
    fn::FunctionProblem base =
        fn::synthesize_function_problem(rng, templates, cfg.mc_fraction);
    VersionTag tag = all_versions()[rng.pick_weighted(cfg.version_mix)];
    out = fn::emit_version(base, rng, tag);
    out.id = rec.id;
    out.svg_path = rec.svg_name;
    out.seed = seed;
    VerificationReport rep = fn::verify_function_problem(base, {out});
    if (!rep.ok)
      throw Error("verification gate failed for " + rec.id + ": " + rep.issues.front());
    rec.svg = render::render_function(base.spec, base.features, style,
                                      out.diagram_annotations,
                                      out.render_question ? base.question_sentence : "");
  }

  rec.count_key = std::string("instruct/") + std::string(subject_name(subject)) + "/" +
                  std::string(version_name(out.version));

  nlohmann::ordered_json j;
  j["id"] = out.id;
  j["subject"] = subject_name(out.subject);
  j["version"] = version_name(out.version);
  j["question_text"] = out.question_text;
  j["choices"] = out.choices;
  j["answer"] = out.answer;
  j["rationale"] = out.rationale;
  j["numeric_answer"] = out.numeric_answer;
  j["svg"] = out.svg_path;
  j["chain_digest"] = out.chain_digest;
  rec.line = j.dump();
  return rec;
}

DatasetManifest gen_captions(const GenConfig& cfg, caption::RefinementClient* client) {
  check_config(cfg, false);
  caption::TemplateSet templates = load_templates(cfg);
  prepare_output_dir(cfg, "captions.jsonl");

  DatasetManifest manifest;
  manifest.config = cfg;

  // The client may keep connection state; serialize access when parallel.
  std::mutex client_mutex;
  auto build = [&](int index) {
    if (!client) return build_caption_record(cfg, templates, index, nullptr);
    std::lock_guard<std::mutex> lock(client_mutex);
    return build_caption_record(cfg, templates, index, client);
  };
  run_generation(cfg.total(), effective_jobs(cfg), cfg.out_dir, "captions.jsonl", build,
                 manifest);

  write_file(fs::path(cfg.out_dir) / "manifest.json", manifest_json(manifest).dump(2) + "\n");
  return manifest;
}

DatasetManifest gen_instruct(const GenConfig& cfg) {
  check_config(cfg, true);
  caption::TemplateSet templates = load_templates(cfg);
  prepare_output_dir(cfg, "instruct.jsonl");

  DatasetManifest manifest;
  manifest.config = cfg;

  auto build = [&](int index) { return build_instruct_record(cfg, templates, index); };
  run_generation(cfg.total(), effective_jobs(cfg), cfg.out_dir, "instruct.jsonl", build,
                 manifest);

  write_file(fs::path(cfg.out_dir) / "manifest.json", manifest_json(manifest).dump(2) + "\n");
  return manifest;
}

}  // namespace diagen::pipeline
