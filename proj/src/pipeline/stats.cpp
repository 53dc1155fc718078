#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "diagen/errors.hpp"
#include "diagen/pipeline/pipeline.hpp"
#include "diagen/util/hash.hpp"
#include "diagen/util/text.hpp"

namespace diagen::pipeline {

namespace fs = std::filesystem;

namespace {

/// Running tallies plus the uniqueness sets the report's counts come from.
struct TextAccum {
  std::int64_t records = 0;
  std::int64_t words = 0;
  std::int64_t chars = 0;
  std::set<std::string> unique;
};

struct SubjectAccum {
  std::int64_t records = 0;
  TextAccum caption, question, answer;
  std::set<std::string> vocabulary;
  std::set<std::string> images;
};

void add_text(SubjectAccum& subject_acc, TextAccum& field, const std::string& text) {
  ++field.records;
  auto words = util::split_words(text);
  field.words += static_cast<std::int64_t>(words.size());
  field.chars += static_cast<std::int64_t>(util::count_chars(text));
  field.unique.insert(text);
  for (auto word : words) {
    std::string token = util::vocab_token(word);
    if (!token.empty()) subject_acc.vocabulary.insert(std::move(token));
  }
}

TextStats finish(const TextAccum& acc) {
  return {acc.records, acc.words, acc.chars,
          static_cast<std::int64_t>(acc.unique.size())};
}

std::string field_string(const nlohmann::json& j, const char* key,
                         const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_string())
    throw ParseError(where + ": missing string field '" + key + "'");
  return j.at(key).get<std::string>();
}

nlohmann::ordered_json text_stats_json(const TextStats& t) {
  nlohmann::ordered_json j;
  j["records"] = t.records;
  j["words"] = t.words;
  j["chars"] = t.chars;
  j["unique"] = t.unique;
  j["avg_words"] = t.records ? static_cast<double>(t.words) / t.records : 0.0;
  j["avg_chars"] = t.records ? static_cast<double>(t.chars) / t.records : 0.0;
  return j;
}

std::string avg_line(const char* label, const TextStats& t) {
  if (t.records == 0) return {};
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "  %-10s avg %.2f words, %.2f chars over %lld records, %lld unique\n",
                label, static_cast<double>(t.words) / t.records,
                static_cast<double>(t.chars) / t.records,
                static_cast<long long>(t.records), static_cast<long long>(t.unique));
  return buf;
}

}  // namespace

StatsReport compute_stats(const std::vector<std::string>& jsonl_paths) {
  std::map<std::string, SubjectAccum> accum;
  std::map<std::string, std::string> digest_cache;  // absolute path -> sha256

  for (const auto& path : jsonl_paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open");
    fs::path base = fs::path(path).parent_path();

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::string where = path + ":" + std::to_string(lineno);
      if (line.empty()) throw ParseError(where + ": empty line");
      nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.is_object())
        throw ParseError(where + ": invalid JSON record");

      std::string subject = field_string(j, "subject", where);
      std::string svg_rel = field_string(j, "svg", where);
      fs::path svg_path = base / svg_rel;
      auto cached = digest_cache.find(svg_path.string());
      if (cached == digest_cache.end()) {
        std::ifstream svg_in(svg_path, std::ios::binary);
        if (!svg_in) throw ParseError(where + ": missing image " + svg_rel);
        std::string bytes((std::istreambuf_iterator<char>(svg_in)),
                          std::istreambuf_iterator<char>());
        cached = digest_cache.emplace(svg_path.string(), util::sha256_hex(bytes)).first;
      }

      for (const std::string& key : {subject, std::string("all")}) {
        SubjectAccum& acc = accum[key];
        ++acc.records;
        acc.images.insert(cached->second);
        if (j.contains("caption"))
          add_text(acc, acc.caption, field_string(j, "caption", where));
        if (j.contains("question_text"))
          add_text(acc, acc.question, field_string(j, "question_text", where));
        if (j.contains("rationale")) {
          if (!j.at("rationale").is_array())
            throw ParseError(where + ": 'rationale' must be an array");
          std::string joined;
          for (const auto& part : j.at("rationale")) {
            if (!part.is_string())
              throw ParseError(where + ": 'rationale' must hold strings");
            if (!joined.empty()) joined += ' ';
            joined += part.get<std::string>();
          }
          add_text(acc, acc.answer, joined);
        }
      }
    }
  }

  StatsReport report;
  for (const auto& [key, acc] : accum) {
    SubjectStats s;
    s.records = acc.records;
    s.caption = finish(acc.caption);
    s.question = finish(acc.question);
    s.answer = finish(acc.answer);
    s.vocabulary = static_cast<std::int64_t>(acc.vocabulary.size());
    s.unique_images = static_cast<std::int64_t>(acc.images.size());
    report.subjects[key] = s;
  }
  return report;
}

nlohmann::ordered_json stats_json(const StatsReport& report) {
  nlohmann::ordered_json j;
  for (const auto& [subject, s] : report.subjects) {
    nlohmann::ordered_json row;
    row["records"] = s.records;
    if (s.caption.records) row["caption"] = text_stats_json(s.caption);
    if (s.question.records) row["question"] = text_stats_json(s.question);
    if (s.answer.records) row["answer"] = text_stats_json(s.answer);
    row["vocabulary"] = s.vocabulary;
    row["unique_images"] = s.unique_images;
    j[subject] = row;
  }
  return j;
}

std::string stats_text(const StatsReport& report) {
  std::string out;
  for (const auto& [subject, s] : report.subjects) {
    out += "[" + subject + "]\n";
    char buf[160];
    std::snprintf(buf, sizeof(buf), "  %-10s %lld\n", "records",
                  static_cast<long long>(s.records));
    out += buf;
    out += avg_line("caption", s.caption);
    out += avg_line("question", s.question);
    out += avg_line("answer", s.answer);
    std::snprintf(buf, sizeof(buf), "  %-10s %lld\n  %-10s %lld\n", "vocabulary",
                  static_cast<long long>(s.vocabulary), "images",
                  static_cast<long long>(s.unique_images));
    out += buf;
  }
  return out;
}

}  // namespace diagen::pipeline
