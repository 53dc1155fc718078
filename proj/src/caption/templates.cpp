#include "diagen/caption/templates.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "diagen/errors.hpp"

namespace diagen::caption {

TemplateSet TemplateSet::parse(const std::string& text) {
  TemplateSet out;
  std::istringstream in(text);
  std::string line, current;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '<') {
      if (line.back() != '>' || line.size() < 3)
        throw ConfigError("template corpus line " + std::to_string(line_no) +
                          ": malformed section header");
      current = line.substr(1, line.size() - 2);
      out.sections_[current];  // section may legitimately stay empty until filled
      continue;
    }
    if (current.empty())
      throw ConfigError("template corpus line " + std::to_string(line_no) +
                        ": template before any <section> header");
    out.sections_[current].push_back(line);
  }
  return out;
}

TemplateSet TemplateSet::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open template corpus: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const std::vector<std::string>& TemplateSet::section(const std::string& name) const {
  auto it = sections_.find(name);
  if (it == sections_.end() || it->second.empty())
    throw TemplateMissing("template section missing or empty: " + name);
  return it->second;
}

bool TemplateSet::has_section(const std::string& name) const {
  auto it = sections_.find(name);
  return it != sections_.end() && !it->second.empty();
}

const std::string& TemplateSet::pick(util::Rng& rng, const std::string& name) const {
  return rng.pick(section(name));
}

std::string instantiate(const std::string& tpl, const SlotMap& slots) {
  std::string out;
  out.reserve(tpl.size() + 16);
  std::size_t i = 0;
  while (i < tpl.size()) {
    char c = tpl[i];
    if (c != '{') {
      out += c;
      ++i;
      continue;
    }
    auto close = tpl.find('}', i);
    if (close == std::string::npos)
      throw Error("unterminated slot in template: " + tpl);
    std::string name = tpl.substr(i + 1, close - i - 1);
    auto it = slots.find(name);
    if (it == slots.end())
      throw Error("unresolved slot {" + name + "} in template: " + tpl);
    out += it->second;
    i = close + 1;
  }
  return out;
}

// Defined in the build-generated templates_data.cpp (data/templates.txt).
extern const char* const kDefaultTemplateText;

namespace {

struct SectionSpec {
  const char* name;
  std::size_t min_count;
  std::set<std::string> slots;
};

const std::vector<SectionSpec>& required_sections() {
  static const std::vector<SectionSpec> specs = {
      {"shape_desc/square", 5, {"shape", "letters"}},
      {"shape_desc/rectangle", 5, {"shape", "letters"}},
      {"shape_desc/isosceles triangle", 5, {"shape", "letters"}},
      {"shape_desc/equilateral triangle", 5, {"shape", "letters"}},
      {"shape_desc/right triangle", 5, {"shape", "letters"}},
      {"shape_desc/sector", 5, {"shape", "letters"}},
      {"shape_desc/circle", 5, {"shape", "letters", "center"}},
      {"shape_desc/semicircle", 5, {"shape", "letters"}},
      {"shape_desc/parallelogram", 5, {"shape", "letters"}},
      {"shape_desc/trapezoid", 5, {"shape", "letters"}},
      {"conjunction", 5, {"shape", "edge", "prev"}},
      {"conjunction_tangent", 5, {"shape", "edge", "prev"}},
      {"attribute/side", 5, {"edge", "shape", "value"}},
      {"attribute/angle", 5, {"angle", "shape", "value"}},
      {"attribute/radius", 5, {"shape", "value"}},
      {"attribute/arc_angle", 5, {"shape", "value"}},
      {"attribute/height", 5, {"shape", "value"}},
      {"question/perimeter", 3, {"shape"}},
      {"question/area", 3, {"shape"}},
      {"question/base_length", 3, {"shape", "edge"}},
      {"question/angle", 3, {"shape", "angle"}},
      {"question/arc_length", 3, {"shape"}},
      {"question/extended_edge", 3, {"shape", "edge"}},
      {"analytic_fig/point", 5, {"x", "y"}},
      {"analytic_fig/segment", 5, {"x", "y", "x2", "y2"}},
      {"analytic_fig/line", 5, {"x", "y", "x2", "y2"}},
      {"analytic_fig/circle", 5, {"x", "y", "r"}},
      {"analytic_fig/ellipse", 5, {"x", "y", "rx", "ry"}},
      {"analytic_fig/rectangle", 5, {"x", "y", "w", "h"}},
      {"analytic_fig/square", 5, {"bx", "by", "side"}},
      {"analytic_fig/polygon", 5, {"x", "y", "ngon", "r"}},
      {"analytic_fig/sector", 5, {"x", "y", "r", "deg"}},
      {"analytic_rel/above", 3, {"a", "b"}},
      {"analytic_rel/below", 3, {"a", "b"}},
      {"analytic_rel/left_of", 3, {"a", "b"}},
      {"analytic_rel/right_of", 3, {"a", "b"}},
      {"analytic_rel/top_left_of", 3, {"a", "b"}},
      {"analytic_rel/top_right_of", 3, {"a", "b"}},
      {"analytic_rel/bottom_left_of", 3, {"a", "b"}},
      {"analytic_rel/bottom_right_of", 3, {"a", "b"}},
      {"analytic_rel/overlapping_linear", 3, {"a", "b"}},
      {"function/expression", 5, {"expr"}},
      {"function/domain", 5, {"lo", "hi"}},
      {"function/zeros", 5, {"zeros"}},
      {"function/no_zeros", 5, {}},
      {"function/extremum_max", 5, {"x", "y"}},
      {"function/extremum_min", 5, {"x", "y"}},
      {"function/no_extrema", 5, {}},
      {"function/asymptote", 5, {"xs"}},
      {"fnq/derivative", 3, {"expr"}},
      {"fnq/extrema", 3, {"expr"}},
  };
  return specs;
}

}  // namespace

const TemplateSet& default_templates() {
  static const TemplateSet corpus = TemplateSet::parse(kDefaultTemplateText);
  return corpus;
}

std::vector<std::string> validate_templates(const TemplateSet& templates) {
  std::vector<std::string> issues;
  for (const auto& spec : required_sections()) {
    if (!templates.has_section(spec.name)) {
      issues.push_back(std::string("missing section: ") + spec.name);
      continue;
    }
    const auto& list = templates.sections().at(spec.name);
    if (list.size() < spec.min_count)
      issues.push_back(std::string(spec.name) + ": only " + std::to_string(list.size()) +
                       " templates, need " + std::to_string(spec.min_count));
    for (const auto& tpl : list) {
      // Literal digits would corrupt numeral-fidelity checks; digits inside
      // {slot} names (x2, y2) are fine.
      bool in_slot = false;
      for (char c : tpl) {
        if (c == '{') in_slot = true;
        if (c == '}') in_slot = false;
        if (!in_slot && std::isdigit(static_cast<unsigned char>(c))) {
          issues.push_back(std::string(spec.name) + ": digit in template \"" + tpl + "\"");
          break;
        }
      }
      std::size_t i = 0;
      while ((i = tpl.find('{', i)) != std::string::npos) {
        auto close = tpl.find('}', i);
        if (close == std::string::npos) {
          issues.push_back(std::string(spec.name) + ": unterminated slot in \"" + tpl + "\"");
          break;
        }
        std::string slot = tpl.substr(i + 1, close - i - 1);
        if (!spec.slots.count(slot))
          issues.push_back(std::string(spec.name) + ": unknown slot {" + slot + "} in \"" +
                           tpl + "\"");
        i = close + 1;
      }
    }
  }
  return issues;
}

}  // namespace diagen::caption
