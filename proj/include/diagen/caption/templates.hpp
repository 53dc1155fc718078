#pragma once

#include <map>
#include <string>
#include <vector>

#include "diagen/util/rng.hpp"

namespace diagen::caption {

/// Slot values for one template instantiation.
using SlotMap = std::map<std::string, std::string>;

/// The template corpus: `<section>` headed lists of slotted one-line
/// templates. Sections address shape descriptions, attribute phrases,
/// conjunctions, analytic figures and relations, function properties, and
/// question wordings.
class TemplateSet {
 public:
  /// Parses corpus text (one template per line, `<name>` section headers,
  /// '#' comments and blank lines ignored). Throws ConfigError on malformed
  /// headers or template lines outside any section.
  static TemplateSet parse(const std::string& text);

  /// Loads a corpus file from disk.
  static TemplateSet load_file(const std::string& path);

  const std::vector<std::string>& section(const std::string& name) const;
  bool has_section(const std::string& name) const;
  const std::map<std::string, std::vector<std::string>>& sections() const {
    return sections_;
  }

  /// Uniform template choice from a section (throws TemplateMissing when the
  /// section is absent or empty).
  const std::string& pick(util::Rng& rng, const std::string& name) const;

 private:
  std::map<std::string, std::vector<std::string>> sections_;
};

/// Replaces every "{slot}" with its value. Throws Error when a slot has no
/// value; literal braces are not supported (templates never need them).
std::string instantiate(const std::string& tpl, const SlotMap& slots);

/// The compiled-in corpus (data/templates.txt embedded at build time).
const TemplateSet& default_templates();

/// Corpus health report: missing sections, under-populated sections, digits
/// embedded in template text, unknown slots. Empty = healthy.
std::vector<std::string> validate_templates(const TemplateSet& templates);

}  // namespace diagen::caption
