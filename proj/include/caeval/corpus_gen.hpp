// caeval/corpus_gen.hpp

// Copyright 2026  caeval authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef CAEVAL_CORPUS_GEN_HPP_
#define CAEVAL_CORPUS_GEN_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "caeval/concept_parser.hpp"
#include "caeval/config_file.hpp"
#include "caeval/corpus_io.hpp"
#include "caeval/errors.hpp"
#include "caeval/rng.hpp"
#include "caeval/semantics.hpp"
#include "caeval/text.hpp"

namespace caeval {

// Synthetic corpora are sampled from sentence templates such as
//
//   i want to go from {city:sourcecity} to {city:goalcity}
//
// Each {category:attribute} placeholder draws a value from the lexicon
// category and contributes one semantic unit, so every generated record
// carries its reference annotation by construction.  Literal words must
// be inert in the rule set or the generated annotations would not match
// what the parser recovers from clean text.

struct TemplatePart {
  bool is_placeholder = false;
  std::string literal;                 // literal token
  Category category = Category::City;  // placeholder
  std::string attribute;               // placeholder

  bool operator==(const TemplatePart &) const = default;
};

struct SentenceTemplate {
  std::vector<TemplatePart> parts;
  std::string source_text;
};

struct TemplateSet {
  std::vector<SentenceTemplate> templates;
};

namespace detail {

/// The surface phrases a placeholder may draw: enumerable entries of its
/// category.  Digit patterns in [times] cannot be enumerated and are
/// excluded; a drawable category must keep at least one literal.
inline std::vector<std::vector<std::string>> drawed_phrases(
    const Lexicon &lexicon, Category category) {
  std::vector<std::vector<std::string>> out;
  switch (category) {
    case Category::City: return lexicon.city_names.phrases();
    case Category::Date: return lexicon.date_words.phrases();
    case Category::TrainType: return lexicon.train_type_words.phrases();
    case Category::Time:
      for (const std::string &p : lexicon.time_patterns) {
        if (p.find('?') == std::string::npos) out.push_back({p});
      }
      return out;
    case Category::Marker:
      for (const auto &[surface, value] : lexicon.marker_words) {
        (void)value;
        out.push_back({surface});
      }
      return out;
  }
  return out;
}

}  // namespace detail

/// Template file grammar: a [templates] section, one template per line.
inline TemplateSet parse_templates_text(std::string_view text,
                                        const std::string &source,
                                        const Lexicon &lexicon,
                                        const AttributeInventory &inventory) {
  const ConfigFile file = parse_config_text(text, source);
  TemplateSet set;
  for (const ConfigSection &section : file.sections) {
    if (section.name.empty()) {
      if (!section.entries.empty()) {
        throw ConfigError(source, section.entries.front().line,
                          "template entries must appear under [templates]");
      }
      continue;
    }
    if (section.name != "templates") {
      throw ConfigError(source, 0, "unexpected section [" + section.name + "]");
    }
    for (const ConfigEntry &entry : section.entries) {
      SentenceTemplate tmpl;
      tmpl.source_text = entry.text;
      for (const std::string &tok : tokenize(entry.text)) {
        if (tok.front() == '{' && tok.back() == '}') {
          const std::vector<std::string> inner =
              split(tok.substr(1, tok.size() - 2), ':');
          if (inner.size() != 2 || inner[0].empty() || inner[1].empty()) {
            throw ConfigError(source, entry.line,
                              "placeholder must be {category:attribute}: " + tok);
          }
          TemplatePart part;
          part.is_placeholder = true;
          const auto cat = category_from_name(inner[0]);
          if (!cat) {
            throw ConfigError(source, entry.line, "unknown category: " + inner[0]);
          }
          part.category = *cat;
          part.attribute = inner[1];
          if (!inventory.contains(part.attribute)) {
            throw ConfigError(source, entry.line,
                              "unknown attribute: " + part.attribute);
          }
          if (detail::drawed_phrases(lexicon, part.category).empty()) {
            throw ConfigError(source, entry.line,
                              std::string("category ") + category_name(part.category) +
                                  " has no enumerable entries to draw from");
          }
          tmpl.parts.push_back(std::move(part));
        } else {
          tmpl.parts.push_back(TemplatePart{false, tok, Category::City, ""});
        }
      }
      if (tmpl.parts.empty()) {
        throw ConfigError(source, entry.line, "empty template");
      }
      set.templates.push_back(std::move(tmpl));
    }
  }
  if (set.templates.empty()) throw ConfigError(source, 0, "no templates defined");
  return set;
}

inline TemplateSet load_templates(const std::string &path, const Lexicon &lexicon,
                                  const AttributeInventory &inventory) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_templates_text(buf.str(), path, lexicon, inventory);
}

/// Deterministic sample of n records.  Records are grouped into dialogues
/// of nine utterances, mirroring the multi-turn shape of real dialogue
/// corpora.  Two city placeholders with different attributes in the same
/// template never draw the same city.
inline std::vector<UtteranceRecord> generate_synthetic_corpus(
    const TemplateSet &templates, const Lexicon &lexicon, std::size_t n,
    std::uint64_t seed) {
  std::mt19937_64 rng = seeded_stream(seed);
  std::vector<UtteranceRecord> records;
  records.reserve(n);

  int id_width = 1;
  for (std::size_t v = n; v >= 10; v /= 10) ++id_width;

  auto pad = [id_width](std::size_t v) {
    std::string digits = std::to_string(v);
    return std::string(static_cast<std::size_t>(id_width) > digits.size()
                           ? id_width - digits.size()
                           : 0,
                       '0') +
           digits;
  };

  constexpr std::size_t kUtterancesPerDialogue = 9;
  for (std::size_t k = 0; k < n; ++k) {
    const SentenceTemplate &tmpl =
        templates.templates[uniform_index(rng, templates.templates.size())];
    UtteranceRecord record;
    record.id = "u" + pad(k + 1);
    record.dialogue_id = "d" + pad(k / kUtterancesPerDialogue + 1);

    std::vector<std::string> drawn_cities;
    for (const TemplatePart &part : tmpl.parts) {
      if (!part.is_placeholder) {
        record.ref_transcript.push_back(part.literal);
        continue;
      }
      const auto phrases = detail::drawed_phrases(lexicon, part.category);
      std::vector<std::string> phrase = phrases[uniform_index(rng, phrases.size())];
      if (part.category == Category::City && phrases.size() > 1) {
        std::string joined = join(phrase, " ");
        int guard = 0;
        while (std::find(drawn_cities.begin(), drawn_cities.end(), joined) !=
                   drawn_cities.end() &&
               ++guard < 64) {
          phrase = phrases[uniform_index(rng, phrases.size())];
          joined = join(phrase, " ");
        }
        drawn_cities.push_back(joined);
      }
      for (const std::string &tok : phrase) {
        record.ref_transcript.push_back(tok);
      }
      std::string value = join(phrase, " ");
      if (part.category == Category::Marker) {
        value = lexicon.marker_words.at(value);
      }
      record.ref_annotation.units.push_back({part.attribute, value});
    }
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace caeval

#endif  // CAEVAL_CORPUS_GEN_HPP_
