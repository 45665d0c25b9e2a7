// caeval/concept_parser.hpp

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

#ifndef CAEVAL_CONCEPT_PARSER_HPP_
#define CAEVAL_CONCEPT_PARSER_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "caeval/config_file.hpp"
#include "caeval/corpus_io.hpp"
#include "caeval/errors.hpp"
#include "caeval/metrics.hpp"
#include "caeval/semantics.hpp"
#include "caeval/text.hpp"

namespace caeval {

// A robust slot-filling parser for the toy train-timetable domain.  It
// never fails: a left-to-right pass recognizes content spans (longest
// match first) and maps them to attributes through an ordered rule list;
// anything unrecognized is skipped.  Declared filler words are fully
// transparent to matching, so inserting or swapping fillers anywhere in
// an utterance cannot change the output.

enum class Category { City, Date, Time, Marker, TrainType };

inline const char *category_name(Category c) {
  switch (c) {
    case Category::City: return "city";
    case Category::Date: return "date";
    case Category::Time: return "time";
    case Category::Marker: return "marker";
    case Category::TrainType: return "train_type";
  }
  return "?";
}

inline std::optional<Category> category_from_name(std::string_view name) {
  if (name == "city") return Category::City;
  if (name == "date") return Category::Date;
  if (name == "time") return Category::Time;
  if (name == "marker") return Category::Marker;
  if (name == "train_type") return Category::TrainType;
  return std::nullopt;
}

inline constexpr std::array<Category, 5> kAllCategories{
    Category::City, Category::Date, Category::Time, Category::Marker,
    Category::TrainType};

/// A set of normalized, possibly multi-word phrases with longest-match
/// lookup.
class PhraseSet {
 public:
  void add(std::vector<std::string> phrase) {
    if (phrase.empty()) throw std::invalid_argument("empty phrase");
    if (std::find(phrases_.begin(), phrases_.end(), phrase) != phrases_.end()) {
      return;
    }
    for (const std::string &t : phrase) tokens_.insert(t);
    max_len_ = std::max(max_len_, phrase.size());
    phrases_.push_back(std::move(phrase));
  }

  bool empty() const { return phrases_.empty(); }
  std::size_t max_phrase_len() const { return max_len_; }
  const std::vector<std::vector<std::string>> &phrases() const { return phrases_; }
  bool contains_token(const std::string &t) const { return tokens_.count(t) > 0; }

 private:
  std::vector<std::vector<std::string>> phrases_;
  std::set<std::string> tokens_;
  std::size_t max_len_ = 0;
};

/// Time tokens match either a literal word or a digit pattern in which
/// "?" stands for one digit and every other character for itself
/// ("??:??" matches "10:30").
inline bool matches_time_pattern(std::string_view pattern,
                                 std::string_view token) {
  if (pattern.size() != token.size()) return false;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] == '?') {
      if (token[i] < '0' || token[i] > '9') return false;
    } else if (pattern[i] != token[i]) {
      return false;
    }
  }
  return true;
}

struct Lexicon {
  PhraseSet city_names;
  PhraseSet date_words;
  std::vector<std::string> time_patterns;  // literals and "#" digit patterns
  std::map<std::string, std::string> marker_words;  // surface -> marker value
  PhraseSet train_type_words;
  std::set<std::string> filler_words;

  bool is_filler(const std::string &token) const {
    return filler_words.count(token) > 0;
  }

  bool matches_time(const std::string &token) const {
    for (const std::string &p : time_patterns) {
      if (matches_time_pattern(p, token)) return true;
    }
    return false;
  }

  /// True for tokens that carry domain content: parts of city, date or
  /// train-type phrases, marker words, and time tokens.
  bool is_content_token(const std::string &token) const {
    return city_names.contains_token(token) ||
           date_words.contains_token(token) ||
           train_type_words.contains_token(token) ||
           marker_words.count(token) > 0 || matches_time(token);
  }

  struct SpanMatch {
    std::size_t consumed = 0;  // tokens consumed, including skipped fillers
    std::string value;         // normalized value of the span
  };

  /// Longest category span starting at `start`.  Filler words between the
  /// words of a phrase are skipped, so "new uh york" still reads as the
  /// city "new york"; fillers never begin a span.
  std::optional<SpanMatch> match_span(Category category,
                                      std::span<const std::string> tokens,
                                      std::size_t start) const {
    if (start >= tokens.size()) return std::nullopt;
    switch (category) {
      case Category::Time:
        if (matches_time(tokens[start])) return SpanMatch{1, tokens[start]};
        return std::nullopt;
      case Category::Marker: {
        auto it = marker_words.find(tokens[start]);
        if (it != marker_words.end()) return SpanMatch{1, it->second};
        return std::nullopt;
      }
      case Category::City:
        return match_phrase(city_names, tokens, start);
      case Category::Date:
        return match_phrase(date_words, tokens, start);
      case Category::TrainType:
        return match_phrase(train_type_words, tokens, start);
    }
    return std::nullopt;
  }

 private:
  std::optional<SpanMatch> match_phrase(const PhraseSet &set,
                                        std::span<const std::string> tokens,
                                        std::size_t start) const {
    std::optional<SpanMatch> best;
    std::size_t best_words = 0;
    for (const std::vector<std::string> &phrase : set.phrases()) {
      std::size_t pos = start;
      std::size_t word = 0;
      while (word < phrase.size() && pos < tokens.size()) {
        if (word > 0 && is_filler(tokens[pos])) {  // transparent inside span
          ++pos;
          continue;
        }
        if (tokens[pos] != phrase[word]) break;
        ++pos;
        ++word;
      }
      if (word == phrase.size() && phrase.size() > best_words) {
        best_words = phrase.size();
        best = SpanMatch{pos - start, join(phrase, " ")};
      }
    }
    return best;
  }
};

// ---------------------------------------------------------------------------
// Rules

/// One pattern rule.  Three trigger shapes:
///   TriggeredSpan: literal word immediately before a category span
///                  ("from <city> -> sourcecity")
///   BareSpan:      category span with no trigger ("<date> -> date")
///   Keyword:       literal word emitting a fixed unit
///                  ("arrive -> want_arrival:yes")
struct Rule {
  enum class Kind { TriggeredSpan, BareSpan, Keyword };
  Kind kind = Kind::BareSpan;
  std::string trigger;      // TriggeredSpan / Keyword
  Category category = Category::City;  // TriggeredSpan / BareSpan
  std::string attribute;
  std::string value;        // Keyword only

  bool operator==(const Rule &) const = default;
};

struct RuleSet {
  std::vector<Rule> rules;
};

namespace detail {

inline Rule parse_rule_line(const std::string &text, const std::string &source,
                            std::size_t line,
                            const AttributeInventory &inventory) {
  const std::size_t arrow = text.find("->");
  if (arrow == std::string::npos) {
    throw ConfigError(source, line, "rule is missing \"->\": " + text);
  }
  const std::vector<std::string> lhs = tokenize(text.substr(0, arrow));
  const std::string rhs = to_lower(trim(text.substr(arrow + 2)));
  if (lhs.empty() || rhs.empty()) {
    throw ConfigError(source, line, "incomplete rule: " + text);
  }

  Rule rule;
  const std::size_t colon = rhs.find(':');
  rule.attribute = colon == std::string::npos ? rhs : trim(rhs.substr(0, colon));
  if (colon != std::string::npos) rule.value = trim(rhs.substr(colon + 1));
  if (!inventory.contains(rule.attribute)) {
    throw ConfigError(source, line, "unknown attribute: " + rule.attribute);
  }

  auto as_category = [&](const std::string &tok) -> std::optional<Category> {
    if (tok.size() < 3 || tok.front() != '<' || tok.back() != '>') {
      return std::nullopt;
    }
    const auto cat = category_from_name(tok.substr(1, tok.size() - 2));
    if (!cat) {
      throw ConfigError(source, line, "unknown category: " + tok);
    }
    return cat;
  };

  if (lhs.size() == 1) {
    if (auto cat = as_category(lhs[0])) {
      rule.kind = Rule::Kind::BareSpan;
      rule.category = *cat;
      if (!rule.value.empty()) {
        throw ConfigError(source, line,
                          "category rules take their value from the span: " + text);
      }
    } else {
      rule.kind = Rule::Kind::Keyword;
      rule.trigger = lhs[0];
      if (rule.value.empty()) {
        throw ConfigError(source, line,
                          "keyword rules need a fixed attribute:value: " + text);
      }
      if (const auto *domain = inventory.enumeration(rule.attribute)) {
        if (std::find(domain->begin(), domain->end(), rule.value) ==
            domain->end()) {
          throw ConfigError(source, line,
                            "value \"" + rule.value +
                                "\" not in the enumeration of \"" +
                                rule.attribute + "\"");
        }
      }
    }
    return rule;
  }
  if (lhs.size() == 2) {
    const auto cat = as_category(lhs[1]);
    if (!cat || as_category(lhs[0])) {
      throw ConfigError(source, line, "expected WORD <category>: " + text);
    }
    rule.kind = Rule::Kind::TriggeredSpan;
    rule.trigger = lhs[0];
    rule.category = *cat;
    if (!rule.value.empty()) {
      throw ConfigError(source, line,
                        "category rules take their value from the span: " + text);
    }
    return rule;
  }
  throw ConfigError(source, line, "rule left side has too many tokens: " + text);
}

}  // namespace detail

/// Rule file grammar: a [rules] section with one rule per line (see Rule
/// for the three shapes); "#" starts a comment.
inline RuleSet parse_rules_text(std::string_view text, const std::string &source,
                                const AttributeInventory &inventory) {
  const ConfigFile file = parse_config_text(text, source);
  RuleSet rules;
  for (const ConfigSection &section : file.sections) {
    if (section.name.empty()) {
      if (!section.entries.empty()) {
        throw ConfigError(source, section.entries.front().line,
                          "rule entries must appear under [rules]");
      }
      continue;
    }
    if (section.name != "rules") {
      throw ConfigError(source, 0, "unexpected section [" + section.name + "]");
    }
    for (const ConfigEntry &entry : section.entries) {
      rules.rules.push_back(
          detail::parse_rule_line(entry.text, source, entry.line, inventory));
    }
  }
  if (rules.rules.empty()) {
    throw ConfigError(source, 0, "no rules defined");
  }
  return rules;
}

inline RuleSet load_rules(const std::string &path,
                          const AttributeInventory &inventory) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_rules_text(buf.str(), path, inventory);
}

/// Lexicon file grammar, one section per word class:
///   [cities] [dates] [times] [train_types] [fillers]  comma- or
///       line-separated entries (multi-word entries allowed)
///   [markers]  "surface = value" or a bare word mapping to itself
inline Lexicon parse_lexicon_text(std::string_view text,
                                  const std::string &source) {
  const ConfigFile file = parse_config_text(text, source);
  Lexicon lexicon;
  for (const ConfigSection &section : file.sections) {
    if (section.name.empty()) {
      if (!section.entries.empty()) {
        throw ConfigError(source, section.entries.front().line,
                          "lexicon entries must appear under a section");
      }
      continue;
    }
    for (const ConfigEntry &entry : section.entries) {
      for (const std::string &item : split(entry.text, ',')) {
        const std::string norm = to_lower(collapse_whitespace(item));
        if (norm.empty()) continue;
        if (section.name == "cities") {
          lexicon.city_names.add(tokenize(norm));
        } else if (section.name == "dates") {
          lexicon.date_words.add(tokenize(norm));
        } else if (section.name == "times") {
          lexicon.time_patterns.push_back(norm);
        } else if (section.name == "train_types") {
          lexicon.train_type_words.add(tokenize(norm));
        } else if (section.name == "fillers") {
          for (const std::string &tok : tokenize(norm)) {
            lexicon.filler_words.insert(tok);
          }
        } else if (section.name == "markers") {
          const std::size_t eq = norm.find('=');
          std::string surface = trim(norm.substr(0, eq));
          std::string value =
              eq == std::string::npos ? surface : trim(norm.substr(eq + 1));
          if (surface.empty() || value.empty()) {
            throw ConfigError(source, entry.line, "malformed marker: " + norm);
          }
          lexicon.marker_words[surface] = value;
        } else {
          throw ConfigError(source, entry.line,
                            "unknown lexicon section [" + section.name + "]");
        }
      }
    }
  }
  return lexicon;
}

inline Lexicon load_lexicon(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lexicon_text(buf.str(), path);
}

/// Cross-checks that make the parser's guarantees hold:
///  - filler words never carry content and never trigger rules (this is
///    what makes filler corruption invisible to the parser);
///  - marker words are not city names;
///  - every non-empty lexicon category is reachable through some rule.
inline void validate_domain(const Lexicon &lexicon, const RuleSet &rules,
                            const AttributeInventory &inventory) {
  for (const std::string &f : lexicon.filler_words) {
    if (lexicon.is_content_token(f)) {
      throw ConfigError("filler word \"" + f + "\" also appears in a content class");
    }
  }
  for (const auto &[surface, value] : lexicon.marker_words) {
    (void)value;
    if (lexicon.city_names.contains_token(surface)) {
      throw ConfigError("marker word \"" + surface + "\" collides with a city name");
    }
  }
  std::set<Category> covered;
  for (const Rule &rule : rules.rules) {
    if (!inventory.contains(rule.attribute)) {
      throw ConfigError("rule attribute \"" + rule.attribute +
                        "\" is not in the inventory");
    }
    if (rule.kind != Rule::Kind::Keyword) covered.insert(rule.category);
    if (!rule.trigger.empty() && lexicon.is_filler(rule.trigger)) {
      throw ConfigError("trigger word \"" + rule.trigger +
                        "\" must not be a filler word");
    }
    if (!rule.trigger.empty() && lexicon.is_content_token(rule.trigger)) {
      throw ConfigError("trigger word \"" + rule.trigger +
                        "\" collides with a content class");
    }
  }
  auto category_empty = [&](Category c) {
    switch (c) {
      case Category::City: return lexicon.city_names.empty();
      case Category::Date: return lexicon.date_words.empty();
      case Category::Time: return lexicon.time_patterns.empty();
      case Category::Marker: return lexicon.marker_words.empty();
      case Category::TrainType: return lexicon.train_type_words.empty();
    }
    return true;
  };
  for (Category c : kAllCategories) {
    if (!category_empty(c) && covered.count(c) == 0) {
      throw ConfigError(std::string("no rule consumes the non-empty category ") +
                        category_name(c));
    }
  }
}

// ---------------------------------------------------------------------------
// Parsing

/// Robust partial analysis: one left-to-right pass, first matching rule
/// wins at each position, spans are longest-match, unmatched tokens are
/// skipped.  Never throws on any token sequence; empty input gives an
/// empty annotation.  Optional trace receives one line per decision.
inline SemanticAnnotation extract_concepts(std::span<const std::string> tokens,
                                           const Lexicon &lexicon,
                                           const RuleSet &rules,
                                           std::vector<std::string> *trace = nullptr) {
  SemanticAnnotation annotation;
  auto note = [&](const std::string &line) {
    if (trace) trace->push_back(line);
  };
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t consumed = 0;
    for (const Rule &rule : rules.rules) {
      switch (rule.kind) {
        case Rule::Kind::TriggeredSpan: {
          if (tokens[i] != rule.trigger) break;
          std::size_t j = i + 1;
          while (j < tokens.size() && lexicon.is_filler(tokens[j])) ++j;
          const auto span = lexicon.match_span(rule.category, tokens, j);
          if (!span) break;
          annotation.units.push_back({rule.attribute, span->value});
          consumed = (j - i) + span->consumed;
          note("\"" + rule.trigger + "\" + " + category_name(rule.category) +
               " span -> " + rule.attribute + ":" + span->value);
          break;
        }
        case Rule::Kind::BareSpan: {
          const auto span = lexicon.match_span(rule.category, tokens, i);
          if (!span) break;
          annotation.units.push_back({rule.attribute, span->value});
          consumed = span->consumed;
          note(std::string("bare ") + category_name(rule.category) + " span -> " +
               rule.attribute + ":" + span->value +
               (rule.category == Category::City ? " (role ambiguous, default applied)"
                                                : ""));
          break;
        }
        case Rule::Kind::Keyword: {
          if (tokens[i] != rule.trigger) break;
          annotation.units.push_back({rule.attribute, rule.value});
          consumed = 1;
          note("keyword \"" + rule.trigger + "\" -> " + rule.attribute + ":" +
               rule.value);
          break;
        }
      }
      if (consumed > 0) break;
    }
    if (consumed == 0) {
      note("skip \"" + tokens[i] + "\"");
      consumed = 1;
    }
    i += consumed;
  }
  return annotation;
}

inline SemanticAnnotation extract_concepts(const std::vector<std::string> &tokens,
                                           const Lexicon &lexicon,
                                           const RuleSet &rules,
                                           std::vector<std::string> *trace = nullptr) {
  return extract_concepts(std::span<const std::string>(tokens), lexicon, rules,
                          trace);
}

/// Corpus concept accuracy with the parser fed the clean reference
/// transcripts: isolates lexicon/rule adequacy from recognition errors.
inline double measure_coverage(std::span<const UtteranceRecord> records,
                               const Lexicon &lexicon, const RuleSet &rules) {
  std::vector<UtteranceRecord> scored(records.begin(), records.end());
  for (UtteranceRecord &record : scored) {
    record.hyp_annotation =
        extract_concepts(record.ref_transcript, lexicon, rules);
  }
  return corpus_accuracy(scored, MetricKind::ConceptAccuracy).micro_value;
}

}  // namespace caeval

#endif  // CAEVAL_CONCEPT_PARSER_HPP_
