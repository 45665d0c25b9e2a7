// caeval/semantics.hpp

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

#ifndef CAEVAL_SEMANTICS_HPP_
#define CAEVAL_SEMANTICS_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "caeval/config_file.hpp"
#include "caeval/errors.hpp"
#include "caeval/text.hpp"

namespace caeval {

// Semantic units are attribute:value pairs, the unit in which utterance
// understanding is scored.  Annotations are ordered sequences of units,
// in order of realization in the utterance; repeated slots are allowed.

struct SemanticUnit {
  std::string attribute;
  std::string value;

  bool operator==(const SemanticUnit &) const = default;
};

/// Unit equality for concept scoring: attribute AND normalized value must
/// both agree.  A value mismatch on the same attribute is one whole-unit
/// substitution, never partial credit.
inline bool su_equal(const SemanticUnit &a, const SemanticUnit &b) {
  return a == b;
}

inline std::string to_string(const SemanticUnit &unit) {
  return unit.attribute + ":" + unit.value;
}

/// The attribute names a domain defines, each with either an open string
/// value domain or a closed enumeration.
class AttributeInventory {
 public:
  void add(std::string name) { insert(std::move(name), std::nullopt); }

  void add(std::string name, std::vector<std::string> enumeration) {
    if (enumeration.empty()) {
      throw std::invalid_argument("closed enumeration must be non-empty");
    }
    insert(std::move(name), std::move(enumeration));
  }

  bool contains(std::string_view name) const {
    return domains_.find(std::string(name)) != domains_.end();
  }

  /// Null for open-string attributes.
  const std::vector<std::string> *enumeration(std::string_view name) const {
    auto it = domains_.find(std::string(name));
    if (it == domains_.end() || !it->second) return nullptr;
    return &*it->second;
  }

  const std::vector<std::string> &names() const { return names_; }
  std::size_t size() const { return names_.size(); }

 private:
  void insert(std::string name, std::optional<std::vector<std::string>> dom) {
    if (name.empty()) throw std::invalid_argument("empty attribute name");
    if (contains(name)) {
      throw std::invalid_argument("duplicate attribute: " + name);
    }
    names_.push_back(name);
    domains_.emplace(std::move(name), std::move(dom));
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::optional<std::vector<std::string>>>
      domains_;
};

struct SemanticAnnotation {
  std::vector<SemanticUnit> units;

  bool empty() const { return units.empty(); }
  std::size_t size() const { return units.size(); }

  bool operator==(const SemanticAnnotation &) const = default;
};

namespace detail {

inline SemanticUnit parse_unit(std::string_view text,
                               const AttributeInventory &inventory) {
  const std::string raw(text);
  const std::size_t colon = raw.find(':');
  if (colon == std::string::npos) {
    throw MalformedUnitError(raw, "missing \":\"");
  }
  SemanticUnit unit;
  unit.attribute = to_lower(trim(raw.substr(0, colon)));
  unit.value = to_lower(collapse_whitespace(raw.substr(colon + 1)));
  if (unit.attribute.empty()) throw MalformedUnitError(raw, "empty attribute");
  if (unit.value.empty()) throw MalformedUnitError(raw, "empty value");
  if (!inventory.contains(unit.attribute)) {
    throw UnknownAttributeError(unit.attribute);
  }
  if (const auto *domain = inventory.enumeration(unit.attribute)) {
    if (std::find(domain->begin(), domain->end(), unit.value) == domain->end()) {
      throw MalformedUnitError(
          raw, "value \"" + unit.value + "\" not in the enumeration of \"" +
                   unit.attribute + "\"");
    }
  }
  return unit;
}

}  // namespace detail

/// Parses an annotation line: units separated by ";", each "attr:value",
/// split at the first ":".  Attributes and values are case-folded; values
/// keep internal single spaces.  Empty segments (e.g. a trailing ";") are
/// ignored.
inline SemanticAnnotation parse_annotation(std::string_view line,
                                           const AttributeInventory &inventory) {
  SemanticAnnotation annotation;
  for (const std::string &segment : split(line, ';')) {
    if (trim(segment).empty()) continue;
    annotation.units.push_back(detail::parse_unit(segment, inventory));
  }
  return annotation;
}

/// Inverse of parse_annotation on normalized annotations.
inline std::string serialize_annotation(const SemanticAnnotation &annotation) {
  std::string out;
  for (std::size_t i = 0; i < annotation.units.size(); ++i) {
    if (i > 0) out += "; ";
    out += to_string(annotation.units[i]);
  }
  return out;
}

/// Inventory file grammar: one attribute per line, either "name" (open
/// value domain) or "name = v1|v2|..." (closed enumeration); "#" starts a
/// comment.  Section headers are not part of this format.
inline AttributeInventory parse_inventory_text(std::string_view text,
                                               const std::string &source) {
  const ConfigFile file = parse_config_text(text, source);
  for (const ConfigSection &section : file.sections) {
    if (!section.name.empty()) {
      throw ConfigError(source, section.entries.empty() ? 0 : section.entries.front().line,
                        "unexpected section [" + section.name + "] in inventory file");
    }
  }
  AttributeInventory inventory;
  for (const ConfigEntry &entry : file.sections.front().entries) {
    const std::size_t eq = entry.text.find('=');
    try {
      if (eq == std::string::npos) {
        inventory.add(to_lower(trim(entry.text)));
      } else {
        std::vector<std::string> values;
        for (const std::string &v : split(entry.text.substr(eq + 1), '|')) {
          const std::string norm = to_lower(collapse_whitespace(v));
          if (norm.empty()) {
            throw std::invalid_argument("empty enumeration value");
          }
          values.push_back(norm);
        }
        inventory.add(to_lower(trim(entry.text.substr(0, eq))), std::move(values));
      }
    } catch (const std::invalid_argument &e) {
      throw ConfigError(source, entry.line, e.what());
    }
  }
  return inventory;
}

inline AttributeInventory load_inventory(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_inventory_text(buf.str(), path);
}

}  // namespace caeval

#endif  // CAEVAL_SEMANTICS_HPP_
