// caeval/corpus_io.hpp

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

#ifndef CAEVAL_CORPUS_IO_HPP_
#define CAEVAL_CORPUS_IO_HPP_

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "caeval/errors.hpp"
#include "caeval/semantics.hpp"
#include "caeval/text.hpp"

namespace caeval {

// Corpus file grammar: blank-line-separated record blocks of
//
//   ID <id>            required, unique
//   DLG <dialogue-id>  optional; defaults to the record id
//   REF <tokens>       required, may be empty (record is then skipped by
//                      scoring rather than rejected here)
//   HYP <tokens>       optional
//   SEM <annotation>   required, may be empty
//   HYPSEM <annotation> optional
//
// "#" lines are comments.  Tokens are case-folded and whitespace-split;
// annotations follow the semantic annotation grammar.

struct UtteranceRecord {
  std::string id;
  std::string dialogue_id;
  std::vector<std::string> ref_transcript;
  std::optional<std::vector<std::string>> hyp_transcript;
  SemanticAnnotation ref_annotation;
  std::optional<SemanticAnnotation> hyp_annotation;

  bool operator==(const UtteranceRecord &) const = default;
};

struct CorpusStats {
  std::size_t dialogues = 0;
  std::size_t utterances = 0;
  std::size_t words = 0;
  std::size_t semantic_units = 0;
  std::size_t su_classes = 0;

  bool operator==(const CorpusStats &) const = default;
};

namespace detail {

struct RawBlock {
  std::size_t first_line = 0;
  // key -> (line, payload); insertion order preserved for error reporting.
  std::vector<std::pair<std::string, std::pair<std::size_t, std::string>>> fields;

  const std::pair<std::size_t, std::string> *find(const std::string &key) const {
    for (const auto &f : fields) {
      if (f.first == key) return &f.second;
    }
    return nullptr;
  }
};

inline UtteranceRecord record_from_block(const RawBlock &block,
                                         const AttributeInventory &inventory,
                                         const std::string &source) {
  static const std::vector<std::string> known = {"ID",  "DLG", "REF",
                                                 "HYP", "SEM", "HYPSEM"};
  for (const auto &f : block.fields) {
    if (std::find(known.begin(), known.end(), f.first) == known.end()) {
      throw FormatError(source, f.second.first, "unknown key " + f.first);
    }
  }

  auto require = [&](const std::string &key) -> const std::string & {
    const auto *field = block.find(key);
    if (!field) {
      throw FormatError(source, block.first_line,
                        "record is missing a " + key + " line");
    }
    return field->second;
  };

  UtteranceRecord record;
  record.id = trim(require("ID"));
  if (record.id.empty()) {
    throw FormatError(source, block.find("ID")->first, "empty ID");
  }
  const auto *dlg = block.find("DLG");
  record.dialogue_id = dlg ? trim(dlg->second) : record.id;
  record.ref_transcript = tokenize(require("REF"));

  auto parse_sem = [&](const std::string &key) {
    const auto *field = block.find(key);
    try {
      return parse_annotation(field->second, inventory);
    } catch (const Error &e) {
      throw FormatError(source, field->first, e.what());
    }
  };
  require("SEM");
  record.ref_annotation = parse_sem("SEM");
  if (const auto *hyp = block.find("HYP")) {
    record.hyp_transcript = tokenize(hyp->second);
  }
  if (block.find("HYPSEM")) {
    record.hyp_annotation = parse_sem("HYPSEM");
  }
  return record;
}

}  // namespace detail

inline std::vector<UtteranceRecord> parse_corpus(std::istream &in,
                                                 const std::string &source,
                                                 const AttributeInventory &inventory) {
  std::vector<UtteranceRecord> records;
  std::set<std::string> seen_ids;
  detail::RawBlock block;

  auto flush = [&]() {
    if (block.fields.empty()) return;
    UtteranceRecord record = detail::record_from_block(block, inventory, source);
    if (!seen_ids.insert(record.id).second) {
      throw FormatError(source, block.first_line,
                        "duplicate record id " + record.id);
    }
    records.push_back(std::move(record));
    block = detail::RawBlock{};
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = trim(line);
    if (stripped.empty()) {
      flush();
      continue;
    }
    if (stripped[0] == '#') continue;
    const std::size_t gap = stripped.find_first_of(" \t");
    const std::string key =
        gap == std::string::npos ? stripped : stripped.substr(0, gap);
    const std::string payload =
        gap == std::string::npos ? std::string() : trim(stripped.substr(gap + 1));
    if (block.fields.empty()) block.first_line = line_no;
    if (block.find(key)) {
      throw FormatError(source, line_no, "duplicate " + key + " line in record");
    }
    block.fields.emplace_back(key, std::make_pair(line_no, payload));
  }
  flush();
  return records;
}

inline std::vector<UtteranceRecord> load_corpus(const std::string &path,
                                                const AttributeInventory &inventory) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path, 0, "cannot open file");
  return parse_corpus(in, path, inventory);
}

/// Canonical form: every field explicit, tokens joined by single spaces,
/// records separated by one blank line.  Loading canonical text and saving
/// it again reproduces the bytes.
inline void save_corpus(std::span<const UtteranceRecord> records,
                        std::ostream &out) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    const UtteranceRecord &r = records[i];
    if (i > 0) out << '\n';
    out << "ID " << r.id << '\n';
    out << "DLG " << r.dialogue_id << '\n';
    out << "REF " << join(r.ref_transcript, " ") << '\n';
    if (r.hyp_transcript) out << "HYP " << join(*r.hyp_transcript, " ") << '\n';
    out << "SEM " << serialize_annotation(r.ref_annotation) << '\n';
    if (r.hyp_annotation) {
      out << "HYPSEM " << serialize_annotation(*r.hyp_annotation) << '\n';
    }
  }
}

inline std::string corpus_to_string(std::span<const UtteranceRecord> records) {
  std::ostringstream out;
  save_corpus(records, out);
  return out.str();
}

/// Five corpus figures: distinct dialogues, records, reference words,
/// reference semantic units, distinct attributes actually used.
inline CorpusStats corpus_stats(std::span<const UtteranceRecord> records) {
  CorpusStats stats;
  std::set<std::string> dialogues;
  std::set<std::string> attributes;
  for (const UtteranceRecord &r : records) {
    dialogues.insert(r.dialogue_id);
    ++stats.utterances;
    stats.words += r.ref_transcript.size();
    stats.semantic_units += r.ref_annotation.size();
    for (const SemanticUnit &u : r.ref_annotation.units) {
      attributes.insert(u.attribute);
    }
  }
  stats.dialogues = dialogues.size();
  stats.su_classes = attributes.size();
  return stats;
}

}  // namespace caeval

#endif  // CAEVAL_CORPUS_IO_HPP_
