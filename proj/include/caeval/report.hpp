// caeval/report.hpp

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

#ifndef CAEVAL_REPORT_HPP_
#define CAEVAL_REPORT_HPP_

#include <algorithm>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "caeval/alignment.hpp"
#include "caeval/corpus_io.hpp"
#include "caeval/metrics.hpp"
#include "caeval/semantics.hpp"
#include "caeval/simulator.hpp"
#include "caeval/text.hpp"

namespace caeval {

// Rendering is a pure function of the assembled report: two runs over the
// same inputs produce identical bytes.  Summary numbers are copied from
// the metrics module, never recomputed here.  One decimal place
// throughout.

struct UtteranceDetail {
  std::string id;
  std::vector<std::string> ref_tokens;
  std::optional<std::vector<std::string>> hyp_tokens;
  SemanticAnnotation ref_units;
  std::optional<SemanticAnnotation> hyp_units;
  std::optional<AccuracyResult> wa;
  std::optional<AccuracyResult> ca;
};

struct EvaluationReport {
  CorpusStats stats;
  std::optional<CorpusMetric> wa;
  std::optional<CorpusMetric> ca;
  std::optional<double> coverage;  // parser-on-clean-reference CA
  std::vector<UtteranceDetail> details;
};

/// Assembles stats, requested corpus metrics and per-utterance rows from
/// scored records.  A metric that has no scorable record is left unset.
inline EvaluationReport build_report(std::span<const UtteranceRecord> records,
                                     bool want_wa, bool want_ca,
                                     bool coverage_requested = false) {
  EvaluationReport report;
  report.stats = corpus_stats(records);
  if (want_wa) {
    try {
      report.wa = corpus_accuracy(records, MetricKind::WordAccuracy);
    } catch (const NoScorableRecordsError &) {
    }
  }
  if (want_ca) {
    try {
      report.ca = corpus_accuracy(records, MetricKind::ConceptAccuracy);
      if (coverage_requested) report.coverage = report.ca->micro_value;
    } catch (const NoScorableRecordsError &) {
    }
  }
  for (const UtteranceRecord &record : records) {
    UtteranceDetail row;
    row.id = record.id;
    row.ref_tokens = record.ref_transcript;
    row.hyp_tokens = record.hyp_transcript;
    row.ref_units = record.ref_annotation;
    row.hyp_units = record.hyp_annotation;
    if (want_wa && !record.ref_transcript.empty() && record.hyp_transcript) {
      row.wa = word_accuracy(record.ref_transcript, *record.hyp_transcript);
    }
    if (want_ca && !record.ref_annotation.empty() && record.hyp_annotation) {
      row.ca = concept_accuracy(record.ref_annotation, *record.hyp_annotation);
    }
    report.details.push_back(std::move(row));
  }
  return report;
}

namespace detail {

inline void render_metric_row(std::ostringstream &out, const CorpusMetric &m) {
  out << metric_name(m.kind) << "  " << fixed(m.micro_value) << "   mean "
      << fixed(m.per_utterance_mean) << "   scored " << m.utterances_scored
      << "   skipped " << m.utterances_skipped << "   (S " << m.pooled.substitutions
      << "  I " << m.pooled.insertions << "  D " << m.pooled.deletions << ")\n";
}

inline std::string counts_suffix(const EditCounts &c) {
  std::ostringstream out;
  out << " (S" << c.substitutions << " I" << c.insertions << " D" << c.deletions
      << ")";
  return out.str();
}

}  // namespace detail

/// Corpus figures plus one row per computed metric.  With nothing
/// scorable the summary is the single sentinel line "no scorable
/// records".
inline std::string render_summary(const EvaluationReport &report) {
  std::ostringstream out;
  out << "Dialogues             " << report.stats.dialogues << '\n';
  out << "Utterances            " << report.stats.utterances << '\n';
  out << "Words                 " << report.stats.words << '\n';
  out << "Semantic units        " << report.stats.semantic_units << '\n';
  out << "Semantic unit classes " << report.stats.su_classes << '\n';
  if (!report.wa && !report.ca) {
    out << "no scorable records\n";
    return out.str();
  }
  if (report.wa) detail::render_metric_row(out, *report.wa);
  if (report.ca) detail::render_metric_row(out, *report.ca);
  if (report.coverage) out << "coverage  " << fixed(*report.coverage) << '\n';
  return out.str();
}

/// Two-row accuracy table of a sweep, one column per point.
inline std::string render_sweep_table(std::span<const SweepPoint> points) {
  std::vector<std::string> wa_cells, ca_cells;
  for (const SweepPoint &p : points) {
    wa_cells.push_back(fixed(p.measured_wa));
    ca_cells.push_back(fixed(p.measured_ca));
  }
  std::ostringstream out;
  auto row = [&](const char *label, const std::vector<std::string> &cells) {
    out << label;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const std::size_t width =
          std::max(wa_cells[i].size(), ca_cells[i].size());
      out << "  " << std::string(width - cells[i].size(), ' ') << cells[i];
    }
    out << '\n';
  };
  row("WA", wa_cells);
  row("CA", ca_cells);
  return out.str();
}

namespace detail {

/// Substitution breakdown for concept alignments: a value mismatch on the
/// same attribute counts the same as a cross-attribute confusion, but
/// they point at different defects, so the detail view separates them.
inline std::pair<std::size_t, std::size_t> substitution_subtypes(
    const Alignment &alignment, const SemanticAnnotation &ref,
    const SemanticAnnotation &hyp) {
  std::size_t same_attribute = 0, cross_attribute = 0;
  for (const AlignmentOp &op : alignment.ops) {
    if (op.kind != OpKind::Substitute) continue;
    if (ref.units[*op.ref_index].attribute == hyp.units[*op.hyp_index].attribute) {
      ++same_attribute;
    } else {
      ++cross_attribute;
    }
  }
  return {same_attribute, cross_attribute};
}

}  // namespace detail

/// Score lines and rendered alignments for the k worst-CA utterances
/// (ties broken by record id).  k = 0 renders nothing, leaving the
/// summary alone; the full per-utterance table is the CSV's job.
inline std::string render_detail(const EvaluationReport &report, std::size_t k) {
  std::vector<const UtteranceDetail *> ranked;
  for (const UtteranceDetail &row : report.details) {
    if (row.ca) ranked.push_back(&row);
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const UtteranceDetail *a, const UtteranceDetail *b) {
              if (a->ca->value != b->ca->value) {
                return a->ca->value < b->ca->value;
              }
              return a->id < b->id;
            });
  if (ranked.size() > k) ranked.resize(k);

  std::ostringstream out;
  for (const UtteranceDetail *row : ranked) {
    out << "worst-CA " << row->id;
    if (row->wa) {
      out << "  WA " << fixed(row->wa->value)
          << detail::counts_suffix(row->wa->counts);
    }
    out << "  CA " << fixed(row->ca->value)
        << detail::counts_suffix(row->ca->counts) << '\n';
    if (row->wa && row->hyp_tokens) {
      out << render_alignment(align(row->ref_tokens, *row->hyp_tokens),
                              row->ref_tokens, *row->hyp_tokens);
    }
    const Alignment su_alignment =
        align(std::span<const SemanticUnit>(row->ref_units.units),
              std::span<const SemanticUnit>(row->hyp_units->units),
              [](const SemanticUnit &a, const SemanticUnit &b) {
                return su_equal(a, b);
              });
    out << render_alignment(su_alignment,
                            std::span<const SemanticUnit>(row->ref_units.units),
                            std::span<const SemanticUnit>(row->hyp_units->units),
                            [](const SemanticUnit &u) { return to_string(u); });
    const auto [same_attr, cross_attr] = detail::substitution_subtypes(
        su_alignment, row->ref_units, *row->hyp_units);
    if (same_attr + cross_attr > 0) {
      out << "substitutions: " << same_attr << " same-attribute, " << cross_attr
          << " cross-attribute\n";
    }
    out << '\n';
  }
  return out.str();
}

/// CSV detail: one row per utterance; per metric the accuracy and its
/// S/I/D counts.  Fields of an unscored metric stay empty.
inline void write_detail_csv(const EvaluationReport &report, std::ostream &out) {
  out << "id,wa,wa_s,wa_i,wa_d,ca,ca_s,ca_i,ca_d\n";
  for (const UtteranceDetail &row : report.details) {
    out << row.id << ',';
    if (row.wa) {
      out << fixed(row.wa->value) << ',' << row.wa->counts.substitutions << ','
          << row.wa->counts.insertions << ',' << row.wa->counts.deletions;
    } else {
      out << ",,,";
    }
    out << ',';
    if (row.ca) {
      out << fixed(row.ca->value) << ',' << row.ca->counts.substitutions << ','
          << row.ca->counts.insertions << ',' << row.ca->counts.deletions;
    } else {
      out << ",,,";
    }
    out << '\n';
  }
}

}  // namespace caeval

#endif  // CAEVAL_REPORT_HPP_
