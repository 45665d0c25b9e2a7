// caeval/metrics.hpp

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

#ifndef CAEVAL_METRICS_HPP_
#define CAEVAL_METRICS_HPP_

#include <span>
#include <string>
#include <vector>

#include "caeval/alignment.hpp"
#include "caeval/corpus_io.hpp"
#include "caeval/errors.hpp"
#include "caeval/semantics.hpp"

namespace caeval {

// Word accuracy scores recognizer output against the reference
// transcript; concept accuracy applies the same formula to aligned
// semantic-unit sequences instead of words:
//
//   accuracy = 100 * (1 - (S + I + D) / reference_length)
//
// Insertion-heavy hypotheses make this negative; values are reported raw,
// never clamped, so degenerate recognizer behavior stays visible.

enum class MetricKind { WordAccuracy, ConceptAccuracy };

inline const char *metric_name(MetricKind kind) {
  return kind == MetricKind::WordAccuracy ? "WA" : "CA";
}

struct AccuracyResult {
  MetricKind kind = MetricKind::WordAccuracy;
  double value = 0.0;  // percentage, may be negative, never above 100
  EditCounts counts;
};

/// Micro value pools S/I/D counts over the corpus before applying the
/// formula (the headline number); the per-utterance mean is reported
/// alongside.  Records whose relevant reference is empty, or whose
/// relevant hypothesis is absent, are skipped and counted.
struct CorpusMetric {
  MetricKind kind = MetricKind::WordAccuracy;
  double micro_value = 0.0;
  double per_utterance_mean = 0.0;
  std::size_t utterances_scored = 0;
  std::size_t utterances_skipped = 0;
  EditCounts pooled;
};

inline double accuracy_from_counts(const EditCounts &counts) {
  return 100.0 * (1.0 - static_cast<double>(counts.errors()) /
                            static_cast<double>(counts.ref_total));
}

inline AccuracyResult word_accuracy(std::span<const std::string> ref_tokens,
                                    std::span<const std::string> hyp_tokens) {
  if (ref_tokens.empty()) throw EmptyReferenceError();
  AccuracyResult result;
  result.kind = MetricKind::WordAccuracy;
  result.counts = edit_counts(align(ref_tokens, hyp_tokens));
  result.value = accuracy_from_counts(result.counts);
  return result;
}

inline AccuracyResult word_accuracy(const std::vector<std::string> &ref_tokens,
                                    const std::vector<std::string> &hyp_tokens) {
  return word_accuracy(std::span<const std::string>(ref_tokens),
                       std::span<const std::string>(hyp_tokens));
}

inline AccuracyResult concept_accuracy(const SemanticAnnotation &ref_units,
                                       const SemanticAnnotation &hyp_units) {
  if (ref_units.empty()) throw EmptyReferenceError();
  AccuracyResult result;
  result.kind = MetricKind::ConceptAccuracy;
  result.counts = edit_counts(align(
      std::span<const SemanticUnit>(ref_units.units),
      std::span<const SemanticUnit>(hyp_units.units),
      [](const SemanticUnit &a, const SemanticUnit &b) { return su_equal(a, b); }));
  result.value = accuracy_from_counts(result.counts);
  return result;
}

namespace detail {

/// One record's contribution, or nothing if the record is skipped.
inline std::optional<EditCounts> record_counts(const UtteranceRecord &record,
                                               MetricKind kind) {
  if (kind == MetricKind::WordAccuracy) {
    if (record.ref_transcript.empty() || !record.hyp_transcript) {
      return std::nullopt;
    }
    return word_accuracy(record.ref_transcript, *record.hyp_transcript).counts;
  }
  if (record.ref_annotation.empty() || !record.hyp_annotation) {
    return std::nullopt;
  }
  return concept_accuracy(record.ref_annotation, *record.hyp_annotation).counts;
}

}  // namespace detail

/// Pools counts across all scorable records.  Scoring each record is
/// independent; the aggregation is a plain sum, so the result does not
/// depend on record order.
inline CorpusMetric corpus_accuracy(std::span<const UtteranceRecord> records,
                                    MetricKind kind) {
  CorpusMetric metric;
  metric.kind = kind;
  double value_sum = 0.0;
  for (const UtteranceRecord &record : records) {
    const auto counts = detail::record_counts(record, kind);
    if (!counts) {
      ++metric.utterances_skipped;
      continue;
    }
    ++metric.utterances_scored;
    metric.pooled.substitutions += counts->substitutions;
    metric.pooled.insertions += counts->insertions;
    metric.pooled.deletions += counts->deletions;
    metric.pooled.matches += counts->matches;
    metric.pooled.ref_total += counts->ref_total;
    value_sum += accuracy_from_counts(*counts);
  }
  if (metric.utterances_scored == 0) throw NoScorableRecordsError();
  metric.micro_value = accuracy_from_counts(metric.pooled);
  metric.per_utterance_mean =
      value_sum / static_cast<double>(metric.utterances_scored);
  return metric;
}

}  // namespace caeval

#endif  // CAEVAL_METRICS_HPP_
