// caeval/simulator.hpp

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

#ifndef CAEVAL_SIMULATOR_HPP_
#define CAEVAL_SIMULATOR_HPP_

#include <cmath>
#include <cstdint>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "caeval/concept_parser.hpp"
#include "caeval/corpus_io.hpp"
#include "caeval/errors.hpp"
#include "caeval/metrics.hpp"
#include "caeval/rng.hpp"
#include "caeval/text.hpp"

namespace caeval {

// A recognizer stand-in: reference transcripts are corrupted with i.i.d.
// per-token substitution/insertion/deletion noise at a configurable rate,
// and the corrupted text is fed through the concept parser, so corpus
// word accuracy and concept accuracy can be measured across a range of
// simulated recognition quality.
//
// Targeting picks which tokens may be hit: every token (uniform), only
// domain-content tokens (content-biased) or only declared filler words
// (filler-biased).  The replacement material for substitutions and
// insertions is drawn from the vocabulary the caller provides; sweeps
// pair each targeting mode with the matching word class, which is what
// lets filler-biased noise lower word accuracy without touching the
// parser output, and content-biased noise do the opposite.

enum class Targeting { Uniform, ContentBiased, FillerBiased };

inline const char *targeting_name(Targeting t) {
  switch (t) {
    case Targeting::Uniform: return "uniform";
    case Targeting::ContentBiased: return "content";
    case Targeting::FillerBiased: return "filler";
  }
  return "?";
}

inline constexpr std::uint64_t kDefaultSeed = 1729;

struct ErrorSpec {
  double rate = 0.0;  // expected error events per reference token, in [0,1]
  double substitution_weight = 1.0;
  double insertion_weight = 1.0;
  double deletion_weight = 1.0;
  Targeting targeting = Targeting::Uniform;
  std::uint64_t seed = kDefaultSeed;

  void validate() const {
    if (!(rate >= 0.0 && rate <= 1.0)) {
      throw std::invalid_argument("corruption rate must lie in [0, 1]");
    }
    if (substitution_weight < 0 || insertion_weight < 0 || deletion_weight < 0 ||
        substitution_weight + insertion_weight + deletion_weight <= 0) {
      throw std::invalid_argument("error mix weights must be non-negative "
                                  "with a positive sum");
    }
  }

  /// Mix normalized to sum 1, in (substitution, insertion, deletion) order.
  std::array<double, 3> normalized_mix() const {
    const double sum = substitution_weight + insertion_weight + deletion_weight;
    return {substitution_weight / sum, insertion_weight / sum,
            deletion_weight / sum};
  }
};

struct SweepPoint {
  double configured_rate = 0.0;
  double measured_wa = 0.0;  // micro-averaged over the corpus
  double measured_ca = 0.0;

  bool operator==(const SweepPoint &) const = default;
};

/// Word list the corruptor draws replacements from: single tokens of the
/// word class matching the targeting mode, or of the whole domain
/// (category tokens, fillers and rule trigger words) under uniform.
/// Sorted, so the draw order is reproducible.
inline std::vector<std::string> corruption_vocabulary(const Lexicon &lexicon,
                                                      const RuleSet &rules,
                                                      Targeting targeting) {
  std::set<std::string> words;
  auto add_content = [&] {
    for (const auto &phrases : {lexicon.city_names.phrases(),
                                lexicon.date_words.phrases(),
                                lexicon.train_type_words.phrases()}) {
      for (const auto &phrase : phrases) {
        for (const std::string &tok : phrase) words.insert(tok);
      }
    }
    for (const auto &[surface, value] : lexicon.marker_words) {
      (void)value;
      words.insert(surface);
    }
    for (const std::string &p : lexicon.time_patterns) {
      if (p.find('?') == std::string::npos) words.insert(p);
    }
  };
  switch (targeting) {
    case Targeting::FillerBiased:
      words.insert(lexicon.filler_words.begin(), lexicon.filler_words.end());
      break;
    case Targeting::ContentBiased:
      add_content();
      break;
    case Targeting::Uniform:
      add_content();
      words.insert(lexicon.filler_words.begin(), lexicon.filler_words.end());
      for (const Rule &rule : rules.rules) {
        if (!rule.trigger.empty()) words.insert(rule.trigger);
      }
      break;
  }
  return {words.begin(), words.end()};
}

namespace detail {

inline bool token_targeted(const std::string &token, Targeting targeting,
                           const Lexicon *lexicon) {
  switch (targeting) {
    case Targeting::Uniform: return true;
    case Targeting::ContentBiased: return lexicon->is_content_token(token);
    case Targeting::FillerBiased: return lexicon->is_filler(token);
  }
  return true;
}

inline std::string draw_word(std::span<const std::string> vocabulary,
                             std::mt19937_64 &rng) {
  return vocabulary[uniform_index(rng, vocabulary.size())];
}

/// A vocabulary word different from `original`; if the vocabulary has no
/// such word the original is kept (degenerate one-word vocabulary).
inline std::string draw_different_word(std::span<const std::string> vocabulary,
                                       const std::string &original,
                                       std::mt19937_64 &rng) {
  bool any_other = false;
  for (const std::string &w : vocabulary) {
    if (w != original) {
      any_other = true;
      break;
    }
  }
  if (!any_other) return original;
  std::string word;
  do {
    word = draw_word(vocabulary, rng);
  } while (word == original);
  return word;
}

}  // namespace detail

/// Corrupts one token sequence.  Per targeted token an event fires with
/// probability spec.rate; its type is drawn from the normalized mix.
/// Substitution swaps the token for a different vocabulary word,
/// insertion appends a vocabulary word after it, deletion drops it.  If
/// the targeted class is absent from the utterance, targeting falls back
/// to uniform for this utterance.  `lexicon` is required for the biased
/// targeting modes.
inline std::vector<std::string> corrupt(std::span<const std::string> tokens,
                                        const ErrorSpec &spec,
                                        std::span<const std::string> vocabulary,
                                        std::mt19937_64 &rng,
                                        const Lexicon *lexicon = nullptr) {
  spec.validate();
  if (spec.targeting != Targeting::Uniform && lexicon == nullptr) {
    throw std::invalid_argument("biased targeting needs a lexicon");
  }
  if (vocabulary.empty() && spec.rate > 0.0) throw EmptyVocabularyError();

  Targeting targeting = spec.targeting;
  if (targeting != Targeting::Uniform) {
    bool any = false;
    for (const std::string &t : tokens) {
      if (detail::token_targeted(t, targeting, lexicon)) {
        any = true;
        break;
      }
    }
    if (!any) targeting = Targeting::Uniform;
  }

  const auto mix = spec.normalized_mix();
  std::vector<std::string> out;
  out.reserve(tokens.size() + 4);
  for (const std::string &token : tokens) {
    if (!detail::token_targeted(token, targeting, lexicon) ||
        unit_draw(rng) >= spec.rate) {
      out.push_back(token);
      continue;
    }
    const double kind = unit_draw(rng);
    if (kind < mix[0]) {
      out.push_back(detail::draw_different_word(vocabulary, token, rng));
    } else if (kind < mix[0] + mix[1]) {
      out.push_back(token);
      out.push_back(detail::draw_word(vocabulary, rng));
    }
    // else: deletion, token dropped
  }
  return out;
}

inline std::vector<std::string> corrupt(const std::vector<std::string> &tokens,
                                        const ErrorSpec &spec,
                                        const std::vector<std::string> &vocabulary,
                                        std::mt19937_64 &rng,
                                        const Lexicon *lexicon = nullptr) {
  return corrupt(std::span<const std::string>(tokens), spec,
                 std::span<const std::string>(vocabulary), rng, lexicon);
}

/// One corruption run per rate: every reference transcript is corrupted
/// on its own RNG stream (derived from spec.seed and the record index,
/// so processing order does not matter), parsed, and scored.  Output is
/// a pure function of (records, rates, spec, lexicon, rules).
inline std::vector<SweepPoint> sweep(std::span<const UtteranceRecord> records,
                                     std::span<const double> rates,
                                     const ErrorSpec &spec_template,
                                     const Lexicon &lexicon,
                                     const RuleSet &rules) {
  spec_template.validate();
  const std::vector<std::string> vocabulary =
      corruption_vocabulary(lexicon, rules, spec_template.targeting);

  std::vector<SweepPoint> points;
  points.reserve(rates.size());
  std::vector<UtteranceRecord> scored(records.begin(), records.end());
  for (const double rate : rates) {
    ErrorSpec spec = spec_template;
    spec.rate = rate;
    for (std::size_t k = 0; k < scored.size(); ++k) {
      std::mt19937_64 rng = seeded_stream(spec.seed, k);
      scored[k].hyp_transcript =
          corrupt(records[k].ref_transcript, spec, vocabulary, rng, &lexicon);
      scored[k].hyp_annotation =
          extract_concepts(*scored[k].hyp_transcript, lexicon, rules);
    }
    SweepPoint point;
    point.configured_rate = rate;
    point.measured_wa =
        corpus_accuracy(scored, MetricKind::WordAccuracy).micro_value;
    point.measured_ca =
        corpus_accuracy(scored, MetricKind::ConceptAccuracy).micro_value;
    points.push_back(point);
  }
  return points;
}

/// CSV for plotting: header "rate,wa,ca", accuracies with one decimal.
inline void write_sweep_csv(std::span<const SweepPoint> points,
                            std::ostream &out) {
  out << "rate,wa,ca\n";
  for (const SweepPoint &p : points) {
    out << compact(p.configured_rate) << ',' << fixed(p.measured_wa) << ','
        << fixed(p.measured_ca) << '\n';
  }
}

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares over (x, y) points.  Throws DegenerateInput for
/// fewer than two points or zero x variance.  A perfect fit (including
/// constant y) reports r_squared = 1.
inline LineFit linear_fit(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) {
    throw DegenerateInputError("need at least two points");
  }
  double x_mean = 0.0, y_mean = 0.0;
  for (const auto &[x, y] : points) {
    x_mean += x;
    y_mean += y;
  }
  x_mean /= static_cast<double>(points.size());
  y_mean /= static_cast<double>(points.size());

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto &[x, y] : points) {
    sxx += (x - x_mean) * (x - x_mean);
    sxy += (x - x_mean) * (y - y_mean);
    syy += (y - y_mean) * (y - y_mean);
  }
  if (sxx == 0.0) {
    throw DegenerateInputError("all x values are equal");
  }

  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = y_mean - fit.slope * x_mean;
  double ss_res = 0.0;
  for (const auto &[x, y] : points) {
    const double e = y - (fit.slope * x + fit.intercept);
    ss_res += e * e;
  }
  if (syy == 0.0) {
    fit.r_squared = 1.0;  // constant y, fitted exactly by the slope-0 line
  } else {
    fit.r_squared = 1.0 - ss_res / syy;
    if (fit.r_squared < 0.0) fit.r_squared = 0.0;
    if (fit.r_squared > 1.0) fit.r_squared = 1.0;
  }
  return fit;
}

inline LineFit linear_fit(const std::vector<std::pair<double, double>> &points) {
  return linear_fit(std::span<const std::pair<double, double>>(points));
}

}  // namespace caeval

#endif  // CAEVAL_SIMULATOR_HPP_
