// tests/acceptance_test.cpp

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

// End-to-end acceptance checks.  Each criterion prints one PASS/FAIL
// line; run this binary directly to see them all:
//
//   ./build/tests/acceptance_test

#include <gtest/gtest.h>

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "caeval/alignment.hpp"
#include "caeval/concept_parser.hpp"
#include "caeval/corpus_gen.hpp"
#include "caeval/corpus_io.hpp"
#include "caeval/metrics.hpp"
#include "caeval/simulator.hpp"
#include "caeval/text.hpp"
#include "caeval/toy_domain.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace {

using namespace caeval;

class Acceptance : public ::testing::Test {
 protected:
  void criterion(int number, const std::string &description) {
    number_ = number;
    description_ = description;
  }

  void TearDown() override {
    std::cout << "[AC-" << number_ << "] " << (HasFailure() ? "FAIL" : "PASS")
              << ": " << description_ << std::endl;
  }

  struct Domain {
    AttributeInventory inventory = default_inventory();
    Lexicon lexicon = default_lexicon();
    RuleSet rules = default_rules(inventory);
    TemplateSet templates = default_templates(lexicon, inventory);
  };

  static std::vector<UtteranceRecord> corpus_from(const std::string &text) {
    std::istringstream in(text);
    return parse_corpus(in, "<acceptance>", default_inventory());
  }

  static std::vector<BacktracePreference> all_preferences() {
    BacktracePreference p{OpKind::Match, OpKind::Substitute, OpKind::Delete,
                          OpKind::Insert};
    std::sort(p.begin(), p.end(), [](OpKind a, OpKind b) {
      return static_cast<int>(a) < static_cast<int>(b);
    });
    std::vector<BacktracePreference> out;
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end(), [](OpKind a, OpKind b) {
      return static_cast<int>(a) < static_cast<int>(b);
    }));
    return out;
  }

  int number_ = 0;
  std::string description_;
};

TEST_F(Acceptance, C1_WordAccuracyWorkedExample) {
  criterion(1, "WA of the six-word reference against the five-word "
               "hypothesis is 66.7 with S=1 I=0 D=1");
  const AccuracyResult wa = word_accuracy(tokenize("i want to go to berlin"),
                                          tokenize("want to go to bonn"));
  EXPECT_NEAR(wa.value, 66.7, 0.05);
  EXPECT_EQ(wa.counts.substitutions, 1u);
  EXPECT_EQ(wa.counts.insertions, 0u);
  EXPECT_EQ(wa.counts.deletions, 1u);
}

TEST_F(Acceptance, C2_CityConfusionWorkedExample) {
  criterion(2, "parsed city confusion scores CA 50.0 exactly and WA 75.0 "
               "exactly");
  Domain d;
  auto records = corpus_from(
      "ID u1\n"
      "REF no to bonn berlin\n"
      "HYP no to berlin\n"
      "SEM dm_marker:no; goalcity:bonn\n");
  ASSERT_EQ(records.size(), 1u);
  records[0].hyp_annotation =
      extract_concepts(*records[0].hyp_transcript, d.lexicon, d.rules);
  const double wa =
      corpus_accuracy(records, MetricKind::WordAccuracy).micro_value;
  const double ca =
      corpus_accuracy(records, MetricKind::ConceptAccuracy).micro_value;
  EXPECT_EQ(wa, 75.0);
  EXPECT_EQ(ca, 50.0);
}

TEST_F(Acceptance, C3_FillerConfusionWorkedExample) {
  criterion(3, "filler-word confusion scores WA 66.7 but parsed CA 100.0");
  Domain d;
  auto records = corpus_from(
      "ID u1\n"
      "REF i want to go to berlin\n"
      "HYP i wonder go to berlin\n"
      "SEM goalcity:berlin\n");
  ASSERT_EQ(records.size(), 1u);
  records[0].hyp_annotation =
      extract_concepts(*records[0].hyp_transcript, d.lexicon, d.rules);
  const double wa =
      corpus_accuracy(records, MetricKind::WordAccuracy).micro_value;
  const double ca =
      corpus_accuracy(records, MetricKind::ConceptAccuracy).micro_value;
  EXPECT_NEAR(wa, 66.7, 0.05);
  EXPECT_EQ(ca, 100.0);
}

TEST_F(Acceptance, C4_NearLinearWaCaRelation) {
  criterion(4, "uniform sweep over a 600-utterance synthetic corpus spans "
               "WA [55,95], CA stays below WA, and the WA-CA fit has "
               "r^2 >= 0.9 with positive slope");
  Domain d;
  const auto records =
      generate_synthetic_corpus(d.templates, d.lexicon, 600, 20260810);
  const std::vector<double> rates = {0.02, 0.1, 0.2, 0.3, 0.45, 0.6};
  ErrorSpec spec;
  spec.seed = 20260810;
  const auto points = sweep(records, rates, spec, d.lexicon, d.rules);
  ASSERT_GE(points.size(), 5u);

  double min_wa = 1e9, max_wa = -1e9;
  for (const SweepPoint &p : points) {
    min_wa = std::min(min_wa, p.measured_wa);
    max_wa = std::max(max_wa, p.measured_wa);
    EXPECT_LE(p.measured_ca, p.measured_wa)
        << "rate " << p.configured_rate;
  }
  EXPECT_LE(min_wa, 55.0);
  EXPECT_GE(max_wa, 95.0);

  std::vector<std::pair<double, double>> wa_ca;
  for (const SweepPoint &p : points) {
    wa_ca.emplace_back(p.measured_wa, p.measured_ca);
  }
  const LineFit fit = linear_fit(wa_ca);
  EXPECT_GE(fit.r_squared, 0.9);
  EXPECT_GT(fit.slope, 0.0);
}

TEST_F(Acceptance, C5_LeastSquaresMatchesIndependentOracle) {
  criterion(5, "linear_fit on six reference WA/CA operating points matches "
               "an independent least-squares computation to 1e-9");
  const std::vector<std::pair<double, double>> points = {
      {48.8, 46.7}, {65.7, 61.9}, {72.9, 68.2},
      {77.5, 73.0}, {83.0, 78.5}, {84.9, 79.8}};
  const LineFit fit = linear_fit(points);
  const oracles::LeastSquares expected = oracles::least_squares(points);
  EXPECT_NEAR(fit.slope, static_cast<double>(expected.slope), 1e-9);
  EXPECT_NEAR(fit.intercept, static_cast<double>(expected.intercept), 1e-9);
  EXPECT_NEAR(fit.r_squared, static_cast<double>(expected.r_squared), 1e-9);
  // Frozen oracle values, computed ahead of the build.
  EXPECT_NEAR(fit.slope, 0.92378, 1e-4);
  EXPECT_GE(fit.r_squared, 0.99);
}

TEST_F(Acceptance, C6_TargetedNoiseSplitsWaAndCa) {
  criterion(6, "at a fixed rate, filler-biased noise gives CA > WA and "
               "content-biased noise gives CA < WA, averaged over 10 seeds");
  Domain d;
  const auto records =
      generate_synthetic_corpus(d.templates, d.lexicon, 400, 31337);
  const std::vector<double> rates = {0.25};
  double filler_wa = 0, filler_ca = 0, content_wa = 0, content_ca = 0;
  const int kSeeds = 10;
  for (int seed = 1; seed <= kSeeds; ++seed) {
    ErrorSpec spec;
    spec.seed = static_cast<std::uint64_t>(seed);
    spec.targeting = Targeting::FillerBiased;
    const auto filler = sweep(records, rates, spec, d.lexicon, d.rules);
    filler_wa += filler[0].measured_wa / kSeeds;
    filler_ca += filler[0].measured_ca / kSeeds;
    spec.targeting = Targeting::ContentBiased;
    const auto content = sweep(records, rates, spec, d.lexicon, d.rules);
    content_wa += content[0].measured_wa / kSeeds;
    content_ca += content[0].measured_ca / kSeeds;
  }
  EXPECT_GT(filler_ca, filler_wa);
  EXPECT_LT(content_ca, content_wa);
}

TEST_F(Acceptance, C7_AlignmentAgreesWithExhaustiveOracle) {
  criterion(7, "DP distance equals the exhaustive recursive oracle for all "
               "pairs up to length 5 over 3 symbols plus 1000 random longer "
               "pairs, under every tie-break order");
  const auto preferences = all_preferences();
  ASSERT_EQ(preferences.size(), 24u);

  const auto sequences = oracles::all_sequences(5, 3);
  ASSERT_EQ(sequences.size(), 364u);
  for (const auto &a : sequences) {
    for (const auto &b : sequences) {
      const std::size_t oracle = oracles::edit_distance_recursive(a, b);
      for (const BacktracePreference &p : preferences) {
        const EditCounts c =
            edit_counts(align(a, b, std::equal_to<>{}, p));
        ASSERT_EQ(c.errors(), oracle);
      }
    }
  }

  std::mt19937_64 rng(424243);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<char> a(6 + rng() % 5), b(6 + rng() % 5);
    for (char &c : a) c = static_cast<char>('a' + rng() % 4);
    for (char &c : b) c = static_cast<char>('a' + rng() % 4);
    const std::size_t oracle = oracles::edit_distance_memo(a, b);
    for (const BacktracePreference &p : preferences) {
      ASSERT_EQ(edit_counts(align(a, b, std::equal_to<>{}, p)).errors(),
                oracle);
    }
  }
}

TEST_F(Acceptance, C8_ParserCoverageOnCleanReferences) {
  criterion(8, "parser on uncorrupted generated references scores "
               "CA >= 99.0");
  Domain d;
  const auto records =
      generate_synthetic_corpus(d.templates, d.lexicon, 600, 90125);
  EXPECT_GE(measure_coverage(records, d.lexicon, d.rules), 99.0);
}

TEST_F(Acceptance, C9_GenAndSweepAreByteDeterministic) {
  criterion(9, "gen and sweep with a fixed seed write byte-identical files "
               "across runs");
  const std::string cli(CAEVAL_CLI_PATH);
  testutil::TempDir tmp;

  const std::string corpus_a = tmp.path("corpus_a.txt");
  const std::string corpus_b = tmp.path("corpus_b.txt");
  ASSERT_EQ(testutil::run_command(cli + " gen --n 500 --seed 321 --out " +
                                  testutil::quoted(corpus_a))
                .exit_code,
            0);
  ASSERT_EQ(testutil::run_command(cli + " gen --n 500 --seed 321 --out " +
                                  testutil::quoted(corpus_b))
                .exit_code,
            0);
  const std::string gen_a = testutil::read_file(corpus_a);
  EXPECT_FALSE(gen_a.empty());
  EXPECT_EQ(gen_a, testutil::read_file(corpus_b));

  const std::string sweep_a = tmp.path("sweep_a.csv");
  const std::string sweep_b = tmp.path("sweep_b.csv");
  const std::string sweep_cmd =
      " --rates 0.1,0.3,0.5 --seed 654 --targeting uniform --out ";
  ASSERT_EQ(testutil::run_command(cli + " sweep " + testutil::quoted(corpus_a) +
                                  sweep_cmd + testutil::quoted(sweep_a))
                .exit_code,
            0);
  ASSERT_EQ(testutil::run_command(cli + " sweep " + testutil::quoted(corpus_a) +
                                  sweep_cmd + testutil::quoted(sweep_b))
                .exit_code,
            0);
  const std::string csv_a = testutil::read_file(sweep_a);
  EXPECT_FALSE(csv_a.empty());
  EXPECT_EQ(csv_a, testutil::read_file(sweep_b));
}

}  // namespace
