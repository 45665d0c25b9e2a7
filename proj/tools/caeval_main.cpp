// tools/caeval_main.cpp

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

// Command-line front end: align, score, sweep, stats, gen, parse.
// Exit codes: 0 success, 1 input/configuration error, 2 scoring error
// (empty reference, nothing scorable, degenerate fit).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "caeval/alignment.hpp"
#include "caeval/concept_parser.hpp"
#include "caeval/corpus_gen.hpp"
#include "caeval/corpus_io.hpp"
#include "caeval/errors.hpp"
#include "caeval/metrics.hpp"
#include "caeval/report.hpp"
#include "caeval/semantics.hpp"
#include "caeval/simulator.hpp"
#include "caeval/text.hpp"
#include "caeval/toy_domain.hpp"

namespace {

using namespace caeval;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitScoringError = 2;

struct DomainPaths {
  std::string inventory;
  std::string lexicon;
  std::string rules;
  std::string templates;
};

void add_domain_options(CLI::App *cmd, DomainPaths *paths, bool with_templates) {
  cmd->add_option("--inventory", paths->inventory,
                  "attribute inventory file (default: built-in)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--lexicon", paths->lexicon,
                  "lexicon file (default: built-in)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--rules", paths->rules, "rule file (default: built-in)")
      ->check(CLI::ExistingFile);
  if (with_templates) {
    cmd->add_option("--templates", paths->templates,
                    "sentence template file (default: built-in)")
        ->check(CLI::ExistingFile);
  }
}

AttributeInventory make_inventory(const DomainPaths &paths) {
  return paths.inventory.empty() ? default_inventory()
                                 : load_inventory(paths.inventory);
}

Lexicon make_lexicon(const DomainPaths &paths) {
  return paths.lexicon.empty() ? default_lexicon()
                               : load_lexicon(paths.lexicon);
}

RuleSet make_rules(const DomainPaths &paths, const AttributeInventory &inventory) {
  return paths.rules.empty() ? default_rules(inventory)
                             : load_rules(paths.rules, inventory);
}

TemplateSet make_templates(const DomainPaths &paths, const Lexicon &lexicon,
                           const AttributeInventory &inventory) {
  return paths.templates.empty()
             ? default_templates(lexicon, inventory)
             : load_templates(paths.templates, lexicon, inventory);
}

std::ofstream open_output(const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError(path, 0, "cannot open output file");
  return out;
}

// --- align ---------------------------------------------------------------

struct AlignArgs {
  std::string ref, hyp;
};

int run_align(const AlignArgs &args) {
  const std::vector<std::string> ref = tokenize(args.ref);
  const std::vector<std::string> hyp = tokenize(args.hyp);
  const AccuracyResult wa = word_accuracy(ref, hyp);
  std::cout << render_alignment(align(ref, hyp), ref, hyp);
  std::cout << "WA " << fixed(wa.value) << '\n';
  return kExitOk;
}

// --- score ---------------------------------------------------------------

struct ScoreArgs {
  std::string corpus;
  std::string metric = "both";
  bool parse = false;
  bool from_ref = false;
  std::string csv_path;
  std::size_t detail = 0;
  DomainPaths domain;
};

int run_score(const ScoreArgs &args) {
  const AttributeInventory inventory = make_inventory(args.domain);
  std::vector<UtteranceRecord> records = load_corpus(args.corpus, inventory);

  const bool want_wa = args.metric == "wa" || args.metric == "both";
  const bool want_ca = args.metric == "ca" || args.metric == "both";

  if (args.parse) {
    const Lexicon lexicon = make_lexicon(args.domain);
    const RuleSet rules = make_rules(args.domain, inventory);
    validate_domain(lexicon, rules, inventory);
    for (UtteranceRecord &record : records) {
      if (args.from_ref) {
        record.hyp_annotation =
            extract_concepts(record.ref_transcript, lexicon, rules);
      } else if (record.hyp_transcript) {
        record.hyp_annotation =
            extract_concepts(*record.hyp_transcript, lexicon, rules);
      }
    }
  }

  const EvaluationReport report =
      build_report(records, want_wa, want_ca, args.parse && args.from_ref);
  if ((!want_wa || !report.wa) && (!want_ca || !report.ca)) {
    throw NoScorableRecordsError();
  }
  std::cout << render_summary(report);
  if (args.detail > 0) std::cout << render_detail(report, args.detail);
  if (!args.csv_path.empty()) {
    std::ofstream out = open_output(args.csv_path);
    write_detail_csv(report, out);
  }
  return kExitOk;
}

// --- sweep ---------------------------------------------------------------

struct SweepArgs {
  std::string corpus;
  std::vector<double> rates;
  std::string targeting = "uniform";
  std::vector<double> mix = {1.0, 1.0, 1.0};
  std::uint64_t seed = kDefaultSeed;
  std::string out_csv;
  DomainPaths domain;
};

Targeting parse_targeting(const std::string &name) {
  if (name == "uniform") return Targeting::Uniform;
  if (name == "content") return Targeting::ContentBiased;
  if (name == "filler") return Targeting::FillerBiased;
  throw ConfigError("unknown targeting mode: " + name);
}

int run_sweep(const SweepArgs &args) {
  const AttributeInventory inventory = make_inventory(args.domain);
  const Lexicon lexicon = make_lexicon(args.domain);
  const RuleSet rules = make_rules(args.domain, inventory);
  validate_domain(lexicon, rules, inventory);
  const std::vector<UtteranceRecord> records =
      load_corpus(args.corpus, inventory);

  if (args.mix.size() != 3) {
    throw ConfigError("--mix needs exactly three weights: sub,ins,del");
  }
  for (double rate : args.rates) {
    if (!(rate >= 0.0 && rate <= 1.0)) {
      throw ConfigError("rate out of [0, 1]: " + compact(rate));
    }
  }
  ErrorSpec spec;
  spec.substitution_weight = args.mix[0];
  spec.insertion_weight = args.mix[1];
  spec.deletion_weight = args.mix[2];
  spec.targeting = parse_targeting(args.targeting);
  spec.seed = args.seed;
  try {
    spec.rate = args.rates.empty() ? 0.0 : args.rates.front();
    spec.validate();
  } catch (const std::invalid_argument &e) {
    throw ConfigError(e.what());
  }

  const std::vector<SweepPoint> points =
      sweep(records, args.rates, spec, lexicon, rules);
  {
    std::ofstream out = open_output(args.out_csv);
    write_sweep_csv(points, out);
  }
  std::cout << render_sweep_table(points);

  std::vector<std::pair<double, double>> wa_ca;
  wa_ca.reserve(points.size());
  for (const SweepPoint &p : points) {
    wa_ca.emplace_back(p.measured_wa, p.measured_ca);
  }
  const LineFit fit = linear_fit(wa_ca);  // throws DegenerateInput, exit 2
  std::cout << "fit: slope " << fixed(fit.slope, 4) << "  intercept "
            << fixed(fit.intercept, 4) << "  r2 " << fixed(fit.r_squared, 4)
            << '\n';
  return kExitOk;
}

// --- stats ---------------------------------------------------------------

int run_stats(const std::string &corpus, const DomainPaths &domain) {
  const AttributeInventory inventory = make_inventory(domain);
  const CorpusStats stats = corpus_stats(load_corpus(corpus, inventory));
  std::cout << "Dialogues             " << stats.dialogues << '\n'
            << "Utterances            " << stats.utterances << '\n'
            << "Words                 " << stats.words << '\n'
            << "Semantic units        " << stats.semantic_units << '\n'
            << "Semantic unit classes " << stats.su_classes << '\n';
  return kExitOk;
}

// --- gen -----------------------------------------------------------------

struct GenArgs {
  std::size_t n = 500;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  DomainPaths domain;
};

int run_gen(const GenArgs &args) {
  const AttributeInventory inventory = make_inventory(args.domain);
  const Lexicon lexicon = make_lexicon(args.domain);
  const RuleSet rules = make_rules(args.domain, inventory);
  validate_domain(lexicon, rules, inventory);
  const TemplateSet templates = make_templates(args.domain, lexicon, inventory);
  const std::vector<UtteranceRecord> records =
      generate_synthetic_corpus(templates, lexicon, args.n, args.seed);
  std::ofstream out = open_output(args.out);
  save_corpus(records, out);
  std::cout << "wrote " << records.size() << " records to " << args.out << '\n';
  return kExitOk;
}

// --- parse ---------------------------------------------------------------

struct ParseArgs {
  std::string text;
  bool trace = false;
  DomainPaths domain;
};

int run_parse(const ParseArgs &args) {
  const AttributeInventory inventory = make_inventory(args.domain);
  const Lexicon lexicon = make_lexicon(args.domain);
  const RuleSet rules = make_rules(args.domain, inventory);
  validate_domain(lexicon, rules, inventory);
  std::vector<std::string> trace;
  const SemanticAnnotation annotation =
      extract_concepts(tokenize(args.text), lexicon, rules,
                       args.trace ? &trace : nullptr);
  for (const std::string &line : trace) {
    std::cout << "# " << line << '\n';
  }
  std::cout << serialize_annotation(annotation) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"word accuracy / concept accuracy evaluation toolkit"};
  app.require_subcommand(1);

  AlignArgs align_args;
  CLI::App *cmd_align = app.add_subcommand(
      "align", "align a hypothesis against a reference and print WA");
  cmd_align->add_option("--ref", align_args.ref, "reference transcript")
      ->required();
  cmd_align->add_option("--hyp", align_args.hyp, "hypothesis transcript")
      ->required();

  ScoreArgs score_args;
  CLI::App *cmd_score =
      app.add_subcommand("score", "score a corpus file (WA and/or CA)");
  cmd_score->add_option("corpus", score_args.corpus, "corpus file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_score->add_option("--metric", score_args.metric, "wa, ca or both")
      ->check(CLI::IsMember({"wa", "ca", "both"}));
  cmd_score->add_flag("--parse", score_args.parse,
                      "fill HYPSEM by running the concept parser on HYP");
  cmd_score->add_flag("--from-ref", score_args.from_ref,
                      "with --parse: parse REF instead of HYP (coverage run)");
  cmd_score->add_option("--csv", score_args.csv_path,
                        "write per-utterance detail CSV to this path");
  cmd_score->add_option("--detail", score_args.detail,
                        "print alignments for the K worst-CA utterances");
  add_domain_options(cmd_score, &score_args.domain, false);

  SweepArgs sweep_args;
  CLI::App *cmd_sweep = app.add_subcommand(
      "sweep", "corrupt references at several rates and score WA/CA");
  cmd_sweep->add_option("corpus", sweep_args.corpus, "corpus file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_sweep->add_option("--rates", sweep_args.rates, "corruption rates in [0,1]")
      ->required()
      ->delimiter(',');
  cmd_sweep
      ->add_option("--targeting", sweep_args.targeting,
                   "uniform, content or filler")
      ->check(CLI::IsMember({"uniform", "content", "filler"}));
  cmd_sweep->add_option("--mix", sweep_args.mix, "sub,ins,del weights")
      ->delimiter(',');
  cmd_sweep->add_option("--seed", sweep_args.seed, "RNG seed (default 1729)");
  cmd_sweep->add_option("--out", sweep_args.out_csv, "sweep CSV output path")
      ->required();
  add_domain_options(cmd_sweep, &sweep_args.domain, false);

  std::string stats_corpus;
  DomainPaths stats_domain;
  CLI::App *cmd_stats = app.add_subcommand("stats", "print corpus figures");
  cmd_stats->add_option("corpus", stats_corpus, "corpus file")
      ->required()
      ->check(CLI::ExistingFile);
  add_domain_options(cmd_stats, &stats_domain, false);

  GenArgs gen_args;
  CLI::App *cmd_gen =
      app.add_subcommand("gen", "generate a synthetic template corpus");
  cmd_gen->add_option("--n", gen_args.n, "number of utterances (default 500)");
  cmd_gen->add_option("--seed", gen_args.seed, "RNG seed (default 1729)");
  cmd_gen->add_option("--out", gen_args.out, "corpus output path")->required();
  add_domain_options(cmd_gen, &gen_args.domain, true);

  ParseArgs parse_args;
  CLI::App *cmd_parse =
      app.add_subcommand("parse", "run the concept parser on one utterance");
  cmd_parse->add_option("--text", parse_args.text, "utterance text")->required();
  cmd_parse->add_flag("--trace", parse_args.trace, "print parse decisions");
  add_domain_options(cmd_parse, &parse_args.domain, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (cmd_align->parsed()) return run_align(align_args);
    if (cmd_score->parsed()) {
      if (score_args.from_ref && !score_args.parse) {
        throw ConfigError("--from-ref requires --parse");
      }
      return run_score(score_args);
    }
    if (cmd_sweep->parsed()) return run_sweep(sweep_args);
    if (cmd_stats->parsed()) return run_stats(stats_corpus, stats_domain);
    if (cmd_gen->parsed()) return run_gen(gen_args);
    if (cmd_parse->parsed()) return run_parse(parse_args);
  } catch (const EmptyReferenceError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitScoringError;
  } catch (const NoScorableRecordsError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitScoringError;
  } catch (const DegenerateInputError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitScoringError;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}
