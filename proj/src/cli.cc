// Copyright 2026 The ptevent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ptevent/cli.h"

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ptevent/alignment.h"
#include "ptevent/argument_extractor.h"
#include "ptevent/config.h"
#include "ptevent/error.h"
#include "ptevent/hashing.h"
#include "ptevent/ingestion.h"
#include "ptevent/io.h"
#include "ptevent/iob.h"
#include "ptevent/ontology.h"
#include "ptevent/scorer.h"
#include "ptevent/templates.h"
#include "ptevent/trigger_tagger.h"

namespace ptevent::cli {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

struct Flags {
  std::string config;
  size_t jobs = 1;
  std::string src;
  std::string tgt;
  std::string stages;
  double threshold = 0.5;
  size_t context_window = 0;
  double null_threshold = 0.0;
  size_t max_answer_tokens = 30;

  std::string in;
  std::string out;
  std::string backend = "mock-oracle";
  std::string task = "all";
  std::string format = "table";
  std::string gold;
  std::string pred;
  std::string report;
  std::string split = "unsplit";
};

struct FlagSet {
  CLI::Option* jobs = nullptr;
  CLI::Option* src = nullptr;
  CLI::Option* tgt = nullptr;
  CLI::Option* stages = nullptr;
  CLI::Option* threshold = nullptr;
  CLI::Option* context_window = nullptr;
  CLI::Option* null_threshold = nullptr;
  CLI::Option* max_answer_tokens = nullptr;
};

Config effective_config(const Flags& flags, const FlagSet& set) {
  Config config = flags.config.empty() ? Config{} : load_config(flags.config);
  if (set.jobs->count()) config.jobs = flags.jobs;
  if (set.src->count()) config.src_lang = flags.src;
  if (set.tgt->count()) config.tgt_lang = flags.tgt;
  if (set.stages->count()) {
    try {
      config.stages = parse_stage_list(flags.stages);
    } catch (const Error& e) {
      throw UsageError(std::string("--stages: ") + e.what());
    }
  }
  if (set.threshold->count()) config.fuzzy_threshold = flags.threshold;
  if (set.context_window->count()) {
    config.context_window = flags.context_window;
  }
  if (set.null_threshold->count()) {
    config.null_threshold = flags.null_threshold;
  }
  if (set.max_answer_tokens->count()) {
    config.max_answer_tokens = flags.max_answer_tokens;
  }
  config.validate();
  return config;
}

// Ontology and templates named by the config, or the bundled ones.
class Resources {
 public:
  explicit Resources(const Config& config) {
    if (!config.ontology.empty()) {
      own_ontology_ = EventOntology::load(config.ontology);
      ontology_ = &*own_ontology_;
    } else {
      ontology_ = &EventOntology::bundled();
    }
    config_templates_ = config.templates;
  }

  const EventOntology& ontology() const { return *ontology_; }

  const QuestionTemplateSet& templates() {
    if (templates_ != nullptr) return *templates_;
    if (config_templates_.empty() && own_ontology_ == std::nullopt) {
      templates_ = &QuestionTemplateSet::bundled();
    } else {
      own_templates_ = QuestionTemplateSet::load(
          config_templates_.empty() ? data_dir() / "templates.pt.json"
                                    : config_templates_);
      own_templates_->check_total(*ontology_);
      templates_ = &*own_templates_;
    }
    return *templates_;
  }

 private:
  std::optional<EventOntology> own_ontology_;
  const EventOntology* ontology_ = nullptr;
  fs::path config_templates_;
  std::optional<QuestionTemplateSet> own_templates_;
  const QuestionTemplateSet* templates_ = nullptr;
};

// Provenance sidecar written next to every output file.
class Meta {
 public:
  Meta(std::string command, const Config& config)
      : command_(std::move(command)),
        config_hash_(sha256_hex(canonical_config_json(config))) {}

  void input(const fs::path& path) { inputs_.push_back(path); }
  void output(const fs::path& path) { outputs_.push_back(path); }

  void write(const fs::path& primary) const {
    ordered_json root;
    root["command"] = command_;
    root["config_sha256"] = config_hash_;
    root["inputs"] = files(inputs_);
    root["outputs"] = files(outputs_);
    fs::path sidecar = primary;
    sidecar += ".meta.json";
    write_file(sidecar, root.dump(2) + "\n");
  }

 private:
  static ordered_json files(const std::vector<fs::path>& paths) {
    ordered_json list = ordered_json::array();
    for (const fs::path& path : paths) {
      list.push_back({{"path", path.generic_string()},
                      {"sha256", sha256_file(path)}});
    }
    return list;
  }

  std::string command_;
  std::string config_hash_;
  std::vector<fs::path> inputs_;
  std::vector<fs::path> outputs_;
};

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string(flag) + " is required");
}

// Writes `content` to --out (with its sidecar) or to the output stream.
void emit(const Flags& flags, std::string_view content, Meta& meta,
          std::ostream& out) {
  if (flags.out.empty()) {
    out << content;
    return;
  }
  write_file(flags.out, content);
  meta.output(flags.out);
  meta.write(flags.out);
}

Corpus read_corpus(const fs::path& path, const Resources& resources,
                   const std::string& language) {
  return read_ace_json(path, resources.ontology(), Split::kUnsplit, language);
}

// Prediction JSON or a gold corpus, told apart by the record shape.
std::vector<SentencePrediction> read_predictions(const fs::path& path,
                                                 const Resources& resources) {
  const std::string text = read_file(path);
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  if (root.is_array() && !root.empty() && root.front().is_object() &&
      root.front().contains("triggers")) {
    return parse_predictions_json(text);
  }
  return as_predictions(parse_ace_json(text, resources.ontology()));
}

int cmd_ingest(const Flags& flags, const Config& config, std::ostream& out) {
  require(flags.in, "--in");
  Resources resources(config);
  Corpus corpus = read_ace_json(flags.in, resources.ontology(),
                                parse_split(flags.split), config.src_lang);
  Meta meta("ingest", config);
  meta.input(flags.in);
  emit(flags, format_ace_json(corpus), meta, out);
  return kOk;
}

int cmd_translate(const Flags& flags, const Config& config,
                  std::ostream& out) {
  require(flags.in, "--in");
  Resources resources(config);
  const Corpus corpus = read_corpus(flags.in, resources, config.src_lang);
  ClientSet clients(config);
  if (clients.mt() == nullptr) {
    throw ConfigError("translate needs an mt client");
  }
  const TranslationBundle bundle = translate_sentences(
      corpus, *clients.mt(), config.alignment(), config.jobs);
  clients.save();
  Meta meta("translate", config);
  meta.input(flags.in);
  for (const fs::path& cache : clients.cache_files()) meta.input(cache);
  emit(flags, format_bundle_json(bundle), meta, out);
  return kOk;
}

int cmd_align(const Flags& flags, const Config& config, std::ostream& out,
              std::ostream& err) {
  require(flags.in, "--in");
  Resources resources(config);
  const std::string text = read_file(flags.in);
  bool is_bundle = false;
  try {
    is_bundle = json::parse(text).is_object();
  } catch (const json::parse_error& e) {
    throw FormatError(flags.in + ": " + e.what());
  }
  ClientSet clients(config);
  TranslationOutput result;
  if (is_bundle) {
    result = align_bundle(parse_bundle_json(text), clients.view(),
                          config.alignment(), config.jobs);
  } else {
    if (clients.mt() == nullptr) {
      throw ConfigError("align from a corpus needs an mt client");
    }
    result = translate_corpus(
        parse_ace_json(text, resources.ontology(), Split::kUnsplit,
                       config.src_lang),
        clients.view(), config.alignment(), config.jobs);
  }
  clients.save();
  result.corpus.language = config.tgt_lang;

  Meta meta("align", config);
  meta.input(flags.in);
  for (const fs::path& cache : clients.cache_files()) meta.input(cache);

  fs::path report_path = flags.report;
  if (report_path.empty() && !flags.out.empty()) {
    report_path = fs::path(flags.out).replace_extension(".report.json");
  }
  if (!report_path.empty()) {
    write_file(report_path, format_report_json(result.report));
    meta.output(report_path);
  }
  err << "aligned " << result.report.total - result.report.unaligned_count
      << "/" << result.report.total << " annotations\n";
  emit(flags, format_ace_json(result.corpus), meta, out);
  return kOk;
}

int cmd_gen_triggers(const Flags& flags, const Config& config) {
  require(flags.in, "--in");
  require(flags.out, "--out");
  Resources resources(config);
  const Corpus corpus = read_corpus(flags.in, resources, config.tgt_lang);
  Meta meta("gen-triggers", config);
  meta.input(flags.in);
  std::vector<std::string> skip;
  if (!flags.report.empty()) {
    skip = parse_report_json(read_file(flags.report))
               .sentences_with_unaligned_triggers();
    meta.input(flags.report);
  }
  emit_trigger_training(corpus, flags.out, skip);
  const fs::path labels = fs::path(flags.out).parent_path() / "labels.txt";
  write_label_inventory(LabelInventory(resources.ontology()), labels);
  meta.output(flags.out);
  meta.output(labels);
  meta.write(flags.out);
  return kOk;
}

int cmd_gen_qa(const Flags& flags, const Config& config, std::ostream& out) {
  require(flags.in, "--in");
  Resources resources(config);
  const Corpus corpus = read_corpus(flags.in, resources, config.tgt_lang);
  const auto items =
      generate_corpus_qa_items(corpus, config.context_window,
                               resources.templates(), resources.ontology());
  Meta meta("gen-qa", config);
  meta.input(flags.in);
  emit(flags, format_squad_json(items), meta, out);
  return kOk;
}

int cmd_extract(const Flags& flags, const Config& config, std::ostream& out) {
  require(flags.in, "--in");
  Resources resources(config);
  const Corpus corpus = read_corpus(flags.in, resources, config.tgt_lang);
  const LabelInventory inventory(resources.ontology());
  const QuestionTemplateSet& templates = resources.templates();

  std::unique_ptr<TokenLabelBackend> triggers;
  std::unique_ptr<QABackend> qa;
  if (flags.backend == "mock-oracle") {
    triggers = std::make_unique<OracleTokenLabelBackend>(corpus, inventory);
    qa = std::make_unique<OracleQABackend>(generate_corpus_qa_items(
        corpus, config.context_window, templates, resources.ontology()));
  } else if (flags.backend == "mock-cls") {
    triggers = std::make_unique<OracleTokenLabelBackend>(corpus, inventory);
    qa = std::make_unique<NullQABackend>();
  } else if (flags.backend == "mock-all-o") {
    triggers = std::make_unique<OutsideTokenLabelBackend>(inventory);
    qa = std::make_unique<NullQABackend>();
  } else {
    throw UsageError("unknown backend '" + flags.backend + "'");
  }

  const auto predictions =
      run_extraction(corpus, *triggers, *qa, config.extractor(), inventory,
                     templates, resources.ontology(), config.jobs);
  Meta meta("extract", config);
  meta.input(flags.in);
  emit(flags, format_predictions_json(predictions), meta, out);
  return kOk;
}

int cmd_score(const Flags& flags, const Config& config, std::ostream& out) {
  require(flags.gold, "--gold");
  require(flags.pred, "--pred");
  if (flags.task != "triggers" && flags.task != "arguments" &&
      flags.task != "all") {
    throw UsageError("--task must be triggers, arguments or all");
  }
  Resources resources(config);
  const auto gold = read_predictions(flags.gold, resources);
  const auto pred = read_predictions(flags.pred, resources);

  std::vector<TaskScore> scores;
  if (flags.task != "arguments") {
    scores.push_back(
        {"triggers", score_triggers(trigger_items(gold), trigger_items(pred))});
  }
  if (flags.task != "triggers") {
    scores.push_back({"arguments", score_arguments(argument_items(gold),
                                                   argument_items(pred))});
  }
  Meta meta("score", config);
  meta.input(flags.gold);
  meta.input(flags.pred);
  emit(flags,
       flags.format == "json" ? format_score_json(scores)
                              : format_score_table(scores),
       meta, out);
  return kOk;
}

int cmd_stats(const Flags& flags, const Config& config, std::ostream& out) {
  require(flags.in, "--in");
  Resources resources(config);
  const CorpusStats stats =
      corpus_stats(read_corpus(flags.in, resources, config.tgt_lang));
  const std::vector<std::pair<std::string, size_t>> rows = {
      {"sentences", stats.sentences},
      {"mentions", stats.mentions},
      {"triggers", stats.triggers},
      {"arguments", stats.arguments},
      {"distinct_trigger_surfaces", stats.distinct_trigger_surfaces}};
  std::string content;
  if (flags.format == "json") {
    ordered_json root;
    for (const auto& [name, value] : rows) root[name] = value;
    content = root.dump(2) + "\n";
  } else {
    for (const auto& [name, value] : rows) {
      char line[96];
      std::snprintf(line, sizeof(line), "%-26s %zu\n", name.c_str(), value);
      content += line;
    }
  }
  Meta meta("stats", config);
  meta.input(flags.in);
  emit(flags, content, meta, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Event extraction for Portuguese via question answering",
               "ptevent"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags flags;
  FlagSet set;
  app.add_option("--config", flags.config, "JSON config file");
  set.jobs = app.add_option("--jobs", flags.jobs, "Worker threads")
                 ->check(CLI::PositiveNumber);
  set.src = app.add_option("--src", flags.src, "Source language");
  set.tgt = app.add_option("--tgt", flags.tgt, "Target language");
  set.stages = app.add_option("--stages", flags.stages,
                              "Alignment stages, comma separated");
  set.threshold =
      app.add_option("--threshold", flags.threshold, "Fuzzy threshold");
  set.context_window = app.add_option(
      "--context-window", flags.context_window, "Sentences on each side");
  set.null_threshold = app.add_option("--null-threshold", flags.null_threshold,
                                      "No-answer margin");
  set.max_answer_tokens = app.add_option(
      "--max-answer-tokens", flags.max_answer_tokens, "Answer length cap");

  auto add_io = [&](CLI::App* sub, bool needs_in) {
    auto* in = sub->add_option("--in", flags.in, "Input file");
    if (needs_in) in->required();
    sub->add_option("--out", flags.out, "Output file (default: stdout)");
  };

  CLI::App* ingest = app.add_subcommand("ingest", "Read and normalize ACE JSON");
  add_io(ingest, true);
  ingest->add_option("--split", flags.split, "train, dev, test or unsplit");
  CLI::App* translate =
      app.add_subcommand("translate", "Machine-translate a corpus");
  add_io(translate, true);
  CLI::App* align =
      app.add_subcommand("align", "Project annotations onto translations");
  add_io(align, true);
  align->add_option("--report", flags.report, "Alignment report path");
  CLI::App* gen_triggers = app.add_subcommand(
      "gen-triggers", "Write CoNLL-IOB trigger training data");
  add_io(gen_triggers, true);
  gen_triggers->add_option("--report", flags.report,
                           "Alignment report; skips unaligned triggers");
  CLI::App* gen_qa =
      app.add_subcommand("gen-qa", "Write SQuAD v2 argument training data");
  add_io(gen_qa, true);
  CLI::App* extract =
      app.add_subcommand("extract", "Predict triggers and arguments");
  add_io(extract, true);
  extract->add_option("--backend", flags.backend,
                      "mock-oracle, mock-cls or mock-all-o");
  CLI::App* score = app.add_subcommand("score", "Exact-match P/R/F1");
  score->add_option("--gold", flags.gold, "Gold corpus or predictions")
      ->required();
  score->add_option("--pred", flags.pred, "Predictions or corpus")
      ->required();
  score->add_option("--task", flags.task, "triggers, arguments or all");
  score->add_option("--format", flags.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  score->add_option("--out", flags.out, "Output file (default: stdout)");
  CLI::App* stats = app.add_subcommand("stats", "Corpus counts");
  add_io(stats, true);
  stats->add_option("--format", flags.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kValidationError;
  }

  try {
    const Config config = effective_config(flags, set);
    if (ingest->parsed()) return cmd_ingest(flags, config, out);
    if (translate->parsed()) return cmd_translate(flags, config, out);
    if (align->parsed()) return cmd_align(flags, config, out, err);
    if (gen_triggers->parsed()) return cmd_gen_triggers(flags, config);
    if (gen_qa->parsed()) return cmd_gen_qa(flags, config, out);
    if (extract->parsed()) return cmd_extract(flags, config, out);
    if (score->parsed()) return cmd_score(flags, config, out);
    if (stats->parsed()) return cmd_stats(flags, config, out);
    return kValidationError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kValidationError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_validation() ? kValidationError : kIOError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kIOError;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace ptevent::cli
