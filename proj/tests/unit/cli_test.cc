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

#include <algorithm>
#include <sstream>
#include <tuple>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "ptevent/argument_extractor.h"
#include "ptevent/hashing.h"
#include "ptevent/ingestion.h"
#include "ptevent/io.h"
#include "ptevent/ontology.h"
#include "ptevent/scorer.h"
#include "support/test_data.h"

namespace ptevent {
namespace {

using nlohmann::json;
using testing::test_data;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override { dir_ = testing::scratch_dir("cli"); }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, ScoreIdenticalFilesGivesFullMarks) {
  const std::string gold = test_data("synthetic.json").string();
  const Result r = run_cli({"score", "--task", "triggers", "--gold", gold,
                            "--pred", gold});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("100.0  100.0  100.0"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("arguments"), std::string::npos);
}

TEST_F(CliTest, GenQaOnElvisWritesFiveItems) {
  const Result r = run_cli({"gen-qa", "--in", test_data("elvis.json").string(),
                            "--out", path("qa.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto items = read_squad_json(path("qa.json"));
  ASSERT_EQ(items.size(), 5u);
  size_t impossible = 0;
  for (const auto& item : items) impossible += item.is_impossible;
  EXPECT_EQ(impossible, 2u);

  const json meta = json::parse(read_file(path("qa.json") + ".meta.json"));
  EXPECT_EQ(meta["command"], "gen-qa");
  EXPECT_EQ(meta["config_sha256"].get<std::string>().size(), 64u);
  EXPECT_EQ(meta["inputs"][0]["sha256"], sha256_file(test_data("elvis.json")));
  EXPECT_EQ(meta["outputs"][0]["sha256"], sha256_file(path("qa.json")));
}

TEST_F(CliTest, OracleExtractMatchesGold) {
  const std::string in = test_data("synthetic.json").string();
  const Result r = run_cli({"extract", "--backend", "mock-oracle",
                            "--context-window", "1", "--in", in});
  ASSERT_EQ(r.code, 0) << r.err;
  const Corpus gold = read_ace_json(in, EventOntology::bundled());
  auto sorted = [](std::vector<SentencePrediction> predictions) {
    for (auto& p : predictions) {
      std::sort(p.arguments.begin(), p.arguments.end(),
                [](const PredictedArgument& a, const PredictedArgument& b) {
                  return std::tie(a.trigger_ref, a.sentence_id, a.span.start,
                                  a.span.end, a.role) <
                         std::tie(b.trigger_ref, b.sentence_id, b.span.start,
                                  b.span.end, b.role);
                });
    }
    return predictions;
  };
  EXPECT_EQ(sorted(parse_predictions_json(r.out)),
            sorted(as_predictions(gold)));
}

TEST_F(CliTest, ClsBackendPredictsNoArguments) {
  const std::string in = test_data("synthetic.json").string();
  ASSERT_EQ(run_cli({"extract", "--backend", "mock-cls", "--in", in, "--out",
                     path("p.json")})
                .code,
            0);
  const Result r = run_cli({"score", "--gold", in, "--pred", path("p.json"),
                            "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["triggers"]["classification"]["f1"], 1.0);
  EXPECT_EQ(doc["arguments"]["classification"]["recall"], 0.0);
}

TEST_F(CliTest, JobsGiveByteIdenticalOutputs) {
  const std::string in = test_data("synthetic.json").string();
  for (const std::string jobs : {"1", "7"}) {
    ASSERT_EQ(run_cli({"extract", "--jobs", jobs, "--context-window", "2",
                       "--in", in, "--out", path("p" + jobs + "/pred.json")})
                  .code,
              0);
  }
  EXPECT_EQ(read_file(path("p1/pred.json")), read_file(path("p7/pred.json")));
  const json m1 = json::parse(read_file(path("p1/pred.json.meta.json")));
  const json m7 = json::parse(read_file(path("p7/pred.json.meta.json")));
  EXPECT_EQ(m1["config_sha256"], m7["config_sha256"]);
}

TEST_F(CliTest, TranslateThenAlignEqualsAlignFromCorpus) {
  const std::string config = test_data("cascade/config.json").string();
  const std::string in = test_data("cascade/source.en.json").string();
  ASSERT_EQ(run_cli({"translate", "--config", config, "--in", in, "--out",
                     path("bundle.json")})
                .code,
            0);
  ASSERT_EQ(run_cli({"align", "--config", config, "--in", path("bundle.json"),
                     "--out", path("a.json")})
                .code,
            0);
  const Result direct = run_cli({"align", "--config", config, "--jobs", "3",
                                 "--in", in, "--out", path("b.json")});
  ASSERT_EQ(direct.code, 0) << direct.err;
  EXPECT_EQ(read_file(path("a.json")), read_file(path("b.json")));
  EXPECT_EQ(read_file(path("a.report.json")), read_file(path("b.report.json")));
  EXPECT_NE(direct.err.find("aligned 4/5"), std::string::npos);

  const json meta = json::parse(read_file(path("b.json.meta.json")));
  EXPECT_EQ(meta["inputs"].size(), 4u);  // corpus + three caches
}

TEST_F(CliTest, FlagsOverrideConfig) {
  const std::string in = test_data("cascade/source.en.json").string();
  const std::string config = test_data("cascade/config.json").string();
  const Result r = run_cli({"align", "--config", config, "--stages",
                            "exact,fuzzy", "--in", in, "--out",
                            path("c.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json report = json::parse(read_file(path("c.report.json")));
  EXPECT_EQ(report["per_stage_counts"]["aligner"]["attempted"], 0);
}

TEST_F(CliTest, GenTriggersWritesLabels) {
  const Result r = run_cli({"gen-triggers", "--in",
                            test_data("synthetic.json").string(), "--out",
                            path("t/train.conll")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_conll_iob(path("t/train.conll")).size(), 20u);
  EXPECT_TRUE(std::filesystem::exists(path("t/labels.txt")));
}

TEST_F(CliTest, StatsReportsCounts) {
  const Result r = run_cli({"stats", "--format", "json", "--in",
                            test_data("synthetic.json").string()});
  ASSERT_EQ(r.code, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["triggers"], 20);
  EXPECT_EQ(doc["arguments"], 47);
}

TEST_F(CliTest, ExitCodes) {
  const Result none = run_cli({});
  EXPECT_EQ(none.code, 1);
  EXPECT_NE(none.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run_cli({"extract", "--in", "x.json", "--bogus"}).code, 1);
  EXPECT_EQ(run_cli({"extract", "--backend", "gpu", "--in",
                     test_data("elvis.json").string()})
                .code,
            1);
  EXPECT_EQ(run_cli({"stats", "--in", path("missing.json")}).code, 2);

  write_file(path("bad.json"),
             R"([{"sentence": "a b", "words": ["a", "b"],
                "golden-event-mentions": [{"trigger": {"text": "b", "start": 1,
                "end": 2}, "event_type": "Life.Sing", "arguments": []}]}])");
  EXPECT_EQ(run_cli({"stats", "--in", path("bad.json")}).code, 1);

  write_file(path("config.json"), R"({"treshold": 0.5})");
  EXPECT_EQ(run_cli({"stats", "--config", path("config.json"), "--in",
                     test_data("elvis.json").string()})
                .code,
            1);

  const std::string config = test_data("cascade/config.json").string();
  const Result miss = run_cli({"translate", "--config", config, "--in",
                               test_data("elvis.json").string()});
  EXPECT_EQ(miss.code, 2);
  EXPECT_NE(miss.err.find("replay-only"), std::string::npos);
}

TEST_F(CliTest, HelpExitsZero) {
  const Result r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("gen-triggers"), std::string::npos);
}

}  // namespace
}  // namespace ptevent
