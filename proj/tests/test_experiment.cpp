#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "linkpred/experiment.hpp"
#include "random_graphs.hpp"

namespace linkpred {
namespace {

namespace fs = std::filesystem;

ScoreSummary row(ScoreKind kind, double aupr, std::uint64_t fingerprint = 42) {
  ScoreSummary s;
  s.spec = ScoreSpec{kind};
  s.split.seed = 1;
  s.split.fingerprint = fingerprint;
  s.positives = 100;
  s.negatives = 1000000;
  s.aupr = aupr;
  return s;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("linkpred-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

TEST(Improvement, HeadlineComparisons) {
  // Five-decimal AUPRs put the first ratio at 65.249...
  EXPECT_NEAR(improvement_percent(0.52640, 0.31855), 65.24, 0.01);
  EXPECT_NEAR(improvement_percent(0.45156, 0.05491), 722.36, 0.01);
  EXPECT_EQ(improvement_percent(0.3, 0.3), 0.0);
  EXPECT_EQ(improvement_percent(0.0, 0.0), 0.0);
  EXPECT_TRUE(std::isinf(improvement_percent(0.1, 0.0)));
}

TEST(CompareReports, MatrixAndRefusal) {
  std::vector<ScoreSummary> rows{row(ScoreKind::kInfLogKD, 0.52640),
                                 row(ScoreKind::kAdamicAdar, 0.31855)};
  Comparison c = compare_reports(rows);
  ASSERT_EQ(c.labels.size(), 2u);
  EXPECT_EQ(c.improvement[0][0], 0.0);
  EXPECT_NEAR(c.improvement[0][1], 65.24, 0.01);
  std::ostringstream out;
  print_comparison(out, c);
  EXPECT_NE(out.str().find("0.52640"), std::string::npos);

  rows.push_back(row(ScoreKind::kJaccard, 0.0, 7));
  EXPECT_THROW(compare_reports(rows), std::invalid_argument);
  EXPECT_THROW(compare_reports(std::span(rows).first(1)), std::invalid_argument);
}

TEST(SummaryCsv, RoundTrip) {
  std::vector<ScoreSummary> rows{row(ScoreKind::kInfLogKD, 0.1234567890123),
                                 row(ScoreKind::kCommonNeighbors, 1e-7)};
  rows[0].spec.k = 3.5;
  rows[1].wall_seconds = 12.25;
  std::stringstream text;
  write_summary_csv(text, rows);
  auto back = read_summary_csv(text);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].spec, rows[0].spec);
  EXPECT_EQ(back[0].aupr, rows[0].aupr);
  EXPECT_EQ(back[1].aupr, rows[1].aupr);
  EXPECT_EQ(back[1].split, rows[1].split);
  EXPECT_EQ(back[1].wall_seconds, 12.25);

  std::istringstream broken("score,k\ncn,1\n");
  EXPECT_THROW(read_summary_csv(broken), ParseError);
}

TEST(RunExperiment, RepeatsAreByteIdentical) {
  TempDir dir;
  Graph g = testing::preferential_attachment(400, 3, 0.3, 5);
  const fs::path graph_path = dir.path() / "graph.txt";
  {
    std::ofstream out(graph_path);
    write_edge_list(out, g);
  }
  RunConfig config;
  config.graph_path = graph_path.string();
  config.scores = {"cn", "aa", "ra", "inf_log_kd"};
  config.seed = 3;
  std::vector<std::string> artifacts{"split.txt"};
  for (const auto& s : config.scores) {
    for (const char* ext : {".hist", ".pr.csv", ".roc.csv"}) artifacts.push_back(s + ext);
  }

  config.out_dir = (dir.path() / "a").string();
  config.threads = 1;
  ExperimentResult a = run_experiment(config);
  config.out_dir = (dir.path() / "b").string();
  config.threads = 3;
  config.chunk_size = 17;
  ExperimentResult b = run_experiment(config);

  ASSERT_EQ(a.summaries.size(), 4u);
  for (const auto& name : artifacts) {
    EXPECT_EQ(slurp(dir.path() / "a" / name), slurp(dir.path() / "b" / name)) << name;
  }
  std::ifstream summary(dir.path() / "a" / "summary.csv");
  auto rows = read_summary_csv(summary);
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(rows[i].aupr, b.summaries[i].aupr);
    EXPECT_EQ(rows[i].split, b.summaries[i].split);
  }
  EXPECT_NO_THROW(compare_reports(rows));

  // Reusing the split file reproduces the run.
  config.split_file = (dir.path() / "a" / "split.txt").string();
  config.seed = 999;
  config.out_dir = (dir.path() / "c").string();
  ExperimentResult c = run_experiment(config);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(c.summaries[i].aupr, a.summaries[i].aupr);
}

TEST(RunExperiment, RejectsRepeatedScores) {
  RunConfig config;
  config.graph_path = "unused";
  config.scores = {"inf_log_kd", "inf_log_2d"};
  EXPECT_THROW(run_experiment(config), std::invalid_argument);
}

}  // namespace
}  // namespace linkpred
