#pragma once

// End-to-end runs: load -> split -> score -> evaluate -> write artifacts,
// plus AUPR comparison tables across runs that share a split.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linkpred/engine.hpp"
#include "linkpred/eval.hpp"
#include "linkpred/graph.hpp"
#include "linkpred/scores.hpp"

namespace linkpred {

struct RunConfig {
  std::string graph_path;
  IdFormat format = IdFormat::kInteger;
  std::vector<std::string> scores = {"inf_log_kd"};
  double k = 2.0;
  double log_base = std::numbers::e;
  double split_fraction = kDefaultSplitFraction;
  std::uint64_t seed = 1;
  // Reuse the sampled edges stored in this file instead of drawing a split.
  std::optional<std::string> split_file;
  // 0 means one per hardware thread.
  std::size_t threads = 0;
  std::size_t chunk_size = kDefaultChunkSize;
  std::size_t max_buckets = 0;
  std::string out_dir = "linkpred-out";
};

struct ScoreSummary {
  ScoreSpec spec;
  SplitInfo split;
  std::uint64_t positives = 0;
  std::uint64_t negatives = 0;
  double aupr = 0.0;
  double auroc = 0.0;
  std::uint64_t buckets = 0;
  std::size_t threads = 0;
  std::size_t chunk_size = 0;
  double wall_seconds = 0.0;
};

struct ExperimentResult {
  LoadStats load;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t test_edges = 0;
  std::size_t dropped_test_edges = 0;
  std::vector<ScoreSummary> summaries;
};

// Writes split.txt, <score>.hist, <score>.pr.csv, <score>.roc.csv and
// summary.csv into config.out_dir. Progress goes to `log` when given.
ExperimentResult run_experiment(const RunConfig& config, std::ostream* log = nullptr);

// Evaluates one score on an existing split without touching the filesystem.
struct ScoreRun {
  ThresholdHistogram histogram;
  EvaluationReport report;
  ScoreSummary summary;
};
ScoreRun run_score(const EdgeSplit& split, const ScoreSpec& spec, const EngineOptions& options);

void write_summary_csv(std::ostream& out, std::span<const ScoreSummary> rows);
std::vector<ScoreSummary> read_summary_csv(std::istream& in);

// (a / b − 1) · 100.
double improvement_percent(double aupr_a, double aupr_b);

struct Comparison {
  std::vector<std::string> labels;
  std::vector<double> aupr;
  // improvement[a][b]: percentage by which row a beats row b.
  std::vector<std::vector<double>> improvement;
};

// Requires at least two rows, all on the same split.
Comparison compare_reports(std::span<const ScoreSummary> rows);
void print_comparison(std::ostream& out, const Comparison& comparison);

}  // namespace linkpred
