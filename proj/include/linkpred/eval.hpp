#pragma once

// Train/test splitting and precision-recall / ROC analysis of a
// ThresholdHistogram.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linkpred/engine.hpp"
#include "linkpred/graph.hpp"
#include "linkpred/scores.hpp"

namespace linkpred {

inline constexpr double kDefaultSplitFraction = 0.10;

struct EdgeSplit {
  Graph train_graph;
  // Held-out positives, sorted.
  std::vector<Edge> test_edges;
  // Held-out edges with an endpoint left without training edges; these are
  // excluded from evaluation entirely.
  std::vector<Edge> dropped_test_edges;
  std::uint64_t seed = 0;
  double fraction = kDefaultSplitFraction;

  // All sampled edges (test ∪ dropped), sorted.
  std::vector<Edge> sampled_edges() const;
};

// Removes a uniform sample of floor(fraction·|E|) edges. Deterministic for a
// given (graph, fraction, seed).
EdgeSplit split_edges(const Graph& g, double fraction, std::uint64_t seed);

// Builds the split that removes exactly `sampled` from g. Used when a split is
// reloaded from disk and by split_edges itself.
EdgeSplit split_with_sample(const Graph& g, std::vector<Edge> sampled, double fraction,
                            std::uint64_t seed);

// Split file: "# seed", "# fraction" and "# source_edges" header lines, then
// one "u v" line (external labels) per sampled edge.
void write_split(std::ostream& out, const Graph& source, const EdgeSplit& split);
EdgeSplit read_split(std::istream& in, const Graph& source);

struct PrPoint {
  double recall = 0.0;
  double precision = 0.0;
  friend bool operator==(const PrPoint&, const PrPoint&) = default;
};

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;
  friend bool operator==(const RocPoint&, const RocPoint&) = default;
};

// Cumulative counts at one threshold: every candidate scoring >= score.
struct ThresholdCounts {
  double score = 0.0;
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  friend bool operator==(const ThresholdCounts&, const ThresholdCounts&) = default;
};

struct SplitInfo {
  std::uint64_t seed = 0;
  double fraction = kDefaultSplitFraction;
  std::uint64_t dropped_test_edges = 0;
  // Hash of the held-out edge list; equal splits have equal fingerprints.
  std::uint64_t fingerprint = 0;
  friend bool operator==(const SplitInfo&, const SplitInfo&) = default;
};

SplitInfo split_info(const EdgeSplit& split);

struct EvaluationReport {
  std::vector<ThresholdCounts> thresholds;
  // Ascending recall.
  std::vector<PrPoint> pr_points;
  // Ascending fpr; ends at (1, 1).
  std::vector<RocPoint> roc_points;
  double aupr = 0.0;
  double auroc = 0.0;
  std::uint64_t positives_total = 0;
  std::uint64_t negatives_total = 0;
  std::optional<ScoreSpec> spec;
  std::optional<SplitInfo> split;
};

// Descending thresholds with one PR and one ROC point each; the zero bucket is
// always the final threshold. Requires at least one positive and one negative.
EvaluationReport build_curves(const ThresholdHistogram& h);

// Step integration Σ precision_i · (recall_i − recall_{i−1}), recall_0 = 0.
double area_under_pr(std::span<const PrPoint> points);
// Trapezoidal rule from (0, 0) through the given points.
double area_under_roc(std::span<const RocPoint> points);

void write_pr_csv(std::ostream& out, const EvaluationReport& report);
void write_roc_csv(std::ostream& out, const EvaluationReport& report);

}  // namespace linkpred
