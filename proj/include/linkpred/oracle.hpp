#pragma once

// Brute-force reference scoring for small graphs.
//
// Builds its own std::set adjacency from the edge list, scores every
// candidate pair directly from set intersections, and derives curves with the
// literal quadratic threshold loop. Nothing here goes through the engine's
// path accumulation or the eval prefix sums.

#include <cstddef>
#include <span>
#include <vector>

#include "linkpred/engine.hpp"
#include "linkpred/eval.hpp"
#include "linkpred/graph.hpp"
#include "linkpred/scores.hpp"

namespace linkpred {

inline constexpr std::size_t kDefaultOracleCap = 500;

struct OracleCandidate {
  Edge edge;
  double score = 0.0;
  bool positive = false;
};

struct OracleResult {
  // Every candidate pair of the universe, ordered by (source, target).
  std::vector<OracleCandidate> candidates;
  ThresholdHistogram histogram;
  std::vector<ThresholdCounts> thresholds;
  std::vector<PrPoint> pr_points;
  std::vector<RocPoint> roc_points;
  // Left at 0 when there are no positives or no negatives.
  double aupr = 0.0;
  double auroc = 0.0;
};

// Throws std::length_error when the graph has more than `cap` vertices.
OracleResult oracle_score_all(const Graph& g, const ScoreSpec& spec, std::span<const Edge> test,
                              std::size_t cap = kDefaultOracleCap);

// Cumulative counts per distinct score via the O(T²) loop; the zero bucket is
// the last threshold.
std::vector<ThresholdCounts> oracle_threshold_counts(const ThresholdHistogram& h);

}  // namespace linkpred
