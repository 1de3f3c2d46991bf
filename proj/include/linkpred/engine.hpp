#pragma once

// Exhaustive scoring of every candidate missing edge.
//
// For each source vertex the engine walks its 2-hop neighborhood, accumulates
// per-target intersection counts (or AA/RA weight sums) in a dense scratch
// array, turns them into scores, and folds each nonzero score straight into a
// per-worker histogram keyed by the exact score bits. Candidates never reached
// by a 2-hop path score 0; their class counts are filled in analytically from
// the size of the candidate universe, so they are never enumerated.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "linkpred/graph.hpp"
#include "linkpred/scores.hpp"

namespace linkpred {

inline constexpr std::size_t kDefaultChunkSize = 1000;

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ClassCounts {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;

  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

struct HistogramBucket {
  double score = 0.0;
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;

  friend bool operator==(const HistogramBucket&, const HistogramBucket&) = default;
};

struct ThresholdHistogram {
  // Distinct nonzero scores, strictly descending.
  std::vector<HistogramBucket> buckets;
  // Every candidate scoring exactly 0.
  ClassCounts zero_bucket;
  std::uint64_t positives_total = 0;
  std::uint64_t negatives_total = 0;

  // Throws std::logic_error if the buckets are unsorted, contain a zero key,
  // or the class counts do not add up to the totals.
  void check_conservation() const;

  friend bool operator==(const ThresholdHistogram&, const ThresholdHistogram&) = default;
};

struct CandidateUniverse {
  // Vertices with at least one incident training edge, ascending.
  std::vector<VertexId> eligible_vertices;
  // Ordered pairs (u, v), u != v, both eligible, (u, v) not a training edge.
  std::uint64_t universe_size = 0;
};

// The test edges only matter for validation elsewhere; the universe depends on
// the training graph alone.
CandidateUniverse universe_stats(const Graph& g);

inline bool is_eligible(const Graph& g, VertexId v) {
  return g.out_degree(v) + g.in_degree(v) > 0;
}

// Held-out positives indexed by source for constant-time lookups during
// scoring. Construction validates them against the training graph.
class TestSet {
 public:
  TestSet(const Graph& g, std::span<const Edge> edges);

  std::size_t size() const { return targets_.size(); }
  std::span<const VertexId> targets_of(VertexId source) const;
  bool contains(VertexId source, VertexId target) const;

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> targets_;
};

// Histogram under construction, keyed by the bit pattern of the score.
class PartialHistogram {
 public:
  void add(double score, bool positive);
  void merge(const PartialHistogram& other);
  std::size_t bucket_count() const { return buckets_.size(); }
  std::uint64_t explicit_candidates() const { return explicit_; }
  std::uint64_t explicit_positives() const { return explicit_tp_; }

  // Sorts buckets and completes the zero bucket from the class totals.
  ThresholdHistogram finalize(std::uint64_t positives_total,
                              std::uint64_t negatives_total) const;

 private:
  std::unordered_map<std::uint64_t, ClassCounts> buckets_;
  std::uint64_t explicit_ = 0;
  std::uint64_t explicit_tp_ = 0;
};

// Per-worker scratch for scoring one source vertex at a time. Reusable across
// sources; not shareable between threads.
class VertexScorer {
 public:
  VertexScorer(const Graph& g, const ScoreSpec& spec);

  // Calls visit(target, score) for every candidate (source, target) reached
  // by a 2-hop path of the score's orientation whose score is nonzero.
  // Existing training edges and the source itself are never visited.
  template <typename Visit>
  void for_each_candidate(VertexId source, Visit&& visit);

 private:
  void accumulate(VertexId source);
  double value_of(VertexId source, VertexId target) const;
  void touch(VertexId target);

  const Graph& graph_;
  ScoreSpec spec_;
  std::vector<double> weight_sum_;
  std::vector<std::uint32_t> count_a_;
  std::vector<std::uint32_t> count_b_;
  std::vector<std::uint32_t> touched_stamp_;
  std::vector<std::uint32_t> edge_stamp_;
  std::vector<VertexId> touched_;
  std::uint32_t stamp_ = 0;
};

struct VertexContribution {
  PartialHistogram histogram;
  bool skipped = false;
};

// Scores every candidate leaving n1 and classifies it against the test set.
// An ineligible n1 is reported as skipped with an empty contribution.
VertexContribution score_from_vertex(const Graph& g, VertexId n1, const ScoreSpec& spec,
                                     const TestSet& test);

struct EngineOptions {
  // 0 means one worker per hardware thread.
  std::size_t workers = 0;
  std::size_t chunk_size = kDefaultChunkSize;
  // Hard cap on distinct score values; 0 disables the cap.
  std::size_t max_buckets = 0;
};

struct EngineStats {
  std::size_t workers = 0;
  std::size_t chunk_size = 0;
  std::size_t skipped_vertices = 0;
  std::uint64_t explicit_candidates = 0;
  std::uint64_t universe_size = 0;
};

ThresholdHistogram score_all(const Graph& g, const ScoreSpec& spec, std::span<const Edge> test,
                             const EngineOptions& options = {}, EngineStats* stats = nullptr);

// Text dump: a header comment, then "score tp fp" per bucket in descending
// score order with round-trip precision, then "# zero", "# positives" and
// "# negatives" trailer lines.
void write_histogram(std::ostream& out, const ThresholdHistogram& h);
ThresholdHistogram read_histogram(std::istream& in);

// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double value);

// ---------------------------------------------------------------------------

template <typename Visit>
void VertexScorer::for_each_candidate(VertexId source, Visit&& visit) {
  accumulate(source);
  for (VertexId target : touched_) {
    if (edge_stamp_[target] == stamp_) continue;
    double score = value_of(source, target);
    if (score != 0.0) visit(target, score);
  }
}

}  // namespace linkpred
