#include "linkpred/engine.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <cmath>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>

namespace linkpred {

// ---------------------------------------------------------------------------
// Histogram

void ThresholdHistogram::check_conservation() const {
  std::uint64_t tp = zero_bucket.tp;
  std::uint64_t fp = zero_bucket.fp;
  for (std::size_t i = 0; i < buckets.size(); ++i) {
    const auto& b = buckets[i];
    if (!(b.score > 0.0) || !std::isfinite(b.score)) {
      throw std::logic_error("histogram bucket with non-positive or non-finite score");
    }
    if (i > 0 && !(buckets[i - 1].score > b.score)) {
      throw std::logic_error("histogram buckets are not strictly descending");
    }
    tp += b.tp;
    fp += b.fp;
  }
  if (tp != positives_total || fp != negatives_total) {
    throw std::logic_error("histogram counts (" + std::to_string(tp) + " tp, " +
                           std::to_string(fp) + " fp) do not match totals (" +
                           std::to_string(positives_total) + ", " +
                           std::to_string(negatives_total) + ")");
  }
}

void PartialHistogram::add(double score, bool positive) {
  if (!(score > 0.0) || !std::isfinite(score)) {
    throw std::logic_error("explicit candidate with score " + std::to_string(score));
  }
  auto& counts = buckets_[std::bit_cast<std::uint64_t>(score)];
  if (positive) {
    ++counts.tp;
    ++explicit_tp_;
  } else {
    ++counts.fp;
  }
  ++explicit_;
}

void PartialHistogram::merge(const PartialHistogram& other) {
  for (const auto& [key, counts] : other.buckets_) {
    auto& mine = buckets_[key];
    mine.tp += counts.tp;
    mine.fp += counts.fp;
  }
  explicit_ += other.explicit_;
  explicit_tp_ += other.explicit_tp_;
}

ThresholdHistogram PartialHistogram::finalize(std::uint64_t positives_total,
                                              std::uint64_t negatives_total) const {
  ThresholdHistogram h;
  h.positives_total = positives_total;
  h.negatives_total = negatives_total;
  h.buckets.reserve(buckets_.size());
  for (const auto& [key, counts] : buckets_) {
    h.buckets.push_back({std::bit_cast<double>(key), counts.tp, counts.fp});
  }
  std::sort(h.buckets.begin(), h.buckets.end(),
            [](const HistogramBucket& a, const HistogramBucket& b) { return a.score > b.score; });

  std::uint64_t explicit_fp = explicit_ - explicit_tp_;
  if (explicit_tp_ > positives_total || explicit_fp > negatives_total) {
    throw std::overflow_error("explicit candidate counts exceed the candidate universe");
  }
  h.zero_bucket = {positives_total - explicit_tp_, negatives_total - explicit_fp};
  return h;
}

// ---------------------------------------------------------------------------
// Universe and test set

CandidateUniverse universe_stats(const Graph& g) {
  CandidateUniverse u;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (is_eligible(g, v)) u.eligible_vertices.push_back(v);
  }
  const std::uint64_t m = u.eligible_vertices.size();
  // Every edge joins two eligible vertices, so all of them are excluded.
  u.universe_size = m == 0 ? 0 : m * (m - 1) - g.edge_count();
  return u;
}

TestSet::TestSet(const Graph& g, std::span<const Edge> edges) {
  std::vector<Edge> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Edge& e = sorted[i];
    if (e.source >= g.vertex_count() || e.target >= g.vertex_count()) {
      throw ValidationError("test edge endpoint outside the vertex range");
    }
    const std::string name = "test edge (" + g.label(e.source) + ", " + g.label(e.target) + ")";
    if (e.source == e.target) throw ValidationError(name + " is a self-loop");
    if (i > 0 && sorted[i - 1] == e) throw ValidationError(name + " is listed twice");
    if (g.has_edge(e.source, e.target)) {
      throw ValidationError(name + " is present in the training graph");
    }
    if (!is_eligible(g, e.source) || !is_eligible(g, e.target)) {
      throw ValidationError(name + " has an endpoint disconnected in the training graph");
    }
  }
  offsets_.assign(g.vertex_count() + 1, 0);
  for (const Edge& e : sorted) ++offsets_[e.source + 1];
  for (std::size_t v = 0; v < g.vertex_count(); ++v) offsets_[v + 1] += offsets_[v];
  targets_.reserve(sorted.size());
  for (const Edge& e : sorted) targets_.push_back(e.target);
}

std::span<const VertexId> TestSet::targets_of(VertexId source) const {
  if (source + 1 >= offsets_.size()) return {};
  return {targets_.data() + offsets_[source], targets_.data() + offsets_[source + 1]};
}

bool TestSet::contains(VertexId source, VertexId target) const {
  auto row = targets_of(source);
  return std::binary_search(row.begin(), row.end(), target);
}

// ---------------------------------------------------------------------------
// Per-vertex scoring

VertexScorer::VertexScorer(const Graph& g, const ScoreSpec& spec)
    : graph_(g),
      spec_(spec),
      weight_sum_(g.vertex_count(), 0.0),
      count_a_(g.vertex_count(), 0),
      count_b_(g.vertex_count(), 0),
      touched_stamp_(g.vertex_count(), 0),
      edge_stamp_(g.vertex_count(), 0) {
  validate(spec);
}

void VertexScorer::touch(VertexId target) {
  if (touched_stamp_[target] == stamp_) return;
  touched_stamp_[target] = stamp_;
  weight_sum_[target] = 0.0;
  count_a_[target] = 0;
  count_b_[target] = 0;
  touched_.push_back(target);
}

void VertexScorer::accumulate(VertexId source) {
  if (++stamp_ == 0) {
    std::fill(touched_stamp_.begin(), touched_stamp_.end(), 0);
    std::fill(edge_stamp_.begin(), edge_stamp_.end(), 0);
    stamp_ = 1;
  }
  touched_.clear();
  for (VertexId v : graph_.neighbors_out(source)) edge_stamp_[v] = stamp_;

  const ScoreKind kind = spec_.kind;
  if (uses_undirected_view(kind)) {
    const bool weighted =
        kind == ScoreKind::kAdamicAdar || kind == ScoreKind::kResourceAllocation;
    for (VertexId z : graph_.neighbors_undirected(source)) {
      auto second = graph_.neighbors_undirected(z);
      if (weighted) {
        // Γ(z) = {source} reaches no candidate.
        if (second.size() < 2) continue;
        const double w = kind == ScoreKind::kAdamicAdar
                             ? adamic_adar_weight(second.size(), spec_.log_base)
                             : resource_allocation_weight(second.size());
        for (VertexId y : second) {
          if (y == source) continue;
          touch(y);
          weight_sum_[y] += w;
        }
      } else {
        for (VertexId y : second) {
          if (y == source) continue;
          touch(y);
          ++count_a_[y];
        }
      }
    }
    return;
  }

  // DED: source → z → y counts z ∈ A(source) ∩ D(y).
  if (uses_deductive_walk(kind)) {
    for (VertexId z : graph_.neighbors_out(source)) {
      for (VertexId y : graph_.neighbors_out(z)) {
        if (y == source) continue;
        touch(y);
        ++count_a_[y];
      }
    }
  }
  // IND: z → source and z → y counts z ∈ D(source) ∩ D(y).
  if (uses_inductive_walk(kind)) {
    for (VertexId z : graph_.neighbors_in(source)) {
      for (VertexId y : graph_.neighbors_out(z)) {
        if (y == source) continue;
        touch(y);
        ++count_b_[y];
      }
    }
  }
}

double VertexScorer::value_of(VertexId source, VertexId target) const {
  switch (spec_.kind) {
    case ScoreKind::kCommonNeighbors:
      return static_cast<double>(count_a_[target]);
    case ScoreKind::kAdamicAdar:
    case ScoreKind::kResourceAllocation:
      return weight_sum_[target];
    case ScoreKind::kJaccard:
      return jaccard_from_counts(count_a_[target], graph_.neighbors_undirected(source).size(),
                                 graph_.neighbors_undirected(target).size());
    default:
      return inf_family_from_counts(count_a_[target], graph_.out_degree(source),
                                    count_b_[target], graph_.in_degree(source), spec_);
  }
}

VertexContribution score_from_vertex(const Graph& g, VertexId n1, const ScoreSpec& spec,
                                     const TestSet& test) {
  VertexContribution result;
  if (!is_eligible(g, n1)) {
    result.skipped = true;
    return result;
  }
  VertexScorer scorer(g, spec);
  scorer.for_each_candidate(n1, [&](VertexId target, double score) {
    result.histogram.add(score, test.contains(n1, target));
  });
  return result;
}

// ---------------------------------------------------------------------------
// Whole-graph scoring

namespace {

void check_bucket_cap(const PartialHistogram& h, std::size_t max_buckets) {
  if (max_buckets != 0 && h.bucket_count() > max_buckets) {
    throw std::length_error("distinct score count exceeds the bucket cap of " +
                            std::to_string(max_buckets));
  }
}

}  // namespace

ThresholdHistogram score_all(const Graph& g, const ScoreSpec& spec, std::span<const Edge> test,
                             const EngineOptions& options, EngineStats* stats) {
  validate(spec);
  if (options.chunk_size == 0) throw std::invalid_argument("chunk size must be positive");

  const TestSet test_set(g, test);
  const CandidateUniverse universe = universe_stats(g);
  const std::uint64_t positives = test_set.size();
  const std::uint64_t negatives = universe.universe_size - positives;

  std::size_t workers = options.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t n = g.vertex_count();
  const std::size_t chunk = options.chunk_size;
  workers = std::max<std::size_t>(1, std::min(workers, (n + chunk - 1) / chunk));

  // Build the shared union view before workers start reading it.
  if (n > 0 && uses_undirected_view(spec.kind)) g.neighbors_undirected(0);

  std::vector<PartialHistogram> partials(workers);
  std::vector<std::size_t> skipped(workers, 0);
  std::atomic<std::size_t> next_chunk{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&](std::size_t worker) {
    try {
      VertexScorer scorer(g, spec);
      std::vector<std::uint32_t> positive_stamp(n, 0);
      PartialHistogram& local = partials[worker];
      while (!failed.load(std::memory_order_relaxed)) {
        const std::size_t begin = next_chunk.fetch_add(chunk, std::memory_order_relaxed);
        if (begin >= n) break;
        const std::size_t end = std::min(n, begin + chunk);
        for (std::size_t v = begin; v < end; ++v) {
          const auto source = static_cast<VertexId>(v);
          if (!is_eligible(g, source)) {
            ++skipped[worker];
            continue;
          }
          const std::uint32_t mark = source + 1;
          for (VertexId t : test_set.targets_of(source)) positive_stamp[t] = mark;
          scorer.for_each_candidate(source, [&](VertexId target, double score) {
            local.add(score, positive_stamp[target] == mark);
          });
          check_bucket_cap(local, options.max_buckets);
        }
      }
    } catch (...) {
      failed = true;
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);

  PartialHistogram merged = std::move(partials[0]);
  for (std::size_t w = 1; w < workers; ++w) merged.merge(partials[w]);
  check_bucket_cap(merged, options.max_buckets);

  ThresholdHistogram h = merged.finalize(positives, negatives);
  if (stats != nullptr) {
    stats->workers = workers;
    stats->chunk_size = chunk;
    stats->skipped_vertices = 0;
    for (std::size_t s : skipped) stats->skipped_vertices += s;
    stats->explicit_candidates = merged.explicit_candidates();
    stats->universe_size = universe.universe_size;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Dump format

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::runtime_error("cannot format floating-point value");
  return std::string(buf, ptr);
}

void write_histogram(std::ostream& out, const ThresholdHistogram& h) {
  out << "# score tp fp\n";
  for (const auto& b : h.buckets) {
    out << format_double(b.score) << ' ' << b.tp << ' ' << b.fp << '\n';
  }
  out << "# zero " << h.zero_bucket.tp << ' ' << h.zero_bucket.fp << '\n';
  out << "# positives " << h.positives_total << '\n';
  out << "# negatives " << h.negatives_total << '\n';
}

ThresholdHistogram read_histogram(std::istream& in) {
  ThresholdHistogram h;
  bool have_zero = false, have_pos = false, have_neg = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    if (line[0] == '#') {
      std::string hash, key;
      fields >> hash >> key;
      if (key == "zero") {
        have_zero = static_cast<bool>(fields >> h.zero_bucket.tp >> h.zero_bucket.fp);
      } else if (key == "positives") {
        have_pos = static_cast<bool>(fields >> h.positives_total);
      } else if (key == "negatives") {
        have_neg = static_cast<bool>(fields >> h.negatives_total);
      }
      continue;
    }
    std::string score_text;
    HistogramBucket b;
    if (!(fields >> score_text >> b.tp >> b.fp)) {
      throw ParseError(line_no, "expected 'score tp fp'");
    }
    auto [ptr, ec] =
        std::from_chars(score_text.data(), score_text.data() + score_text.size(), b.score);
    if (ec != std::errc() || ptr != score_text.data() + score_text.size()) {
      throw ParseError(line_no, "invalid score '" + score_text + "'");
    }
    h.buckets.push_back(b);
  }
  if (!have_zero || !have_pos || !have_neg) {
    throw ParseError(line_no, "histogram trailer is incomplete");
  }
  h.check_conservation();
  return h;
}

}  // namespace linkpred
