#include "linkpred/oracle.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace linkpred {

namespace {

using VertexSet = std::set<VertexId>;

std::vector<VertexId> intersect(const VertexSet& a, const VertexSet& b) {
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct SetAdjacency {
  std::vector<VertexSet> out;
  std::vector<VertexSet> in;
  std::vector<VertexSet> both;

  explicit SetAdjacency(const Graph& g)
      : out(g.vertex_count()), in(g.vertex_count()), both(g.vertex_count()) {
    for (const Edge& e : g.edges()) {
      out[e.source].insert(e.target);
      in[e.target].insert(e.source);
      both[e.source].insert(e.target);
      both[e.target].insert(e.source);
    }
  }
};

double pair_score(const SetAdjacency& adj, VertexId x, VertexId y, const ScoreSpec& spec) {
  auto degree = [&adj](VertexId z) { return adj.both[z].size(); };
  switch (spec.kind) {
    case ScoreKind::kCommonNeighbors:
      return static_cast<double>(intersect(adj.both[x], adj.both[y]).size());
    case ScoreKind::kAdamicAdar:
      return score_aa(intersect(adj.both[x], adj.both[y]), degree, spec.log_base);
    case ScoreKind::kResourceAllocation:
      return score_ra(intersect(adj.both[x], adj.both[y]), degree);
    case ScoreKind::kJaccard:
      return jaccard_from_counts(intersect(adj.both[x], adj.both[y]).size(), adj.both[x].size(),
                                 adj.both[y].size());
    default:
      return inf_family_from_counts(intersect(adj.out[x], adj.in[y]).size(), adj.out[x].size(),
                                    intersect(adj.in[x], adj.in[y]).size(), adj.in[x].size(),
                                    spec);
  }
}

}  // namespace

OracleResult oracle_score_all(const Graph& g, const ScoreSpec& spec, std::span<const Edge> test,
                              std::size_t cap) {
  if (g.vertex_count() > cap) {
    throw std::length_error("oracle refuses graphs above " + std::to_string(cap) + " vertices");
  }
  validate(spec);
  const SetAdjacency adj(g);
  const std::set<Edge> positives(test.begin(), test.end());

  OracleResult result;
  std::map<double, ClassCounts, std::greater<>> by_score;
  const auto n = static_cast<VertexId>(g.vertex_count());
  for (VertexId x = 0; x < n; ++x) {
    if (adj.both[x].empty()) continue;
    for (VertexId y = 0; y < n; ++y) {
      if (y == x || adj.both[y].empty() || adj.out[x].count(y) != 0) continue;
      OracleCandidate c{{x, y}, pair_score(adj, x, y, spec), positives.count({x, y}) != 0};
      auto& counts = by_score[c.score];
      (c.positive ? counts.tp : counts.fp) += 1;
      (c.positive ? result.histogram.positives_total : result.histogram.negatives_total) += 1;
      result.candidates.push_back(c);
    }
  }

  for (const auto& [score, counts] : by_score) {
    if (score == 0.0) {
      result.histogram.zero_bucket = counts;
    } else {
      result.histogram.buckets.push_back({score, counts.tp, counts.fp});
    }
  }

  result.thresholds = oracle_threshold_counts(result.histogram);
  const std::uint64_t p = result.histogram.positives_total;
  const std::uint64_t neg = result.histogram.negatives_total;
  if (p == 0 || neg == 0) return result;

  double previous_recall = 0.0;
  RocPoint previous_roc{0.0, 0.0};
  for (const auto& t : result.thresholds) {
    PrPoint pr{static_cast<double>(t.tp) / static_cast<double>(p),
               static_cast<double>(t.tp) / static_cast<double>(t.tp + t.fp)};
    RocPoint roc{static_cast<double>(t.fp) / static_cast<double>(neg),
                 static_cast<double>(t.tp) / static_cast<double>(p)};
    result.aupr += pr.precision * (pr.recall - previous_recall);
    result.auroc += (roc.fpr - previous_roc.fpr) * (roc.tpr + previous_roc.tpr) / 2.0;
    previous_recall = pr.recall;
    previous_roc = roc;
    result.pr_points.push_back(pr);
    result.roc_points.push_back(roc);
  }
  return result;
}

std::vector<ThresholdCounts> oracle_threshold_counts(const ThresholdHistogram& h) {
  std::vector<ThresholdCounts> values;
  for (const auto& b : h.buckets) values.push_back({b.score, b.tp, b.fp});
  values.push_back({0.0, h.zero_bucket.tp, h.zero_bucket.fp});

  std::vector<ThresholdCounts> results;
  results.reserve(values.size());
  for (const auto& sim1 : values) {
    ThresholdCounts cumulative{sim1.score, 0, 0};
    for (const auto& sim2 : values) {
      if (sim2.score >= sim1.score) {
        cumulative.tp += sim2.tp;
        cumulative.fp += sim2.fp;
      }
    }
    results.push_back(cumulative);
  }
  std::sort(results.begin(), results.end(),
            [](const ThresholdCounts& a, const ThresholdCounts& b) { return a.score > b.score; });
  return results;
}

}  // namespace linkpred
