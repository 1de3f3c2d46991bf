#include "linkpred/eval.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <iterator>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace linkpred {

namespace {

std::uint64_t fnv1a(std::span<const Edge> edges) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto mix = [&hash](std::uint32_t word) {
    for (int i = 0; i < 4; ++i) {
      hash ^= (word >> (8 * i)) & 0xFFu;
      hash *= 0x100000001b3ULL;
    }
  };
  for (const Edge& e : edges) {
    mix(e.source);
    mix(e.target);
  }
  return hash;
}

void check_fraction(double fraction) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw std::invalid_argument("split fraction must lie in (0, 1)");
  }
}

}  // namespace

std::vector<Edge> EdgeSplit::sampled_edges() const {
  std::vector<Edge> all;
  all.reserve(test_edges.size() + dropped_test_edges.size());
  std::merge(test_edges.begin(), test_edges.end(), dropped_test_edges.begin(),
             dropped_test_edges.end(), std::back_inserter(all));
  return all;
}

EdgeSplit split_edges(const Graph& g, double fraction, std::uint64_t seed) {
  check_fraction(fraction);
  std::vector<Edge> edges = g.edges();
  const auto count = static_cast<std::size_t>(std::floor(fraction * static_cast<double>(edges.size())));
  if (count < 1) {
    throw std::invalid_argument("split fraction selects no edges from a graph with " +
                                std::to_string(edges.size()) + " edges");
  }
  // Partial Fisher-Yates: the first `count` slots become a uniform sample.
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, edges.size() - 1);
    std::swap(edges[i], edges[pick(rng)]);
  }
  edges.resize(count);
  return split_with_sample(g, std::move(edges), fraction, seed);
}

EdgeSplit split_with_sample(const Graph& g, std::vector<Edge> sampled, double fraction,
                            std::uint64_t seed) {
  check_fraction(fraction);
  std::sort(sampled.begin(), sampled.end());
  if (std::adjacent_find(sampled.begin(), sampled.end()) != sampled.end()) {
    throw std::invalid_argument("split sample lists an edge twice");
  }
  for (const Edge& e : sampled) {
    if (e.source >= g.vertex_count() || e.target >= g.vertex_count() ||
        !g.has_edge(e.source, e.target)) {
      throw std::invalid_argument("split sample contains an edge missing from the graph");
    }
  }

  std::vector<Edge> remaining;
  remaining.reserve(g.edge_count() - sampled.size());
  std::vector<Edge> all = g.edges();
  std::set_difference(all.begin(), all.end(), sampled.begin(), sampled.end(),
                      std::back_inserter(remaining));

  EdgeSplit split;
  split.seed = seed;
  split.fraction = fraction;
  split.train_graph = Graph::from_edges(g.vertex_count(), std::move(remaining), g.labels());
  for (const Edge& e : sampled) {
    if (is_eligible(split.train_graph, e.source) && is_eligible(split.train_graph, e.target)) {
      split.test_edges.push_back(e);
    } else {
      split.dropped_test_edges.push_back(e);
    }
  }
  return split;
}

void write_split(std::ostream& out, const Graph& source, const EdgeSplit& split) {
  out << "# linkpred split\n";
  out << "# seed " << split.seed << '\n';
  out << "# fraction " << format_double(split.fraction) << '\n';
  out << "# source_edges " << source.edge_count() << '\n';
  for (const Edge& e : split.sampled_edges()) {
    out << source.label(e.source) << ' ' << source.label(e.target) << '\n';
  }
}

EdgeSplit read_split(std::istream& in, const Graph& source) {
  std::optional<std::uint64_t> seed;
  std::optional<double> fraction;
  std::optional<std::uint64_t> source_edges;
  std::vector<Edge> sampled;
  const LabelIndex index(source);

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    if (line[0] == '#') {
      std::string hash, key;
      fields >> hash >> key;
      if (key == "seed") {
        std::uint64_t v;
        if (fields >> v) seed = v;
      } else if (key == "fraction") {
        std::string text;
        fields >> text;
        fraction = std::stod(text);
      } else if (key == "source_edges") {
        std::uint64_t v;
        if (fields >> v) source_edges = v;
      }
      continue;
    }
    std::string u, v;
    if (!(fields >> u >> v)) throw ParseError(line_no, "expected 'source target'");
    try {
      sampled.push_back({index.at(u), index.at(v)});
    } catch (const std::out_of_range& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!seed || !fraction) throw ParseError(line_no, "split file lacks seed or fraction header");
  if (source_edges && *source_edges != source.edge_count()) {
    throw std::invalid_argument("split file was made for a graph with " +
                                std::to_string(*source_edges) + " edges, this one has " +
                                std::to_string(source.edge_count()));
  }
  return split_with_sample(source, std::move(sampled), *fraction, *seed);
}

SplitInfo split_info(const EdgeSplit& split) {
  SplitInfo info;
  info.seed = split.seed;
  info.fraction = split.fraction;
  info.dropped_test_edges = split.dropped_test_edges.size();
  info.fingerprint = fnv1a(split.test_edges);
  return info;
}

EvaluationReport build_curves(const ThresholdHistogram& h) {
  h.check_conservation();
  if (h.positives_total == 0 || h.negatives_total == 0) {
    throw std::invalid_argument("curves need at least one positive and one negative candidate");
  }
  EvaluationReport report;
  report.positives_total = h.positives_total;
  report.negatives_total = h.negatives_total;

  const std::size_t count = h.buckets.size() + 1;
  report.thresholds.reserve(count);
  std::uint64_t tp = 0, fp = 0;
  for (const auto& b : h.buckets) {
    tp += b.tp;
    fp += b.fp;
    report.thresholds.push_back({b.score, tp, fp});
  }
  report.thresholds.push_back({0.0, h.positives_total, h.negatives_total});

  const auto positives = static_cast<double>(h.positives_total);
  const auto negatives = static_cast<double>(h.negatives_total);
  report.pr_points.reserve(count);
  report.roc_points.reserve(count);
  for (const auto& t : report.thresholds) {
    const auto tp_d = static_cast<double>(t.tp);
    report.pr_points.push_back({tp_d / positives, tp_d / static_cast<double>(t.tp + t.fp)});
    report.roc_points.push_back({static_cast<double>(t.fp) / negatives, tp_d / positives});
  }
  report.aupr = area_under_pr(report.pr_points);
  report.auroc = area_under_roc(report.roc_points);
  return report;
}

double area_under_pr(std::span<const PrPoint> points) {
  double area = 0.0;
  double previous_recall = 0.0;
  for (const auto& p : points) {
    if (p.recall < previous_recall) throw std::invalid_argument("PR points are not sorted by recall");
    if (p.recall > 1.0 || p.precision < 0.0 || p.precision > 1.0) {
      throw std::invalid_argument("PR point outside the unit square");
    }
    area += p.precision * (p.recall - previous_recall);
    previous_recall = p.recall;
  }
  return area;
}

double area_under_roc(std::span<const RocPoint> points) {
  double area = 0.0;
  RocPoint previous{0.0, 0.0};
  for (const auto& p : points) {
    if (p.fpr < previous.fpr || p.tpr < previous.tpr) {
      throw std::invalid_argument("ROC points are not sorted");
    }
    if (p.fpr > 1.0 || p.tpr > 1.0) throw std::invalid_argument("ROC point outside the unit square");
    area += (p.fpr - previous.fpr) * (p.tpr + previous.tpr) / 2.0;
    previous = p;
  }
  return area;
}

void write_pr_csv(std::ostream& out, const EvaluationReport& report) {
  out << "recall,precision\n";
  for (const auto& p : report.pr_points) {
    out << format_double(p.recall) << ',' << format_double(p.precision) << '\n';
  }
}

void write_roc_csv(std::ostream& out, const EvaluationReport& report) {
  out << "fpr,tpr\n";
  for (const auto& p : report.roc_points) {
    out << format_double(p.fpr) << ',' << format_double(p.tpr) << '\n';
  }
}

}  // namespace linkpred
