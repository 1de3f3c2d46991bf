#include "linkpred/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace linkpred {

namespace fs = std::filesystem;

namespace {

constexpr const char* kSummaryHeader =
    "score,k,log_base,seed,fraction,split_fingerprint,dropped_test_edges,positives,negatives,"
    "aupr,auroc,buckets,threads,chunk_size,wall_seconds";

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

}  // namespace

ScoreRun run_score(const EdgeSplit& split, const ScoreSpec& spec, const EngineOptions& options) {
  ScoreRun run;
  EngineStats stats;
  const auto start = std::chrono::steady_clock::now();
  run.histogram = score_all(split.train_graph, spec, split.test_edges, options, &stats);
  const auto stop = std::chrono::steady_clock::now();

  run.report = build_curves(run.histogram);
  run.report.spec = spec;
  run.report.split = split_info(split);

  ScoreSummary& s = run.summary;
  s.spec = spec;
  s.split = *run.report.split;
  s.positives = run.histogram.positives_total;
  s.negatives = run.histogram.negatives_total;
  s.aupr = run.report.aupr;
  s.auroc = run.report.auroc;
  s.buckets = run.histogram.buckets.size();
  s.threads = stats.workers;
  s.chunk_size = stats.chunk_size;
  s.wall_seconds = std::chrono::duration<double>(stop - start).count();
  return run;
}

ExperimentResult run_experiment(const RunConfig& config, std::ostream* log) {
  if (config.scores.empty()) throw std::invalid_argument("no score selected");
  std::vector<ScoreSpec> specs;
  for (const auto& token : config.scores) {
    ScoreSpec spec = make_spec(token, config.k, config.log_base);
    for (const auto& seen : specs) {
      if (seen.kind == spec.kind) throw std::invalid_argument("score '" + token + "' listed twice");
    }
    specs.push_back(spec);
  }

  const fs::path out_dir(config.out_dir);
  fs::create_directories(out_dir);

  LoadedGraph loaded = load_edge_list_file(config.graph_path, config.format);
  const Graph& graph = loaded.graph;
  ExperimentResult result;
  result.load = loaded.stats;
  result.vertices = graph.vertex_count();
  result.edges = graph.edge_count();
  if (log != nullptr) {
    *log << "graph: " << graph.vertex_count() << " vertices, " << graph.edge_count()
         << " edges (" << loaded.stats.raw_edges << " raw, " << loaded.stats.duplicate_edges
         << " duplicates, " << loaded.stats.self_loops << " self-loops dropped)\n";
  }

  EdgeSplit split;
  if (config.split_file) {
    std::ifstream in(*config.split_file);
    if (!in) throw std::runtime_error("cannot open split file '" + *config.split_file + "'");
    split = read_split(in, graph);
  } else {
    split = split_edges(graph, config.split_fraction, config.seed);
  }
  {
    auto out = open_output(out_dir / "split.txt");
    write_split(out, graph, split);
  }
  result.test_edges = split.test_edges.size();
  result.dropped_test_edges = split.dropped_test_edges.size();
  if (log != nullptr) {
    *log << "split: seed " << split.seed << ", " << split.test_edges.size() << " test edges, "
         << split.dropped_test_edges.size() << " dropped (disconnected endpoint)\n";
  }

  EngineOptions options;
  options.workers = config.threads;
  options.chunk_size = config.chunk_size;
  options.max_buckets = config.max_buckets;

  for (const auto& spec : specs) {
    ScoreRun run = run_score(split, spec, options);
    const std::string stem = to_token(spec.kind);
    {
      auto out = open_output(out_dir / (stem + ".hist"));
      write_histogram(out, run.histogram);
    }
    {
      auto out = open_output(out_dir / (stem + ".pr.csv"));
      write_pr_csv(out, run.report);
    }
    {
      auto out = open_output(out_dir / (stem + ".roc.csv"));
      write_roc_csv(out, run.report);
    }
    if (log != nullptr) {
      *log << describe(spec) << ": AUPR " << fixed(run.summary.aupr, 5) << ", AUROC "
           << fixed(run.summary.auroc, 5) << ", " << run.summary.buckets << " thresholds, "
           << fixed(run.summary.wall_seconds, 2) << " s on " << run.summary.threads
           << " threads\n";
    }
    result.summaries.push_back(run.summary);
  }

  auto out = open_output(out_dir / "summary.csv");
  write_summary_csv(out, result.summaries);
  return result;
}

void write_summary_csv(std::ostream& out, std::span<const ScoreSummary> rows) {
  out << kSummaryHeader << '\n';
  for (const auto& r : rows) {
    out << to_token(r.spec.kind) << ',' << format_double(r.spec.k) << ','
        << format_double(r.spec.log_base) << ',' << r.split.seed << ','
        << format_double(r.split.fraction) << ',' << r.split.fingerprint << ','
        << r.split.dropped_test_edges << ',' << r.positives << ',' << r.negatives << ','
        << format_double(r.aupr) << ',' << format_double(r.auroc) << ',' << r.buckets << ','
        << r.threads << ',' << r.chunk_size << ',' << format_double(r.wall_seconds) << '\n';
  }
}

std::vector<ScoreSummary> read_summary_csv(std::istream& in) {
  std::vector<ScoreSummary> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == kSummaryHeader) continue;
    auto f = split_csv(line);
    if (f.size() != 15) throw ParseError(line_no, "summary row needs 15 fields");
    try {
      ScoreSummary r;
      r.spec = ScoreSpec{parse_score_kind(f[0]), std::stod(f[1]), std::stod(f[2])};
      r.split.seed = std::stoull(f[3]);
      r.split.fraction = std::stod(f[4]);
      r.split.fingerprint = std::stoull(f[5]);
      r.split.dropped_test_edges = std::stoull(f[6]);
      r.positives = std::stoull(f[7]);
      r.negatives = std::stoull(f[8]);
      r.aupr = std::stod(f[9]);
      r.auroc = std::stod(f[10]);
      r.buckets = std::stoull(f[11]);
      r.threads = std::stoull(f[12]);
      r.chunk_size = std::stoull(f[13]);
      r.wall_seconds = std::stod(f[14]);
      rows.push_back(r);
    } catch (const std::logic_error& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return rows;
}

double improvement_percent(double aupr_a, double aupr_b) {
  if (aupr_b == 0.0) return aupr_a == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return (aupr_a / aupr_b - 1.0) * 100.0;
}

Comparison compare_reports(std::span<const ScoreSummary> rows) {
  if (rows.size() < 2) throw std::invalid_argument("comparison needs at least two reports");
  for (const auto& r : rows) {
    if (r.split != rows.front().split || r.positives != rows.front().positives ||
        r.negatives != rows.front().negatives) {
      throw std::invalid_argument("reports were produced on different splits; refusing to compare " +
                                  describe(rows.front().spec) + " with " + describe(r.spec));
    }
  }
  Comparison c;
  for (const auto& r : rows) {
    c.labels.push_back(describe(r.spec));
    c.aupr.push_back(r.aupr);
  }
  c.improvement.assign(rows.size(), std::vector<double>(rows.size(), 0.0));
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < rows.size(); ++b) {
      c.improvement[a][b] = improvement_percent(rows[a].aupr, rows[b].aupr);
    }
  }
  return c;
}

void print_comparison(std::ostream& out, const Comparison& c) {
  std::size_t width = 8;
  for (const auto& label : c.labels) width = std::max(width, label.size() + 2);
  auto pad = [width](const std::string& s) { return s + std::string(width - s.size(), ' '); };

  out << pad("score") << "AUPR\n";
  for (std::size_t i = 0; i < c.labels.size(); ++i) {
    out << pad(c.labels[i]) << fixed(c.aupr[i], 5) << '\n';
  }
  out << "\nimprovement of row over column (%)\n" << pad("");
  for (const auto& label : c.labels) out << pad(label);
  out << '\n';
  for (std::size_t a = 0; a < c.labels.size(); ++a) {
    out << pad(c.labels[a]);
    for (std::size_t b = 0; b < c.labels.size(); ++b) out << pad(fixed(c.improvement[a][b], 2));
    out << '\n';
  }
}

}  // namespace linkpred
