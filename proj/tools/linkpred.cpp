// linkpred: exhaustive link prediction and precision-recall evaluation for
// directed graphs.
//
//   linkpred run --graph web.txt --score cn,aa,ra,inf_log_kd --out results/
//   linkpred compare results/summary.csv
//   linkpred stats --graph web.txt

#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linkpred/engine.hpp"
#include "linkpred/eval.hpp"
#include "linkpred/experiment.hpp"
#include "linkpred/graph.hpp"

namespace {

int run_stats(const std::string& graph_path, const std::string& format, double fraction,
              std::uint64_t seed) {
  using namespace linkpred;
  LoadedGraph loaded = load_edge_list_file(graph_path, parse_id_format(format));
  const Graph& g = loaded.graph;
  std::cout << "vertices            " << g.vertex_count() << '\n'
            << "edges               " << g.edge_count() << '\n'
            << "raw edge lines      " << loaded.stats.raw_edges << '\n'
            << "duplicates dropped  " << loaded.stats.duplicate_edges << '\n'
            << "self-loops dropped  " << loaded.stats.self_loops << '\n';
  EdgeSplit split = split_edges(g, fraction, seed);
  CandidateUniverse universe = universe_stats(split.train_graph);
  const std::uint64_t positives = split.test_edges.size();
  std::cout << "test edges          " << positives << '\n'
            << "dropped test edges  " << split.dropped_test_edges.size() << '\n'
            << "eligible vertices   " << universe.eligible_vertices.size() << '\n'
            << "candidate universe  " << universe.universe_size << '\n'
            << "negatives           " << universe.universe_size - positives << '\n';
  if (positives > 0) {
    std::cout << "class imbalance     1:" << (universe.universe_size - positives) / positives << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive similarity-based link prediction with exact PR/ROC evaluation"};
  app.require_subcommand(1);

  linkpred::RunConfig config;
  std::string format = "integer";
  std::string scores = "inf_log_kd";
  std::string split_file;

  auto* run = app.add_subcommand("run", "split, score every missing edge, and evaluate");
  run->add_option("--graph", config.graph_path, "edge-list file")
      ->required()
      ->envname("LINKPRED_GRAPH");
  run->add_option("--format", format, "vertex id format: integer or token")
      ->envname("LINKPRED_FORMAT")
      ->capture_default_str();
  run->add_option("--score", scores,
                  "comma-separated scores: cn, aa, ra, jaccard, ded, ind, inf, inf_log, inf_log_kd")
      ->envname("LINKPRED_SCORE")
      ->capture_default_str();
  run->add_option("--k", config.k, "DED multiplier for inf_log_kd")
      ->envname("LINKPRED_K")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  run->add_option("--log-base", config.log_base, "logarithm base (default e)")
      ->envname("LINKPRED_LOG_BASE");
  run->add_option("--split-fraction", config.split_fraction, "held-out edge fraction")
      ->envname("LINKPRED_SPLIT_FRACTION")
      ->capture_default_str();
  run->add_option("--seed", config.seed, "split seed")
      ->envname("LINKPRED_SEED")
      ->capture_default_str();
  run->add_option("--split-file", split_file, "reuse the split stored in this file")
      ->envname("LINKPRED_SPLIT_FILE")
      ->check(CLI::ExistingFile);
  run->add_option("--threads", config.threads, "worker threads (0 = all hardware threads)")
      ->envname("LINKPRED_THREADS")
      ->capture_default_str();
  run->add_option("--chunk-size", config.chunk_size, "source vertices per scheduled chunk")
      ->envname("LINKPRED_CHUNK_SIZE")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  run->add_option("--max-buckets", config.max_buckets,
                  "fail if a score produces more distinct values (0 = no cap)")
      ->envname("LINKPRED_MAX_BUCKETS")
      ->capture_default_str();
  run->add_option("--out", config.out_dir, "output directory")
      ->envname("LINKPRED_OUT")
      ->capture_default_str();

  std::vector<std::string> summary_files;
  auto* compare = app.add_subcommand("compare", "AUPR comparison table across summary files");
  compare->add_option("summaries", summary_files, "summary.csv files")->required();

  std::string stats_graph;
  std::string stats_format = "integer";
  double stats_fraction = linkpred::kDefaultSplitFraction;
  std::uint64_t stats_seed = 1;
  auto* stats = app.add_subcommand("stats", "graph size and candidate-universe accounting");
  stats->add_option("--graph", stats_graph, "edge-list file")->required();
  stats->add_option("--format", stats_format, "vertex id format")->capture_default_str();
  stats->add_option("--split-fraction", stats_fraction, "held-out edge fraction")
      ->capture_default_str();
  stats->add_option("--seed", stats_seed, "split seed")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      config.format = linkpred::parse_id_format(format);
      config.scores.clear();
      std::string token;
      for (char c : scores + ",") {
        if (c == ',') {
          if (!token.empty()) config.scores.push_back(token);
          token.clear();
        } else if (c != ' ') {
          token += c;
        }
      }
      if (!split_file.empty()) config.split_file = split_file;
      auto result = linkpred::run_experiment(config, &std::cerr);
      if (result.summaries.size() >= 2) {
        linkpred::print_comparison(std::cout, linkpred::compare_reports(result.summaries));
      } else {
        std::cout << linkpred::describe(result.summaries.front().spec) << " AUPR "
                  << result.summaries.front().aupr << '\n';
      }
    } else if (*compare) {
      std::vector<linkpred::ScoreSummary> rows;
      for (const auto& path : summary_files) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open '" + path + "'");
        auto more = linkpred::read_summary_csv(in);
        rows.insert(rows.end(), more.begin(), more.end());
      }
      linkpred::print_comparison(std::cout, linkpred::compare_reports(rows));
    } else if (*stats) {
      return run_stats(stats_graph, stats_format, stats_fraction, stats_seed);
    }
  } catch (const std::exception& e) {
    std::cerr << "linkpred: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
