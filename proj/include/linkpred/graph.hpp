#pragma once

// Immutable directed graph in CSR form with out-, in-, and lazily built
// undirected (union) adjacency.
//
// Vertex ids are dense (0..n-1). The external id of each vertex is kept as a
// label so that files written back out use the ids the input used.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace linkpred {

using VertexId = std::uint32_t;

struct Edge {
  VertexId source = 0;
  VertexId target = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Compact adjacency: neighbors of v are targets[offsets[v] .. offsets[v+1]).
struct Csr {
  std::vector<std::uint64_t> offsets;
  std::vector<VertexId> targets;

  std::span<const VertexId> row(VertexId v) const {
    return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
  }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class IdFormat {
  // Non-negative integer ids. Dense ids follow ascending numeric order.
  kInteger,
  // Arbitrary whitespace-free tokens. Dense ids follow first appearance.
  kToken,
};

IdFormat parse_id_format(const std::string& name);
std::string to_string(IdFormat format);

struct LoadStats {
  std::size_t lines = 0;
  std::size_t comment_lines = 0;
  std::size_t raw_edges = 0;
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
};

class Graph {
 public:
  Graph() = default;

  // Builds a simple graph over vertices 0..vertex_count-1. Duplicates and
  // self-loops are dropped; their counts are added to stats when given.
  // Labels default to the decimal dense id.
  static Graph from_edges(std::size_t vertex_count, std::vector<Edge> edges,
                          std::vector<std::string> labels = {},
                          LoadStats* stats = nullptr);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return out_.targets.size(); }

  // A(x): vertices x links to.
  std::span<const VertexId> neighbors_out(VertexId x) const;
  // D(x): vertices linking to x.
  std::span<const VertexId> neighbors_in(VertexId x) const;
  // A(x) ∪ D(x), sorted, duplicate-free.
  std::span<const VertexId> neighbors_undirected(VertexId x) const;

  std::size_t out_degree(VertexId x) const { return neighbors_out(x).size(); }
  std::size_t in_degree(VertexId x) const { return neighbors_in(x).size(); }

  bool has_edge(VertexId u, VertexId v) const;

  const std::string& label(VertexId x) const;
  const std::vector<std::string>& labels() const { return labels_; }

  // All edges sorted by (source, target).
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_vertex(VertexId x) const;
  const Csr& undirected() const;

  std::size_t vertex_count_ = 0;
  Csr out_;
  Csr in_;
  std::vector<std::string> labels_;

  // Built on first use. Copies share the cache; the graph never changes.
  struct UndirectedCache {
    std::once_flag once;
    Csr csr;
  };
  std::shared_ptr<UndirectedCache> undirected_ =
      std::make_shared<UndirectedCache>();
};

struct LoadedGraph {
  Graph graph;
  LoadStats stats;
};

// Reads "source target" lines; '#' starts a comment line. Vertices are
// registered from every edge line, including dropped self-loops.
LoadedGraph load_edge_list(std::istream& in, IdFormat format = IdFormat::kInteger);
LoadedGraph load_edge_list_file(const std::string& path,
                                IdFormat format = IdFormat::kInteger);

// One "u v" line per edge, sorted by dense (u, v), written with labels.
void write_edge_list(std::ostream& out, const Graph& g);

// Maps an external label back to its dense id; throws std::out_of_range when
// the label is unknown.
class LabelIndex {
 public:
  explicit LabelIndex(const Graph& g);
  VertexId at(const std::string& label) const;

 private:
  std::vector<std::pair<std::string, VertexId>> sorted_;
};

}  // namespace linkpred
