#include "linkpred/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_map>

namespace linkpred {

namespace {

Csr build_csr(std::size_t n, const std::vector<Edge>& sorted_edges, bool by_source) {
  Csr csr;
  csr.offsets.assign(n + 1, 0);
  for (const Edge& e : sorted_edges) ++csr.offsets[(by_source ? e.source : e.target) + 1];
  for (std::size_t v = 0; v < n; ++v) csr.offsets[v + 1] += csr.offsets[v];
  csr.targets.resize(sorted_edges.size());
  std::vector<std::uint64_t> cursor(csr.offsets.begin(), csr.offsets.end() - 1);
  // Edges are sorted by (source, target), so both fills yield sorted rows.
  for (const Edge& e : sorted_edges) {
    if (by_source) {
      csr.targets[cursor[e.source]++] = e.target;
    } else {
      csr.targets[cursor[e.target]++] = e.source;
    }
  }
  return csr;
}

// Splits a line into whitespace-separated fields without allocating.
std::size_t split_fields(std::string_view line, std::string_view* fields, std::size_t max) {
  std::size_t count = 0;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (count < max) fields[count] = line.substr(start, i - start);
    ++count;
  }
  return count;
}

std::uint64_t parse_integer_id(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "invalid vertex id '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

IdFormat parse_id_format(const std::string& name) {
  if (name == "int" || name == "integer") return IdFormat::kInteger;
  if (name == "token" || name == "string") return IdFormat::kToken;
  throw std::invalid_argument("unknown edge-list format '" + name + "'");
}

std::string to_string(IdFormat format) {
  return format == IdFormat::kInteger ? "integer" : "token";
}

Graph Graph::from_edges(std::size_t vertex_count, std::vector<Edge> edges,
                        std::vector<std::string> labels, LoadStats* stats) {
  if (vertex_count > std::size_t{0xFFFFFFFFu}) {
    throw std::length_error("vertex count exceeds 32-bit id space");
  }
  if (!labels.empty() && labels.size() != vertex_count) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  for (const Edge& e : edges) {
    if (e.source >= vertex_count || e.target >= vertex_count) {
      throw std::out_of_range("edge endpoint outside vertex range");
    }
  }

  std::size_t loops = 0;
  auto loop_end = std::remove_if(edges.begin(), edges.end(), [&](const Edge& e) {
    if (e.source != e.target) return false;
    ++loops;
    return true;
  });
  edges.erase(loop_end, edges.end());
  std::sort(edges.begin(), edges.end());
  auto unique_end = std::unique(edges.begin(), edges.end());
  std::size_t duplicates = static_cast<std::size_t>(edges.end() - unique_end);
  edges.erase(unique_end, edges.end());

  if (stats != nullptr) {
    stats->self_loops += loops;
    stats->duplicate_edges += duplicates;
  }

  Graph g;
  g.vertex_count_ = vertex_count;
  g.out_ = build_csr(vertex_count, edges, true);
  g.in_ = build_csr(vertex_count, edges, false);
  if (labels.empty()) {
    labels.reserve(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v) labels.push_back(std::to_string(v));
  }
  g.labels_ = std::move(labels);
  return g;
}

void Graph::check_vertex(VertexId x) const {
  if (x >= vertex_count_) {
    throw std::out_of_range("vertex " + std::to_string(x) + " outside [0, " +
                            std::to_string(vertex_count_) + ")");
  }
}

std::span<const VertexId> Graph::neighbors_out(VertexId x) const {
  check_vertex(x);
  return out_.row(x);
}

std::span<const VertexId> Graph::neighbors_in(VertexId x) const {
  check_vertex(x);
  return in_.row(x);
}

std::span<const VertexId> Graph::neighbors_undirected(VertexId x) const {
  check_vertex(x);
  return undirected().row(x);
}

const Csr& Graph::undirected() const {
  std::call_once(undirected_->once, [this] {
    Csr& u = undirected_->csr;
    u.offsets.assign(vertex_count_ + 1, 0);
    u.targets.reserve(out_.targets.size() + in_.targets.size());
    for (VertexId v = 0; v < vertex_count_; ++v) {
      auto a = out_.row(v);
      auto d = in_.row(v);
      std::set_union(a.begin(), a.end(), d.begin(), d.end(), std::back_inserter(u.targets));
      u.offsets[v + 1] = u.targets.size();
    }
    u.targets.shrink_to_fit();
  });
  return undirected_->csr;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto row = neighbors_out(u);
  return std::binary_search(row.begin(), row.end(), v);
}

const std::string& Graph::label(VertexId x) const {
  check_vertex(x);
  return labels_[x];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count_; ++u) {
    for (VertexId v : out_.row(u)) result.push_back({u, v});
  }
  return result;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.vertex_count_ == b.vertex_count_ && a.out_.offsets == b.out_.offsets &&
         a.out_.targets == b.out_.targets && a.in_.offsets == b.in_.offsets &&
         a.in_.targets == b.in_.targets && a.labels_ == b.labels_;
}

LoadedGraph load_edge_list(std::istream& in, IdFormat format) {
  LoadStats stats;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::unordered_map<std::string, VertexId> token_ids;
  std::vector<std::string> token_labels;

  auto token_id = [&](std::string_view token) -> std::uint64_t {
    auto [it, inserted] =
        token_ids.try_emplace(std::string(token), static_cast<VertexId>(token_labels.size()));
    if (inserted) token_labels.emplace_back(token);
    return it->second;
  };

  std::string line;
  std::string_view fields[2];
  while (std::getline(in, line)) {
    ++stats.lines;
    std::string_view view(line);
    std::size_t first = view.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    if (view[first] == '#') {
      ++stats.comment_lines;
      continue;
    }
    std::size_t n = split_fields(view, fields, 2);
    if (n != 2) {
      throw ParseError(stats.lines, "expected 2 fields, found " + std::to_string(n));
    }
    if (format == IdFormat::kInteger) {
      raw.emplace_back(parse_integer_id(fields[0], stats.lines),
                       parse_integer_id(fields[1], stats.lines));
    } else {
      std::uint64_t s = token_id(fields[0]);
      raw.emplace_back(s, token_id(fields[1]));
    }
  }
  if (in.bad()) throw std::runtime_error("read error while loading edge list");
  if (raw.empty()) throw ParseError(stats.lines, "edge list contains no edges");
  stats.raw_edges = raw.size();

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  std::vector<std::string> labels;
  std::size_t n = 0;

  if (format == IdFormat::kInteger) {
    std::vector<std::uint64_t> ids;
    ids.reserve(raw.size() * 2);
    for (auto [s, t] : raw) {
      ids.push_back(s);
      ids.push_back(t);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    auto dense = [&ids](std::uint64_t id) {
      return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
    };
    for (auto [s, t] : raw) edges.push_back({dense(s), dense(t)});
    n = ids.size();
    labels.reserve(n);
    for (std::uint64_t id : ids) labels.push_back(std::to_string(id));
  } else {
    for (auto [s, t] : raw) {
      edges.push_back({static_cast<VertexId>(s), static_cast<VertexId>(t)});
    }
    n = token_labels.size();
    labels = std::move(token_labels);
  }
  raw.clear();
  raw.shrink_to_fit();

  LoadedGraph result;
  result.graph = Graph::from_edges(n, std::move(edges), std::move(labels), &stats);
  result.stats = stats;
  return result;
}

LoadedGraph load_edge_list_file(const std::string& path, IdFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return load_edge_list(in, format);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : g.neighbors_out(u)) out << g.label(u) << ' ' << g.label(v) << '\n';
  }
}

LabelIndex::LabelIndex(const Graph& g) {
  sorted_.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) sorted_.emplace_back(g.label(v), v);
  std::sort(sorted_.begin(), sorted_.end());
}

VertexId LabelIndex::at(const std::string& label) const {
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), label,
                             [](const auto& entry, const std::string& key) { return entry.first < key; });
  if (it == sorted_.end() || it->first != label) {
    throw std::out_of_range("unknown vertex label '" + label + "'");
  }
  return it->second;
}

}  // namespace linkpred
