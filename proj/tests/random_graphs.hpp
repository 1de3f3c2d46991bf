#pragma once

// Seeded random directed graphs for property tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "linkpred/graph.hpp"

namespace linkpred::testing {

// Each ordered pair becomes an edge with probability p.
inline Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u != v && coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

// Each new vertex links to `links` earlier vertices chosen proportionally to
// their degree; with probability `reverse` the link points back at it, which
// gives both in- and out-hubs.
inline Graph preferential_attachment(std::size_t n, std::size_t links, double reverse,
                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution flip(reverse);
  std::vector<Edge> edges;
  std::vector<VertexId> endpoints;
  for (VertexId v = 1; v < n; ++v) {
    for (std::size_t i = 0; i < links; ++i) {
      VertexId target;
      if (endpoints.empty()) {
        target = 0;
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
        target = endpoints[pick(rng)];
      }
      if (target == v) continue;
      edges.push_back(flip(rng) ? Edge{target, v} : Edge{v, target});
      endpoints.push_back(target);
      endpoints.push_back(v);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace linkpred::testing
