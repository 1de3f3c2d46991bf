#include "linkpred/scores.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace linkpred {

namespace {

struct KindToken {
  ScoreKind kind;
  std::string_view token;
};

constexpr KindToken kTokens[] = {
    {ScoreKind::kCommonNeighbors, "cn"},   {ScoreKind::kAdamicAdar, "aa"},
    {ScoreKind::kResourceAllocation, "ra"}, {ScoreKind::kJaccard, "jaccard"},
    {ScoreKind::kDeductive, "ded"},         {ScoreKind::kInductive, "ind"},
    {ScoreKind::kInf, "inf"},               {ScoreKind::kInfLog, "inf_log"},
    {ScoreKind::kInfLogKD, "inf_log_kd"},
};

}  // namespace

void validate(const ScoreSpec& spec) {
  if (!std::isfinite(spec.k) || spec.k <= 0.0) {
    throw std::invalid_argument("k must be a positive finite number");
  }
  if (!std::isfinite(spec.log_base) || spec.log_base <= 1.0) {
    throw std::invalid_argument("log base must be a finite number greater than 1");
  }
}

ScoreKind parse_score_kind(std::string_view token) {
  for (const auto& entry : kTokens) {
    if (entry.token == token) return entry.kind;
  }
  // Common name for k = 2.
  if (token == "inf_log_2d") return ScoreKind::kInfLogKD;
  throw std::invalid_argument("unknown score '" + std::string(token) + "'");
}

std::string to_token(ScoreKind kind) {
  for (const auto& entry : kTokens) {
    if (entry.kind == kind) return std::string(entry.token);
  }
  throw std::logic_error("unhandled score kind");
}

ScoreSpec make_spec(std::string_view token, double k, double log_base) {
  ScoreSpec spec{parse_score_kind(token), k, log_base};
  validate(spec);
  return spec;
}

std::string describe(const ScoreSpec& spec) {
  std::string label = to_token(spec.kind);
  if (spec.kind == ScoreKind::kInfLogKD) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "(k=%g)", spec.k);
    label += buf;
  }
  return label;
}

bool uses_undirected_view(ScoreKind kind) {
  switch (kind) {
    case ScoreKind::kCommonNeighbors:
    case ScoreKind::kAdamicAdar:
    case ScoreKind::kResourceAllocation:
    case ScoreKind::kJaccard:
      return true;
    default:
      return false;
  }
}

bool uses_deductive_walk(ScoreKind kind) {
  return !uses_undirected_view(kind) && kind != ScoreKind::kInductive;
}

bool uses_inductive_walk(ScoreKind kind) {
  return !uses_undirected_view(kind) && kind != ScoreKind::kDeductive;
}

double log_in_base(double x, double base) {
  if (base == std::numbers::e) return std::log(x);
  return std::log(x) / std::log(base);
}

std::size_t intersection_size(std::span<const VertexId> a, std::span<const VertexId> b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::size_t union_size(std::span<const VertexId> a, std::span<const VertexId> b) {
  return a.size() + b.size() - intersection_size(a, b);
}

double adamic_adar_weight(std::size_t degree, double log_base) {
  if (degree < 2) {
    throw std::logic_error("common neighbor with degree " + std::to_string(degree) +
                           " (graph is inconsistent)");
  }
  return 1.0 / log_in_base(static_cast<double>(degree), log_base);
}

double resource_allocation_weight(std::size_t degree) {
  if (degree < 2) {
    throw std::logic_error("common neighbor with degree " + std::to_string(degree) +
                           " (graph is inconsistent)");
  }
  return 1.0 / static_cast<double>(degree);
}

double jaccard_from_counts(std::size_t common, std::size_t size_x, std::size_t size_y) {
  std::size_t united = size_x + size_y - common;
  if (united == 0) return 0.0;
  return static_cast<double>(common) / static_cast<double>(united);
}

double directed_term(std::size_t hits, std::size_t denominator, Weighting weighting,
                     double log_base) {
  if (denominator == 0) return 0.0;
  double proportion = static_cast<double>(hits) / static_cast<double>(denominator);
  if (weighting == Weighting::kProportional) return proportion;
  return proportion * log_in_base(static_cast<double>(denominator), log_base);
}

double inf_family_from_counts(std::size_t ded_hits, std::size_t ancestors,
                              std::size_t ind_hits, std::size_t descendants,
                              const ScoreSpec& spec) {
  const double base = spec.log_base;
  switch (spec.kind) {
    case ScoreKind::kDeductive:
      return directed_term(ded_hits, ancestors, Weighting::kProportional, base);
    case ScoreKind::kInductive:
      return directed_term(ind_hits, descendants, Weighting::kProportional, base);
    case ScoreKind::kInf:
      return directed_term(ded_hits, ancestors, Weighting::kProportional, base) +
             directed_term(ind_hits, descendants, Weighting::kProportional, base);
    case ScoreKind::kInfLog:
      return directed_term(ded_hits, ancestors, Weighting::kLogWeighted, base) +
             directed_term(ind_hits, descendants, Weighting::kLogWeighted, base);
    case ScoreKind::kInfLogKD:
      return spec.k * directed_term(ded_hits, ancestors, Weighting::kLogWeighted, base) +
             directed_term(ind_hits, descendants, Weighting::kLogWeighted, base);
    default:
      throw std::invalid_argument(to_token(spec.kind) + " is not an INF-family score");
  }
}

double score_cn(std::span<const VertexId> gamma_x, std::span<const VertexId> gamma_y) {
  return static_cast<double>(intersection_size(gamma_x, gamma_y));
}

double score_aa(std::span<const VertexId> common, const DegreeFn& degree_of, double log_base) {
  double sum = 0.0;
  for (VertexId z : common) sum += adamic_adar_weight(degree_of(z), log_base);
  return sum;
}

double score_ra(std::span<const VertexId> common, const DegreeFn& degree_of) {
  double sum = 0.0;
  for (VertexId z : common) sum += resource_allocation_weight(degree_of(z));
  return sum;
}

double score_jaccard(std::span<const VertexId> gamma_x, std::span<const VertexId> gamma_y) {
  return jaccard_from_counts(intersection_size(gamma_x, gamma_y), gamma_x.size(),
                             gamma_y.size());
}

double score_ded(std::span<const VertexId> a_x, std::span<const VertexId> d_y,
                 Weighting weighting, double log_base) {
  return directed_term(intersection_size(a_x, d_y), a_x.size(), weighting, log_base);
}

double score_ind(std::span<const VertexId> d_x, std::span<const VertexId> d_y,
                 Weighting weighting, double log_base) {
  return directed_term(intersection_size(d_x, d_y), d_x.size(), weighting, log_base);
}

double score_inf_family(std::span<const VertexId> a_x, std::span<const VertexId> d_x,
                        std::span<const VertexId> d_y, const ScoreSpec& spec) {
  return inf_family_from_counts(intersection_size(a_x, d_y), a_x.size(),
                                intersection_size(d_x, d_y), d_x.size(), spec);
}

}  // namespace linkpred
