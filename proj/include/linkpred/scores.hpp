#pragma once

// Local similarity scores over neighbor sets.
//
// Undirected scores (CN, AA, RA, Jaccard) take union neighborhoods Γ(x).
// Directed scores take A(x) (out-neighbors) and D(x) (in-neighbors):
//
//   DED(x→y) = |A(x) ∩ D(y)| / |A(x)|
//   IND(x→y) = |D(x) ∩ D(y)| / |D(x)|
//
// The log-weighted form multiplies each proportion by log of its
// denominator. INF = DED + IND, INF_LOG = DED_log + IND_log and
// INF_LOG_KD = k·DED_log + IND_log. A term with an empty denominator set is 0.
//
// The *_from_counts kernels are what the engine calls after accumulating
// intersection counts along 2-hop paths; the set-level functions call the same
// kernels, so both routes produce bit-identical values.

#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <string>
#include <string_view>

#include "linkpred/graph.hpp"

namespace linkpred {

enum class ScoreKind {
  kCommonNeighbors,
  kAdamicAdar,
  kResourceAllocation,
  kJaccard,
  kDeductive,
  kInductive,
  kInf,
  kInfLog,
  kInfLogKD,
};

inline constexpr ScoreKind kAllScoreKinds[] = {
    ScoreKind::kCommonNeighbors, ScoreKind::kAdamicAdar, ScoreKind::kResourceAllocation,
    ScoreKind::kJaccard,         ScoreKind::kDeductive,  ScoreKind::kInductive,
    ScoreKind::kInf,             ScoreKind::kInfLog,     ScoreKind::kInfLogKD,
};

struct ScoreSpec {
  ScoreKind kind = ScoreKind::kInfLogKD;
  // DED multiplier, only read by kInfLogKD.
  double k = 2.0;
  double log_base = std::numbers::e;

  friend bool operator==(const ScoreSpec&, const ScoreSpec&) = default;
};

enum class Weighting { kProportional, kLogWeighted };

// Throws std::invalid_argument when k <= 0, log_base <= 1 or either is not finite.
void validate(const ScoreSpec& spec);

// Tokens: cn, aa, ra, jaccard, ded, ind, inf, inf_log, inf_log_kd.
ScoreKind parse_score_kind(std::string_view token);
std::string to_token(ScoreKind kind);
ScoreSpec make_spec(std::string_view token, double k = 2.0,
                    double log_base = std::numbers::e);
// "inf_log_kd(k=2)" style label; the k suffix appears only for kInfLogKD.
std::string describe(const ScoreSpec& spec);

// CN/AA/RA/Jaccard read the union view; the INF family reads A and D.
bool uses_undirected_view(ScoreKind kind);
bool uses_deductive_walk(ScoreKind kind);
bool uses_inductive_walk(ScoreKind kind);

double log_in_base(double x, double base);

std::size_t intersection_size(std::span<const VertexId> a, std::span<const VertexId> b);
std::size_t union_size(std::span<const VertexId> a, std::span<const VertexId> b);

// 1/log|Γ(z)|. A common neighbor of two distinct vertices has degree >= 2 in
// a simple graph; anything lower means the inputs are inconsistent and
// std::logic_error is thrown.
double adamic_adar_weight(std::size_t degree, double log_base = std::numbers::e);
double resource_allocation_weight(std::size_t degree);

double jaccard_from_counts(std::size_t common, std::size_t size_x, std::size_t size_y);
double directed_term(std::size_t hits, std::size_t denominator, Weighting weighting,
                     double log_base = std::numbers::e);
// Value of any INF-family kind (DED, IND, INF, INF_LOG, INF_LOG_KD) from the
// accumulated intersection counts.
double inf_family_from_counts(std::size_t ded_hits, std::size_t ancestors,
                              std::size_t ind_hits, std::size_t descendants,
                              const ScoreSpec& spec);

using DegreeFn = std::function<std::size_t(VertexId)>;

double score_cn(std::span<const VertexId> gamma_x, std::span<const VertexId> gamma_y);
double score_aa(std::span<const VertexId> common, const DegreeFn& degree_of,
                double log_base = std::numbers::e);
double score_ra(std::span<const VertexId> common, const DegreeFn& degree_of);
double score_jaccard(std::span<const VertexId> gamma_x, std::span<const VertexId> gamma_y);
double score_ded(std::span<const VertexId> a_x, std::span<const VertexId> d_y,
                 Weighting weighting, double log_base = std::numbers::e);
double score_ind(std::span<const VertexId> d_x, std::span<const VertexId> d_y,
                 Weighting weighting, double log_base = std::numbers::e);
double score_inf_family(std::span<const VertexId> a_x, std::span<const VertexId> d_x,
                        std::span<const VertexId> d_y, const ScoreSpec& spec);

}  // namespace linkpred
