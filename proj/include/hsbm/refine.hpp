#pragma once

#include <cstdint>
#include <vector>

#include "hsbm/hypergraph.hpp"
#include "hsbm/model.hpp"

namespace hsbm {

// Evidence for one node's relabeling: per companion assignment m, how many
// edges of the refinement graph contain the node with companions labeled m
// (present), and the effective number of candidate slots of that shape
// (totals, mean-substituted).
struct IncidentCounts {
  std::int32_t node = 0;
  std::vector<std::int64_t> present;  // indexed by companion_table rank
  std::vector<double> totals;
};

// Classifies the companions of every edge containing v under `labels`;
// the result is indexed by the order-(d-1) assignment table for k communities.
std::vector<std::int64_t> count_incident(const Hypergraph& g2,
                                         const std::vector<int>& labels,
                                         std::int32_t v, int k);

// Effective slot totals: (1 - gamma_n/log n) times the exact number of
// (d-1)-subsets of the other nodes realizing each assignment, from label
// multiplicities with v excluded from its own class.
std::vector<double> effective_totals(const std::vector<int>& labels,
                                     std::int32_t v, double gamma_n,
                                     const ModelParams& params);

// Posterior-maximizing community for one node:
// argmax_i log p_i + sum_m [ x_m log q_{m(+)i} + (totals_m - x_m) log(1 - q_{m(+)i}) ]
// with log 0 = -inf disqualifying candidates; ties break to the smallest
// index. Throws when every candidate is disqualified.
int map_refine(const IncidentCounts& counts, const ModelParams& params);
int map_refine(const IncidentCounts& counts, const ModelParams& params,
               const ModelTables& tables);

// One refinement pass: every node is relabeled independently against the
// fixed initial labels (no in-place updates). Safe to parallelize per node.
std::vector<int> refine_all(const Hypergraph& g2, const std::vector<int>& initial,
                            const ModelParams& params, double gamma_n);

namespace serial {
// Reference single-threaded pass; same arithmetic as refine_all.
std::vector<int> refine_all(const Hypergraph& g2, const std::vector<int>& initial,
                            const ModelParams& params, double gamma_n);
}  // namespace serial

}  // namespace hsbm
