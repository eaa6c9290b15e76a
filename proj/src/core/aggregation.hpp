#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace dfl {

// flat model parameters in R^d, the unit exchanged and aggregated
using ParamVector = std::vector<double>;

enum class AggregatorKind { FedAvg, Krum, GeoMed };

struct AggregatorConfig {
    AggregatorKind kind = AggregatorKind::FedAvg;
    std::uint32_t f_assumed = 0;          // tolerated Byzantine updates (Krum)
    std::vector<double> geomed_weights;   // empty = uniform
    double geomed_tol = 1e-10;
    std::uint32_t geomed_max_iter = 1000;
    bool include_self = true;
};

// coordinate-wise arithmetic mean
ParamVector fedavg(std::span<const ParamVector> updates);

// score(j) = sum of squared distances from update j to its m-f-2 nearest
// other updates; requires m >= f+3
std::vector<double> krum_scores(std::span<const ParamVector> updates, std::uint32_t f_assumed);

// index of the minimal score, ties broken by lowest index
std::size_t krum_select(std::span<const ParamVector> updates, std::uint32_t f_assumed);

ParamVector krum(std::span<const ParamVector> updates, std::uint32_t f_assumed);

// Weighted geometric median by Weiszfeld iteration: start at the weighted
// mean, iterate y <- sum(a_j w_j / d_j) / sum(a_j / d_j) with d_j floored at
// 1e-12, stop when the step norm drops below tol or after max_iter rounds.
ParamVector geomed(std::span<const ParamVector> updates, std::span<const double> weights,
                   double tol = 1e-10, std::uint32_t max_iter = 1000);

// objective sum_j a_j * ||w - w_j||; empty weights = uniform 1
double geomed_objective(const ParamVector& point, std::span<const ParamVector> updates,
                        std::span<const double> weights);

// Builds the input multiset (received plus own when include_self) and
// dispatches to the configured kernel.
ParamVector aggregate(const ParamVector& own, std::span<const ParamVector> received,
                      const AggregatorConfig& cfg);

double squared_distance(const ParamVector& a, const ParamVector& b);

}  // namespace dfl
