#pragma once

#include <cstdint>
#include <vector>

#include "core/aggregation.hpp"
#include "core/graph.hpp"
#include "core/rng.hpp"

namespace dfl {

enum class PlacementStrategy { RandomPlacement, SmallWorldRewired, ScaleFreeTopDegree };

const char* placement_strategy_name(PlacementStrategy s);

// The set M of Byzantine node ids plus the placement that produced it.
struct AdversaryPlan {
    std::vector<std::uint32_t> byzantine;  // sorted ascending, deduplicated
    PlacementStrategy strategy = PlacementStrategy::RandomPlacement;
    double parameter = 0.0;  // proportion (random) or b (top-degree); unused otherwise
    std::uint64_t seed = 0;

    bool contains(std::uint32_t id) const;
};

struct AttackConfig {
    double mean = 0.0;
    double stddev = 1.0;  // must be > 0
};

// exactly round(proportion*n) distinct ids drawn uniformly without replacement
AdversaryPlan select_random(std::uint32_t n, double proportion, std::uint64_t seed);

// the new endpoint of every rewired edge, deduplicated
AdversaryPlan select_smallworld_strategic(const RewireLog& log, std::uint32_t n);

// the first floor(b*n) entries of the degree-descending (id-ascending ties) order
AdversaryPlan select_scalefree_strategic(const Graph& g, double b);

// d independent draws from Normal(mean, stddev^2); one fresh draw per call
ParamVector gaussian_attack(std::size_t d, const AttackConfig& cfg, Rng& stream);

}  // namespace dfl
