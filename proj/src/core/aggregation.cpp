#include "core/aggregation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "core/error.hpp"

namespace dfl {

namespace {

constexpr double kWeiszfeldFloor = 1e-12;

void check_same_length(std::span<const ParamVector> updates) {
    if (updates.empty()) throw Error(ErrorCode::EmptyInput, "no updates to aggregate");
    const std::size_t d = updates.front().size();
    for (const auto& u : updates) {
        if (u.size() != d) {
            throw Error(ErrorCode::DimensionMismatch,
                        "update length " + std::to_string(u.size()) + " != " + std::to_string(d));
        }
    }
}

}  // namespace

double squared_distance(const ParamVector& a, const ParamVector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        s += diff * diff;
    }
    return s;
}

ParamVector fedavg(std::span<const ParamVector> updates) {
    check_same_length(updates);
    const std::size_t d = updates.front().size();
    ParamVector mean(d, 0.0);
    for (const auto& u : updates) {
        for (std::size_t i = 0; i < d; ++i) mean[i] += u[i];
    }
    const double inv = 1.0 / static_cast<double>(updates.size());
    for (double& x : mean) x *= inv;
    return mean;
}

std::vector<double> krum_scores(std::span<const ParamVector> updates, std::uint32_t f_assumed) {
    check_same_length(updates);
    const std::size_t m = updates.size();
    if (m < static_cast<std::size_t>(f_assumed) + 3) {
        throw Error(ErrorCode::TooFewUpdates,
                    "krum needs at least f+3 = " + std::to_string(f_assumed + 3) +
                        " updates, got " + std::to_string(m));
    }
    const std::size_t subset = m - f_assumed - 2;

    std::vector<double> scores(m, 0.0);
    std::vector<double> dists;
    dists.reserve(m - 1);
    for (std::size_t j = 0; j < m; ++j) {
        dists.clear();
        for (std::size_t l = 0; l < m; ++l) {
            if (l != j) dists.push_back(squared_distance(updates[j], updates[l]));
        }
        std::nth_element(dists.begin(), dists.begin() + (subset - 1), dists.end());
        scores[j] = std::accumulate(dists.begin(), dists.begin() + subset, 0.0);
    }
    return scores;
}

std::size_t krum_select(std::span<const ParamVector> updates, std::uint32_t f_assumed) {
    const std::vector<double> scores = krum_scores(updates, f_assumed);
    return static_cast<std::size_t>(
        std::min_element(scores.begin(), scores.end()) - scores.begin());
}

ParamVector krum(std::span<const ParamVector> updates, std::uint32_t f_assumed) {
    return updates[krum_select(updates, f_assumed)];
}

double geomed_objective(const ParamVector& point, std::span<const ParamVector> updates,
                        std::span<const double> weights) {
    double obj = 0.0;
    for (std::size_t j = 0; j < updates.size(); ++j) {
        const double w = weights.empty() ? 1.0 : weights[j];
        obj += w * std::sqrt(squared_distance(point, updates[j]));
    }
    return obj;
}

ParamVector geomed(std::span<const ParamVector> updates, std::span<const double> weights,
                   double tol, std::uint32_t max_iter) {
    check_same_length(updates);
    const std::size_t m = updates.size();
    const std::size_t d = updates.front().size();
    if (!weights.empty() && weights.size() != m) {
        throw Error(ErrorCode::WeightMismatch,
                    std::to_string(weights.size()) + " weights for " + std::to_string(m) +
                        " updates");
    }
    if (!(tol > 0.0) || max_iter < 1) {
        throw Error(ErrorCode::InvalidParams, "geomed needs tol > 0 and max_iter >= 1");
    }
    for (double w : weights) {
        if (!(w > 0.0)) throw Error(ErrorCode::WeightMismatch, "weights must be positive");
    }

    auto weight_of = [&](std::size_t j) { return weights.empty() ? 1.0 : weights[j]; };

    // weighted mean as the starting point
    ParamVector y(d, 0.0);
    double wsum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const double w = weight_of(j);
        wsum += w;
        for (std::size_t i = 0; i < d; ++i) y[i] += w * updates[j][i];
    }
    for (double& x : y) x /= wsum;

    ParamVector next(d);
    for (std::uint32_t iter = 0; iter < max_iter; ++iter) {
        std::fill(next.begin(), next.end(), 0.0);
        double denom = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double dist = std::max(std::sqrt(squared_distance(y, updates[j])), kWeiszfeldFloor);
            const double c = weight_of(j) / dist;
            denom += c;
            for (std::size_t i = 0; i < d; ++i) next[i] += c * updates[j][i];
        }
        double step_sq = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            next[i] /= denom;
            const double diff = next[i] - y[i];
            step_sq += diff * diff;
        }
        y.swap(next);
        if (std::sqrt(step_sq) < tol) break;
    }
    return y;
}

ParamVector aggregate(const ParamVector& own, std::span<const ParamVector> received,
                      const AggregatorConfig& cfg) {
    std::vector<ParamVector> inputs;
    inputs.reserve(received.size() + 1);
    inputs.assign(received.begin(), received.end());
    if (cfg.include_self) inputs.push_back(own);

    switch (cfg.kind) {
        case AggregatorKind::FedAvg:
            return fedavg(inputs);
        case AggregatorKind::Krum:
            return krum(inputs, cfg.f_assumed);
        case AggregatorKind::GeoMed:
            return geomed(inputs, cfg.geomed_weights, cfg.geomed_tol, cfg.geomed_max_iter);
    }
    throw Error(ErrorCode::InvalidParams, "unknown aggregator kind");
}

}  // namespace dfl
