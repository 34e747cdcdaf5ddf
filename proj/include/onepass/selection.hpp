#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "onepass/errors.hpp"
#include "onepass/metrics.hpp"
#include "onepass/sampling.hpp"

namespace onepass {

// Smallest m >= 1 with (1+epsilon)^m >= 1/tau, i.e. ceil(log_{1+eps} 1/tau):
// enough candidates that the chance of drawing no good one is at most tau.
inline std::size_t candidates_needed(double epsilon, double tau) {
    if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
    if (!(tau > 0.0 && tau < 1.0)) throw InputError("tau must lie in (0,1)");
    const double target = 1.0 / tau;
    const double q = std::log(target) / std::log1p(epsilon);
    std::size_t m = q <= 1.0 ? 1 : static_cast<std::size_t>(std::ceil(q - 1e-9));
    while (std::pow(1.0 + epsilon, static_cast<double>(m)) < target) ++m;
    while (m > 1 && std::pow(1.0 + epsilon, static_cast<double>(m - 1)) >= target)
        --m;
    return m;
}

// Evaluation samples needed so that all m candidate score totals land within
// (1 +- delta) with probability at least 1-p: ceil((n/delta^2) * c * ln(m/p)).
// The multiplicative Chernoff constant c defaults to 2 and stays overridable;
// the guarantee is validated empirically rather than trusted from the bound.
inline std::size_t evaluators_needed(NodeId n, double delta, std::size_t m,
                                     double p, double chernoff_c = 2.0) {
    if (n == 0) throw InputError("empty universe");
    if (!(delta > 0.0)) throw InputError("delta must be positive");
    if (m == 0) throw InputError("candidate count must be positive");
    if (!(p > 0.0 && p < 1.0)) throw InputError("p must lie in (0,1)");
    if (!(chernoff_c > 0.0)) throw InputError("chernoff constant must be positive");
    const double value = (static_cast<double>(n) / (delta * delta)) *
                         chernoff_c * std::log(static_cast<double>(m) / p);
    if (!(value >= 1.0)) return 1;
    if (value >= static_cast<double>(std::numeric_limits<std::int64_t>::max()))
        throw InputError("evaluator count overflows");
    return static_cast<std::size_t>(
        std::ceil(value - 1e-9 * std::max(1.0, value)));
}

// epsilon: approximation slack; tau: chance that no candidate is good;
// delta: score estimation tolerance; m candidates scored by l evaluators.
struct SelectionParams {
    double epsilon = 1.0;
    double tau = 0.5;
    double delta = 0.5;
    std::size_t m = 1;
    std::size_t l = 1;
};

inline SelectionParams derive_selection_params(NodeId n, double epsilon,
                                               double tau, double delta,
                                               double p,
                                               double chernoff_c = 2.0) {
    SelectionParams params;
    params.epsilon = epsilon;
    params.tau = tau;
    params.delta = delta;
    params.m = candidates_needed(epsilon, tau);
    params.l = evaluators_needed(n, delta, params.m, p, chernoff_c);
    return params;
}

struct SelectionResult {
    Clustering chosen;
    std::size_t chosen_index = 0;
    std::vector<double> scores;        // d_i = sum_j D_{C_i}(X_j) / n
    std::vector<std::uint64_t> totals; // unnormalized integer distance sums
};

// Draws m candidates and l disjoint evaluation samples (sample indices
// [0,m) and [m,m+l) of the same master seed), scores each candidate by its
// total distance to the evaluators with the candidate as reference, and
// returns the argmin. Ties break toward the smallest candidate index.
inline SelectionResult select_candidate(const BlackBoxSource& source,
                                        const SelectionParams& params,
                                        std::uint64_t seed) {
    if (params.m == 0 || params.l == 0)
        throw InputError("candidate and evaluator counts must be positive");
    const NodeId n = source.node_count();
    if (n == 0) throw InputError("empty universe");

    const std::vector<Clustering> candidates =
        sample_many(source, seed, params.m, 0);
    const std::vector<Clustering> evaluators =
        sample_many(source, seed, params.l, params.m);

    SelectionResult result;
    result.totals.assign(params.m, 0);
    result.scores.assign(params.m, 0.0);
    std::size_t best = 0;
    for (std::size_t i = 0; i < params.m; ++i) {
        std::uint64_t total = 0;
        for (const Clustering& x : evaluators)
            total += symdiff_distance(candidates[i], x);
        result.totals[i] = total;
        result.scores[i] = static_cast<double>(total) / n;
        if (total < result.totals[best]) best = i;
    }
    result.chosen_index = best;
    result.chosen = candidates[best];
    return result;
}

} // namespace onepass
