#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "onepass/errors.hpp"
#include "onepass/graph.hpp"
#include "onepass/metrics.hpp"
#include "onepass/sampling.hpp"

namespace onepass {

// Exact arithmetic for every oracle expectation, so bound assertions never
// ride on floating-point noise.
using Rational = boost::multiprecision::cpp_rational;

enum class Metric { symdiff, balcan };

inline std::uint64_t clustering_distance(const Clustering& reference,
                                         const Clustering& sample,
                                         Metric metric) {
    return metric == Metric::symdiff ? symdiff_distance(reference, sample)
                                     : balcan_distance(reference, sample);
}

struct Outcome {
    Clustering clustering;
    Rational probability;
};

// Finite distribution over clusterings of one universe. Outcomes are
// canonical, distinct, sorted, and carry exact probabilities summing to 1
// (inputs within 1e-12 of total mass 1 are renormalized exactly).
class ExplicitDistribution {
public:
    static ExplicitDistribution from_outcomes(std::vector<Outcome> outcomes) {
        std::map<Clustering, Rational> merged;
        Rational total = 0;
        NodeId n = 0;
        bool first = true;
        for (Outcome& o : outcomes) {
            if (o.probability < 0)
                throw InputError("negative outcome probability");
            if (first) {
                n = o.clustering.node_count();
                first = false;
            } else if (o.clustering.node_count() != n) {
                throw InputError("outcomes over different universes");
            }
            if (o.probability == 0) continue;
            merged[std::move(o.clustering)] += o.probability;
            total += o.probability;
        }
        if (merged.empty())
            throw InputError("explicit distribution has no outcomes");
        Rational gap = total - 1;
        if (gap < 0) gap = -gap;
        if (gap > Rational(1, 1000000000000ULL))
            throw InputError("outcome probabilities do not sum to 1");
        ExplicitDistribution d;
        d.n_ = n;
        d.outcomes_.reserve(merged.size());
        for (auto& [clustering, probability] : merged)
            d.outcomes_.push_back({clustering, probability / total});
        return d;
    }

    NodeId node_count() const { return n_; }
    std::span<const Outcome> outcomes() const { return outcomes_; }

    BlackBoxSource to_source() const {
        std::vector<Clustering> cs;
        std::vector<double> ps;
        cs.reserve(outcomes_.size());
        ps.reserve(outcomes_.size());
        for (const Outcome& o : outcomes_) {
            cs.push_back(o.clustering);
            ps.push_back(static_cast<double>(o.probability));
        }
        return BlackBoxSource(ExplicitSource(std::move(cs), std::move(ps)));
    }

private:
    NodeId n_ = 0;
    std::vector<Outcome> outcomes_;
};

// Two-outcome distribution on a two-element universe: split with mass
// (k-1)/k, merged with mass 1/k. The worst case for single-sample quality.
inline ExplicitDistribution tightness_distribution(std::uint64_t k) {
    if (k < 2) throw InputError("tightness parameter must be at least 2");
    std::vector<Outcome> outcomes;
    outcomes.push_back(
        {Clustering::from_labels({0, 1}), Rational(k - 1, k)});
    outcomes.push_back({Clustering::from_labels({0, 0}), Rational(1, k)});
    return ExplicitDistribution::from_outcomes(std::move(outcomes));
}

inline constexpr NodeId max_partition_universe = 12;
inline constexpr std::size_t max_enumeration_edges = 20;

// Visits every partition of {0..n-1} exactly once, in ascending canonical
// label order (restricted-growth-string order).
template <class Visitor>
void for_each_partition(NodeId n, Visitor&& visit) {
    if (n > max_partition_universe)
        throw CapacityError("partition enumeration limited to 12 nodes");
    if (n == 0) {
        visit(Clustering::from_labels({}));
        return;
    }
    std::vector<NodeId> a(n, 0); // restricted growth string
    std::vector<NodeId> b(n, 1); // b[i] = 1 + max(a[0..i-1])
    for (;;) {
        visit(Clustering::from_labels(a));
        NodeId i = n - 1;
        while (i > 0 && a[i] == b[i]) --i;
        if (i == 0) break;
        ++a[i];
        const NodeId nb = std::max(b[i], static_cast<NodeId>(a[i] + 1));
        for (NodeId j = i + 1; j < n; ++j) {
            a[j] = 0;
            b[j] = nb;
        }
    }
}

inline std::vector<Clustering> enumerate_partitions(NodeId n) {
    std::vector<Clustering> out;
    for_each_partition(n, [&](Clustering c) { out.push_back(std::move(c)); });
    return out;
}

// Exact distribution of the component partition of a random edge-induced
// subgraph, by enumerating all 2^|E| edge subsets. Edge probabilities are
// taken exactly as the stored doubles, so the result sums to exactly 1.
inline ExplicitDistribution
exact_outcome_distribution(const ProbabilisticGraph& g) {
    if (g.edge_count() > max_enumeration_edges)
        throw CapacityError("subset enumeration limited to 20 edges");
    std::map<std::vector<NodeId>, Rational> acc;
    const std::span<const Edge> edges = g.edges();

    auto recurse = [&](auto&& self, std::size_t idx, DisjointSet ds,
                       Rational pr) -> void {
        if (idx == edges.size()) {
            acc[canonical_labels(ds.root_labels())] += std::move(pr);
            return;
        }
        const Edge& e = edges[idx];
        const Rational p(e.p);
        if (p < 1) self(self, idx + 1, ds, pr * (1 - p));
        if (p > 0) {
            ds.unite(e.u, e.v);
            self(self, idx + 1, std::move(ds), pr * p);
        }
    };
    recurse(recurse, 0, DisjointSet(g.node_count()), Rational(1));

    std::vector<Outcome> outcomes;
    outcomes.reserve(acc.size());
    for (auto& [labels, pr] : acc)
        outcomes.push_back({Clustering::from_labels(labels), std::move(pr)});
    return ExplicitDistribution::from_outcomes(std::move(outcomes));
}

// Exact E[D_c(Y)] for Y drawn from the distribution; c is the reference.
inline Rational expected_distance(const Clustering& c,
                                  const ExplicitDistribution& d,
                                  Metric metric) {
    if (c.node_count() != d.node_count())
        throw InputError("clustering universe does not match distribution");
    Rational total = 0;
    for (const Outcome& o : d.outcomes())
        total += o.probability * clustering_distance(c, o.clustering, metric);
    return total;
}

// Argmin of the expected distance over every partition of the universe.
// Ties break toward the canonically smallest partition.
inline std::pair<Clustering, Rational>
optimal_clustering(const ExplicitDistribution& d, Metric metric) {
    Clustering best;
    Rational best_cost;
    bool first = true;
    for_each_partition(d.node_count(), [&](Clustering c) {
        Rational cost = expected_distance(c, d, metric);
        if (first || cost < best_cost) {
            best = std::move(c);
            best_cost = std::move(cost);
            first = false;
        }
    });
    return {std::move(best), std::move(best_cost)};
}

// Exact ratio between the expected cost of using one random sample as the
// clustering and the expected cost of the optimal clustering. A point mass
// has optimal cost 0 and ratio 1: any sample is already optimal.
inline Rational expected_sample_ratio(const ExplicitDistribution& d,
                                      Metric metric) {
    const Rational opt = optimal_clustering(d, metric).second;
    if (opt == 0) return 1;
    Rational sampled = 0;
    for (const Outcome& reference : d.outcomes())
        sampled += reference.probability *
                   expected_distance(reference.clustering, d, metric);
    return sampled / opt;
}

} // namespace onepass
