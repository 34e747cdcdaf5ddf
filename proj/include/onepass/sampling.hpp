#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "onepass/errors.hpp"
#include "onepass/graph.hpp"
#include "onepass/rng.hpp"

namespace onepass {

// (seed, sample_index) fully determines a sampled clustering given a fixed
// edge ordering; distinct sample indices give independent samples.
struct SampleSeed {
    std::uint64_t seed = 0;
    std::uint64_t sample_index = 0;
};

// Forward-only pass over a graph's edges with a query counter. After a full
// pass the counter equals the edge count: each edge is queried exactly once.
class EdgeStream {
public:
    explicit EdgeStream(std::span<const Edge> edges) : edges_(edges) {}

    const Edge* next() {
        if (pos_ == edges_.size()) return nullptr;
        ++queries_;
        return &edges_[pos_++];
    }

    std::uint64_t query_count() const { return queries_; }
    std::size_t edge_index() const { return pos_ == 0 ? 0 : pos_ - 1; }

private:
    std::span<const Edge> edges_;
    std::size_t pos_ = 0;
    std::uint64_t queries_ = 0;
};

// One pass: draw one uniform variate per edge, union the endpoints when the
// edge comes up, and return the component partition. Memory is the two
// disjoint-set arrays; nothing else scales with the edge count.
inline Clustering sample_clustering(EdgeStream& stream, NodeId n,
                                    SampleSeed s) {
    DisjointSet ds(n);
    std::uint64_t edge_index = 0;
    while (const Edge* e = stream.next()) {
        if (counter_uniform01(s.seed, s.sample_index, edge_index) < e->p)
            ds.unite(e->u, e->v);
        ++edge_index;
    }
    return Clustering::from_labels(ds.root_labels());
}

inline Clustering sample_clustering(const ProbabilisticGraph& g, SampleSeed s) {
    EdgeStream stream(g.edges());
    return sample_clustering(stream, g.node_count(), s);
}

// Explicit finite distribution over clusterings; sampling draws an outcome
// with its listed probability via one variate against the cumulative table.
class ExplicitSource {
public:
    ExplicitSource(std::vector<Clustering> outcomes,
                   std::vector<double> probabilities)
        : outcomes_(std::move(outcomes)) {
        if (outcomes_.empty())
            throw InputError("explicit distribution has no outcomes");
        if (probabilities.size() != outcomes_.size())
            throw InputError("outcome/probability count mismatch");
        const NodeId n = outcomes_.front().node_count();
        double total = 0.0;
        cumulative_.reserve(probabilities.size());
        for (std::size_t i = 0; i < probabilities.size(); ++i) {
            if (outcomes_[i].node_count() != n)
                throw InputError("outcomes over different universes");
            const double p = probabilities[i];
            if (!(p >= 0.0))
                throw InputError("negative outcome probability");
            total += p;
            cumulative_.push_back(total);
        }
        if (std::fabs(total - 1.0) > 1e-12)
            throw InputError("outcome probabilities do not sum to 1");
        cumulative_.back() = 1.0;
    }

    NodeId node_count() const { return outcomes_.front().node_count(); }
    std::span<const Clustering> outcomes() const { return outcomes_; }

    const Clustering& sample(SampleSeed s) const {
        const double u = counter_uniform01(s.seed, s.sample_index, 0);
        std::size_t lo = 0, hi = cumulative_.size() - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (u < cumulative_[mid]) hi = mid; else lo = mid + 1;
        }
        return outcomes_[lo];
    }

private:
    std::vector<Clustering> outcomes_;
    std::vector<double> cumulative_;
};

// Anything that yields independent random clusterings: a random edge-induced
// subgraph over a probabilistic graph, or an explicit finite distribution.
class BlackBoxSource {
public:
    explicit BlackBoxSource(ProbabilisticGraph g) : impl_(std::move(g)) {}
    explicit BlackBoxSource(ExplicitSource d) : impl_(std::move(d)) {}

    NodeId node_count() const {
        if (const auto* g = std::get_if<ProbabilisticGraph>(&impl_))
            return g->node_count();
        return std::get<ExplicitSource>(impl_).node_count();
    }

    Clustering sample(SampleSeed s) const {
        if (const auto* g = std::get_if<ProbabilisticGraph>(&impl_))
            return sample_clustering(*g, s);
        return std::get<ExplicitSource>(impl_).sample(s);
    }

    bool is_graph() const {
        return std::holds_alternative<ProbabilisticGraph>(impl_);
    }
    const ProbabilisticGraph& graph() const {
        return std::get<ProbabilisticGraph>(impl_);
    }

private:
    std::variant<ProbabilisticGraph, ExplicitSource> impl_;
};

// count independent samples using sample indices first_index .. +count-1;
// order-stable for a fixed seed.
inline std::vector<Clustering> sample_many(const BlackBoxSource& source,
                                           std::uint64_t seed,
                                           std::size_t count,
                                           std::uint64_t first_index = 0) {
    std::vector<Clustering> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(source.sample({seed, first_index + i}));
    return out;
}

} // namespace onepass
