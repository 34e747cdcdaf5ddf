#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "onepass/errors.hpp"

namespace onepass {

using NodeId = std::uint32_t;

// Undirected edge carrying an independent inclusion probability.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;
    double p = 0.0;
};

namespace detail {

inline std::uint64_t pair_key(NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

} // namespace detail

// Node universe of size n plus probabilistic edges. Immutable after
// construction; at most one edge per unordered node pair, no self-loops,
// every probability in [0,1].
class ProbabilisticGraph {
public:
    ProbabilisticGraph() = default;

    ProbabilisticGraph(NodeId n, std::vector<Edge> edges)
        : n_(n), edges_(std::move(edges)) {
        std::vector<std::uint64_t> keys;
        keys.reserve(edges_.size());
        for (const Edge& e : edges_) {
            if (e.u >= n_ || e.v >= n_)
                throw InputError("edge endpoint out of range");
            if (e.u == e.v)
                throw InputError("self-loop edge");
            if (!(e.p >= 0.0 && e.p <= 1.0))
                throw InputError("edge probability outside [0,1]");
            keys.push_back(detail::pair_key(e.u, e.v));
        }
        std::sort(keys.begin(), keys.end());
        if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
            throw InputError("duplicate edge for an unordered node pair");
    }

    NodeId node_count() const { return n_; }
    std::span<const Edge> edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

private:
    NodeId n_ = 0;
    std::vector<Edge> edges_;
};

// Relabels so that every node's label is the smallest node id in its group.
// Accepts arbitrary input labels; the result is relabeling-invariant.
inline std::vector<NodeId> canonical_labels(std::span<const NodeId> labels) {
    const NodeId n = static_cast<NodeId>(labels.size());
    std::vector<NodeId> out(n);
    bool dense = true;
    for (NodeId l : labels)
        if (l >= n) { dense = false; break; }
    if (dense) {
        constexpr NodeId unseen = ~NodeId{0};
        std::vector<NodeId> first(n, unseen);
        for (NodeId i = 0; i < n; ++i) {
            NodeId& f = first[labels[i]];
            if (f == unseen) f = i;
            out[i] = f;
        }
    } else {
        std::unordered_map<NodeId, NodeId> first;
        first.reserve(n);
        for (NodeId i = 0; i < n; ++i) {
            auto [it, fresh] = first.try_emplace(labels[i], i);
            out[i] = it->second;
        }
    }
    return out;
}

// A partition of {0..n-1} stored as one canonical label per node (the
// smallest member id names each cluster), so equal partitions compare equal.
class Clustering {
public:
    Clustering() = default;

    static Clustering from_labels(std::vector<NodeId> labels) {
        Clustering c;
        c.labels_ = canonical_labels(labels);
        for (NodeId i = 0; i < c.node_count(); ++i)
            if (c.labels_[i] == i) ++c.cluster_count_;
        return c;
    }

    NodeId node_count() const { return static_cast<NodeId>(labels_.size()); }
    NodeId cluster_count() const { return cluster_count_; }
    NodeId label_of(NodeId i) const { return labels_[i]; }
    std::span<const NodeId> labels() const { return labels_; }

    // Clusters as node sets, ordered by canonical label.
    std::vector<std::vector<NodeId>> clusters() const {
        std::vector<std::vector<NodeId>> out;
        std::unordered_map<NodeId, std::size_t> slot;
        slot.reserve(cluster_count_);
        for (NodeId i = 0; i < node_count(); ++i) {
            auto [it, fresh] = slot.try_emplace(labels_[i], out.size());
            if (fresh) out.emplace_back();
            out[it->second].push_back(i);
        }
        return out;
    }

    bool operator==(const Clustering& other) const = default;
    auto operator<=>(const Clustering& other) const {
        return std::lexicographical_compare_three_way(
            labels_.begin(), labels_.end(),
            other.labels_.begin(), other.labels_.end());
    }

private:
    std::vector<NodeId> labels_;
    NodeId cluster_count_ = 0;
};

// Returns a copy with canonical labels; idempotent by construction.
inline Clustering canonicalize(const Clustering& c) {
    return Clustering::from_labels({c.labels().begin(), c.labels().end()});
}

// Multiset of cluster sizes, ascending. Sizes always sum to n.
inline std::vector<NodeId> cluster_sizes(const Clustering& c) {
    std::unordered_map<NodeId, NodeId> count;
    count.reserve(c.cluster_count());
    for (NodeId l : c.labels()) ++count[l];
    std::vector<NodeId> sizes;
    sizes.reserve(count.size());
    for (const auto& [label, k] : count) sizes.push_back(k);
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

// Union-find with union by rank and path halving. Single-writer while
// being built; the component count tracks live roots.
class DisjointSet {
public:
    explicit DisjointSet(NodeId n) : parent_(n), rank_(n, 0), components_(n) {
        for (NodeId i = 0; i < n; ++i) parent_[i] = i;
    }

    NodeId find(NodeId x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(NodeId a, NodeId b) {
        NodeId ra = find(a), rb = find(b);
        if (ra == rb) return false;
        if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
        parent_[rb] = ra;
        if (rank_[ra] == rank_[rb]) ++rank_[ra];
        --components_;
        return true;
    }

    NodeId size() const { return static_cast<NodeId>(parent_.size()); }
    NodeId component_count() const { return components_; }

    std::vector<NodeId> root_labels() {
        std::vector<NodeId> labels(size());
        for (NodeId i = 0; i < size(); ++i) labels[i] = find(i);
        return labels;
    }

private:
    std::vector<NodeId> parent_;
    std::vector<std::uint8_t> rank_;
    NodeId components_;
};

// Connected components of a deterministic edge set over n nodes, as a
// canonical clustering. Two nodes share a label iff a path connects them.
inline Clustering components(NodeId n,
                             std::span<const std::pair<NodeId, NodeId>> edges) {
    DisjointSet ds(n);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw InputError("edge endpoint out of range");
        ds.unite(u, v);
    }
    return Clustering::from_labels(ds.root_labels());
}

} // namespace onepass
