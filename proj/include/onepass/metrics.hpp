#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <unordered_map>
#include <vector>

#include "onepass/errors.hpp"
#include "onepass/graph.hpp"

namespace onepass {

namespace detail {

// Cluster-intersection table of two partitions over the same universe.
// Dense indices are assigned in ascending canonical-label order (the label is
// the minimum member id, so first occurrences arrive label-sorted when
// scanning nodes in id order). Cells are sorted by (y, x).
struct Contingency {
    struct Cell {
        NodeId x, y, count;
    };
    NodeId n = 0;
    std::vector<NodeId> x_label, x_size;
    std::vector<NodeId> y_label, y_size;
    std::vector<Cell> cells;
};

inline Contingency contingency(const Clustering& x, const Clustering& y) {
    if (x.node_count() != y.node_count())
        throw InputError("clusterings over different universes");
    const NodeId n = x.node_count();
    Contingency ct;
    ct.n = n;

    constexpr NodeId unseen = ~NodeId{0};
    std::vector<NodeId> dx(n), dy(n);
    {
        std::vector<NodeId> slot(n, unseen);
        for (NodeId i = 0; i < n; ++i) {
            const NodeId l = x.label_of(i);
            if (slot[l] == unseen) {
                slot[l] = static_cast<NodeId>(ct.x_label.size());
                ct.x_label.push_back(l);
                ct.x_size.push_back(0);
            }
            dx[i] = slot[l];
            ++ct.x_size[slot[l]];
        }
    }
    {
        std::vector<NodeId> slot(n, unseen);
        for (NodeId i = 0; i < n; ++i) {
            const NodeId l = y.label_of(i);
            if (slot[l] == unseen) {
                slot[l] = static_cast<NodeId>(ct.y_label.size());
                ct.y_label.push_back(l);
                ct.y_size.push_back(0);
            }
            dy[i] = slot[l];
            ++ct.y_size[slot[l]];
        }
    }

    const std::uint64_t kx = ct.x_label.size();
    std::vector<std::uint64_t> keys(n);
    for (NodeId i = 0; i < n; ++i)
        keys[i] = static_cast<std::uint64_t>(dy[i]) * kx + dx[i];
    std::sort(keys.begin(), keys.end());
    for (std::size_t i = 0; i < keys.size();) {
        std::size_t j = i;
        while (j < keys.size() && keys[j] == keys[i]) ++j;
        ct.cells.push_back({static_cast<NodeId>(keys[i] % kx),
                            static_cast<NodeId>(keys[i] / kx),
                            static_cast<NodeId>(j - i)});
        i = j;
    }
    return ct;
}

// Exact maximum-weight injective matching on one connected component of the
// bipartite cluster-intersection graph, by successive shortest augmenting
// paths on the min-cost-flow formulation (costs are negated weights; stop
// once the best augmenting path no longer improves the total).
inline std::uint64_t component_max_weight(const std::vector<Contingency::Cell>& cells) {
    std::unordered_map<NodeId, int> lx, ly;
    std::vector<std::vector<std::pair<int, std::int64_t>>> adj;
    for (const auto& c : cells) {
        auto [it, fresh] = lx.try_emplace(c.x, static_cast<int>(lx.size()));
        if (fresh) adj.emplace_back();
        ly.try_emplace(c.y, static_cast<int>(ly.size()));
    }
    const int L = static_cast<int>(lx.size());
    const int R = static_cast<int>(ly.size());
    for (const auto& c : cells)
        adj[lx[c.x]].push_back({ly[c.y], static_cast<std::int64_t>(c.count)});

    constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<int> match_l(L, -1), match_r(R, -1), parent(L + R, -1);
    std::vector<std::int64_t> match_w(R, 0), dist(L + R);
    std::vector<std::int64_t> parent_w(L + R, 0);
    std::vector<char> in_queue(L + R);

    for (;;) {
        std::fill(dist.begin(), dist.end(), inf);
        std::fill(parent.begin(), parent.end(), -1);
        std::fill(in_queue.begin(), in_queue.end(), 0);
        std::deque<int> queue;
        for (int u = 0; u < L; ++u)
            if (match_l[u] < 0) {
                dist[u] = 0;
                queue.push_back(u);
                in_queue[u] = 1;
            }
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            in_queue[v] = 0;
            if (v < L) {
                for (const auto& [r, w] : adj[v]) {
                    if (match_l[v] == r) continue;
                    const std::int64_t nd = dist[v] - w;
                    if (nd < dist[L + r]) {
                        dist[L + r] = nd;
                        parent[L + r] = v;
                        parent_w[L + r] = w;
                        if (!in_queue[L + r]) {
                            queue.push_back(L + r);
                            in_queue[L + r] = 1;
                        }
                    }
                }
            } else {
                const int r = v - L;
                const int u = match_r[r];
                if (u >= 0) {
                    const std::int64_t nd = dist[v] + match_w[r];
                    if (nd < dist[u]) {
                        dist[u] = nd;
                        parent[u] = v;
                        if (!in_queue[u]) {
                            queue.push_back(u);
                            in_queue[u] = 1;
                        }
                    }
                }
            }
        }

        int target = -1;
        std::int64_t best = 0;
        for (int r = 0; r < R; ++r)
            if (match_r[r] < 0 && dist[L + r] < best) {
                best = dist[L + r];
                target = r;
            }
        if (target < 0) break;

        int r = target;
        for (;;) {
            const int u = parent[L + r];
            const int prev = parent[u];
            match_l[u] = r;
            match_r[r] = u;
            match_w[r] = parent_w[L + r];
            if (prev < 0) break;
            r = prev - L;
        }
    }

    std::uint64_t total = 0;
    for (int r = 0; r < R; ++r)
        if (match_r[r] >= 0) total += static_cast<std::uint64_t>(match_w[r]);
    return total;
}

// Maximum-weight injective matching between x-clusters and y-clusters with
// weights |intersection|, solved exactly per connected component.
inline std::uint64_t max_matching_weight(const Contingency& ct) {
    const NodeId kx = static_cast<NodeId>(ct.x_label.size());
    const NodeId ky = static_cast<NodeId>(ct.y_label.size());
    DisjointSet ds(kx + ky);
    for (const auto& c : ct.cells) ds.unite(c.x, kx + c.y);

    std::unordered_map<NodeId, std::size_t> group_of;
    std::vector<std::vector<Contingency::Cell>> groups;
    for (const auto& c : ct.cells) {
        const NodeId root = ds.find(c.x);
        auto [it, fresh] = group_of.try_emplace(root, groups.size());
        if (fresh) groups.emplace_back();
        groups[it->second].push_back(c);
    }

    std::uint64_t total = 0;
    for (const auto& g : groups) {
        if (g.size() == 1)
            total += g.front().count;
        else
            total += component_max_weight(g);
    }
    return total;
}

} // namespace detail

// One row of the optimal cluster matching: a y-cluster paired with an
// x-cluster or with the empty set.
struct MatchedPair {
    NodeId y_label = 0;
    std::optional<NodeId> x_label;
    std::uint64_t cost = 0;   // |s| + |c| - 2|s n c|, or |s| against empty
    std::int64_t benefit = 0; // 2|s n c| - |c| for matched pairs, else 0
};

struct ClusterMatching {
    std::vector<MatchedPair> pairs; // one per y-cluster, ascending y label
    std::uint64_t total_cost = 0;
};

namespace detail {

// A pair has positive benefit only when the y-cluster holds a strict
// majority of the x-cluster, so each x-cluster has at most one positive
// candidate and keeping every y-cluster's best pair is already injective.
// Ties break toward the smaller x label (cells arrive x-ascending per y).
inline ClusterMatching symdiff_matching(const Contingency& ct) {
    const std::size_t ky = ct.y_label.size();
    struct Best {
        std::int64_t benefit = 0;
        NodeId x = 0, inter = 0;
    };
    std::vector<Best> best(ky);
    for (const auto& c : ct.cells) {
        const std::int64_t b =
            2 * static_cast<std::int64_t>(c.count) - ct.x_size[c.x];
        if (b > best[c.y].benefit) best[c.y] = {b, c.x, c.count};
    }

    ClusterMatching m;
    m.pairs.reserve(ky);
    for (std::size_t yd = 0; yd < ky; ++yd) {
        MatchedPair pair;
        pair.y_label = ct.y_label[yd];
        if (best[yd].benefit > 0) {
            pair.x_label = ct.x_label[best[yd].x];
            pair.cost = static_cast<std::uint64_t>(ct.y_size[yd]) +
                        ct.x_size[best[yd].x] - 2ull * best[yd].inter;
            pair.benefit = best[yd].benefit;
        } else {
            pair.cost = ct.y_size[yd];
        }
        m.total_cost += pair.cost;
        m.pairs.push_back(std::move(pair));
    }
    return m;
}

} // namespace detail

// Minimum total symmetric difference over injective mappings from y's
// clusters into x's clusters, with the empty set as a free fallback and
// unmatched x-clusters costing nothing. Asymmetric: x is the reference.
inline std::pair<std::uint64_t, ClusterMatching>
symdiff_distance_with_matching(const Clustering& x, const Clustering& y) {
    ClusterMatching m = detail::symdiff_matching(detail::contingency(x, y));
    const std::uint64_t d = m.total_cost;
    return {d, std::move(m)};
}

inline std::uint64_t symdiff_distance(const Clustering& x, const Clustering& y) {
    return detail::symdiff_matching(detail::contingency(x, y)).total_cost;
}

// Misclassified-element distance: n minus the maximum-weight injective
// matching between clusters with weights |intersection|. Symmetric.
inline std::uint64_t balcan_distance(const Clustering& x, const Clustering& y) {
    const detail::Contingency ct = detail::contingency(x, y);
    return ct.n - detail::max_matching_weight(ct);
}

// Positive benefits 2|s n c| - |c| of the pairs kept by the optimal
// symmetric-difference matching, ascending.
inline std::vector<std::uint64_t> benefits(const Clustering& x,
                                           const Clustering& y) {
    ClusterMatching m = detail::symdiff_matching(detail::contingency(x, y));
    std::vector<std::uint64_t> out;
    for (const MatchedPair& p : m.pairs)
        if (p.x_label) out.push_back(static_cast<std::uint64_t>(p.benefit));
    std::sort(out.begin(), out.end());
    return out;
}

// Both distances plus the matching from one intersection pass; x is the
// reference clustering.
struct PairMetrics {
    std::uint64_t symdiff = 0;
    std::uint64_t balcan = 0;
    ClusterMatching matching;
};

inline PairMetrics compare_clusterings(const Clustering& x,
                                       const Clustering& y) {
    const detail::Contingency ct = detail::contingency(x, y);
    PairMetrics pm;
    pm.matching = detail::symdiff_matching(ct);
    pm.symdiff = pm.matching.total_cost;
    pm.balcan = ct.n - detail::max_matching_weight(ct);
    return pm;
}

} // namespace onepass
