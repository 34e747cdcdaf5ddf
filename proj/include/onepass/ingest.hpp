#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "onepass/errors.hpp"
#include "onepass/graph.hpp"

namespace onepass {

// Directed trust ratings over named nodes. Names map to dense ids in
// first-appearance order; the table is carried along for output.
struct RawRating {
    NodeId source = 0;
    NodeId target = 0;
    double rating = 0.0;
};

class RawTrustNetwork {
public:
    NodeId intern(const std::string& name) {
        auto [it, fresh] = ids_.try_emplace(name, static_cast<NodeId>(names_.size()));
        if (fresh) names_.push_back(name);
        return it->second;
    }

    void add_rating(const std::string& source, const std::string& target,
                    double rating) {
        if (!std::isfinite(rating)) throw InputError("rating is not finite");
        ratings_.push_back({intern(source), intern(target), rating});
    }

    const std::vector<std::string>& names() const { return names_; }
    const std::vector<RawRating>& ratings() const { return ratings_; }
    NodeId node_count() const { return static_cast<NodeId>(names_.size()); }

private:
    std::vector<std::string> names_;
    std::vector<RawRating> ratings_;
    std::unordered_map<std::string, NodeId> ids_;
};

struct WeightedEdge {
    NodeId u = 0;
    NodeId v = 0;
    double w = 0.0;
};

// Undirected weighted graph: one edge per unordered pair, u < v, sorted.
struct WeightedGraph {
    NodeId n = 0;
    std::vector<WeightedEdge> edges;
};

struct SymmetrizeResult {
    WeightedGraph graph;
    std::uint64_t dropped_self_loops = 0;
    std::uint64_t dropped_nonpositive = 0;
    std::uint64_t duplicate_ratings = 0;
};

// Directed ratings to undirected weights: duplicate same-direction ratings
// average first, then a mutual pair averages into one edge and a lone edge
// keeps its value. Self-loops and nonpositive ratings drop with a count.
inline SymmetrizeResult symmetrize(const RawTrustNetwork& net) {
    SymmetrizeResult result;
    result.graph.n = net.node_count();

    struct Directed {
        NodeId a, b;
        double rating;
    };
    std::vector<Directed> kept;
    kept.reserve(net.ratings().size());
    for (const RawRating& r : net.ratings()) {
        if (r.source == r.target) {
            ++result.dropped_self_loops;
            continue;
        }
        if (!(r.rating > 0.0)) {
            ++result.dropped_nonpositive;
            continue;
        }
        kept.push_back({r.source, r.target, r.rating});
    }
    std::sort(kept.begin(), kept.end(), [](const Directed& l, const Directed& r) {
        return std::pair(l.a, l.b) < std::pair(r.a, r.b);
    });

    // direction averages, then unordered-pair averages
    struct PairValue {
        NodeId u, v;
        double w;
    };
    std::vector<PairValue> directed;
    for (std::size_t i = 0; i < kept.size();) {
        std::size_t j = i;
        double sum = 0.0;
        while (j < kept.size() && kept[j].a == kept[i].a && kept[j].b == kept[i].b)
            sum += kept[j++].rating;
        result.duplicate_ratings += j - i - 1;
        directed.push_back({kept[i].a, kept[i].b, sum / static_cast<double>(j - i)});
        i = j;
    }
    for (PairValue& d : directed)
        if (d.u > d.v) std::swap(d.u, d.v);
    std::sort(directed.begin(), directed.end(),
              [](const PairValue& l, const PairValue& r) {
                  return std::pair(l.u, l.v) < std::pair(r.u, r.v);
              });
    for (std::size_t i = 0; i < directed.size();) {
        std::size_t j = i;
        double sum = 0.0;
        while (j < directed.size() && directed[j].u == directed[i].u &&
               directed[j].v == directed[i].v)
            sum += directed[j++].w;
        result.graph.edges.push_back(
            {directed[i].u, directed[i].v, sum / static_cast<double>(j - i)});
        i = j;
    }
    return result;
}

// Affine map sending [w_min, w_max] onto [1, 10]. A constant-weight network
// carries no ranking information, so the degenerate range maps to 10.
inline WeightedGraph normalize(const WeightedGraph& g) {
    if (g.edges.empty()) throw InputError("no edges to normalize");
    double lo = g.edges.front().w, hi = lo;
    for (const WeightedEdge& e : g.edges) {
        lo = std::min(lo, e.w);
        hi = std::max(hi, e.w);
    }
    WeightedGraph out;
    out.n = g.n;
    out.edges.reserve(g.edges.size());
    for (const WeightedEdge& e : g.edges) {
        const double w = lo == hi ? 10.0 : 1.0 + 9.0 * (e.w - lo) / (hi - lo);
        out.edges.push_back({e.u, e.v, w});
    }
    return out;
}

// Edge probability min(1, w/t): small t saturates every edge, large t
// fragments the sampled graph. Monotone nonincreasing in t edgewise.
inline ProbabilisticGraph probabilize(const WeightedGraph& g, double t) {
    if (!(t > 0.0)) throw InputError("threshold t must be positive");
    std::vector<Edge> edges;
    edges.reserve(g.edges.size());
    for (const WeightedEdge& e : g.edges)
        edges.push_back({e.u, e.v, std::min(1.0, e.w / t)});
    return ProbabilisticGraph(g.n, std::move(edges));
}

} // namespace onepass
