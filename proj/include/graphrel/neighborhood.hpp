#pragma once

#include <cstdint>
#include <vector>

#include "graphrel/graph.hpp"
#include "graphrel/paths.hpp"
#include "graphrel/scalar.hpp"

namespace graphrel {

// Neighborhood-restricted measures. Every distance and path count is taken
// in the whole graph, never in the subgraph induced on N(i). Vertices with
// d_i <= 1 get 0 for every value (and still count in the 1/n averages).

/// Which vertex set the neighborhood closeness runs over.
enum class ClosenessVariant {
    open,   ///< N(i): normalizer d_i - 1 (used by every relation check)
    closed, ///< N(i) plus i: normalizer d_i, averaged over v in N(i) only
};

template <typename Scalar>
struct NeighborhoodProfile
{
    std::vector<Scalar> avg_path;    ///< L(N(i))
    std::vector<Scalar> betweenness; ///< BC(i, N(i))
    std::vector<int> diameter;       ///< max dist over pairs of N(i)
    std::vector<Scalar> radiality;   ///< (1/d_i) sum_v Rad(v, N(i))
    std::vector<Scalar> closeness;   ///< (1/d_i) sum_v Clo(v, N(i))
    std::vector<char> complete;      ///< N(i) induces K_{d_i}

    bool operator==(const NeighborhoodProfile&) const = default;
};

/// N(i) induces a complete graph.
bool is_complete_neighborhood(const Graph& g, Vertex i);

/// Every connected component of the subgraph induced on N(i) is complete.
bool is_clique_union_neighborhood(const Graph& g, Vertex i);

/// Every non-adjacent pair in N(i) has i as its only common neighbor, i.e.
/// the 2-hop path through i is their unique shortest path.
bool has_unique_detours(const Graph& g, Vertex i);

template <typename Scalar>
Scalar neighborhood_avg_path(const Graph& g, const DistanceData& dd, Vertex i)
{
    auto nb = g.neighbors(i);
    const std::int64_t d = static_cast<std::int64_t>(nb.size());
    if (d <= 1)
        return Scalar(0);
    std::int64_t sum = 0;
    for (Vertex v : nb)
        for (Vertex w : nb)
            sum += dd.dist(v, w);
    return ratio<Scalar>(sum, d * (d - 1));
}

int neighborhood_diameter(const Graph& g, const DistanceData& dd, Vertex i);

template <typename Scalar>
Scalar neighborhood_betweenness(const Graph& g, const DistanceData& dd, Vertex i)
{
    auto nb = g.neighbors(i);
    Scalar sum(0);
    for (Vertex s : nb)
        for (Vertex t : nb) {
            if (s == t)
                continue;
            if (Count through = sigma_through(dd, s, t, i))
                sum += ScalarTraits<Scalar>::from_count(through) /
                       ScalarTraits<Scalar>::from_count(dd.sigma(s, t));
        }
    return sum;
}

/// BC_loc: mean of BC(i, N(i)) / (d_i (d_i - 1)).
template <typename Scalar>
Scalar bc_loc(const Graph& g, const DistanceData& dd)
{
    Scalar sum(0);
    for (Vertex i = 0; i < g.n(); ++i) {
        const std::int64_t d = g.degree(i);
        if (d >= 2)
            sum += neighborhood_betweenness<Scalar>(g, dd, i) / Scalar(d * (d - 1));
    }
    return sum / Scalar(g.n());
}

/// (1/d_i) sum over v in N(i) of Rad(v, N(i)).
template <typename Scalar>
Scalar neighborhood_radiality(const Graph& g, const DistanceData& dd, Vertex i)
{
    auto nb = g.neighbors(i);
    const std::int64_t d = static_cast<std::int64_t>(nb.size());
    if (d <= 1)
        return Scalar(0);
    const std::int64_t reach = neighborhood_diameter(g, dd, i) + 1;
    Scalar sum(0);
    for (Vertex v : nb) {
        std::int64_t terms = 0;
        for (Vertex t : nb)
            if (t != v)
                terms += reach - dd.dist(v, t);
        sum += ratio<Scalar>(terms, d - 1);
    }
    return sum / Scalar(d);
}

template <typename Scalar>
Scalar rad_loc(const Graph& g, const DistanceData& dd)
{
    Scalar sum(0);
    for (Vertex i = 0; i < g.n(); ++i)
        sum += neighborhood_radiality<Scalar>(g, dd, i);
    return sum / Scalar(g.n());
}

/// (1/d_i) sum over v in N(i) of Clo(v, N(i)).
template <typename Scalar>
Scalar neighborhood_closeness(const Graph& g, const DistanceData& dd, Vertex i,
                              ClosenessVariant variant = ClosenessVariant::open)
{
    auto nb = g.neighbors(i);
    const std::int64_t d = static_cast<std::int64_t>(nb.size());
    if (d <= 1)
        return Scalar(0);
    Scalar sum(0);
    for (Vertex v : nb) {
        std::int64_t total = 0;
        for (Vertex t : nb)
            total += dd.dist(v, t);
        if (variant == ClosenessVariant::closed)
            sum += ratio<Scalar>(d, total + dd.dist(v, i));
        else
            sum += ratio<Scalar>(d - 1, total);
    }
    return sum / Scalar(d);
}

template <typename Scalar>
Scalar clo_loc(const Graph& g, const DistanceData& dd, ClosenessVariant variant = ClosenessVariant::open)
{
    Scalar sum(0);
    for (Vertex i = 0; i < g.n(); ++i)
        sum += neighborhood_closeness<Scalar>(g, dd, i, variant);
    return sum / Scalar(g.n());
}

template <typename Scalar>
NeighborhoodProfile<Scalar> compute_neighborhood_profile(const Graph& g, const DistanceData& dd)
{
    const int n = g.n();
    NeighborhoodProfile<Scalar> p;
    p.avg_path.resize(n);
    p.betweenness.resize(n);
    p.diameter.resize(n);
    p.radiality.resize(n);
    p.closeness.resize(n);
    p.complete.resize(n);
    for (Vertex i = 0; i < n; ++i) {
        p.avg_path[i] = neighborhood_avg_path<Scalar>(g, dd, i);
        p.betweenness[i] = neighborhood_betweenness<Scalar>(g, dd, i);
        p.diameter[i] = neighborhood_diameter(g, dd, i);
        p.radiality[i] = neighborhood_radiality<Scalar>(g, dd, i);
        p.closeness[i] = neighborhood_closeness<Scalar>(g, dd, i);
        p.complete[i] = is_complete_neighborhood(g, i);
    }
    return p;
}

} // namespace graphrel
