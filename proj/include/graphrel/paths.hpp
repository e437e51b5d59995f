#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "graphrel/error.hpp"
#include "graphrel/graph.hpp"
#include "graphrel/scalar.hpp"

namespace graphrel {

using DistanceMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;
using CountMatrix = Eigen::Matrix<Count, Eigen::Dynamic, Eigen::Dynamic>;

/// Soft cap on vertex count for dense all-pairs data.
inline constexpr int kDenseVertexCap = 20000;

/// All-pairs hop distances and shortest-path counts.
///
/// dist is symmetric with a zero diagonal; sigma(s, t) is the number of
/// shortest s-t paths, with sigma(s, s) = 1.
struct DistanceData
{
    DistanceMatrix dist;
    CountMatrix sigma;

    int n() const { return static_cast<int>(dist.rows()); }
};

/// One BFS per source with path counting. Throws DisconnectedGraph if any
/// pair is unreachable and TooLarge beyond vertex_cap.
DistanceData all_pairs(const Graph& g, int vertex_cap = kDenseVertexCap);

/// Number of shortest s-t paths with i as an interior vertex.
Count sigma_through(const DistanceData& dd, Vertex s, Vertex t, Vertex i);

int diameter(const DistanceData& dd);

/// Sum of dist(s, t) over ordered pairs.
std::int64_t total_distance(const DistanceData& dd);

/// L(G): mean distance over the n(n-1) ordered pairs.
template <typename Scalar>
Scalar avg_path_length(const DistanceData& dd)
{
    const std::int64_t n = dd.n();
    if (n < 2)
        throw PreconditionError("average path length needs n >= 2");
    return ratio<Scalar>(total_distance(dd), n * (n - 1));
}

/// E_glob(G): mean of 1/dist over ordered pairs.
template <typename Scalar>
Scalar global_efficiency(const DistanceData& dd)
{
    const std::int64_t n = dd.n();
    if (n < 2)
        throw PreconditionError("global efficiency needs n >= 2");
    // Ordered pairs bucketed by distance keep the exact sum short.
    std::vector<std::int64_t> by_distance(n, 0);
    for (Eigen::Index s = 0; s < n; ++s)
        for (Eigen::Index t = 0; t < n; ++t)
            if (s != t)
                ++by_distance[dd.dist(s, t)];
    Scalar sum(0);
    for (std::int64_t d = 1; d < n; ++d)
        if (by_distance[d])
            sum += ratio<Scalar>(by_distance[d], d);
    return sum / Scalar(n * (n - 1));
}

/// D(G) = 2m / (n(n-1)).
template <typename Scalar>
Scalar density(const Graph& g)
{
    const std::int64_t n = g.n();
    if (n < 2)
        throw PreconditionError("density needs n >= 2");
    return ratio<Scalar>(2 * static_cast<std::int64_t>(g.m()), n * (n - 1));
}

} // namespace graphrel
