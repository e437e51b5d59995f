#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graphrel/error.hpp"
#include "graphrel/graph.hpp"
#include "graphrel/paths.hpp"
#include "graphrel/scalar.hpp"

namespace graphrel {

/// Per-vertex and graph-level values of every vertex/graph measure.
///
/// Sums over vertex pairs run over ordered pairs. Vertices of degree <= 1
/// contribute 0 to every d(d-1)-normalized quantity but still count in 1/n.
template <typename Scalar>
struct CentralityReport
{
    std::vector<int> degree;
    std::vector<Scalar> local_clustering;
    std::vector<Scalar> betweenness;
    std::vector<Count> stress;
    std::vector<Scalar> closeness;
    std::vector<Scalar> radiality;

    Scalar density{};
    int diameter = 0;
    Scalar avg_path_length{};
    Scalar global_efficiency{};
    Scalar average_clustering{};
    /// Empty when every degree is <= 1 (no connected triples).
    std::optional<Scalar> global_clustering;
    Scalar local_efficiency{};

    bool operator==(const CentralityReport&) const = default;
};

/// Triangles counted once each.
std::int64_t triangle_count(const Graph& g);

template <typename Scalar>
Scalar local_clustering(const Graph& g, Vertex i)
{
    const std::int64_t d = g.degree(i);
    if (d <= 1)
        return Scalar(0);
    return ratio<Scalar>(2 * static_cast<std::int64_t>(neighborhood_edges(g, i)), d * (d - 1));
}

/// C_WS: mean local clustering over all n vertices.
template <typename Scalar>
Scalar average_clustering(const Graph& g)
{
    if (g.n() < 1)
        throw PreconditionError("average clustering needs n >= 1");
    Scalar sum(0);
    for (Vertex i = 0; i < g.n(); ++i)
        sum += local_clustering<Scalar>(g, i);
    return sum / Scalar(g.n());
}

/// C: closed triplets over all connected triples, 6T / sum d(d-1).
template <typename Scalar>
Scalar global_clustering(const Graph& g)
{
    std::int64_t triples = 0;
    for (Vertex i = 0; i < g.n(); ++i) {
        const std::int64_t d = g.degree(i);
        triples += d * (d - 1);
    }
    if (triples == 0)
        throw PreconditionError("global clustering is undefined when every degree is <= 1");
    return ratio<Scalar>(6 * triangle_count(g), triples);
}

/// Brandes dependency accumulation over the shortest-path DAG of every
/// source, reusing the distances and counts in dd. BC receives the
/// fractional dependency sigma_sv/sigma_sw (1 + delta(w)); stress receives
/// sigma_sv times the number of shortest-path continuations below v.
template <typename Scalar>
void brandes(const Graph& g, const DistanceData& dd, std::vector<Scalar>& bc, std::vector<Count>& stress)
{
    const int n = g.n();
    bc.assign(n, Scalar(0));
    stress.assign(n, 0);

    std::vector<Vertex> order(n);
    std::vector<Scalar> delta(n);
    std::vector<Count> tails(n);
    std::vector<int> bucket_start;

    for (Vertex s = 0; s < n; ++s) {
        auto dist = dd.dist.col(s);
        auto sigma = dd.sigma.col(s);

        // counting sort by distance from s
        const int depth = dist.maxCoeff();
        bucket_start.assign(depth + 2, 0);
        for (Vertex v = 0; v < n; ++v)
            ++bucket_start[dist(v) + 1];
        for (int d = 0; d <= depth; ++d)
            bucket_start[d + 1] += bucket_start[d];
        for (Vertex v = 0; v < n; ++v)
            order[bucket_start[dist(v)]++] = v;

        std::fill(delta.begin(), delta.end(), Scalar(0));
        std::fill(tails.begin(), tails.end(), Count{0});

        for (int k = n - 1; k > 0; --k) {
            const Vertex w = order[k];
            const Scalar carry = Scalar(1) + delta[w];
            const Count tail_carry = checked_add(1, tails[w]);
            for (Vertex v : g.neighbors(w)) {
                if (dist(v) != dist(w) - 1)
                    continue;
                delta[v] += ScalarTraits<Scalar>::from_count(sigma(v)) /
                            ScalarTraits<Scalar>::from_count(sigma(w)) * carry;
                tails[v] = checked_add(tails[v], tail_carry);
            }
            bc[w] += delta[w];
            stress[w] = checked_add(stress[w], checked_mul(sigma(w), tails[w]));
        }
    }
}

template <typename Scalar>
std::vector<Scalar> betweenness(const Graph& g, const DistanceData& dd)
{
    std::vector<Scalar> bc;
    std::vector<Count> str;
    brandes(g, dd, bc, str);
    return bc;
}

inline std::vector<Count> stress(const Graph& g, const DistanceData& dd)
{
    std::vector<double> bc;
    std::vector<Count> str;
    brandes(g, dd, bc, str);
    return str;
}

/// Definition-level BC: sum of sigma_st(i)/sigma_st over ordered pairs.
template <typename Scalar>
std::vector<Scalar> betweenness_by_definition(const DistanceData& dd)
{
    const int n = dd.n();
    std::vector<Scalar> bc(n, Scalar(0));
    for (Vertex i = 0; i < n; ++i)
        for (Vertex s = 0; s < n; ++s)
            for (Vertex t = 0; t < n; ++t) {
                if (s == t || s == i || t == i)
                    continue;
                if (Count through = sigma_through(dd, s, t, i))
                    bc[i] += ScalarTraits<Scalar>::from_count(through) /
                             ScalarTraits<Scalar>::from_count(dd.sigma(s, t));
            }
    return bc;
}

/// Definition-level stress: sum of sigma_st(i) over ordered pairs.
std::vector<Count> stress_by_definition(const DistanceData& dd);

template <typename Scalar>
Scalar closeness(const DistanceData& dd, Vertex v)
{
    const std::int64_t n = dd.n();
    if (n < 2)
        throw PreconditionError("closeness needs n >= 2");
    return ratio<Scalar>(n - 1, dd.dist.col(v).template cast<std::int64_t>().sum());
}

template <typename Scalar>
Scalar radiality(const DistanceData& dd, Vertex v)
{
    const std::int64_t n = dd.n();
    if (n < 2)
        throw PreconditionError("radiality needs n >= 2");
    const std::int64_t reach = (n - 1) * (diameter(dd) + 1);
    return ratio<Scalar>(reach - dd.dist.col(v).template cast<std::int64_t>().sum(), n - 1);
}

/// E_glob(N(v)) with distances taken in the whole graph; 0 when d_v <= 1.
template <typename Scalar>
Scalar vertex_local_efficiency(const Graph& g, const DistanceData& dd, Vertex v)
{
    auto nb = g.neighbors(v);
    const std::int64_t d = static_cast<std::int64_t>(nb.size());
    if (d <= 1)
        return Scalar(0);
    Scalar sum(0);
    for (Vertex s : nb)
        for (Vertex t : nb)
            if (s != t)
                sum += ratio<Scalar>(1, dd.dist(s, t));
    return sum / Scalar(d * (d - 1));
}

template <typename Scalar>
Scalar local_efficiency(const Graph& g, const DistanceData& dd)
{
    Scalar sum(0);
    for (Vertex v = 0; v < g.n(); ++v)
        sum += vertex_local_efficiency<Scalar>(g, dd, v);
    return sum / Scalar(g.n());
}

/// Every measure at once. Throws PreconditionError for n < 2.
template <typename Scalar>
CentralityReport<Scalar> compute_centralities(const Graph& g, const DistanceData& dd)
{
    const int n = g.n();
    if (n < 2)
        throw PreconditionError("centralities need n >= 2");

    CentralityReport<Scalar> r;
    r.degree.resize(n);
    r.local_clustering.resize(n);
    r.closeness.resize(n);
    r.radiality.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        r.degree[v] = g.degree(v);
        r.local_clustering[v] = local_clustering<Scalar>(g, v);
        r.closeness[v] = closeness<Scalar>(dd, v);
        r.radiality[v] = radiality<Scalar>(dd, v);
    }
    brandes(g, dd, r.betweenness, r.stress);

    r.density = density<Scalar>(g);
    r.diameter = diameter(dd);
    r.avg_path_length = avg_path_length<Scalar>(dd);
    r.global_efficiency = global_efficiency<Scalar>(dd);

    Scalar sum(0);
    for (const auto& c : r.local_clustering)
        sum += c;
    r.average_clustering = sum / Scalar(n);
    if (g.max_degree() >= 2)
        r.global_clustering = global_clustering<Scalar>(g);
    r.local_efficiency = local_efficiency<Scalar>(g, dd);
    return r;
}

} // namespace graphrel
