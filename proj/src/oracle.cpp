#include "graphrel/oracle.hpp"

#include <algorithm>
#include <functional>

#include <Eigen/Core>

#include "graphrel/error.hpp"

namespace graphrel::oracle {
namespace {

constexpr int kUnreachable = 1 << 20;

Eigen::MatrixXi floyd_warshall(const AdjacencyMatrix& a)
{
    const Eigen::Index n = a.rows();
    Eigen::MatrixXi d = Eigen::MatrixXi::Constant(n, n, kUnreachable);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            if (i == j)
                d(i, j) = 0;
            else if (a(i, j))
                d(i, j) = 1;
    for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                d(i, j) = std::min(d(i, j), d(i, k) + d(k, j));
    return d;
}

struct Enumerated
{
    AdjacencyMatrix adjacency;
    Eigen::MatrixXi dist;
    PathEnumeration paths;
};

Enumerated enumerate(const Graph& g, int cap)
{
    if (g.n() > cap)
        throw TooLarge("oracle is capped at " + std::to_string(cap) + " vertices");
    Enumerated e;
    e.adjacency = adjacency_matrix(g);
    e.dist = floyd_warshall(e.adjacency);
    if ((e.dist.array() >= kUnreachable).any())
        throw DisconnectedGraph();

    const int n = g.n();
    e.paths.n = n;
    e.paths.paths.assign(static_cast<std::size_t>(n) * n, {});

    // Depth-first walk that only steps to vertices one layer closer to t.
    Path current;
    std::function<void(Vertex, Vertex)> walk = [&](Vertex u, Vertex t) {
        current.push_back(u);
        if (u == t) {
            e.paths.paths[current.front() * n + t].push_back(current);
        } else {
            for (Vertex w = 0; w < n; ++w)
                if (e.adjacency(u, w) && e.dist(w, t) == e.dist(u, t) - 1)
                    walk(w, t);
        }
        current.pop_back();
    };
    for (Vertex s = 0; s < n; ++s)
        for (Vertex t = 0; t < n; ++t)
            walk(s, t);
    return e;
}

Rational literal_clustering(const AdjacencyMatrix& a, Vertex i)
{
    const std::int64_t n = a.rows();
    std::int64_t closed = 0, degree = 0;
    for (Vertex j = 0; j < n; ++j) {
        degree += a(i, j);
        for (Vertex k = 0; k < n; ++k)
            closed += a(i, j) * a(j, k) * a(k, i);
    }
    if (degree <= 1)
        return Rational(0);
    return Rational(closed, degree * (degree - 1));
}

bool contains_interior(const Path& p, Vertex i)
{
    return p.size() > 2 && std::find(p.begin() + 1, p.end() - 1, i) != p.end() - 1;
}

} // namespace

PathEnumeration enumerate_shortest_paths(const Graph& g, int cap)
{
    return enumerate(g, cap).paths;
}

OracleReport oracle_measures(const Graph& g, int cap)
{
    const Enumerated e = enumerate(g, cap);
    const auto& a = e.adjacency;
    const auto& dist = e.dist;
    const auto& P = e.paths;
    const int n = g.n();
    if (n < 2)
        throw PreconditionError("oracle needs n >= 2");

    OracleReport out;
    auto& c = out.centralities;
    c.degree.resize(n);
    c.local_clustering.resize(n);
    c.betweenness.assign(n, Rational(0));
    c.stress.assign(n, 0);
    c.closeness.resize(n);
    c.radiality.resize(n);

    int diam = 0;
    std::int64_t edges2 = 0, closed_all = 0, triples = 0, dist_total = 0;
    Rational inverse_total(0);
    for (Vertex s = 0; s < n; ++s)
        for (Vertex t = 0; t < n; ++t) {
            edges2 += a(s, t);
            if (s == t)
                continue;
            diam = std::max(diam, dist(s, t));
            dist_total += dist(s, t);
            inverse_total += Rational(1, dist(s, t));
        }

    for (Vertex i = 0; i < n; ++i) {
        std::int64_t deg = 0, row = 0;
        for (Vertex j = 0; j < n; ++j) {
            deg += a(i, j);
            row += dist(i, j);
            for (Vertex k = 0; k < n; ++k)
                closed_all += a(i, j) * a(j, k) * a(k, i);
        }
        triples += deg * (deg - 1);
        c.degree[i] = static_cast<int>(deg);
        c.local_clustering[i] = literal_clustering(a, i);
        c.closeness[i] = Rational(n - 1, row);
        Rational rad(0);
        for (Vertex t = 0; t < n; ++t)
            if (t != i)
                rad += Rational(diam + 1 - dist(i, t));
        c.radiality[i] = rad / Rational(n - 1);

        for (Vertex s = 0; s < n; ++s)
            for (Vertex t = 0; t < n; ++t) {
                if (s == t || s == i || t == i)
                    continue;
                const auto& list = P.between(s, t);
                const auto through = std::count_if(list.begin(), list.end(),
                                                   [i](const Path& p) { return contains_interior(p, i); });
                c.stress[i] += static_cast<Count>(through);
                c.betweenness[i] += Rational(through, static_cast<std::int64_t>(list.size()));
            }
    }

    const std::int64_t ordered = static_cast<std::int64_t>(n) * (n - 1);
    c.density = Rational(edges2, ordered);
    c.diameter = diam;
    c.avg_path_length = Rational(dist_total, ordered);
    c.global_efficiency = inverse_total / Rational(ordered);
    Rational sum_c(0);
    for (const auto& x : c.local_clustering)
        sum_c += x;
    c.average_clustering = sum_c / Rational(n);
    if (triples > 0)
        c.global_clustering = Rational(closed_all, triples);

    auto& nb = out.neighborhoods;
    nb.avg_path.assign(n, Rational(0));
    nb.betweenness.assign(n, Rational(0));
    nb.diameter.assign(n, 0);
    nb.radiality.assign(n, Rational(0));
    nb.closeness.assign(n, Rational(0));
    nb.complete.assign(n, 0);

    Rational eloc(0);
    for (Vertex i = 0; i < n; ++i) {
        std::vector<Vertex> N;
        for (Vertex j = 0; j < n; ++j)
            if (a(i, j))
                N.push_back(j);
        const std::int64_t d = static_cast<std::int64_t>(N.size());

        bool complete = true;
        for (Vertex s : N)
            for (Vertex t : N)
                if (s != t && !a(s, t))
                    complete = false;
        nb.complete[i] = complete;
        if (d <= 1)
            continue;

        std::int64_t L = 0;
        int dn = 0;
        Rational eff(0), bc(0);
        for (Vertex s : N)
            for (Vertex t : N) {
                if (s == t)
                    continue;
                L += dist(s, t);
                dn = std::max(dn, dist(s, t));
                eff += Rational(1, dist(s, t));
                const auto& list = P.between(s, t);
                const auto through = std::count_if(list.begin(), list.end(),
                                                   [i](const Path& p) { return contains_interior(p, i); });
                bc += Rational(through, static_cast<std::int64_t>(list.size()));
            }
        nb.avg_path[i] = Rational(L, d * (d - 1));
        nb.betweenness[i] = bc;
        nb.diameter[i] = dn;
        eloc += eff / Rational(d * (d - 1));

        Rational rad(0), clo(0);
        for (Vertex v : N) {
            std::int64_t terms = 0, row = 0;
            for (Vertex t : N)
                if (t != v) {
                    terms += dn + 1 - dist(v, t);
                    row += dist(v, t);
                }
            rad += Rational(terms, d - 1);
            clo += Rational(d - 1, row);
        }
        nb.radiality[i] = rad / Rational(d);
        nb.closeness[i] = clo / Rational(d);
    }
    c.local_efficiency = eloc / Rational(n);
    return out;
}

} // namespace graphrel::oracle
