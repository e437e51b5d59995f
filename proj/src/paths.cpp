#include "graphrel/paths.hpp"

#include <vector>

#include "graphrel/error.hpp"

namespace graphrel {

DistanceData all_pairs(const Graph& g, int vertex_cap)
{
    const int n = g.n();
    if (n > vertex_cap)
        throw TooLarge("graph has " + std::to_string(n) + " vertices; dense all-pairs cap is " +
                       std::to_string(vertex_cap));

    DistanceData dd;
    dd.dist = DistanceMatrix::Constant(n, n, -1);
    dd.sigma = CountMatrix::Zero(n, n);

    std::vector<Vertex> queue(n);
    for (Vertex s = 0; s < n; ++s) {
        auto dist = dd.dist.col(s);
        auto sigma = dd.sigma.col(s);
        dist(s) = 0;
        sigma(s) = 1;
        std::size_t head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            Vertex u = queue[head++];
            for (Vertex w : g.neighbors(u)) {
                if (dist(w) < 0) {
                    dist(w) = dist(u) + 1;
                    queue[tail++] = w;
                }
                if (dist(w) == dist(u) + 1)
                    sigma(w) = checked_add(sigma(w), sigma(u));
            }
        }
        if (tail != static_cast<std::size_t>(n))
            throw DisconnectedGraph();
    }
    return dd;
}

Count sigma_through(const DistanceData& dd, Vertex s, Vertex t, Vertex i)
{
    if (s == t || i == s || i == t)
        throw PreconditionError("sigma_through needs s != t and i distinct from both");
    if (dd.dist(s, i) + dd.dist(i, t) != dd.dist(s, t))
        return 0;
    return checked_mul(dd.sigma(s, i), dd.sigma(i, t));
}

int diameter(const DistanceData& dd)
{
    return dd.n() == 0 ? 0 : dd.dist.maxCoeff();
}

std::int64_t total_distance(const DistanceData& dd)
{
    return dd.dist.cast<std::int64_t>().sum();
}

} // namespace graphrel
