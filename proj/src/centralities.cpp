#include "graphrel/centralities.hpp"

#include <algorithm>

namespace graphrel {

std::int64_t triangle_count(const Graph& g)
{
    // Each triangle u < v < w is found once, from its lowest edge (u, v).
    std::int64_t count = 0;
    for (Vertex u = 0; u < g.n(); ++u) {
        auto nu = g.neighbors(u);
        for (Vertex v : nu) {
            if (v <= u)
                continue;
            auto nv = g.neighbors(v);
            auto a = std::upper_bound(nu.begin(), nu.end(), v);
            auto b = std::upper_bound(nv.begin(), nv.end(), v);
            while (a != nu.end() && b != nv.end()) {
                if (*a < *b)
                    ++a;
                else if (*b < *a)
                    ++b;
                else {
                    ++count;
                    ++a;
                    ++b;
                }
            }
        }
    }
    return count;
}

std::vector<Count> stress_by_definition(const DistanceData& dd)
{
    const int n = dd.n();
    std::vector<Count> str(n, 0);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex s = 0; s < n; ++s)
            for (Vertex t = 0; t < n; ++t)
                if (s != t && s != i && t != i)
                    str[i] = checked_add(str[i], sigma_through(dd, s, t, i));
    return str;
}

} // namespace graphrel
