#include "graphrel/neighborhood.hpp"

#include <algorithm>

namespace graphrel {

bool is_complete_neighborhood(const Graph& g, Vertex i)
{
    const std::size_t d = g.degree(i);
    return 2 * neighborhood_edges(g, i) == d * (d - (d > 0 ? 1 : 0));
}

bool is_clique_union_neighborhood(const Graph& g, Vertex i)
{
    auto nb = g.neighbors(i);
    const std::size_t d = nb.size();
    std::vector<int> component(d, -1);
    std::vector<std::size_t> stack;
    for (std::size_t root = 0; root < d; ++root) {
        if (component[root] >= 0)
            continue;
        std::vector<std::size_t> members;
        component[root] = static_cast<int>(root);
        stack.push_back(root);
        while (!stack.empty()) {
            std::size_t a = stack.back();
            stack.pop_back();
            members.push_back(a);
            for (std::size_t b = 0; b < d; ++b)
                if (component[b] < 0 && g.has_edge(nb[a], nb[b])) {
                    component[b] = static_cast<int>(root);
                    stack.push_back(b);
                }
        }
        for (std::size_t a : members)
            for (std::size_t b : members)
                if (a != b && !g.has_edge(nb[a], nb[b]))
                    return false;
    }
    return true;
}

bool has_unique_detours(const Graph& g, Vertex i)
{
    auto nb = g.neighbors(i);
    for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b) {
            if (g.has_edge(nb[a], nb[b]))
                continue;
            auto na = g.neighbors(nb[a]);
            auto nbb = g.neighbors(nb[b]);
            std::vector<Vertex> common;
            std::set_intersection(na.begin(), na.end(), nbb.begin(), nbb.end(),
                                  std::back_inserter(common));
            if (common.size() != 1)
                return false;
        }
    return true;
}

int neighborhood_diameter(const Graph& g, const DistanceData& dd, Vertex i)
{
    int best = 0;
    for (Vertex v : g.neighbors(i))
        for (Vertex w : g.neighbors(i))
            best = std::max(best, dd.dist(v, w));
    return best;
}

} // namespace graphrel
