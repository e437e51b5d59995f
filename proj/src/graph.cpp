#include "graphrel/graph.hpp"

#include <algorithm>
#include <queue>

#include "graphrel/error.hpp"

namespace graphrel {

bool Graph::has_edge(Vertex u, Vertex v) const
{
    const auto& a = adjacency_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::min_degree() const
{
    int d = n() > 0 ? degree(0) : 0;
    for (Vertex v = 1; v < n(); ++v)
        d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const
{
    int d = 0;
    for (Vertex v = 0; v < n(); ++v)
        d = std::max(d, degree(v));
    return d;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::string Graph::label(Vertex v) const
{
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph from_edge_list(std::span<const Edge> edges, int n)
{
    if (n < 1)
        throw InvalidGraph("vertex count must be at least 1");

    Graph g;
    g.adjacency_.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidGraph("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                               ") has an index outside [0, " + std::to_string(n) + ")");
        if (u == v)
            throw InvalidGraph("self-loop at vertex " + std::to_string(u));
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }

    std::size_t total = 0;
    for (auto& a : g.adjacency_) {
        std::sort(a.begin(), a.end());
        auto last = std::unique(a.begin(), a.end());
        if (last != a.end())
            g.had_duplicates_ = true;
        a.erase(last, a.end());
        total += a.size();
    }
    g.m_ = total / 2;
    return g;
}

Graph with_labels(Graph g, std::vector<std::string> labels)
{
    if (static_cast<int>(labels.size()) != g.n())
        throw InvalidGraph("label table size does not match vertex count");
    g.labels_ = std::move(labels);
    return g;
}

bool validate_no_pendant(const Graph& g)
{
    return g.min_degree() >= 2;
}

bool is_connected(const Graph& g)
{
    if (g.n() == 0)
        return true;
    std::vector<char> seen(g.n(), 0);
    std::queue<Vertex> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == g.n();
}

bool is_regular(const Graph& g)
{
    return g.min_degree() == g.max_degree();
}

std::size_t neighborhood_edges(const Graph& g, Vertex v)
{
    auto nb = g.neighbors(v);
    std::size_t count = 0;
    for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b)
            if (g.has_edge(nb[a], nb[b]))
                ++count;
    return count;
}

AdjacencyMatrix adjacency_matrix(const Graph& g)
{
    AdjacencyMatrix a = AdjacencyMatrix::Zero(g.n(), g.n());
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v : g.neighbors(u))
            a(u, v) = 1;
    return a;
}

} // namespace graphrel
