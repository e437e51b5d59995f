#include <random>

#include <gtest/gtest.h>

#include "graphrel/error.hpp"
#include "graphrel/generators.hpp"
#include "graphrel/graph.hpp"

using namespace graphrel;

namespace {

Graph path3()
{
    std::vector<Edge> e{{0, 1}, {1, 2}};
    return from_edge_list(e, 3);
}

void expect_invariants(const Graph& g)
{
    std::size_t degree_sum = 0;
    for (Vertex i = 0; i < g.n(); ++i) {
        auto nb = g.neighbors(i);
        degree_sum += nb.size();
        EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
        EXPECT_EQ(std::adjacent_find(nb.begin(), nb.end()), nb.end());
        for (Vertex j : nb) {
            EXPECT_NE(i, j);
            EXPECT_TRUE(g.has_edge(j, i));
        }
    }
    EXPECT_EQ(g.m() * 2, degree_sum);
}

} // namespace

TEST(FromEdgeList, Triangle)
{
    std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}};
    Graph g = from_edge_list(e, 3);
    EXPECT_EQ(g.n(), 3);
    EXPECT_EQ(g.m(), 3u);
    EXPECT_FALSE(g.had_duplicates());
    expect_invariants(g);
}

TEST(FromEdgeList, DuplicateCollapsed)
{
    std::vector<Edge> e{{0, 1}, {1, 0}};
    Graph g = from_edge_list(e, 2);
    EXPECT_EQ(g.m(), 1u);
    EXPECT_TRUE(g.had_duplicates());
}

TEST(FromEdgeList, Errors)
{
    std::vector<Edge> loop{{0, 0}};
    EXPECT_THROW(from_edge_list(loop, 1), InvalidGraph);
    std::vector<Edge> out_of_range{{0, 3}};
    EXPECT_THROW(from_edge_list(out_of_range, 3), InvalidGraph);
    std::vector<Edge> negative{{-1, 0}};
    EXPECT_THROW(from_edge_list(negative, 3), InvalidGraph);
    EXPECT_THROW(from_edge_list({}, 0), InvalidGraph);
}

TEST(FromEdgeList, RoundTripThroughEdgesIsIdentity)
{
    std::mt19937 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 15;
        std::vector<Edge> e;
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int k = 0; k < 3 * n; ++k) {
            int u = pick(rng), v = pick(rng);
            if (u != v)
                e.emplace_back(u, v);
        }
        Graph g = from_edge_list(e, n);
        expect_invariants(g);
        auto edges = g.edges();
        Graph again = from_edge_list(edges, n);
        EXPECT_EQ(again.edges(), edges);
        EXPECT_FALSE(again.had_duplicates());
    }
}

TEST(ValidateNoPendant, Examples)
{
    EXPECT_TRUE(validate_no_pendant(generate(make_family_spec(Family::complete, {3}))));
    EXPECT_FALSE(validate_no_pendant(path3()));
    EXPECT_TRUE(validate_no_pendant(generate(make_family_spec(Family::windmill, {3, 3}))));
}

TEST(IsConnected, Examples)
{
    EXPECT_TRUE(is_connected(generate(make_family_spec(Family::complete, {4}))));
    std::vector<Edge> two_triangles{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
    EXPECT_FALSE(is_connected(from_edge_list(two_triangles, 6)));
    EXPECT_TRUE(is_connected(generate(make_family_spec(Family::windmill, {5, 4}))));
}

TEST(NeighborhoodEdges, WindmillHub)
{
    Graph g = generate(make_family_spec(Family::windmill, {2, 3}));
    EXPECT_EQ(neighborhood_edges(g, 0), 2u);
    EXPECT_EQ(neighborhood_edges(g, 1), 1u);
}

TEST(AdjacencyMatrix, SymmetricZeroDiagonal)
{
    Graph g = generate(make_family_spec(Family::hypercube, {3}));
    auto a = adjacency_matrix(g);
    EXPECT_EQ(a, a.transpose());
    EXPECT_EQ(a.diagonal().sum(), 0);
    EXPECT_EQ(a.sum(), static_cast<int>(2 * g.m()));
}
