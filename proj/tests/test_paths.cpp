#include <gtest/gtest.h>

#include "graphrel/error.hpp"
#include "graphrel/generators.hpp"
#include "graphrel/oracle.hpp"
#include "graphrel/paths.hpp"
#include "suite.hpp"

using namespace graphrel;

namespace {

Graph family(Family f, std::vector<int> p)
{
    return generate(make_family_spec(f, std::move(p)));
}

} // namespace

TEST(AllPairs, C4Antipodal)
{
    auto dd = all_pairs(family(Family::cycle, {4}));
    EXPECT_EQ(dd.dist(0, 2), 2);
    EXPECT_EQ(dd.sigma(0, 2), 2u);
}

TEST(AllPairs, Complete)
{
    auto dd = all_pairs(family(Family::complete, {6}));
    for (int s = 0; s < 6; ++s)
        for (int t = 0; t < 6; ++t)
            if (s != t) {
                EXPECT_EQ(dd.dist(s, t), 1);
                EXPECT_EQ(dd.sigma(s, t), 1u);
            }
}

TEST(AllPairs, C5UniquePath)
{
    auto dd = all_pairs(family(Family::cycle, {5}));
    EXPECT_EQ(dd.dist(1, 4), 2);
    EXPECT_EQ(dd.sigma(1, 4), 1u);
}

TEST(AllPairs, DisconnectedAndCap)
{
    std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
    EXPECT_THROW(all_pairs(from_edge_list(e, 6)), DisconnectedGraph);
    EXPECT_THROW(all_pairs(family(Family::complete, {10}), 5), TooLarge);
}

TEST(SigmaThrough, Examples)
{
    auto c4 = all_pairs(family(Family::cycle, {4}));
    EXPECT_EQ(sigma_through(c4, 1, 3, 0), 1u);
    auto k4 = all_pairs(family(Family::complete, {4}));
    EXPECT_EQ(sigma_through(k4, 0, 1, 2), 0u);
    EXPECT_EQ(sigma_through(k4, 3, 2, 1), 0u);
    auto c5 = all_pairs(family(Family::cycle, {5}));
    EXPECT_EQ(sigma_through(c5, 1, 4, 0), 1u);
    EXPECT_EQ(sigma_through(c5, 1, 4, 2), 0u);
    EXPECT_THROW(sigma_through(c5, 1, 1, 0), PreconditionError);
}

TEST(GlobalMeasures, K4)
{
    Graph g = family(Family::complete, {4});
    auto dd = all_pairs(g);
    EXPECT_EQ(diameter(dd), 1);
    EXPECT_EQ(avg_path_length<Rational>(dd), 1);
    EXPECT_EQ(global_efficiency<Rational>(dd), 1);
    EXPECT_EQ(density<Rational>(g), 1);
}

TEST(GlobalMeasures, C5)
{
    Graph g = family(Family::cycle, {5});
    auto dd = all_pairs(g);
    EXPECT_EQ(diameter(dd), 2);
    EXPECT_EQ(avg_path_length<Rational>(dd), Rational(3, 2));
    EXPECT_EQ(global_efficiency<Rational>(dd), Rational(3, 4));
    EXPECT_EQ(density<Rational>(g), Rational(1, 2));
    EXPECT_DOUBLE_EQ(avg_path_length<double>(dd), 1.5);
}

TEST(GlobalMeasures, C4)
{
    Graph g = family(Family::cycle, {4});
    auto dd = all_pairs(g);
    EXPECT_EQ(diameter(dd), 2);
    EXPECT_EQ(avg_path_length<Rational>(dd), Rational(4, 3));
    EXPECT_EQ(density<Rational>(g), Rational(2, 3));
}

TEST(GlobalMeasures, SmallGraphErrors)
{
    Graph single = from_edge_list({}, 1);
    auto dd = all_pairs(single);
    EXPECT_THROW(avg_path_length<Rational>(dd), PreconditionError);
    EXPECT_THROW(density<Rational>(single), PreconditionError);
}

TEST(AllPairsProperty, MatchesPathEnumeration)
{
    std::vector<testbed::NamedGraph> graphs = testbed::small_family_suite();
    for (std::uint64_t seed = 0; seed < 60; ++seed)
        graphs.push_back(testbed::random_graph(seed, 4, 10));
    for (const auto& [name, g] : graphs) {
        SCOPED_TRACE(name);
        auto dd = all_pairs(g);
        auto paths = oracle::enumerate_shortest_paths(g);
        for (int s = 0; s < g.n(); ++s)
            for (int t = 0; t < g.n(); ++t) {
                const auto& list = paths.between(s, t);
                ASSERT_EQ(dd.sigma(s, t), list.size());
                for (const auto& p : list) {
                    ASSERT_EQ(static_cast<int>(p.size()) - 1, dd.dist(s, t));
                    for (std::size_t k = 1; k < p.size(); ++k)
                        ASSERT_TRUE(g.has_edge(p[k - 1], p[k]));
                }
            }
    }
}

TEST(AllPairsProperty, MetricInvariants)
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto [name, g] = testbed::random_graph(seed, 5, 40);
        SCOPED_TRACE(name);
        auto dd = all_pairs(g);
        EXPECT_EQ(dd.dist, dd.dist.transpose());
        EXPECT_EQ(dd.sigma, dd.sigma.transpose());
        EXPECT_EQ(dd.dist.diagonal().sum(), 0);
        for (int s = 0; s < g.n(); ++s)
            for (int t = 0; t < g.n(); ++t) {
                EXPECT_EQ(dd.dist(s, t) == 1, g.has_edge(s, t));
                if (dd.dist(s, t) == 1)
                    EXPECT_EQ(dd.sigma(s, t), 1u);
                for (int u = 0; u < g.n(); u += 3)
                    EXPECT_LE(dd.dist(s, t), dd.dist(s, u) + dd.dist(u, t));
            }
        const Rational e = global_efficiency<Rational>(dd);
        const Rational L = avg_path_length<Rational>(dd);
        EXPECT_GT(e, 0);
        EXPECT_LE(e, 1);
        EXPECT_GE(L, 1);
        EXPECT_LE(Rational(1) / L, e);
        const bool complete = 2 * g.m() == static_cast<std::size_t>(g.n()) * (g.n() - 1);
        EXPECT_EQ(e == 1, complete);
        EXPECT_EQ(L == 1, complete);
    }
}
