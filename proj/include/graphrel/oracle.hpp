#pragma once

#include <vector>

#include "graphrel/centralities.hpp"
#include "graphrel/graph.hpp"
#include "graphrel/neighborhood.hpp"
#include "graphrel/scalar.hpp"

namespace graphrel::oracle {

// Brute-force ground truth for small graphs. Nothing here calls into the
// BFS, Brandes or neighborhood code: distances come from Floyd-Warshall on
// the adjacency matrix, paths from exhaustive enumeration, and clustering
// from the triple product a_ij a_jk a_ki.

inline constexpr int kDefaultVertexCap = 12;

using Path = std::vector<Vertex>;

/// Every shortest path, as a vertex sequence, for every ordered pair.
struct PathEnumeration
{
    int n = 0;
    std::vector<std::vector<Path>> paths; ///< indexed s * n + t

    const std::vector<Path>& between(Vertex s, Vertex t) const { return paths[s * n + t]; }
};

/// Throws TooLarge above cap and DisconnectedGraph when a pair is unreachable.
PathEnumeration enumerate_shortest_paths(const Graph& g, int cap = kDefaultVertexCap);

struct OracleReport
{
    CentralityReport<Rational> centralities;
    NeighborhoodProfile<Rational> neighborhoods;
};

OracleReport oracle_measures(const Graph& g, int cap = kDefaultVertexCap);

} // namespace graphrel::oracle
