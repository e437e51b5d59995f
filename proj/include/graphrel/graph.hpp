#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace graphrel {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Dense 0/1 adjacency matrix.
using AdjacencyMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

/**
 * Immutable simple undirected graph on vertices 0..n-1.
 *
 * Adjacency lists are sorted and duplicate-free; every edge appears in both
 * endpoint lists. Optional labels map indices back to the names used in an
 * input file.
 */
class Graph
{
public:
    Graph() = default;

    int n() const { return static_cast<int>(adjacency_.size()); }
    std::size_t m() const { return m_; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    bool has_edge(Vertex u, Vertex v) const;

    int min_degree() const;
    int max_degree() const;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(Vertex v) const;

    /// True if from_edge_list dropped repeated edges.
    bool had_duplicates() const { return had_duplicates_; }

    friend Graph from_edge_list(std::span<const Edge> edges, int n);
    friend Graph with_labels(Graph g, std::vector<std::string> labels);

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::string> labels_;
    std::size_t m_ = 0;
    bool had_duplicates_ = false;
};

/// Builds a graph from an edge list. Throws InvalidGraph on out-of-range
/// indices, self-loops or n < 1. Repeated edges are collapsed.
Graph from_edge_list(std::span<const Edge> edges, int n);

/// Attaches vertex labels (size must equal n).
Graph with_labels(Graph g, std::vector<std::string> labels);

/// Minimum degree >= 2.
bool validate_no_pendant(const Graph& g);

/// True iff a BFS from vertex 0 reaches every vertex.
bool is_connected(const Graph& g);

/// True iff every vertex has the same degree.
bool is_regular(const Graph& g);

/// Number of edges among the neighbors of v.
std::size_t neighborhood_edges(const Graph& g, Vertex v);

AdjacencyMatrix adjacency_matrix(const Graph& g);

} // namespace graphrel
