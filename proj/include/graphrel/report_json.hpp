#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "graphrel/centralities.hpp"
#include "graphrel/neighborhood.hpp"
#include "graphrel/relations.hpp"
#include "graphrel/scalar.hpp"

namespace graphrel {

// JSON views of reports. Exact values serialize as {"exact": "p/q",
// "value": <double>}; floating values as {"value": <double>}.

template <typename Scalar>
nlohmann::json scalar_json(const Scalar& x)
{
    nlohmann::json j;
    if constexpr (ScalarTraits<Scalar>::exact)
        j["exact"] = to_string(x);
    j["value"] = to_double(x);
    return j;
}

template <typename Scalar>
nlohmann::json scalar_json(const std::vector<Scalar>& xs)
{
    nlohmann::json j = nlohmann::json::array();
    for (const auto& x : xs)
        j.push_back(scalar_json(x));
    return j;
}

template <typename Scalar>
nlohmann::json to_json(const Graph& g, const CentralityReport<Scalar>& r)
{
    nlohmann::json vertices = nlohmann::json::array();
    for (Vertex v = 0; v < static_cast<Vertex>(r.degree.size()); ++v) {
        vertices.push_back({
            {"vertex", g.label(v)},
            {"degree", r.degree[v]},
            {"local_clustering", scalar_json(r.local_clustering[v])},
            {"betweenness", scalar_json(r.betweenness[v])},
            {"stress", r.stress[v]},
            {"closeness", scalar_json(r.closeness[v])},
            {"radiality", scalar_json(r.radiality[v])},
        });
    }
    nlohmann::json graph = {
        {"n", g.n()},
        {"m", g.m()},
        {"density", scalar_json(r.density)},
        {"diameter", r.diameter},
        {"avg_path_length", scalar_json(r.avg_path_length)},
        {"global_efficiency", scalar_json(r.global_efficiency)},
        {"average_clustering", scalar_json(r.average_clustering)},
        {"global_clustering", r.global_clustering ? scalar_json(*r.global_clustering) : nlohmann::json()},
        {"local_efficiency", scalar_json(r.local_efficiency)},
    };
    return {{"graph", std::move(graph)}, {"vertices", std::move(vertices)}};
}

template <typename Scalar>
nlohmann::json to_json(const Graph& g, const NeighborhoodProfile<Scalar>& p)
{
    nlohmann::json vertices = nlohmann::json::array();
    for (Vertex v = 0; v < static_cast<Vertex>(p.avg_path.size()); ++v) {
        vertices.push_back({
            {"vertex", g.label(v)},
            {"avg_path", scalar_json(p.avg_path[v])},
            {"betweenness", scalar_json(p.betweenness[v])},
            {"diameter", p.diameter[v]},
            {"radiality", scalar_json(p.radiality[v])},
            {"closeness", scalar_json(p.closeness[v])},
            {"complete", static_cast<bool>(p.complete[v])},
        });
    }
    return vertices;
}

template <typename Scalar>
nlohmann::json to_json(const RelationReport<Scalar>& r)
{
    return {
        {"relation", relation_name(r.id)},
        {"kind", r.identity ? "identity" : "inequality"},
        {"lhs", scalar_json(r.lhs)},
        {"rhs", scalar_json(r.rhs)},
        {"slack", scalar_json(r.slack)},
        {"holds", r.holds},
        {"equality_expected", r.equality_expected},
        {"equality_observed", r.equality_observed},
        {"hypothesis_met", r.hypothesis_met},
        {"witnesses", r.witnesses},
        {"notes", r.notes},
    };
}

/// Field-by-field differences, one line per mismatching value.
std::vector<std::string> diff_reports(const CentralityReport<Rational>& expected,
                                      const CentralityReport<Rational>& actual);
std::vector<std::string> diff_reports(const NeighborhoodProfile<Rational>& expected,
                                      const NeighborhoodProfile<Rational>& actual);

} // namespace graphrel
