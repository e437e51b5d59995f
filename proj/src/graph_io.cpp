#include "graphrel/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "graphrel/error.hpp"

namespace graphrel {
namespace {

std::optional<long long> parse_index(const std::string& s)
{
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0)
        return std::nullopt;
    return v;
}

std::string strip_comment(const std::string& line)
{
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

} // namespace

Graph read_edge_list(std::istream& in)
{
    std::optional<int> declared_n;
    std::vector<std::pair<std::string, std::string>> raw;
    std::string line;
    int lineno = 0;
    bool seen_content = false;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream fields(strip_comment(line));
        std::string a, b, extra;
        if (!(fields >> a))
            continue;
        if (!seen_content && a.rfind("n=", 0) == 0) {
            auto count = parse_index(a.substr(2));
            if (!count || *count < 1 || fields >> extra)
                throw ParseError("line " + std::to_string(lineno) + ": malformed vertex count header");
            declared_n = static_cast<int>(*count);
            seen_content = true;
            continue;
        }
        seen_content = true;
        if (!(fields >> b) || (fields >> extra))
            throw ParseError("line " + std::to_string(lineno) + ": expected exactly two labels");
        raw.emplace_back(std::move(a), std::move(b));
    }

    std::vector<Edge> edges;
    edges.reserve(raw.size());

    if (declared_n) {
        for (const auto& [a, b] : raw) {
            auto u = parse_index(a), v = parse_index(b);
            if (!u || !v || *u >= *declared_n || *v >= *declared_n)
                throw ParseError("label outside [0, n) with an n= header: " + a + " " + b);
            edges.emplace_back(static_cast<Vertex>(*u), static_cast<Vertex>(*v));
        }
        std::vector<std::string> labels(*declared_n);
        for (int i = 0; i < *declared_n; ++i)
            labels[i] = std::to_string(i);
        return with_labels(from_edge_list(edges, *declared_n), std::move(labels));
    }

    if (raw.empty())
        throw ParseError("edge list contains no edges and no n= header");

    bool all_numeric = std::all_of(raw.begin(), raw.end(), [](const auto& e) {
        return parse_index(e.first) && parse_index(e.second);
    });

    std::vector<std::string> labels;
    std::map<std::string, Vertex> index;
    if (all_numeric) {
        std::map<long long, std::string> ordered;
        for (const auto& [a, b] : raw) {
            ordered.emplace(*parse_index(a), a);
            ordered.emplace(*parse_index(b), b);
        }
        std::map<long long, Vertex> by_value;
        for (const auto& [value, text] : ordered) {
            by_value[value] = static_cast<Vertex>(labels.size());
            labels.push_back(std::to_string(value));
        }
        for (const auto& [a, b] : raw)
            edges.emplace_back(by_value[*parse_index(a)], by_value[*parse_index(b)]);
    } else {
        auto intern = [&](const std::string& s) {
            auto [it, inserted] = index.emplace(s, static_cast<Vertex>(labels.size()));
            if (inserted)
                labels.push_back(s);
            return it->second;
        };
        for (const auto& [a, b] : raw) {
            Vertex u = intern(a);
            Vertex v = intern(b);
            edges.emplace_back(u, v);
        }
    }

    try {
        const int n = static_cast<int>(labels.size());
        return with_labels(from_edge_list(edges, n), std::move(labels));
    } catch (const InvalidGraph& e) {
        throw ParseError(e.what());
    }
}

Graph graph_from_json(const nlohmann::json& j)
{
    try {
        int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("each edge must be a 2-element array");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        Graph g = from_edge_list(edges, n);
        if (j.contains("labels"))
            g = with_labels(std::move(g), j.at("labels").get<std::vector<std::string>>());
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON graph: ") + e.what());
    } catch (const InvalidGraph& e) {
        throw ParseError(e.what());
    }
}

Graph read_graph_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    if (path.extension() == ".json") {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        return graph_from_json(j);
    }
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << "n=" << g.n() << '\n';
    for (const auto& [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

nlohmann::json graph_to_json(const Graph& g)
{
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back({u, v});
    return {{"n", g.n()}, {"edges", std::move(edges)}};
}

} // namespace graphrel
