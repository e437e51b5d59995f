// graphrel: centrality reports and relation checks for simple undirected graphs.
//
// Exit codes: 0 success, 1 usage or invalid parameters, 2 unreadable or
// malformed input, 3 precondition failure (disconnected, pendant vertices,
// size caps), 4 a relation is violated, 5 oracle-diff found mismatches.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "graphrel/centralities.hpp"
#include "graphrel/error.hpp"
#include "graphrel/generators.hpp"
#include "graphrel/graph_io.hpp"
#include "graphrel/neighborhood.hpp"
#include "graphrel/oracle.hpp"
#include "graphrel/relations.hpp"
#include "graphrel/report_json.hpp"

using namespace graphrel;

namespace {

enum ExitCode {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kPrecondition = 3,
    kViolation = 4,
    kMismatch = 5,
};

/// Graphs above this size default to floating arithmetic.
constexpr int kExactVertexCap = 2000;

struct RunConfig
{
    std::string command;
    std::string input;
    std::string family;
    std::vector<int> params;
    std::optional<std::uint64_t> seed;
    std::string format = "json";
    std::string graph_format = "edges";
    bool exact = false;
    bool floating = false;
    bool allow_pendant = false;
    int oracle_cap = oracle::kDefaultVertexCap;
    int eta_from = 2;
    int eta_to = 50;
};

struct LoadedGraph
{
    std::string name;
    Graph graph;
};

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

LoadedGraph load(const RunConfig& cfg)
{
    const bool has_input = !cfg.input.empty();
    const bool has_family = !cfg.family.empty();
    if (has_input == has_family)
        throw UsageError("exactly one of --input or --family is required");
    if (has_input)
        return {cfg.input, read_graph_file(cfg.input)};
    auto spec = make_family_spec(parse_family(cfg.family), cfg.params, cfg.seed, cfg.allow_pendant);
    return {describe(spec), generate(spec)};
}

bool use_exact(const RunConfig& cfg, const Graph& g)
{
    if (cfg.floating)
        return false;
    return cfg.exact || g.n() <= kExactVertexCap;
}

std::string csv_number(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

template <typename Scalar>
std::string csv_value(const Scalar& x)
{
    return csv_number(to_double(x));
}

template <typename Scalar>
std::string human_value(const Scalar& x)
{
    if constexpr (ScalarTraits<Scalar>::exact)
        return to_string(x) + " (" + csv_number(to_double(x)) + ")";
    else
        return csv_number(x);
}

template <typename Scalar>
int compute(const RunConfig& cfg, const LoadedGraph& in)
{
    const Graph& g = in.graph;
    if (!cfg.allow_pendant && g.min_degree() < 2)
        std::cerr << "note: graph has degree-1 vertices; their normalized terms are 0\n";
    const auto dd = all_pairs(g);
    const auto report = compute_centralities<Scalar>(g, dd);
    const auto profile = compute_neighborhood_profile<Scalar>(g, dd);
    const Scalar bcl = bc_loc<Scalar>(g, dd);
    const Scalar radl = rad_loc<Scalar>(g, dd);
    const Scalar clol = clo_loc<Scalar>(g, dd);

    if (cfg.format == "json") {
        auto j = to_json(g, report);
        j["source"] = in.name;
        j["mode"] = ScalarTraits<Scalar>::exact ? "exact" : "float";
        j["graph"]["bc_loc"] = scalar_json(bcl);
        j["graph"]["rad_loc"] = scalar_json(radl);
        j["graph"]["clo_loc"] = scalar_json(clol);
        j["neighborhoods"] = to_json(g, profile);
        std::cout << j.dump(2) << '\n';
        return kOk;
    }

    std::vector<std::pair<std::string, std::string>> rows;
    auto add = [&](std::string key, const Scalar& x) {
        rows.emplace_back(std::move(key), cfg.format == "csv" ? csv_value(x) : human_value(x));
    };
    rows.emplace_back("n", std::to_string(g.n()));
    rows.emplace_back("m", std::to_string(g.m()));
    add("density", report.density);
    rows.emplace_back("diameter", std::to_string(report.diameter));
    add("avg_path_length", report.avg_path_length);
    add("global_efficiency", report.global_efficiency);
    add("average_clustering", report.average_clustering);
    if (report.global_clustering)
        add("global_clustering", *report.global_clustering);
    else
        rows.emplace_back("global_clustering", "undefined");
    add("local_efficiency", report.local_efficiency);
    add("bc_loc", bcl);
    add("rad_loc", radl);
    add("clo_loc", clol);

    if (cfg.format == "csv") {
        std::cout << "measure,value\n";
        for (const auto& [k, v] : rows)
            std::cout << k << ',' << v << '\n';
        std::cout << "\nvertex,degree,local_clustering,betweenness,stress,closeness,radiality,"
                     "nbr_avg_path,nbr_betweenness,nbr_diameter,nbr_radiality,nbr_closeness,nbr_complete\n";
        for (Vertex v = 0; v < g.n(); ++v)
            std::cout << g.label(v) << ',' << report.degree[v] << ',' << csv_value(report.local_clustering[v]) << ','
                      << csv_value(report.betweenness[v]) << ',' << report.stress[v] << ','
                      << csv_value(report.closeness[v]) << ',' << csv_value(report.radiality[v]) << ','
                      << csv_value(profile.avg_path[v]) << ',' << csv_value(profile.betweenness[v]) << ','
                      << profile.diameter[v] << ',' << csv_value(profile.radiality[v]) << ','
                      << csv_value(profile.closeness[v]) << ',' << int(profile.complete[v]) << '\n';
        return kOk;
    }

    std::cout << in.name << '\n';
    for (const auto& [k, v] : rows)
        std::cout << "  " << std::left << std::setw(20) << k << v << '\n';
    std::cout << "  vertex  degree  c_i  BC  Str  Clo  Rad\n";
    for (Vertex v = 0; v < g.n(); ++v)
        std::cout << "  " << g.label(v) << "  " << report.degree[v] << "  " << human_value(report.local_clustering[v])
                  << "  " << human_value(report.betweenness[v]) << "  " << report.stress[v] << "  "
                  << human_value(report.closeness[v]) << "  " << human_value(report.radiality[v]) << '\n';
    return kOk;
}

template <typename Scalar>
int check(const RunConfig& cfg, const LoadedGraph& in)
{
    CheckOptions opt{.allow_pendant = cfg.allow_pendant};
    const auto reports = check_all<Scalar>(in.graph, opt);
    const auto violated = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.holds; });

    if (cfg.format == "json") {
        nlohmann::json rel = nlohmann::json::array();
        for (const auto& r : reports)
            rel.push_back(to_json(r));
        nlohmann::json j = {{"source", in.name},
                            {"mode", ScalarTraits<Scalar>::exact ? "exact" : "float"},
                            {"all_hold", violated == 0},
                            {"relations", std::move(rel)}};
        std::cout << j.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        std::cout << "relation,kind,lhs,rhs,slack,holds,equality_expected,equality_observed,hypothesis_met\n";
        for (const auto& r : reports)
            std::cout << relation_name(r.id) << ',' << (r.identity ? "identity" : "inequality") << ','
                      << csv_value(r.lhs) << ',' << csv_value(r.rhs) << ',' << csv_value(r.slack) << ',' << r.holds
                      << ',' << r.equality_expected << ',' << r.equality_observed << ',' << r.hypothesis_met
                      << '\n';
    } else {
        std::cout << in.name << '\n';
        for (const auto& r : reports) {
            std::cout << "  " << std::left << std::setw(13) << relation_name(r.id) << (r.holds ? "holds   " : "VIOLATED")
                      << "  lhs=" << human_value(r.lhs) << "  rhs=" << human_value(r.rhs)
                      << "  slack=" << human_value(r.slack);
            if (r.equality_expected)
                std::cout << "  [equality expected]";
            if (!r.hypothesis_met)
                std::cout << "  [hypothesis not met]";
            std::cout << '\n';
            for (const auto& w : r.witnesses)
                std::cout << "      " << w << '\n';
        }
        if (violated == 0)
            std::cout << "all " << reports.size() << " relations hold\n";
        else
            std::cout << violated << " of " << reports.size() << " relations violated\n";
    }
    return violated == 0 ? kOk : kViolation;
}

int generate_cmd(const RunConfig& cfg, const LoadedGraph& in)
{
    if (cfg.graph_format == "json")
        std::cout << graph_to_json(in.graph).dump(2) << '\n';
    else
        write_edge_list(std::cout, in.graph);
    return kOk;
}

int sweep(const RunConfig& cfg)
{
    if (cfg.family != "windmill")
        throw UsageError("sweep supports --family windmill only");
    if (cfg.params.size() != 1)
        throw UsageError("sweep expects --params <clique size k>");
    const int k = cfg.params[0];
    if (cfg.eta_from == 1)
        std::cerr << "warning: windmill(1," << k << ") is the single clique K_" << k
                  << "; it is degenerate for the divergence trend\n";
    const auto s = sweep_windmill(cfg.eta_from, cfg.eta_to, k);
    std::cout << "eta,c_ws,c_global,difference\n";
    for (const auto& row : s.rows)
        std::cout << row.copies << ',' << csv_value(row.average_clustering) << ','
                  << csv_value(row.global_clustering) << ','
                  << csv_value(Rational(row.average_clustering - row.global_clustering)) << '\n';
    std::cout << "# trend c_ws_strictly_increasing=" << (s.average_strictly_increasing ? "true" : "false")
              << " c_global_strictly_decreasing=" << (s.global_strictly_decreasing ? "true" : "false") << '\n';
    return kOk;
}

int oracle_diff(const RunConfig& cfg, const LoadedGraph& in)
{
    const Graph& g = in.graph;
    const auto expected = oracle::oracle_measures(g, cfg.oracle_cap);
    const auto dd = all_pairs(g);
    auto lines = diff_reports(expected.centralities, compute_centralities<Rational>(g, dd));
    auto more = diff_reports(expected.neighborhoods, compute_neighborhood_profile<Rational>(g, dd));
    lines.insert(lines.end(), more.begin(), more.end());
    for (const auto& l : lines)
        std::cout << l << '\n';
    std::cout << in.name << ": " << lines.size() << " mismatches\n";
    return lines.empty() ? kOk : kMismatch;
}

int run(const RunConfig& cfg)
{
    if (cfg.command == "sweep")
        return sweep(cfg);
    const auto in = load(cfg);
    if (cfg.command == "generate")
        return generate_cmd(cfg, in);
    if (cfg.command == "oracle-diff")
        return oracle_diff(cfg, in);
    const bool exact = use_exact(cfg, in.graph);
    if (cfg.command == "compute")
        return exact ? compute<Rational>(cfg, in) : compute<double>(cfg, in);
    return exact ? check<Rational>(cfg, in) : check<double>(cfg, in);
}

void add_graph_options(CLI::App* cmd, RunConfig& cfg)
{
    auto* input = cmd->add_option("--input", cfg.input, "Edge-list (.edges/.txt) or JSON (.json) graph file");
    auto* family = cmd->add_option("--family", cfg.family, "Generator family name");
    input->excludes(family);
    cmd->add_option("--params", cfg.params, "Comma-separated family parameters")->delimiter(',');
    cmd->add_option("--seed", cfg.seed, "Seed for the random family");
    cmd->add_flag("--allow-pendant", cfg.allow_pendant, "Accept degree-1 vertices under the zero convention");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Centrality measures and clustering-coefficient relations for simple undirected graphs"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* compute_cmd = app.add_subcommand("compute", "Per-vertex and graph-level measures");
    auto* check_cmd = app.add_subcommand("check", "Verify every relation; exit 4 on a violation");
    auto* generate_cmd = app.add_subcommand("generate", "Emit a family graph as an edge list or JSON");
    auto* sweep_cmd = app.add_subcommand("sweep", "C_WS and C along windmill(eta, k) as CSV");
    auto* oracle_cmd = app.add_subcommand("oracle-diff", "Compare fast measures with the brute-force oracle");

    for (auto* cmd : {compute_cmd, check_cmd, generate_cmd, oracle_cmd})
        add_graph_options(cmd, cfg);
    for (auto* cmd : {compute_cmd, check_cmd})
        cmd->add_option("--format", cfg.format, "Output format")
            ->check(CLI::IsMember({"json", "csv", "human"}));
    generate_cmd->add_option("--format", cfg.graph_format, "Graph output format")
        ->check(CLI::IsMember({"edges", "json"}));
    for (auto* cmd : {compute_cmd, check_cmd}) {
        auto* ex = cmd->add_flag("--exact", cfg.exact, "Exact rational arithmetic (default up to 2000 vertices)");
        auto* fl = cmd->add_flag("--float", cfg.floating, "Floating arithmetic with absolute tolerance 1e-9");
        ex->excludes(fl);
    }
    oracle_cmd->add_option("--oracle-cap", cfg.oracle_cap, "Largest vertex count the oracle accepts");
    sweep_cmd->add_option("--family", cfg.family, "Must be windmill")->required();
    sweep_cmd->add_option("--params", cfg.params, "Clique size k")->delimiter(',')->required();
    sweep_cmd->add_option("--from", cfg.eta_from, "First number of copies");
    sweep_cmd->add_option("--to", cfg.eta_to, "Last number of copies");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        return run(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidFamily& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    } catch (const InvalidGraph& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kPrecondition;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kPrecondition;
    }
}
