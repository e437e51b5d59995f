// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "graphrel/centralities.hpp"
#include "graphrel/neighborhood.hpp"
#include "graphrel/oracle.hpp"
#include "graphrel/relations.hpp"
#include "graphrel/report_json.hpp"
#include "suite.hpp"

using namespace graphrel;
using testbed::NamedGraph;

namespace {

struct Outcome
{
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

struct Analyzed
{
    std::string name;
    Graph graph;
    GraphAnalysis<Rational> analysis;
};

std::vector<Analyzed> analyze_all(const std::vector<NamedGraph>& graphs)
{
    std::vector<Analyzed> out;
    out.reserve(graphs.size());
    for (const auto& [name, g] : graphs)
        out.push_back({name, g, {}});
    // analysis keeps a pointer to the graph, so build it after the vector is stable
    for (auto& a : out)
        a.analysis = analyze<Rational>(a.graph);
    return out;
}

bool is_kind(const std::string& name, const char* prefix)
{
    return name.rfind(prefix, 0) == 0;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome criterion1(double& elapsed)
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& a : analyze_all(testbed::full_suite())) {
        auto r = check_thm1(a.analysis);
        if (!r.holds || r.slack != 0)
            o.fail(a.name + ": slack " + to_string(r.slack));
    }
    elapsed = seconds_since(t0);
    if (elapsed >= 10)
        o.fail("took " + std::to_string(elapsed) + " s");
    return o;
}

Outcome criterion2(const std::vector<Analyzed>& suite)
{
    Outcome o;
    for (const auto& a : suite) {
        const auto& c = a.analysis.centralities;
        const auto& p = a.analysis.neighborhoods;
        for (Vertex i = 0; i < a.graph.n(); ++i)
            if (p.avg_path[i] != 2 - c.local_clustering[i])
                o.fail(a.name + ": vertex " + std::to_string(i));
        if (check_lemma1(a.analysis).slack != 0)
            o.fail(a.name + ": nonzero slack");
    }
    return o;
}

Outcome criterion3(const std::vector<Analyzed>& suite)
{
    Outcome o;
    int equal = 0;
    for (const auto& a : suite) {
        auto r = check_thm2(a.analysis);
        if (!r.holds)
            o.fail(a.name + ": violated");
        if (a.analysis.centralities.diameter <= 2) {
            if (r.slack != 0)
                o.fail(a.name + ": diameter <= 2 but slack " + to_string(r.slack));
            ++equal;
        }
    }
    o.detail = o.pass ? std::to_string(equal) + " equality instances" : o.detail;
    return o;
}

Outcome criterion4(const std::vector<Analyzed>& suite)
{
    Outcome o;
    int flagged = 0;
    for (const auto& a : suite) {
        auto r = check_thm3(a.analysis);
        flagged += r.equality_expected;
        if (!r.holds)
            o.fail(a.name + ": violated");
        if (r.equality_expected != r.equality_observed)
            o.fail(a.name + ": detector and numeric equality disagree");
        if ((is_kind(a.name, "complete(") || is_kind(a.name, "windmill(")) && !r.equality_expected)
            o.fail(a.name + ": equality not detected");
    }
    if (o.pass)
        o.detail = std::to_string(flagged) + " of " + std::to_string(suite.size()) + " flagged equal";
    return o;
}

Outcome criterion5(const std::vector<Analyzed>& suite)
{
    Outcome o;
    for (const auto& a : suite) {
        const Graph& g = a.graph;
        const auto& c = a.analysis.centralities;
        const auto& p = a.analysis.neighborhoods;
        for (Vertex i = 0; i < g.n(); ++i) {
            const Rational pairs(static_cast<std::int64_t>(g.degree(i)) * (g.degree(i) - 1));
            const Rational mid = p.avg_path[i] - 1;
            if (p.betweenness[i] / pairs > mid || mid > Rational(c.stress[i]) / pairs)
                o.fail(a.name + ": vertex " + std::to_string(i));
        }
        if (!check_cor_sandwich(a.analysis).holds)
            o.fail(a.name + ": report violated");
    }
    return o;
}

Outcome criterion6(const std::vector<Analyzed>& suite)
{
    Outcome o;
    for (const auto& a : suite) {
        for (auto r : {check_lemma2(a.analysis), check_thm4(a.analysis), check_lemma3(a.analysis),
                       check_thm5(a.analysis)}) {
            if (!r.holds)
                o.fail(a.name + ": " + std::string(relation_name(r.id)) + " violated");
            if (r.identity && r.slack != 0)
                o.fail(a.name + ": " + std::string(relation_name(r.id)) + " slack " + to_string(r.slack));
        }
    }
    Graph w = generate(make_family_spec(Family::windmill, {2, 3}));
    auto a = analyze<Rational>(w);
    auto r = check_thm5(a);
    if (r.notes.empty() || r.notes.front() != "complete neighborhoods: 4 of 5")
        o.fail("windmill(2,3): complete-neighborhood count");
    if (a.centralities.average_clustering != Rational(13, 15))
        o.fail("windmill(2,3): C_WS " + to_string(a.centralities.average_clustering));
    if (rad_loc<Rational>(w, a.distances) != Rational(16, 15))
        o.fail("windmill(2,3): rad_loc");
    return o;
}

Outcome criterion7(const std::vector<Analyzed>& suite)
{
    Outcome o;
    for (const auto& a : suite) {
        auto r = check_thm6(a.analysis);
        if (!r.holds)
            o.fail(a.name + ": violated");
        if (is_regular(a.graph) && (r.id != RelationId::cor_regular || r.lhs != r.rhs))
            o.fail(a.name + ": regular but C_WS != C");
        if (is_kind(a.name, "windmill(")
            && (r.id != RelationId::cor_thm6 || !r.hypothesis_met || r.lhs < r.rhs))
            o.fail(a.name + ": anti-monotone case not detected");
    }
    for (int n = 3; n <= 5; ++n) {
        Graph g = generate(make_family_spec(Family::complete_glued_cycles, {n}));
        auto r = check_thm6(analyze<Rational>(g));
        if (!(r.lhs < r.rhs))
            o.fail("complete-with-glued-4-cycles(" + std::to_string(n) + "): C_WS >= C");
    }
    return o;
}

Outcome criterion8(double& elapsed)
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    auto s = sweep_windmill(2, 50, 3);
    elapsed = seconds_since(t0);
    if (!s.average_strictly_increasing)
        o.fail("C_WS not strictly increasing");
    if (!s.global_strictly_decreasing)
        o.fail("C not strictly decreasing");
    const auto& last = s.rows.back();
    if (last.copies != 50 || !(last.average_clustering > Rational(95, 100)) || !(last.global_clustering < Rational(5, 100)))
        o.fail("endpoint thresholds at eta=50");
    if (elapsed >= 5)
        o.fail("took " + std::to_string(elapsed) + " s");
    if (o.pass)
        o.detail = "C_WS(50)=" + std::to_string(to_double(last.average_clustering))
                   + " C(50)=" + std::to_string(to_double(last.global_clustering));
    return o;
}

Outcome criterion9(double& elapsed)
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    auto graphs = testbed::small_family_suite();
    for (std::uint64_t seed = 0; seed < 200; ++seed)
        graphs.push_back(testbed::random_graph(seed, 4, 10));
    for (const auto& [name, g] : graphs) {
        auto expected = oracle::oracle_measures(g);
        auto dd = all_pairs(g);
        auto fast = compute_centralities<Rational>(g, dd);
        auto profile = compute_neighborhood_profile<Rational>(g, dd);
        if (!(expected.centralities == fast) || !(expected.neighborhoods == profile)) {
            auto lines = diff_reports(expected.centralities, fast);
            auto more = diff_reports(expected.neighborhoods, profile);
            lines.insert(lines.end(), more.begin(), more.end());
            o.fail(name + ": " + (lines.empty() ? std::string("mismatch") : lines.front()));
        }
    }
    elapsed = seconds_since(t0);
    if (elapsed >= 60)
        o.fail("took " + std::to_string(elapsed) + " s");
    if (o.pass)
        o.detail = std::to_string(graphs.size()) + " graphs";
    return o;
}

Outcome criterion10(const std::vector<Analyzed>& suite)
{
    Outcome o;
    for (const auto& a : suite) {
        const auto& dd = a.analysis.distances;
        if (betweenness<Rational>(a.graph, dd) != betweenness_by_definition<Rational>(dd))
            o.fail(a.name + ": betweenness");
        if (stress(a.graph, dd) != stress_by_definition(dd))
            o.fail(a.name + ": stress");
    }
    return o;
}

} // namespace

int main()
{
    int failures = 0;
    auto report = [&](int id, const char* what, const std::function<Outcome()>& run) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = seconds_since(t0);
        failures += !o.pass;
        std::printf("criterion %2d: %s  %s (%.2f s)%s%s\n", id, o.pass ? "PASS" : "FAIL", what, secs,
                    o.detail.empty() ? "" : "  ", o.detail.c_str());
        std::fflush(stdout);
    };

    double t1 = 0, t8 = 0, t9 = 0;
    report(1, "local efficiency identity, full suite, < 10 s", [&] { return criterion1(t1); });

    const auto suite = analyze_all(testbed::full_suite());
    report(2, "per-vertex neighborhood path length identity", [&] { return criterion2(suite); });
    report(3, "stress bound, equality at diameter <= 2", [&] { return criterion3(suite); });
    report(4, "betweenness bound, detector agrees with equality", [&] { return criterion4(suite); });
    report(5, "per-vertex betweenness/stress sandwich", [&] { return criterion5(suite); });
    report(6, "closeness and radiality relations, windmill(2,3) hand values", [&] { return criterion6(suite); });
    report(7, "average vs global clustering direction", [&] { return criterion7(suite); });
    report(8, "windmill divergence eta=2..50, k=3, < 5 s", [&] { return criterion8(t8); });
    report(9, "oracle equivalence, < 60 s", [&] { return criterion9(t9); });
    report(10, "dependency accumulation matches definition", [&] { return criterion10(suite); });

    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
