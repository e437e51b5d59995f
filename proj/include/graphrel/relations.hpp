#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "graphrel/centralities.hpp"
#include "graphrel/error.hpp"
#include "graphrel/graph.hpp"
#include "graphrel/neighborhood.hpp"
#include "graphrel/paths.hpp"
#include "graphrel/scalar.hpp"

namespace graphrel {

enum class RelationId {
    lemma1,       ///< L(N(i)) = 2 - c_i per vertex
    thm1,         ///< E_loc = (1 + C_WS) / 2
    thm2,         ///< C_WS >= 1 - mean Str(i) / (d_i (d_i - 1))
    thm3,         ///< C_WS <= 1 - BC_loc
    cor_sandwich, ///< BC(i,N(i))/(d(d-1)) <= L(N(i)) - 1 <= Str(i)/(d(d-1))
    lemma2,       ///< mean Clo >= 1 / L
    thm4,         ///< clo_loc >= 1 / (2 - C_WS)
    lemma3,       ///< mean Rad = diam + 1 - L
    thm5,         ///< C_WS = rad_loc - 1 + #complete N(i) / n
    thm6,         ///< co-monotone degree/clustering: C_WS <= C
    cor_thm6,     ///< anti-monotone degree/clustering: C_WS >= C
    cor_regular,  ///< regular: C_WS = C
};

std::string_view relation_name(RelationId id);

/**
 * Outcome of one relation check.
 *
 * slack is oriented so that the relation holds iff slack >= 0 (inequalities)
 * or slack == 0 (identities): rhs - lhs for "<=" and "=", lhs - rhs for ">=".
 * Per-vertex relations report the worst vertex slack and list every
 * violating vertex in witnesses. In exact mode there is no tolerance.
 */
template <typename Scalar>
struct RelationReport
{
    RelationId id = RelationId::lemma1;
    bool identity = false;
    Scalar lhs{};
    Scalar rhs{};
    Scalar slack{};
    bool holds = false;
    bool equality_expected = false;
    bool equality_observed = false;
    bool hypothesis_met = true;
    std::vector<std::string> witnesses;
    std::vector<std::string> notes;
};

struct CheckOptions
{
    /// Run the checks on graphs with degree-1 vertices under the zero
    /// convention instead of refusing them.
    bool allow_pendant = false;
};

/// Everything the checks read, computed once per graph.
template <typename Scalar>
struct GraphAnalysis
{
    const Graph* graph = nullptr;
    DistanceData distances;
    CentralityReport<Scalar> centralities;
    NeighborhoodProfile<Scalar> neighborhoods;
    CheckOptions options;

    const Graph& g() const { return *graph; }
};

/// Throws DisconnectedGraph or PreconditionError (n < 2). The graph must
/// outlive the analysis.
template <typename Scalar>
GraphAnalysis<Scalar> analyze(const Graph& g, CheckOptions options = {})
{
    if (g.n() < 2)
        throw PreconditionError("relation checks need n >= 2");
    GraphAnalysis<Scalar> a;
    a.graph = &g;
    a.distances = all_pairs(g);
    a.centralities = compute_centralities<Scalar>(g, a.distances);
    a.neighborhoods = compute_neighborhood_profile<Scalar>(g, a.distances);
    a.options = options;
    return a;
}

namespace detail {

inline void require_no_pendant(const Graph& g, const CheckOptions& opt, RelationId id)
{
    if (!opt.allow_pendant && !validate_no_pendant(g))
        throw PreconditionError(std::string(relation_name(id)) +
                                ": graph has vertices of degree < 2 (use allow_pendant)");
}

template <typename Scalar>
Scalar mean(const std::vector<Scalar>& v)
{
    Scalar sum(0);
    for (const auto& x : v)
        sum += x;
    return sum / Scalar(static_cast<std::int64_t>(v.size()));
}

template <typename Scalar>
Scalar pair_count(int d)
{
    return Scalar(static_cast<std::int64_t>(d) * (d - 1));
}

template <typename Scalar>
RelationReport<Scalar> finish(RelationReport<Scalar> r)
{
    using T = ScalarTraits<Scalar>;
    r.equality_observed = T::is_zero(r.slack);
    if (r.identity)
        r.holds = r.equality_observed;
    else
        r.holds = T::is_nonnegative(r.slack);
    return r;
}

template <typename Scalar>
RelationReport<Scalar> inequality_le(RelationId id, Scalar lhs, Scalar rhs)
{
    RelationReport<Scalar> r;
    r.id = id;
    r.slack = rhs - lhs;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

template <typename Scalar>
RelationReport<Scalar> inequality_ge(RelationId id, Scalar lhs, Scalar rhs)
{
    RelationReport<Scalar> r;
    r.id = id;
    r.slack = lhs - rhs;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

template <typename Scalar>
RelationReport<Scalar> identity(RelationId id, Scalar lhs, Scalar rhs)
{
    auto r = inequality_le(id, std::move(lhs), std::move(rhs));
    r.identity = true;
    r.equality_expected = true;
    return r;
}

template <typename Scalar>
std::string vertex_witness(const Graph& g, Vertex i, const Scalar& slack)
{
    return "vertex " + g.label(i) + ": slack " + to_string(slack);
}

/// Ordering hypotheses on (degree, clustering): co-monotone means
/// d_i <= d_j implies c_i <= c_j for every pair, anti-monotone the reverse.
template <typename Scalar>
std::pair<bool, bool> degree_clustering_ordering(const CentralityReport<Scalar>& c)
{
    using T = ScalarTraits<Scalar>;
    bool co = true, anti = true;
    const std::size_t n = c.degree.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (c.degree[i] > c.degree[j])
                continue;
            const Scalar diff = c.local_clustering[j] - c.local_clustering[i];
            if (!T::is_nonnegative(diff))
                co = false;
            if (!T::is_nonnegative(-diff))
                anti = false;
        }
    return {co, anti};
}

} // namespace detail

template <typename Scalar>
RelationReport<Scalar> check_lemma1(const GraphAnalysis<Scalar>& a)
{
    const Graph& g = a.g();
    detail::require_no_pendant(g, a.options, RelationId::lemma1);
    const auto& c = a.centralities.local_clustering;
    const auto& L = a.neighborhoods.avg_path;

    using std::abs;
    Scalar lhs(0), rhs(0), worst(0);
    std::vector<std::string> witnesses;
    for (Vertex i = 0; i < g.n(); ++i) {
        if (g.degree(i) < 2)
            continue;
        lhs += L[i];
        rhs += Scalar(2) - c[i];
        Scalar dev = Scalar(2) - c[i] - L[i];
        if (!ScalarTraits<Scalar>::is_zero(dev)) {
            witnesses.push_back(detail::vertex_witness(g, i, dev));
            if (ScalarTraits<Scalar>::is_zero(worst) || abs(dev) > abs(worst))
                worst = dev;
        }
    }
    const Scalar n(g.n());
    auto r = detail::identity<Scalar>(RelationId::lemma1, lhs / n, rhs / n);
    r.slack = worst;
    r.witnesses = std::move(witnesses);
    return detail::finish(std::move(r));
}

template <typename Scalar>
RelationReport<Scalar> check_thm1(const GraphAnalysis<Scalar>& a)
{
    detail::require_no_pendant(a.g(), a.options, RelationId::thm1);
    const auto& c = a.centralities;
    return detail::finish(detail::identity<Scalar>(RelationId::thm1, c.local_efficiency,
                                                   (Scalar(1) + c.average_clustering) / Scalar(2)));
}

template <typename Scalar>
RelationReport<Scalar> check_thm2(const GraphAnalysis<Scalar>& a)
{
    const Graph& g = a.g();
    detail::require_no_pendant(g, a.options, RelationId::thm2);
    const auto& c = a.centralities;
    Scalar stress_term(0);
    for (Vertex i = 0; i < g.n(); ++i)
        if (g.degree(i) >= 2)
            stress_term += ScalarTraits<Scalar>::from_count(c.stress[i]) /
                           detail::pair_count<Scalar>(g.degree(i));
    stress_term /= Scalar(g.n());

    auto r = detail::inequality_ge<Scalar>(RelationId::thm2, c.average_clustering,
                                           Scalar(1) - stress_term);
    r.equality_expected = c.diameter == 2;
    return detail::finish(std::move(r));
}

template <typename Scalar>
RelationReport<Scalar> check_thm3(const GraphAnalysis<Scalar>& a)
{
    const Graph& g = a.g();
    detail::require_no_pendant(g, a.options, RelationId::thm3);
    const auto& c = a.centralities;
    const auto& nbh = a.neighborhoods;

    Scalar bc_term(0);
    bool clique_unions = true, unique_detours = true;
    for (Vertex i = 0; i < g.n(); ++i) {
        if (g.degree(i) >= 2)
            bc_term += nbh.betweenness[i] / detail::pair_count<Scalar>(g.degree(i));
        clique_unions = clique_unions && is_clique_union_neighborhood(g, i);
        unique_detours = unique_detours && has_unique_detours(g, i);
    }
    bc_term /= Scalar(g.n());

    auto r = detail::inequality_le<Scalar>(RelationId::thm3, c.average_clustering, Scalar(1) - bc_term);
    r.equality_expected = clique_unions && unique_detours;
    if (clique_unions && !unique_detours)
        r.notes.push_back("every neighborhood is a disjoint union of cliques, but some non-adjacent "
                          "neighbor pair has more than one common neighbor; equality not expected");
    return detail::finish(std::move(r));
}

template <typename Scalar>
RelationReport<Scalar> check_cor_sandwich(const GraphAnalysis<Scalar>& a)
{
    const Graph& g = a.g();
    detail::require_no_pendant(g, a.options, RelationId::cor_sandwich);
    const auto& nbh = a.neighborhoods;
    const auto& str = a.centralities.stress;
    using T = ScalarTraits<Scalar>;

    Scalar lower_sum(0), upper_sum(0);
    std::optional<Scalar> worst;
    std::vector<std::string> witnesses;
    for (Vertex i = 0; i < g.n(); ++i) {
        if (g.degree(i) < 2)
            continue;
        const Scalar pairs = detail::pair_count<Scalar>(g.degree(i));
        const Scalar lower = nbh.betweenness[i] / pairs;
        const Scalar middle = nbh.avg_path[i] - Scalar(1);
        const Scalar upper = T::from_count(str[i]) / pairs;
        lower_sum += lower;
        upper_sum += upper;
        Scalar s = std::min<Scalar>(middle - lower, upper - middle);
        if (!T::is_nonnegative(s))
            witnesses.push_back(detail::vertex_witness(g, i, s));
        if (!worst || s < *worst)
            worst = s;
    }
    const Scalar n(g.n());
    auto r = detail::inequality_le<Scalar>(RelationId::cor_sandwich, lower_sum / n, upper_sum / n);
    r.slack = worst.value_or(Scalar(0));
    r.witnesses = std::move(witnesses);
    return detail::finish(std::move(r));
}

template <typename Scalar>
RelationReport<Scalar> check_lemma2(const GraphAnalysis<Scalar>& a)
{
    const auto& c = a.centralities;
    auto r = detail::inequality_ge<Scalar>(RelationId::lemma2, detail::mean(c.closeness),
                                           Scalar(1) / c.avg_path_length);
    const auto& dist = a.distances.dist;
    const auto row0 = dist.col(0).template cast<std::int64_t>().sum();
    r.equality_expected = true;
    for (Eigen::Index v = 1; v < dist.cols(); ++v)
        if (dist.col(v).template cast<std::int64_t>().sum() != row0)
            r.equality_expected = false;
    return detail::finish(std::move(r));
}

template <typename Scalar>
RelationReport<Scalar> check_thm4(const GraphAnalysis<Scalar>& a)
{
    detail::require_no_pendant(a.g(), a.options, RelationId::thm4);
    const auto& c = a.centralities;
    return detail::finish(detail::inequality_ge<Scalar>(RelationId::thm4, detail::mean(a.neighborhoods.closeness),
                                                        Scalar(1) / (Scalar(2) - c.average_clustering)));
}

template <typename Scalar>
RelationReport<Scalar> check_lemma3(const GraphAnalysis<Scalar>& a)
{
    const auto& c = a.centralities;
    return detail::finish(detail::identity<Scalar>(RelationId::lemma3, detail::mean(c.radiality),
                                                   Scalar(c.diameter + 1) - c.avg_path_length));
}

template <typename Scalar>
RelationReport<Scalar> check_thm5(const GraphAnalysis<Scalar>& a)
{
    const Graph& g = a.g();
    detail::require_no_pendant(g, a.options, RelationId::thm5);
    const auto& nbh = a.neighborhoods;
    const auto complete = std::count(nbh.complete.begin(), nbh.complete.end(), 1);
    auto r = detail::identity<Scalar>(RelationId::thm5, a.centralities.average_clustering,
                                      detail::mean(nbh.radiality) - Scalar(1) +
                                          ratio<Scalar>(complete, g.n()));
    r.notes.push_back("complete neighborhoods: " + std::to_string(complete) + " of " +
                      std::to_string(g.n()));
    return detail::finish(std::move(r));
}

/// C_WS against C under the degree/clustering ordering hypotheses.
///
/// The report id records which statement applied: cor_regular for regular
/// graphs, thm6 for co-monotone (C_WS <= C), cor_thm6 for anti-monotone
/// (C_WS >= C). When both orderings hold equality is asserted; when neither
/// holds, hypothesis_met is false and no direction is asserted.
template <typename Scalar>
RelationReport<Scalar> check_thm6(const GraphAnalysis<Scalar>& a)
{
    const auto& c = a.centralities;
    if (!c.global_clustering)
        throw PreconditionError("thm6: global clustering undefined (every degree <= 1)");
    const auto [co, anti] = detail::degree_clustering_ordering(c);
    const bool regular = is_regular(a.g());

    RelationReport<Scalar> r;
    if (co && anti) {
        r = detail::identity<Scalar>(regular ? RelationId::cor_regular : RelationId::thm6,
                                     c.average_clustering, *c.global_clustering);
        r.equality_expected = true;
    } else if (anti) {
        r = detail::inequality_ge<Scalar>(RelationId::cor_thm6, c.average_clustering, *c.global_clustering);
    } else {
        r = detail::inequality_le<Scalar>(RelationId::thm6, c.average_clustering, *c.global_clustering);
        r.hypothesis_met = co;
    }
    r.notes.push_back(std::string("ordering: co-monotone=") + (co ? "yes" : "no") +
                      ", anti-monotone=" + (anti ? "yes" : "no") + ", regular=" + (regular ? "yes" : "no"));
    r.notes.push_back("direction follows Chebyshev's sum inequality: co-monotone degree and "
                      "clustering give C_WS <= C, anti-monotone give C_WS >= C");
    r = detail::finish(std::move(r));
    if (!r.hypothesis_met)
        r.holds = true;
    return r;
}

/// Every check in a fixed order.
template <typename Scalar>
std::vector<RelationReport<Scalar>> check_all(const GraphAnalysis<Scalar>& a)
{
    return {check_lemma1(a), check_thm1(a), check_thm2(a), check_thm3(a), check_cor_sandwich(a),
            check_lemma2(a), check_thm4(a), check_lemma3(a), check_thm5(a), check_thm6(a)};
}

template <typename Scalar>
std::vector<RelationReport<Scalar>> check_all(const Graph& g, CheckOptions options = {})
{
    if (!options.allow_pendant && !validate_no_pendant(g))
        throw PreconditionError("graph has vertices of degree < 2 (use allow_pendant)");
    return check_all(analyze<Scalar>(g, options));
}

struct WindmillRow
{
    int copies = 0;
    Rational average_clustering;
    Rational global_clustering;
};

struct WindmillSweep
{
    int clique_size = 0;
    std::vector<WindmillRow> rows;
    bool average_strictly_increasing = false;
    bool global_strictly_decreasing = false;
};

/// C_WS and C of windmill(eta, k) for eta in [eta_min, eta_max].
/// Throws InvalidFamily for eta_min < 1, eta_max < eta_min or k < 3.
WindmillSweep sweep_windmill(int eta_min, int eta_max, int k);

} // namespace graphrel
