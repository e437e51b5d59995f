#include "graphrel/report_json.hpp"

#include <cstdio>

namespace graphrel {

std::string ScalarTraits<double>::to_string(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

template <typename T>
std::string show(const T& x)
{
    if constexpr (std::is_same_v<T, Rational>)
        return graphrel::to_string(x);
    else
        return std::to_string(x);
}

template <typename T>
void compare(std::vector<std::string>& out, const char* field, const std::vector<T>& e,
             const std::vector<T>& a)
{
    if (e.size() != a.size()) {
        out.push_back(std::string(field) + ": size " + std::to_string(e.size()) + " vs " +
                      std::to_string(a.size()));
        return;
    }
    for (std::size_t i = 0; i < e.size(); ++i)
        if (!(e[i] == a[i]))
            out.push_back(std::string(field) + "[" + std::to_string(i) + "]: expected " + show(e[i]) +
                          ", got " + show(a[i]));
}

template <typename T>
void compare(std::vector<std::string>& out, const char* field, const T& e, const T& a)
{
    if (!(e == a))
        out.push_back(std::string(field) + ": expected " + show(e) + ", got " + show(a));
}

} // namespace

std::vector<std::string> diff_reports(const CentralityReport<Rational>& e, const CentralityReport<Rational>& a)
{
    std::vector<std::string> out;
    compare(out, "degree", e.degree, a.degree);
    compare(out, "local_clustering", e.local_clustering, a.local_clustering);
    compare(out, "betweenness", e.betweenness, a.betweenness);
    compare(out, "stress", e.stress, a.stress);
    compare(out, "closeness", e.closeness, a.closeness);
    compare(out, "radiality", e.radiality, a.radiality);
    compare(out, "density", e.density, a.density);
    compare(out, "diameter", e.diameter, a.diameter);
    compare(out, "avg_path_length", e.avg_path_length, a.avg_path_length);
    compare(out, "global_efficiency", e.global_efficiency, a.global_efficiency);
    compare(out, "average_clustering", e.average_clustering, a.average_clustering);
    if (e.global_clustering.has_value() != a.global_clustering.has_value())
        out.push_back("global_clustering: defined/undefined mismatch");
    else if (e.global_clustering)
        compare(out, "global_clustering", *e.global_clustering, *a.global_clustering);
    compare(out, "local_efficiency", e.local_efficiency, a.local_efficiency);
    return out;
}

std::vector<std::string> diff_reports(const NeighborhoodProfile<Rational>& e,
                                      const NeighborhoodProfile<Rational>& a)
{
    std::vector<std::string> out;
    compare(out, "neighborhood.avg_path", e.avg_path, a.avg_path);
    compare(out, "neighborhood.betweenness", e.betweenness, a.betweenness);
    compare(out, "neighborhood.diameter", e.diameter, a.diameter);
    compare(out, "neighborhood.radiality", e.radiality, a.radiality);
    compare(out, "neighborhood.closeness", e.closeness, a.closeness);
    std::vector<int> ec(e.complete.begin(), e.complete.end()), ac(a.complete.begin(), a.complete.end());
    compare(out, "neighborhood.complete", ec, ac);
    return out;
}

} // namespace graphrel
