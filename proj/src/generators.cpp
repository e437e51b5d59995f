#include "graphrel/generators.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <random>

#include "graphrel/error.hpp"

namespace graphrel {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kNames{{
    {Family::complete, "complete"},
    {Family::cycle, "cycle"},
    {Family::circulant, "circulant"},
    {Family::hypercube, "hypercube"},
    {Family::windmill, "windmill"},
    {Family::friendship, "friendship"},
    {Family::complete_glued_cycles, "complete-with-glued-4-cycles"},
    {Family::random_min_degree_2, "random-min-degree-2"},
}};

[[noreturn]] void bad(const FamilySpec& spec, const std::string& why)
{
    throw InvalidFamily(std::string(family_name(spec.family)) + ": " + why);
}

void expect_arity(const FamilySpec& spec, std::size_t lo, std::size_t hi)
{
    if (spec.params.size() < lo || spec.params.size() > hi) {
        std::string want = lo == hi ? std::to_string(lo)
                                    : std::to_string(lo) + ".." + std::to_string(hi);
        bad(spec, "expected " + want + " parameter(s), got " + std::to_string(spec.params.size()));
    }
}

void validate(const FamilySpec& spec)
{
    const auto& p = spec.params;
    for (int x : p)
        if (x < 1)
            bad(spec, "parameters must be positive integers");

    switch (spec.family) {
    case Family::complete:
        expect_arity(spec, 1, 1);
        if (p[0] < 3 && !spec.allow_pendant)
            bad(spec, "n >= 3 required for minimum degree 2");
        break;
    case Family::cycle:
        expect_arity(spec, 1, 1);
        if (p[0] < 3)
            bad(spec, "n >= 3 required");
        break;
    case Family::circulant: {
        if (p.size() < 2)
            bad(spec, "expected n followed by at least one offset");
        int n = p[0];
        int g = n;
        int degree = 0;
        for (std::size_t i = 1; i < p.size(); ++i) {
            if (p[i] > n / 2)
                bad(spec, "offsets must lie in [1, n/2]");
            g = std::gcd(g, p[i]);
            degree += (2 * p[i] == n) ? 1 : 2;
        }
        if (g != 1)
            bad(spec, "offsets must generate Z_n (gcd with n must be 1) for a connected graph");
        if (degree < 2 && !spec.allow_pendant)
            bad(spec, "offsets give degree < 2");
        break;
    }
    case Family::hypercube:
        expect_arity(spec, 1, 1);
        if (p[0] < 2 && !spec.allow_pendant)
            bad(spec, "dimension >= 2 required for minimum degree 2");
        if (p[0] > 14)
            bad(spec, "dimension above 14 exceeds the vertex cap");
        break;
    case Family::windmill:
        expect_arity(spec, 2, 2);
        if (p[1] < 3)
            bad(spec, "clique size k >= 3 required");
        break;
    case Family::friendship:
        expect_arity(spec, 1, 1);
        break;
    case Family::complete_glued_cycles:
        expect_arity(spec, 1, 1);
        break;
    case Family::random_min_degree_2:
        expect_arity(spec, 1, 2);
        if (p[0] < 3)
            bad(spec, "n >= 3 required");
        if (p.size() == 2 && p[1] > 100)
            bad(spec, "edge probability percent must be in [1, 100]");
        break;
    }
}

Graph make_complete(int n)
{
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return from_edge_list(e, n);
}

Graph make_circulant(int n, std::span<const int> offsets)
{
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int o : offsets)
            e.emplace_back(u, (u + o) % n);
    return from_edge_list(e, n);
}

Graph make_hypercube(int dim)
{
    int n = 1 << dim;
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int b = 0; b < dim; ++b)
            if (int v = u ^ (1 << b); u < v)
                e.emplace_back(u, v);
    return from_edge_list(e, n);
}

// Hub is vertex 0; copy c occupies 1 + c(k-1) .. (c+1)(k-1).
Graph make_windmill(int copies, int k)
{
    int block = k - 1;
    int n = 1 + copies * block;
    std::vector<Edge> e;
    for (int c = 0; c < copies; ++c) {
        int base = 1 + c * block;
        for (int a = 0; a < block; ++a) {
            e.emplace_back(0, base + a);
            for (int b = a + 1; b < block; ++b)
                e.emplace_back(base + a, base + b);
        }
    }
    return from_edge_list(e, n);
}

// K_n on 0..n-1; vertex v gets the cycle v, n+3v, n+3v+1, n+3v+2.
Graph make_complete_glued_cycles(int n)
{
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    for (int v = 0; v < n; ++v) {
        int a = n + 3 * v;
        e.emplace_back(v, a);
        e.emplace_back(a, a + 1);
        e.emplace_back(a + 1, a + 2);
        e.emplace_back(a + 2, v);
    }
    return from_edge_list(e, 4 * n);
}

double default_edge_probability(int n)
{
    return std::min(1.0, std::max(0.5, 3.0 * std::log(static_cast<double>(n)) / n));
}

Graph make_random(const FamilySpec& spec)
{
    int n = spec.params[0];
    double p = spec.params.size() == 2 ? spec.params[1] / 100.0 : default_edge_probability(n);
    std::mt19937_64 rng(spec.seed.value_or(0));
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    for (int attempt = 0; attempt < kRandomFamilyMaxRetries; ++attempt) {
        std::vector<Edge> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (unit(rng) < p)
                    e.emplace_back(u, v);
        Graph g = from_edge_list(e, n);
        if (is_connected(g) && (spec.allow_pendant || validate_no_pendant(g)))
            return g;
    }
    bad(spec, "no connected minimum-degree-2 sample within the retry bound");
}

} // namespace

std::string_view family_name(Family f)
{
    for (const auto& [family, name] : kNames)
        if (family == f)
            return name;
    return "unknown";
}

Family parse_family(std::string_view name)
{
    for (const auto& [family, n] : kNames)
        if (n == name)
            return family;
    throw InvalidFamily("unknown family '" + std::string(name) + "'");
}

FamilySpec make_family_spec(Family family, std::vector<int> params,
                            std::optional<std::uint64_t> seed, bool allow_pendant)
{
    FamilySpec spec{family, std::move(params), seed, allow_pendant};
    validate(spec);
    return spec;
}

std::string describe(const FamilySpec& spec)
{
    std::string s(family_name(spec.family));
    s += '(';
    for (std::size_t i = 0; i < spec.params.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(spec.params[i]);
    }
    s += ')';
    if (spec.seed)
        s += "[seed=" + std::to_string(*spec.seed) + "]";
    return s;
}

Graph generate(const FamilySpec& spec)
{
    validate(spec);
    const auto& p = spec.params;
    switch (spec.family) {
    case Family::complete:
        return make_complete(p[0]);
    case Family::cycle:
        return make_circulant(p[0], std::array{1});
    case Family::circulant:
        return make_circulant(p[0], std::span(p).subspan(1));
    case Family::hypercube:
        return make_hypercube(p[0]);
    case Family::windmill:
        return make_windmill(p[0], p[1]);
    case Family::friendship:
        return make_windmill(p[0], 3);
    case Family::complete_glued_cycles:
        return make_complete_glued_cycles(p[0]);
    case Family::random_min_degree_2:
        return make_random(spec);
    }
    throw InvalidFamily("unhandled family");
}

} // namespace graphrel
