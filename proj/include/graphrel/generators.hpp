#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphrel/graph.hpp"

namespace graphrel {

enum class Family {
    complete,              ///< (n)
    cycle,                 ///< (n)
    circulant,             ///< (n, offset...)
    hypercube,             ///< (dimension)
    windmill,              ///< (copies, clique size k): copies of K_{k-1} joined to one hub
    friendship,            ///< (copies) = windmill(copies, 3)
    complete_glued_cycles, ///< (n): K_n with a private 4-cycle through every vertex
    random_min_degree_2,   ///< (n [, edge probability in percent])
};

std::string_view family_name(Family f);

/// Accepts the canonical dashed names, e.g. "complete-with-glued-4-cycles".
/// Throws InvalidFamily for unknown names.
Family parse_family(std::string_view name);

/// Parametric description of a generated graph. Parameter arity and ranges are
/// checked by make_family_spec and again by generate.
struct FamilySpec
{
    Family family = Family::complete;
    std::vector<int> params;
    std::optional<std::uint64_t> seed;
    /// Lets generators emit graphs with degree-1 vertices (convention tests).
    bool allow_pendant = false;
};

FamilySpec make_family_spec(Family family, std::vector<int> params,
                            std::optional<std::uint64_t> seed = std::nullopt,
                            bool allow_pendant = false);

/// Human-readable "windmill(2,3)" style name.
std::string describe(const FamilySpec& spec);

Graph generate(const FamilySpec& spec);

/// Upper bound on G(n,p) resamples in the random family.
inline constexpr int kRandomFamilyMaxRetries = 100000;

} // namespace graphrel
