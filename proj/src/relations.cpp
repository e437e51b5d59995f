#include "graphrel/relations.hpp"

#include <array>

#include "graphrel/generators.hpp"

namespace graphrel {

std::string_view relation_name(RelationId id)
{
    static constexpr std::array<std::string_view, 12> names{
        "lemma1", "thm1", "thm2",   "thm3",   "cor_sandwich", "lemma2",
        "thm4",   "lemma3", "thm5", "thm6",   "cor_thm6",     "cor_regular"};
    return names[static_cast<std::size_t>(id)];
}

WindmillSweep sweep_windmill(int eta_min, int eta_max, int k)
{
    if (eta_min < 1 || eta_max < eta_min)
        throw InvalidFamily("windmill sweep: need 1 <= eta_min <= eta_max");
    if (k < 3)
        throw InvalidFamily("windmill sweep: clique size k >= 3 required");

    WindmillSweep sweep;
    sweep.clique_size = k;
    for (int eta = eta_min; eta <= eta_max; ++eta) {
        Graph g = generate(make_family_spec(Family::windmill, {eta, k}));
        sweep.rows.push_back({eta, average_clustering<Rational>(g), global_clustering<Rational>(g)});
    }

    sweep.average_strictly_increasing = sweep.rows.size() >= 2;
    sweep.global_strictly_decreasing = sweep.rows.size() >= 2;
    for (std::size_t r = 1; r < sweep.rows.size(); ++r) {
        if (!(sweep.rows[r].average_clustering > sweep.rows[r - 1].average_clustering))
            sweep.average_strictly_increasing = false;
        if (!(sweep.rows[r].global_clustering < sweep.rows[r - 1].global_clustering))
            sweep.global_strictly_decreasing = false;
    }
    return sweep;
}

} // namespace graphrel
