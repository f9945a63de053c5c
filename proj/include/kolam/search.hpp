#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kolam/trace.hpp"

namespace kolam {

struct search_request {
    grid_spec grid;
    symmetry_group symmetry = symmetry_group::none;
    std::uint64_t seed = 0;
    double openness_target = 0.5; // desired share of OPEN gates in [0, 1]
    int max_restarts = 64;
};

// Catalog of every single-loop config invariant under one symmetry group,
// as canonical bit texts in lexicographic order.
struct catalog {
    grid_spec grid;
    symmetry_group symmetry = symmetry_group::none;
    std::vector<std::string> entries;

    bool operator==(const catalog&) const = default;
};

// Exhaustive sweep over the 2^orbits symmetric assignments. Refuses grids
// with more than 22 orbits rather than running for hours.
catalog enumerate_single_loop(const grid_spec& grid, symmetry_group symmetry);

// Seeded random start biased toward the openness target, then greedy orbit
// toggles that shrink |loop_count - 1|, restarting on local minima. Same
// seed, same answer. Throws search_exhausted when the restart budget runs
// out.
gate_config find_single_loop(const search_request& request);

// Catalog entry for a category index, wrapping modulo the catalog size.
gate_config pattern_for_category(const catalog& cat, std::uint64_t index); // throws no_pattern

// Catalog file format: "kolam-catalog W H SYMMETRY" header, then one bit
// text per line, sorted. Full-line '#' comments may precede the entries.
std::string serialize(const catalog& cat);
catalog deserialize_catalog(std::string_view text); // throws parse

} // namespace kolam
