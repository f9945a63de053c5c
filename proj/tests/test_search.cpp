#include "doctest.h"

#include <algorithm>
#include <set>

#include "kolam/search.hpp"
#include "oracles.hpp"

using namespace kolam;

namespace {

bool symmetric_under(const gate_config& config, symmetry_group group) {
    const grid_spec& g = config.grid;
    for (sym_element e : group_elements(group)) {
        for (int s = 0; s < g.site_count(); ++s) {
            gate_site image = apply_symmetry(g, e, g.site_at(s));
            if (config.states[s] != config.states[g.site_index(image.x, image.y)]) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("enumerate_single_loop(3x3, none) finds the 240 configs brute force finds") {
    grid_spec g = make_grid(3, 3);
    catalog cat = enumerate_single_loop(g, symmetry_group::none);
    std::set<std::string> brute;
    for (int bits = 0; bits < 4096; ++bits) {
        gate_config c = gate_config::all_open(g);
        for (int s = 0; s < 12; ++s) c.states[s] = bits >> s & 1;
        if (oracles::union_find_loop_count(c) == 1) brute.insert(c.bit_text());
    }
    CHECK(brute.size() == 240);
    CHECK(cat.entries.size() == 240);
    CHECK(std::set<std::string>(cat.entries.begin(), cat.entries.end()) == brute);
    CHECK(std::is_sorted(cat.entries.begin(), cat.entries.end()));
}

TEST_CASE("enumerate_single_loop respects symmetry") {
    catalog cat = enumerate_single_loop(make_grid(3, 3), symmetry_group::rot180);
    CHECK(cat.entries.size() == 12);
    for (const auto& entry : cat.entries) {
        gate_config c = config_from_bits(cat.grid, entry);
        CHECK(loop_count(c) == 1);
        CHECK(symmetric_under(c, symmetry_group::rot180));
    }

    // The 2x2 sweep: single-loop configs exist, but none of them is
    // rot180-symmetric.
    CHECK(enumerate_single_loop(make_grid(2, 2), symmetry_group::none).entries.size() == 4);
    CHECK(enumerate_single_loop(make_grid(2, 2), symmetry_group::rot180).entries.empty());
    CHECK(enumerate_single_loop(make_grid(3, 3), symmetry_group::d4).entries.empty());
}

TEST_CASE("enumerate_single_loop refuses oversized orbit spaces") {
    // 4x4 without symmetry has 24 orbits.
    CHECK_THROWS_AS(enumerate_single_loop(make_grid(4, 4), symmetry_group::none), error);
}

TEST_CASE("enumeration is deterministic") {
    catalog a = enumerate_single_loop(make_grid(3, 3), symmetry_group::rot180);
    catalog b = enumerate_single_loop(make_grid(3, 3), symmetry_group::rot180);
    CHECK(a == b);
    CHECK(serialize(a) == serialize(b));
}

TEST_CASE("find_single_loop returns a symmetric single loop") {
    for (auto [w, h, grp] :
         {std::tuple{3, 3, symmetry_group::none}, {4, 4, symmetry_group::none},
          {3, 3, symmetry_group::rot180}, {5, 5, symmetry_group::rot180},
          {4, 5, symmetry_group::rot180}, {3, 3, symmetry_group::h_mirror},
          {5, 5, symmetry_group::hv}}) {
        search_request req{make_grid(w, h), grp, 11, 0.5, 64};
        gate_config c = find_single_loop(req);
        CHECK(loop_count(c) == 1);
        CHECK(oracles::union_find_loop_count(c) == 1);
        CHECK(symmetric_under(c, grp));
    }
}

TEST_CASE("find_single_loop is deterministic per seed") {
    search_request req{make_grid(4, 4), symmetry_group::none, 99, 0.5, 64};
    gate_config a = find_single_loop(req);
    gate_config b = find_single_loop(req);
    CHECK(a == b);
}

TEST_CASE("seeds explore different configs") {
    std::set<std::string> seen;
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        search_request req{make_grid(4, 4), symmetry_group::none, seed, 0.5, 64};
        seen.insert(find_single_loop(req).bit_text());
    }
    CHECK(seen.size() > 1);
}

TEST_CASE("openness target biases the starting draw") {
    // With target 1.0 every draw starts all-OPEN; on a 2x3 grid that is
    // already a single loop, so the result must be all-OPEN exactly.
    search_request req{make_grid(2, 3), symmetry_group::none, 5, 1.0, 4};
    CHECK(find_single_loop(req).bit_text() == "0000000");
}

TEST_CASE("1x1 needs no gates") {
    search_request req{make_grid(1, 1), symmetry_group::d4, 7, 0.5, 1};
    gate_config c = find_single_loop(req);
    CHECK(c.states.empty());
    CHECK(loop_count(c) == 1);
}

TEST_CASE("find_single_loop reports exhaustion where no solution exists") {
    // No rot180-symmetric single loop exists on 2x2 (exhaustive sweep above).
    search_request req{make_grid(2, 2), symmetry_group::rot180, 3, 0.5, 8};
    CHECK_THROWS_AS(find_single_loop(req), error);
    try {
        find_single_loop(req);
    } catch (const error& e) {
        CHECK(e.kind() == errc::search_exhausted);
    }
}

TEST_CASE("find_single_loop validates the request") {
    search_request req{make_grid(3, 3), symmetry_group::none, 0, 1.5, 8};
    CHECK_THROWS_AS(find_single_loop(req), error);
    req.openness_target = 0.5;
    req.max_restarts = 0;
    CHECK_THROWS_AS(find_single_loop(req), error);
}

TEST_CASE("pattern_for_category wraps modulo the catalog size") {
    catalog cat = enumerate_single_loop(make_grid(3, 3), symmetry_group::rot180);
    REQUIRE(cat.entries.size() == 12);
    CHECK(pattern_for_category(cat, 0).bit_text() == cat.entries[0]);
    CHECK(pattern_for_category(cat, 13).bit_text() == cat.entries[1]);
    CHECK(pattern_for_category(cat, 12).bit_text() == cat.entries[0]);
    catalog empty{make_grid(2, 2), symmetry_group::rot180, {}};
    CHECK_THROWS_AS(pattern_for_category(empty, 0), error);
}

TEST_CASE("catalog file round-trip") {
    catalog cat = enumerate_single_loop(make_grid(3, 3), symmetry_group::rot180);
    std::string text = serialize(cat);
    CHECK(text.starts_with("kolam-catalog 3 3 rot180\n"));
    CHECK(deserialize_catalog(text) == cat);
}

TEST_CASE("catalog parse errors") {
    CHECK_THROWS_AS(deserialize_catalog("kolam-catalog 3 3 spiral\n"), error);
    CHECK_THROWS_AS(deserialize_catalog("kolam-gates 3 3 none\n"), error);
    CHECK_THROWS_AS(deserialize_catalog("kolam-catalog 2 3 d4\n"), error);
    // wrong bit length
    CHECK_THROWS_AS(deserialize_catalog("kolam-catalog 3 3 none\n0101\n"), error);
    // not a single loop
    CHECK_THROWS_AS(deserialize_catalog("kolam-catalog 3 3 none\n000000000000\n"), error);
    // out of order
    catalog cat = enumerate_single_loop(make_grid(3, 3), symmetry_group::rot180);
    std::string text = "kolam-catalog 3 3 rot180\n" + cat.entries[1] + "\n" + cat.entries[0] + "\n";
    CHECK_THROWS_AS(deserialize_catalog(text), error);
    // not symmetric under the declared group
    catalog none_cat = enumerate_single_loop(make_grid(2, 2), symmetry_group::none);
    std::string asym = "kolam-catalog 2 2 rot180\n" + none_cat.entries[0] + "\n";
    CHECK_THROWS_AS(deserialize_catalog(asym), error);
}
