#include <map>

#include "doctest.h"
#include "kolam/error.hpp"
#include "kolam/search.hpp"
#include "kolam/validate.hpp"

using namespace kolam;

TEST_CASE("symmetry detection on pinned configurations") {
    CHECK(detect_symmetry(config_from_bits(make_grid(3, 3), "111111111111")) ==
          symmetry_group::d4);
    CHECK(detect_symmetry(config_from_bits(make_grid(2, 3), "1111111")) == symmetry_group::hv);
    CHECK(detect_symmetry(config_from_bits(make_grid(3, 3), "101101000000")) ==
          symmetry_group::hv);
    CHECK(detect_symmetry(config_from_bits(make_grid(1, 1), "")) == symmetry_group::d4);
}

TEST_CASE("symmetry detection partitions the 3x3 single loop family") {
    catalog all = enumerate_single_loop(make_grid(3, 3), symmetry_group::none);
    REQUIRE(all.entries.size() == 240);
    std::map<symmetry_group, int> counts;
    for (const auto& bits : all.entries)
        ++counts[detect_symmetry(config_from_bits(all.grid, bits))];
    CHECK(counts[symmetry_group::none] == 208);
    CHECK(counts[symmetry_group::h_mirror] == 10);
    CHECK(counts[symmetry_group::v_mirror] == 10);
    CHECK(counts[symmetry_group::rot180] == 10);
    CHECK(counts[symmetry_group::hv] == 2);
    CHECK(counts[symmetry_group::d4] == 0);
}

TEST_CASE("single dot passes every rule") {
    gate_config c{make_grid(1, 1), {}};
    validation_report rep = validate(c);
    CHECK(rep.pass);
    REQUIRE(rep.rules.size() == 5);
    for (const auto& r : rep.rules) CHECK(r.pass);
    CHECK(rep.loops == 1);
    CHECK(rep.dots_enclosed == 1);
    CHECK(rep.detected == symmetry_group::d4);
    CHECK(rep.clearance == doctest::Approx(0.70710678).epsilon(1e-6));
    CHECK(format_report(rep) ==
          "rule-1 PASS clearance 0.7071 >= 0.3800\n"
          "rule-2 PASS loops 1\n"
          "rule-3 PASS dots 1/1 enclosed, symmetry d4\n"
          "rule-4 PASS tangent mismatch 0.0e+00 rad\n"
          "rule-5 PASS axis aligned segments 0\n"
          "result PASS\n");
}

TEST_CASE("multiple loops fail rule two only") {
    gate_config c = config_from_bits(make_grid(3, 3), "111111111111");
    validation_report rep = validate(c);
    CHECK(!rep.pass);
    CHECK(rep.rules[0].pass);
    CHECK(!rep.rules[1].pass);
    CHECK(rep.rules[2].pass);
    CHECK(rep.rules[3].pass);
    CHECK(rep.rules[4].pass);
    CHECK(rep.loops == 9);
    CHECK(format_report(rep, true) ==
          "rule-1=pass\n"
          "rule-2=fail\n"
          "rule-3=pass\n"
          "rule-4=pass\n"
          "rule-5=pass\n"
          "clearance=0.7071\n"
          "loops=9\n"
          "symmetry=d4\n"
          "result=fail\n");
}

TEST_CASE("asymmetric single loops fail rule three") {
    catalog all = enumerate_single_loop(make_grid(3, 3), symmetry_group::none);
    int checked = 0;
    for (const auto& bits : all.entries) {
        gate_config c = config_from_bits(all.grid, bits);
        if (detect_symmetry(c) != symmetry_group::none) continue;
        validation_report rep = validate(c);
        CHECK(!rep.pass);
        CHECK(rep.rules[0].pass);
        CHECK(rep.rules[1].pass);
        CHECK(!rep.rules[2].pass);
        CHECK(rep.rules[3].pass);
        CHECK(rep.rules[4].pass);
        if (++checked == 5) break;
    }
    CHECK(checked == 5);
}

TEST_CASE("symmetric searched patterns validate cleanly") {
    catalog cat = enumerate_single_loop(make_grid(3, 3), symmetry_group::rot180);
    REQUIRE(cat.entries.size() == 12);
    for (const auto& bits : cat.entries) {
        validation_report rep = validate(config_from_bits(cat.grid, bits));
        CHECK(rep.pass);
        CHECK(rep.detected != symmetry_group::none);
    }
    search_request req;
    req.grid = make_grid(5, 5);
    req.symmetry = symmetry_group::hv;
    req.seed = 11;
    CHECK(validate(find_single_loop(req)).pass);
}

TEST_CASE("validate rejects unusable render parameters") {
    render_params p;
    p.dot_radius = 0.7;
    CHECK_THROWS_AS(validate(gate_config{make_grid(1, 1), {}}, p), error);
}
