#pragma once

#include <string>
#include <vector>

#include "kolam/geometry.hpp"
#include "kolam/trace.hpp"

namespace kolam {

// Largest symmetry group whose every element leaves the gate states
// unchanged; quarter turn groups are only considered on square grids.
symmetry_group detect_symmetry(const gate_config& config);

struct rule_report {
    int rule = 0;
    bool pass = false;
    std::string detail;
};

struct validation_report {
    std::vector<rule_report> rules; // five rules, in order
    bool pass = false;

    double clearance = 0.0;
    double required_clearance = 0.0;
    int loops = 0;
    int dots_enclosed = 0;
    symmetry_group detected = symmetry_group::none;
    double tangent_mismatch = 0.0;
    int stray_segments = 0;
};

// The five acceptance rules, measured on the traced geometry:
//   1 dot clearance covers the dot disk plus half the stroke
//   2 exactly one loop
//   3 every dot enclosed and some symmetry present
//   4 tangent continuity at every junction below 1e-9 rad
//   5 no axis aligned segments
validation_report validate(const gate_config& config, const render_params& params = {});

std::string format_report(const validation_report& report, bool machine = false);

} // namespace kolam
