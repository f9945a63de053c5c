#include "kolam/validate.hpp"

#include <cstdio>

namespace kolam {

namespace {

bool invariant_under(const gate_config& config, sym_element elem) {
    const grid_spec& g = config.grid;
    for (int s = 0; s < g.site_count(); ++s) {
        gate_site image = apply_symmetry(g, elem, g.site_at(s));
        if (config.states[s] != config.states[g.site_index(image.x, image.y)]) return false;
    }
    return true;
}

bool invariant_under_group(const gate_config& config, symmetry_group group) {
    if (!group_valid_for(group, config.grid)) return false;
    for (sym_element e : group_elements(group))
        if (!invariant_under(config, e)) return false;
    return true;
}

std::string num(double v, const char* fmt = "%.4f") {
    char buf[48];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

} // namespace

symmetry_group detect_symmetry(const gate_config& config) {
    for (symmetry_group g : {symmetry_group::d4, symmetry_group::hv, symmetry_group::h_mirror,
                             symmetry_group::v_mirror, symmetry_group::rot180})
        if (invariant_under_group(config, g)) return g;
    return symmetry_group::none;
}

validation_report validate(const gate_config& config, const render_params& params) {
    params.check();
    validation_report rep;
    loop_set loops = trace(config);
    auto paths = smooth_path(loops, config.grid);

    rep.loops = static_cast<int>(loops.loops.size());
    rep.clearance = min_clearance(paths, config.grid);
    rep.required_clearance = params.dot_radius + params.stroke / 2.0;
    rep.detected = detect_symmetry(config);
    rep.tangent_mismatch = 0.0;
    for (const auto& p : paths)
        rep.tangent_mismatch = std::max(rep.tangent_mismatch, max_tangent_mismatch(p));
    rep.stray_segments = non_diagonal_segment_count(paths);
    auto enclosed = enclosure_check(config);
    for (bool e : enclosed)
        if (e) ++rep.dots_enclosed;
    const int dots = config.grid.dot_count();

    rep.rules.push_back({1, rep.clearance >= rep.required_clearance,
                         "clearance " + num(rep.clearance) + " >= " + num(rep.required_clearance)});
    rep.rules.push_back({2, rep.loops == 1, "loops " + std::to_string(rep.loops)});
    rep.rules.push_back({3, rep.dots_enclosed == dots && rep.detected != symmetry_group::none,
                         "dots " + std::to_string(rep.dots_enclosed) + "/" + std::to_string(dots) +
                             " enclosed, symmetry " + to_string(rep.detected)});
    rep.rules.push_back({4, rep.tangent_mismatch < 1e-9,
                         "tangent mismatch " + num(rep.tangent_mismatch, "%.1e") + " rad"});
    rep.rules.push_back({5, rep.stray_segments == 0,
                         "axis aligned segments " + std::to_string(rep.stray_segments)});

    rep.pass = true;
    for (const auto& r : rep.rules) rep.pass = rep.pass && r.pass;
    return rep;
}

std::string format_report(const validation_report& report, bool machine) {
    std::string out;
    for (const auto& r : report.rules) {
        if (machine)
            out += "rule-" + std::to_string(r.rule) + (r.pass ? "=pass\n" : "=fail\n");
        else
            out += "rule-" + std::to_string(r.rule) + (r.pass ? " PASS " : " FAIL ") + r.detail +
                   "\n";
    }
    if (machine) {
        out += "clearance=" + num(report.clearance) + "\n";
        out += "loops=" + std::to_string(report.loops) + "\n";
        out += "symmetry=" + std::string(to_string(report.detected)) + "\n";
        out += report.pass ? "result=pass\n" : "result=fail\n";
    } else {
        out += report.pass ? "result PASS\n" : "result FAIL\n";
    }
    return out;
}

} // namespace kolam
