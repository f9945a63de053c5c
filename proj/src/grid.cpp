#include "kolam/grid.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace kolam {

grid_spec make_grid(int width, int height) {
    if (width < 1 || height < 1)
        fail(errc::invalid_grid,
             "grid dimensions must be at least 1x1, got " + std::to_string(width) + "x" +
                 std::to_string(height));
    return grid_spec{width, height};
}

int grid_spec::site_index(int x, int y) const {
    if (!is_site(x, y)) return -1;
    if (x % 2 == 1) {
        // V-site: rows y = 2, 4, ..., 2H-2, W sites per row.
        return (y / 2 - 1) * width + (x - 1) / 2;
    }
    // H-site: rows y = 1, 3, ..., 2H-1, W-1 sites per row.
    return width * (height - 1) + (y - 1) / 2 * (width - 1) + (x - 2) / 2;
}

gate_site grid_spec::site_at(int index) const {
    if (index < 0 || index >= site_count())
        fail(errc::index_range, "site index " + std::to_string(index) + " out of range");
    int v_total = width * (height - 1);
    if (index < v_total) {
        int row = index / width, col = index % width;
        return gate_site{2 * col + 1, 2 * (row + 1), site_kind::v_site};
    }
    int rest = index - v_total;
    int row = rest / (width - 1), col = rest % (width - 1);
    return gate_site{2 * (col + 1), 2 * row + 1, site_kind::h_site};
}

std::vector<gate_site> grid_spec::gate_sites() const {
    std::vector<gate_site> sites;
    sites.reserve(site_count());
    for (int i = 0; i < site_count(); ++i) sites.push_back(site_at(i));
    return sites;
}

const std::vector<sym_element>& group_elements(symmetry_group group) {
    static const std::vector<sym_element> none = {sym_element::identity};
    static const std::vector<sym_element> h = {sym_element::identity, sym_element::mirror_h};
    static const std::vector<sym_element> v = {sym_element::identity, sym_element::mirror_v};
    static const std::vector<sym_element> r = {sym_element::identity, sym_element::rot180};
    static const std::vector<sym_element> hv = {sym_element::identity, sym_element::mirror_h,
                                                sym_element::mirror_v, sym_element::rot180};
    static const std::vector<sym_element> d4 = {
        sym_element::identity,      sym_element::rot90,         sym_element::rot180,
        sym_element::rot270,        sym_element::mirror_h,      sym_element::mirror_v,
        sym_element::mirror_d_main, sym_element::mirror_d_anti,
    };
    switch (group) {
    case symmetry_group::none: return none;
    case symmetry_group::h_mirror: return h;
    case symmetry_group::v_mirror: return v;
    case symmetry_group::rot180: return r;
    case symmetry_group::hv: return hv;
    case symmetry_group::d4: return d4;
    }
    fail(errc::invalid_symmetry, "unknown symmetry group");
}

bool group_valid_for(symmetry_group group, const grid_spec& grid) {
    return group != symmetry_group::d4 || grid.width == grid.height;
}

gate_site apply_symmetry(const grid_spec& grid, sym_element elem, const gate_site& site) {
    int w = grid.canvas_w(), h = grid.canvas_h();
    bool square_only = elem == sym_element::rot90 || elem == sym_element::rot270 ||
                       elem == sym_element::mirror_d_main || elem == sym_element::mirror_d_anti;
    if (square_only && grid.width != grid.height)
        fail(errc::invalid_symmetry, "quarter-turn and diagonal symmetries need a square grid");
    int x = site.x, y = site.y, nx = 0, ny = 0;
    switch (elem) {
    case sym_element::identity: nx = x; ny = y; break;
    case sym_element::mirror_h: nx = w - x; ny = y; break;
    case sym_element::mirror_v: nx = x; ny = h - y; break;
    case sym_element::rot180: nx = w - x; ny = h - y; break;
    case sym_element::rot90: nx = h - y; ny = x; break;
    case sym_element::rot270: nx = y; ny = w - x; break;
    case sym_element::mirror_d_main: nx = y; ny = x; break;
    case sym_element::mirror_d_anti: nx = h - y; ny = w - x; break;
    }
    return gate_site{nx, ny, nx % 2 == 1 ? site_kind::v_site : site_kind::h_site};
}

std::vector<std::vector<int>> orbits(const grid_spec& grid, symmetry_group group) {
    if (!group_valid_for(group, grid))
        fail(errc::invalid_symmetry, "d4 symmetry needs a square grid");
    const auto& elems = group_elements(group);
    int n = grid.site_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> result;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::set<int> orbit;
        gate_site s = grid.site_at(i);
        for (sym_element e : elems) {
            gate_site t = apply_symmetry(grid, e, s);
            int idx = grid.site_index(t.x, t.y);
            orbit.insert(idx);
        }
        for (int idx : orbit) seen[idx] = true;
        result.emplace_back(orbit.begin(), orbit.end());
    }
    return result;
}

const char* to_string(symmetry_group group) {
    switch (group) {
    case symmetry_group::none: return "none";
    case symmetry_group::h_mirror: return "h";
    case symmetry_group::v_mirror: return "v";
    case symmetry_group::rot180: return "rot180";
    case symmetry_group::hv: return "hv";
    case symmetry_group::d4: return "d4";
    }
    return "none";
}

std::optional<symmetry_group> parse_symmetry(std::string_view text) {
    if (text == "none") return symmetry_group::none;
    if (text == "h") return symmetry_group::h_mirror;
    if (text == "v") return symmetry_group::v_mirror;
    if (text == "rot180") return symmetry_group::rot180;
    if (text == "hv") return symmetry_group::hv;
    if (text == "d4") return symmetry_group::d4;
    return std::nullopt;
}

} // namespace kolam
