#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "kolam/error.hpp"

namespace kolam {

// All integer coordinates live in the doubled frame: the canvas is
// [0, 2W] x [0, 2H], dots sit at odd-odd points (2i+1, 2j+1), and gate
// sites are the interior lattice points with exactly one odd coordinate.
enum class site_kind { v_site, h_site };

struct gate_site {
    int x = 0;
    int y = 0;
    site_kind kind = site_kind::v_site;

    bool operator==(const gate_site&) const = default;
};

struct grid_spec {
    int width = 0;  // dots per row
    int height = 0; // dots per column

    bool operator==(const grid_spec&) const = default;

    int canvas_w() const { return 2 * width; }
    int canvas_h() const { return 2 * height; }
    int dot_count() const { return width * height; }
    int site_count() const { return 2 * width * height - width - height; }

    bool is_dot(int x, int y) const {
        return x % 2 == 1 && y % 2 == 1 && x > 0 && x < canvas_w() && y > 0 && y < canvas_h();
    }
    // Strand vertices have exactly one odd coordinate; walls are the ones on
    // the canvas border.
    bool is_vertex(int x, int y) const {
        if (x < 0 || x > canvas_w() || y < 0 || y > canvas_h()) return false;
        return (x % 2) + (y % 2) == 1;
    }
    bool is_wall_vertex(int x, int y) const {
        return is_vertex(x, y) && (x == 0 || x == canvas_w() || y == 0 || y == canvas_h());
    }
    bool is_site(int x, int y) const { return is_vertex(x, y) && !is_wall_vertex(x, y); }

    // Canonical index of the site at (x, y): V-sites sorted by (y, x), then
    // H-sites sorted by (y, x). Returns -1 when (x, y) is not a gate site.
    int site_index(int x, int y) const;
    gate_site site_at(int index) const; // throws index_range
    std::vector<gate_site> gate_sites() const;

    // Dot index in row-major order; dot i*... index j*width + i has center
    // (2i+1, 2j+1).
    int dot_index(int cx, int cy) const { return (cy - 1) / 2 * width + (cx - 1) / 2; }
};

grid_spec make_grid(int width, int height); // throws invalid_grid unless both >= 1

// The named symmetry groups form the lattice used by detection:
// none < {h_mirror, v_mirror, rot180} < hv < d4. `hv` is the group
// {identity, h, v, rot180}; it shows up as a detection result for
// rectangle-symmetric configs and is also accepted in requests. `d4` is
// valid only on square grids.
enum class symmetry_group { none, h_mirror, v_mirror, rot180, hv, d4 };

enum class sym_element {
    identity,
    mirror_h,      // (x, y) -> (2W - x, y)
    mirror_v,      // (x, y) -> (x, 2H - y)
    rot180,        // (x, y) -> (2W - x, 2H - y)
    rot90,         // (x, y) -> (2H - y, x), square only
    rot270,        // (x, y) -> (y, 2W - x), square only
    mirror_d_main, // (x, y) -> (y, x), square only
    mirror_d_anti, // (x, y) -> (2H - y, 2W - x), square only
};

const std::vector<sym_element>& group_elements(symmetry_group group);
bool group_valid_for(symmetry_group group, const grid_spec& grid);

// Maps a gate site under one symmetry element. Quarter-turn and diagonal
// elements swap V-sites and H-sites. Throws invalid_symmetry for square-only
// elements on non-square grids.
gate_site apply_symmetry(const grid_spec& grid, sym_element elem, const gate_site& site);

// Partition of the canonical site indices into group orbits. Each orbit is
// sorted ascending; orbits are sorted by their smallest member.
std::vector<std::vector<int>> orbits(const grid_spec& grid, symmetry_group group);

const char* to_string(symmetry_group group);
std::optional<symmetry_group> parse_symmetry(std::string_view text);

} // namespace kolam
