#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kolam/grid.hpp"

namespace kolam {

// Gate states for every site in canonical order. true = CLOSED = a mirror
// sits on the site; the all-CLOSED config rings every dot individually.
struct gate_config {
    grid_spec grid;
    std::vector<std::uint8_t> states;

    bool operator==(const gate_config&) const = default;

    static gate_config all_closed(const grid_spec& g);
    static gate_config all_open(const grid_spec& g);

    bool closed(int site) const { return states[static_cast<std::size_t>(site)] != 0; }
    std::string bit_text() const; // '1' = CLOSED
};

gate_config config_from_bits(const grid_spec& grid, std::string_view bits); // throws parse

enum class step_action { pass, bounce_x, bounce_y };

struct dir2 {
    int dx = 0, dy = 0;
    bool operator==(const dir2&) const = default;
};

// One visit of the curve to a strand vertex: where it arrived, from which
// direction, and whether the vertex reflected it.
struct loop_event {
    int x = 0, y = 0;
    dir2 incoming;
    step_action action = step_action::pass;
};

struct curve_loop {
    std::vector<loop_event> events;
};

// Every diagonal unit segment of the canvas appears in exactly one loop, so
// total_events() == 4*W*H for any config.
struct loop_set {
    std::vector<curve_loop> loops;
    int total_events() const;
};

// Walks the successor rule from every untraced state in ascending
// (x, y, dx, dy) order, so each loop starts at its smallest state and loops
// come out sorted by that start.
loop_set trace(const gate_config& config);
int loop_count(const gate_config& config);

gate_config toggle(const gate_config& config, int site_index); // throws index_range

// Gate file format: "kolam-gates W H" header, then one line with the bit
// text ('0' OPEN, '1' CLOSED) in canonical site order. Full-line '#'
// comments may precede the bit line.
std::string serialize(const gate_config& config);
gate_config deserialize(std::string_view text); // throws parse with a line number

} // namespace kolam
