#include "kolam/trace.hpp"

#include <array>
#include <sstream>

namespace kolam {

gate_config gate_config::all_closed(const grid_spec& g) {
    return gate_config{g, std::vector<std::uint8_t>(static_cast<std::size_t>(g.site_count()), 1)};
}

gate_config gate_config::all_open(const grid_spec& g) {
    return gate_config{g, std::vector<std::uint8_t>(static_cast<std::size_t>(g.site_count()), 0)};
}

std::string gate_config::bit_text() const {
    std::string out(states.size(), '0');
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i]) out[i] = '1';
    return out;
}

gate_config config_from_bits(const grid_spec& grid, std::string_view bits) {
    if (static_cast<int>(bits.size()) != grid.site_count())
        fail(errc::parse, "expected " + std::to_string(grid.site_count()) + " gate bits, got " +
                              std::to_string(bits.size()));
    gate_config config{grid, std::vector<std::uint8_t>(bits.size(), 0)};
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            config.states[i] = 1;
        else if (bits[i] != '0')
            fail(errc::parse, std::string("illegal gate bit '") + bits[i] + "'");
    }
    return config;
}

int loop_set::total_events() const {
    int n = 0;
    for (const auto& l : loops) n += static_cast<int>(l.events.size());
    return n;
}

namespace {

// Successor rule. The walls win over gate state by construction: wall
// vertices are never gate sites.
step_action action_at(const gate_config& config, int x, int y) {
    const grid_spec& g = config.grid;
    if (x == 0 || x == g.canvas_w()) return step_action::bounce_x;
    if (y == 0 || y == g.canvas_h()) return step_action::bounce_y;
    int site = g.site_index(x, y);
    if (!config.closed(site)) return step_action::pass;
    return x % 2 == 1 ? step_action::bounce_y : step_action::bounce_x;
}

dir2 apply_action(dir2 d, step_action a) {
    if (a == step_action::bounce_x) d.dx = -d.dx;
    if (a == step_action::bounce_y) d.dy = -d.dy;
    return d;
}

// A traced segment is the strand diagonal of one canvas cell; the cell
// coordinates of the segment ending at (x, y) from direction d.
int segment_cell(const grid_spec& g, int x, int y, dir2 d) {
    int cx = d.dx > 0 ? x - 1 : x;
    int cy = d.dy > 0 ? y - 1 : y;
    return cy * g.canvas_w() + cx;
}

} // namespace

loop_set trace(const gate_config& config) {
    const grid_spec& g = config.grid;
    loop_set result;
    std::vector<bool> segment_done(static_cast<std::size_t>(4 * g.width * g.height), false);
    static constexpr std::array<dir2, 4> kDirs = {dir2{-1, -1}, dir2{-1, 1}, dir2{1, -1},
                                                  dir2{1, 1}};
    for (int x = 0; x <= g.canvas_w(); ++x) {
        for (int y = 0; y <= g.canvas_h(); ++y) {
            if (!g.is_vertex(x, y)) continue;
            for (dir2 d0 : kDirs) {
                // Incoming state (x, y, d) is real only if the previous
                // vertex is on the canvas.
                int px = x - d0.dx, py = y - d0.dy;
                if (px < 0 || px > g.canvas_w() || py < 0 || py > g.canvas_h()) continue;
                if (segment_done[static_cast<std::size_t>(segment_cell(g, x, y, d0))]) continue;
                curve_loop loop;
                int cx = x, cy = y;
                dir2 d = d0;
                do {
                    segment_done[static_cast<std::size_t>(segment_cell(g, cx, cy, d))] = true;
                    step_action a = action_at(config, cx, cy);
                    loop.events.push_back(loop_event{cx, cy, d, a});
                    d = apply_action(d, a);
                    cx += d.dx;
                    cy += d.dy;
                } while (!(cx == x && cy == y && d == d0));
                result.loops.push_back(std::move(loop));
            }
        }
    }
    return result;
}

int loop_count(const gate_config& config) {
    // Same walk as trace() without storing events.
    const grid_spec& g = config.grid;
    int count = 0;
    std::vector<bool> segment_done(static_cast<std::size_t>(4 * g.width * g.height), false);
    static constexpr std::array<dir2, 4> kDirs = {dir2{-1, -1}, dir2{-1, 1}, dir2{1, -1},
                                                  dir2{1, 1}};
    for (int x = 0; x <= g.canvas_w(); ++x) {
        for (int y = 0; y <= g.canvas_h(); ++y) {
            if (!g.is_vertex(x, y)) continue;
            for (dir2 d0 : kDirs) {
                int px = x - d0.dx, py = y - d0.dy;
                if (px < 0 || px > g.canvas_w() || py < 0 || py > g.canvas_h()) continue;
                if (segment_done[static_cast<std::size_t>(segment_cell(g, x, y, d0))]) continue;
                ++count;
                int cx = x, cy = y;
                dir2 d = d0;
                do {
                    segment_done[static_cast<std::size_t>(segment_cell(g, cx, cy, d))] = true;
                    d = apply_action(d, action_at(config, cx, cy));
                    cx += d.dx;
                    cy += d.dy;
                } while (!(cx == x && cy == y && d == d0));
            }
        }
    }
    return count;
}

gate_config toggle(const gate_config& config, int site_index) {
    if (site_index < 0 || site_index >= config.grid.site_count())
        fail(errc::index_range, "site index " + std::to_string(site_index) + " out of range");
    gate_config next = config;
    next.states[static_cast<std::size_t>(site_index)] ^= 1;
    return next;
}

std::string serialize(const gate_config& config) {
    std::ostringstream out;
    out << "kolam-gates " << config.grid.width << " " << config.grid.height << "\n";
    out << config.bit_text() << "\n";
    return out.str();
}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.emplace_back(text.substr(start));
            break;
        }
        lines.emplace_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

bool skippable(const std::string& line) { return line.empty() || line[0] == '#'; }

} // namespace

gate_config deserialize(std::string_view text) {
    auto lines = split_lines(text);
    std::size_t i = 0;
    while (i < lines.size() && skippable(lines[i])) ++i;
    if (i == lines.size()) fail(errc::parse, "line 1: missing kolam-gates header");
    std::istringstream header(lines[i]);
    std::string magic;
    int w = 0, h = 0;
    header >> magic >> w >> h;
    bool bad = header.fail() || magic != "kolam-gates";
    std::string rest;
    if (!bad && header >> rest) bad = true;
    if (bad) fail(errc::parse, "line " + std::to_string(i + 1) + ": malformed kolam-gates header");
    if (w < 1 || h < 1)
        fail(errc::parse, "line " + std::to_string(i + 1) + ": grid dimensions must be positive");
    grid_spec grid = make_grid(w, h);
    std::size_t bit_line = i + 1;
    while (bit_line < lines.size() && !lines[bit_line].empty() && lines[bit_line][0] == '#')
        ++bit_line;
    std::string bits = bit_line < lines.size() ? lines[bit_line] : std::string();
    if (static_cast<int>(bits.size()) != grid.site_count())
        fail(errc::parse, "line " + std::to_string(bit_line + 1) + ": expected " +
                              std::to_string(grid.site_count()) + " gate bits, got " +
                              std::to_string(bits.size()));
    for (std::size_t k = 0; k < bits.size(); ++k)
        if (bits[k] != '0' && bits[k] != '1')
            fail(errc::parse, "line " + std::to_string(bit_line + 1) + ": illegal gate bit '" +
                                  std::string(1, bits[k]) + "'");
    for (std::size_t k = bit_line + 1; k < lines.size(); ++k)
        if (!skippable(lines[k]))
            fail(errc::parse, "line " + std::to_string(k + 1) + ": unexpected content after gates");
    return config_from_bits(grid, bits);
}

} // namespace kolam
