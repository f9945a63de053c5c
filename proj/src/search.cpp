#include "kolam/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

namespace kolam {

namespace {

// Engine output is standardized, distribution output is not, so uniforms
// are derived from raw engine words to keep results identical everywhere.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t next_below(std::mt19937_64& rng, std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
}

void set_orbit(gate_config& config, const std::vector<int>& orbit, bool closed) {
    for (int s : orbit) config.states[static_cast<std::size_t>(s)] = closed ? 1 : 0;
}

void flip_orbit(gate_config& config, const std::vector<int>& orbit) {
    for (int s : orbit) config.states[static_cast<std::size_t>(s)] ^= 1;
}

} // namespace

catalog enumerate_single_loop(const grid_spec& grid, symmetry_group symmetry) {
    auto orbit_list = orbits(grid, symmetry);
    if (orbit_list.size() > 22)
        fail(errc::too_large, "enumeration over " + std::to_string(orbit_list.size()) +
                                  " orbits exceeds the 22-orbit limit");
    catalog cat{grid, symmetry, {}};
    gate_config config = gate_config::all_open(grid);
    std::uint64_t total = std::uint64_t{1} << orbit_list.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        for (std::size_t k = 0; k < orbit_list.size(); ++k)
            set_orbit(config, orbit_list[k], bits >> k & 1);
        if (loop_count(config) == 1) cat.entries.push_back(config.bit_text());
    }
    std::sort(cat.entries.begin(), cat.entries.end());
    return cat;
}

gate_config find_single_loop(const search_request& request) {
    if (request.openness_target < 0.0 || request.openness_target > 1.0)
        fail(errc::index_range, "openness target must lie in [0, 1]");
    if (request.max_restarts < 1) fail(errc::index_range, "max_restarts must be at least 1");
    auto orbit_list = orbits(request.grid, request.symmetry);
    std::mt19937_64 rng(request.seed);
    gate_config config = gate_config::all_open(request.grid);
    if (orbit_list.empty()) {
        if (loop_count(config) == 1) return config;
        fail(errc::search_exhausted, "grid has no gate sites and is not a single loop");
    }
    std::vector<std::size_t> candidates;
    for (int attempt = 0; attempt < request.max_restarts; ++attempt) {
        for (const auto& orbit : orbit_list)
            set_orbit(config, orbit, next_unit(rng) >= request.openness_target);
        int score = std::abs(loop_count(config) - 1);
        while (score > 0) {
            int best = score;
            candidates.clear();
            for (std::size_t k = 0; k < orbit_list.size(); ++k) {
                flip_orbit(config, orbit_list[k]);
                int s = std::abs(loop_count(config) - 1);
                flip_orbit(config, orbit_list[k]);
                if (s < best) {
                    best = s;
                    candidates.assign(1, k);
                } else if (s == best && best < score) {
                    candidates.push_back(k);
                }
            }
            if (candidates.empty()) break; // local minimum, restart
            flip_orbit(config, orbit_list[candidates[next_below(rng, candidates.size())]]);
            score = best;
        }
        if (score == 0) return config;
    }
    fail(errc::search_exhausted,
         "no single-loop config found within " + std::to_string(request.max_restarts) +
             " restarts for " + std::to_string(request.grid.width) + "x" +
             std::to_string(request.grid.height) + " " + to_string(request.symmetry));
}

gate_config pattern_for_category(const catalog& cat, std::uint64_t index) {
    if (cat.entries.empty()) fail(errc::no_pattern, "catalog has no entries");
    return config_from_bits(cat.grid, cat.entries[index % cat.entries.size()]);
}

std::string serialize(const catalog& cat) {
    std::ostringstream out;
    out << "kolam-catalog " << cat.grid.width << " " << cat.grid.height << " "
        << to_string(cat.symmetry) << "\n";
    for (const auto& entry : cat.entries) out << entry << "\n";
    return out.str();
}

catalog deserialize_catalog(std::string_view text) {
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
    std::size_t i = 0;
    while (i < lines.size() && (lines[i].empty() || lines[i][0] == '#')) ++i;
    if (i == lines.size()) fail(errc::parse, "line 1: missing kolam-catalog header");
    std::istringstream header(lines[i]);
    std::string magic, sym_text;
    int w = 0, h = 0;
    header >> magic >> w >> h >> sym_text;
    if (header.fail() || magic != "kolam-catalog")
        fail(errc::parse, "line " + std::to_string(i + 1) + ": malformed kolam-catalog header");
    if (w < 1 || h < 1)
        fail(errc::parse, "line " + std::to_string(i + 1) + ": grid dimensions must be positive");
    auto symmetry = parse_symmetry(sym_text);
    if (!symmetry)
        fail(errc::parse, "line " + std::to_string(i + 1) + ": unknown symmetry '" + sym_text + "'");
    catalog cat{make_grid(w, h), *symmetry, {}};
    if (!group_valid_for(cat.symmetry, cat.grid))
        fail(errc::parse, "line " + std::to_string(i + 1) + ": d4 needs a square grid");
    for (std::size_t k = i + 1; k < lines.size(); ++k) {
        const std::string& line = lines[k];
        if (line.empty() || line[0] == '#') continue;
        gate_config config = [&] {
            try {
                return config_from_bits(cat.grid, line);
            } catch (const error& e) {
                fail(errc::parse, "line " + std::to_string(k + 1) + ": " + e.what());
            }
        }();
        if (!cat.entries.empty() && line <= cat.entries.back())
            fail(errc::parse, "line " + std::to_string(k + 1) + ": entries must be sorted and unique");
        if (loop_count(config) != 1)
            fail(errc::parse, "line " + std::to_string(k + 1) + ": entry is not a single loop");
        for (sym_element e : group_elements(cat.symmetry)) {
            for (int s = 0; s < cat.grid.site_count(); ++s) {
                gate_site image = apply_symmetry(cat.grid, e, cat.grid.site_at(s));
                if (config.states[static_cast<std::size_t>(s)] !=
                    config.states[static_cast<std::size_t>(
                        cat.grid.site_index(image.x, image.y))])
                    fail(errc::parse, "line " + std::to_string(k + 1) +
                                          ": entry is not " + to_string(cat.symmetry) +
                                          "-symmetric");
            }
        }
        cat.entries.push_back(line);
    }
    return cat;
}

} // namespace kolam
