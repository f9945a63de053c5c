#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kolam/grid.hpp"

namespace kolam {

struct rgb {
    double r = 0.0, g = 0.0, b = 0.0;
    bool operator==(const rgb&) const = default;
};

struct pigment {
    std::string name;
    rgb color;
    bool operator==(const pigment&) const = default;
};

// rice_white, turmeric, kumkum, laterite
const std::vector<pigment>& builtin_pigments();

// Component-wise weighted average, weights normalized to sum 1.
rgb mix_pigments(const std::vector<std::pair<pigment, double>>& weighted);

std::string to_hex(const rgb& c); // "#rrggbb"

enum class channel { dot_size, line_type, color, fill, pattern };
enum class line_kind { single, double_strand, double_filled };
enum class fill_kind { empty, hatch_h, hatch_v, hatch_d, checker, dots, concentric };
enum class fill_density { sparse, medium, dense };

struct fill_spec {
    fill_kind kind = fill_kind::empty;
    fill_density density = fill_density::medium;
    bool operator==(const fill_spec&) const = default;
};

const char* to_string(channel c);
const char* to_string(line_kind k);
const char* to_string(fill_kind k);
const char* to_string(fill_density d);
std::optional<channel> parse_channel(const std::string& word);
std::optional<line_kind> parse_line_kind(const std::string& word);
std::optional<fill_kind> parse_fill_kind(const std::string& word);
std::optional<fill_density> parse_fill_density(const std::string& word);

struct linear_scale {
    double in_lo = 0.0, in_hi = 1.0;
    double out_lo = 0.0, out_hi = 1.0;
    bool clamp = false;
    double operator()(double x) const;
    bool operator==(const linear_scale&) const = default;
};

// Validates in_lo < in_hi and out_lo <= out_hi.
linear_scale make_linear_scale(double in_lo, double in_hi, double out_lo, double out_hi,
                               bool clamp);

// One field -> channel rule. Only the member matching the target channel is
// meaningful: the linear scale for dot_size, one category list otherwise.
// The key "default" catches unmapped categories.
struct binding {
    std::string field;
    channel target = channel::dot_size;
    linear_scale linear{};
    std::vector<std::pair<std::string, line_kind>> lines;
    std::vector<std::pair<std::string, std::string>> colors; // pigment names
    std::vector<std::pair<std::string, fill_spec>> fills;
    std::vector<std::pair<std::string, std::uint64_t>> patterns;
    bool operator==(const binding&) const = default;
};

struct mapping_spec {
    grid_spec grid = make_grid(3, 3);
    symmetry_group symmetry = symmetry_group::none;
    bool symmetry_declared = false;
    std::vector<pigment> pigments; // built-ins plus overrides
    std::vector<binding> bindings; // at most one per channel

    const binding* find(channel c) const;
    const pigment* find_pigment(const std::string& name) const;
    bool operator==(const mapping_spec&) const = default;
};

mapping_spec make_default_spec(grid_spec grid);

struct field_value {
    bool numeric = false;
    double number = 0.0;
    std::string text; // original token, kept for category lookup
    bool operator==(const field_value&) const = default;
};

// Numeric when the whole token parses as a number.
field_value parse_field_value(const std::string& token);

struct daily_record {
    std::string date; // ISO YYYY-MM-DD
    std::vector<std::pair<std::string, field_value>> fields; // sorted, unique keys
    const field_value* find(const std::string& name) const;
    bool operator==(const daily_record&) const = default;
};

struct render_plan {
    double dot_radius = 0.35;
    line_kind line = line_kind::single;
    rgb color{0.96, 0.95, 0.91}; // rice_white
    fill_spec fill{};
    std::uint64_t pattern_index = 0;
    bool operator==(const render_plan&) const = default;
};

// Largest dot radius that keeps the dot plus half the stroke clear of the
// nearer of the two offset strands.
double dot_radius_ceiling(double stroke = 0.06, double gap_delta = 0.12);

// Applies every binding to the record; unbound channels keep plan defaults.
render_plan resolve(const mapping_spec& spec, const daily_record& record);

} // namespace kolam
