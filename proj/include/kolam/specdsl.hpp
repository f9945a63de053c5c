#pragma once

#include "kolam/mapping.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kolam {

// Line-oriented mapping-spec language:
//   kolam 3x3
//   symmetry rot180
//   pigment moss 0.2 0.5 0.3
//   map sleep_hours -> dot_size linear 4..9 => 0.18..0.5 clamp
//   map mood -> color { calm: rice_white, default: kumkum }
// One declaration per line, '#' starts a comment, errors never stop the
// parse: every line gets its own diagnostic and parsing resumes on the next.

enum class severity { error, warning };

struct diagnostic {
    severity sev = severity::error;
    std::string message;
    int line = 1;   // 1-based
    int column = 1; // 1-based, points at the offending token
};

std::string to_string(const diagnostic& d); // "line 1, column 10: message"

struct ast_pos {
    int line = 1;
    int column = 1;
};

struct ast_linear {
    double in_lo = 0.0, in_hi = 1.0;
    double out_lo = 0.0, out_hi = 1.0;
    bool clamp = false;
};

// Category value before the channel gives it meaning: a bare word with an
// optional /density suffix, or a number.
struct ast_value {
    bool is_number = false;
    double number = 0.0;
    std::string text;    // source spelling, used by diagnostics
    std::string density; // empty when there is no '/' suffix
    ast_pos pos;
    ast_pos density_pos;
};

struct ast_pair {
    std::string key;
    ast_pos key_pos;
    ast_value value;
};

struct ast_binding {
    std::string field;
    channel target = channel::dot_size;
    bool is_linear = false;
    ast_linear linear;
    std::vector<ast_pair> pairs; // source order
    ast_pos pos;                 // the "map" keyword
    ast_pos channel_pos;
    ast_pos scale_pos; // the "linear" keyword or the "{"
};

struct ast_pigment {
    std::string name;
    rgb color;
    ast_pos pos; // the name token
};

struct spec_ast {
    bool grid_declared = false;
    int grid_w = 3, grid_h = 3;
    ast_pos grid_pos;
    bool symmetry_declared = false;
    symmetry_group symmetry = symmetry_group::none;
    std::vector<ast_pigment> pigments; // declaration order
    std::vector<ast_binding> bindings; // declaration order
};

struct parse_result {
    std::optional<spec_ast> ast; // absent when any error diagnostic exists
    std::vector<diagnostic> diagnostics;
    bool ok() const { return ast.has_value(); }
};

// Collects every diagnostic in one pass; malformed input never throws.
parse_result parse_spec(std::string_view source);

struct lower_result {
    std::optional<mapping_spec> spec;
    std::vector<diagnostic> diagnostics;
    bool ok() const { return spec.has_value(); }
};

// Semantic checks on an error-free tree: grid present, each channel bound
// once, scale kind fits the channel, category values name real things,
// dot_size stays under the dot_radius_ceiling() bound. The result's
// bindings are in channel order and its pigments are builtins first, then
// declared extras sorted by name, so equal specs compare equal.
lower_result lower_spec(const spec_ast& ast);

// parse_spec + lower_spec; diagnostics from whichever stage failed first.
lower_result compile_spec(std::string_view source);

// Canonical layout: grid, symmetry, pigments sorted by name, maps in
// channel order, single spaces, no comments, shortest number spelling,
// "/medium" left implicit. parse(format(ast)) equals ast modulo positions.
std::string format_spec(const spec_ast& ast);

} // namespace kolam
