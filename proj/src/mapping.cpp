#include "kolam/mapping.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "kolam/error.hpp"

namespace kolam {

namespace {

std::string num4(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

} // namespace

const std::vector<pigment>& builtin_pigments() {
    static const std::vector<pigment> kPigments = {
        {"rice_white", {0.96, 0.95, 0.91}},
        {"turmeric", {0.89, 0.70, 0.24}},
        {"kumkum", {0.76, 0.07, 0.12}},
        {"laterite", {0.55, 0.33, 0.14}},
    };
    return kPigments;
}

rgb mix_pigments(const std::vector<std::pair<pigment, double>>& weighted) {
    double total = 0.0;
    for (const auto& [p, w] : weighted) {
        if (w < 0) fail(errc::mapping, "pigment weight for '" + p.name + "' is negative");
        total += w;
    }
    if (!(total > 0)) fail(errc::mapping, "pigment weights must not all be zero");
    rgb out;
    for (const auto& [p, w] : weighted) {
        out.r += p.color.r * w / total;
        out.g += p.color.g * w / total;
        out.b += p.color.b * w / total;
    }
    return out;
}

std::string to_hex(const rgb& c) {
    auto comp = [](double v) {
        return static_cast<int>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
    };
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", comp(c.r), comp(c.g), comp(c.b));
    return buf;
}

const char* to_string(channel c) {
    switch (c) {
        case channel::dot_size: return "dot_size";
        case channel::line_type: return "line_type";
        case channel::color: return "color";
        case channel::fill: return "fill";
        case channel::pattern: return "pattern";
    }
    return "?";
}

const char* to_string(line_kind k) {
    switch (k) {
        case line_kind::single: return "single";
        case line_kind::double_strand: return "double";
        case line_kind::double_filled: return "double_filled";
    }
    return "?";
}

const char* to_string(fill_kind k) {
    switch (k) {
        case fill_kind::empty: return "empty";
        case fill_kind::hatch_h: return "hatch_h";
        case fill_kind::hatch_v: return "hatch_v";
        case fill_kind::hatch_d: return "hatch_d";
        case fill_kind::checker: return "checker";
        case fill_kind::dots: return "dots";
        case fill_kind::concentric: return "concentric";
    }
    return "?";
}

const char* to_string(fill_density d) {
    switch (d) {
        case fill_density::sparse: return "sparse";
        case fill_density::medium: return "medium";
        case fill_density::dense: return "dense";
    }
    return "?";
}

std::optional<channel> parse_channel(const std::string& word) {
    for (channel c : {channel::dot_size, channel::line_type, channel::color, channel::fill,
                      channel::pattern})
        if (word == to_string(c)) return c;
    return std::nullopt;
}

std::optional<line_kind> parse_line_kind(const std::string& word) {
    for (line_kind k : {line_kind::single, line_kind::double_strand, line_kind::double_filled})
        if (word == to_string(k)) return k;
    return std::nullopt;
}

std::optional<fill_kind> parse_fill_kind(const std::string& word) {
    for (fill_kind k : {fill_kind::empty, fill_kind::hatch_h, fill_kind::hatch_v,
                        fill_kind::hatch_d, fill_kind::checker, fill_kind::dots,
                        fill_kind::concentric})
        if (word == to_string(k)) return k;
    return std::nullopt;
}

std::optional<fill_density> parse_fill_density(const std::string& word) {
    for (fill_density d : {fill_density::sparse, fill_density::medium, fill_density::dense})
        if (word == to_string(d)) return d;
    return std::nullopt;
}

double linear_scale::operator()(double x) const {
    double t = (x - in_lo) / (in_hi - in_lo);
    double y = out_lo + t * (out_hi - out_lo);
    if (clamp) y = std::clamp(y, out_lo, out_hi);
    return y;
}

linear_scale make_linear_scale(double in_lo, double in_hi, double out_lo, double out_hi,
                               bool clamp) {
    if (!(in_lo < in_hi)) fail(errc::mapping, "scale domain is empty or reversed");
    if (!(out_lo <= out_hi)) fail(errc::mapping, "scale range is reversed");
    return {in_lo, in_hi, out_lo, out_hi, clamp};
}

const binding* mapping_spec::find(channel c) const {
    for (const auto& b : bindings)
        if (b.target == c) return &b;
    return nullptr;
}

const pigment* mapping_spec::find_pigment(const std::string& name) const {
    for (const auto& p : pigments)
        if (p.name == name) return &p;
    return nullptr;
}

mapping_spec make_default_spec(grid_spec grid) {
    mapping_spec spec;
    spec.grid = grid;
    spec.pigments = builtin_pigments();
    return spec;
}

field_value parse_field_value(const std::string& token) {
    field_value v;
    v.text = token;
    if (!token.empty()) {
        char* end = nullptr;
        double parsed = std::strtod(token.c_str(), &end);
        if (end == token.c_str() + token.size()) {
            v.numeric = true;
            v.number = parsed;
        }
    }
    return v;
}

const field_value* daily_record::find(const std::string& name) const {
    for (const auto& [key, value] : fields)
        if (key == name) return &value;
    return nullptr;
}

double dot_radius_ceiling(double stroke, double gap_delta) {
    return 0.70710678118654752440 - gap_delta - stroke / 2.0;
}

namespace {

// Looks the record value up in a category list, falling back to "default".
template <class T>
const T* pick_category(const std::vector<std::pair<std::string, T>>& pairs,
                       const std::string& value, const std::string& field) {
    const T* fallback = nullptr;
    for (const auto& [key, mapped] : pairs) {
        if (key == value) return &mapped;
        if (key == "default") fallback = &mapped;
    }
    if (fallback) return fallback;
    fail(errc::mapping, "category '" + value + "' not mapped for field '" + field + "'");
}

} // namespace

render_plan resolve(const mapping_spec& spec, const daily_record& record) {
    render_plan plan;
    for (const auto& b : spec.bindings) {
        const field_value* value = record.find(b.field);
        if (!value) fail(errc::mapping, "missing field '" + b.field + "'");
        switch (b.target) {
            case channel::dot_size: {
                if (!value->numeric)
                    fail(errc::mapping, "field '" + b.field + "' needs a numeric value");
                plan.dot_radius = b.linear(value->number);
                double ceiling = dot_radius_ceiling();
                if (!(plan.dot_radius > 0))
                    fail(errc::mapping, "dot radius " + num4(plan.dot_radius) + " is not positive");
                if (!(plan.dot_radius < ceiling))
                    fail(errc::mapping, "dot radius " + num4(plan.dot_radius) + " exceeds the " +
                                            num4(ceiling) + " ceiling");
                break;
            }
            case channel::line_type:
                plan.line = *pick_category(b.lines, value->text, b.field);
                break;
            case channel::color: {
                const std::string& name = *pick_category(b.colors, value->text, b.field);
                const pigment* p = spec.find_pigment(name);
                if (!p) fail(errc::mapping, "unknown pigment '" + name + "'");
                plan.color = p->color;
                break;
            }
            case channel::fill:
                plan.fill = *pick_category(b.fills, value->text, b.field);
                break;
            case channel::pattern:
                plan.pattern_index = *pick_category(b.patterns, value->text, b.field);
                break;
        }
    }
    return plan;
}

} // namespace kolam
