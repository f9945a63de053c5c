#include "kolam/render.hpp"

#include "kolam/error.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace kolam {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr const char* kGround = "#2b2117";
constexpr const char* kCaptionInk = "#e8e2d4";

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    std::string s = buf;
    if (s == "-0.0000") s = "0.0000";
    return s;
}

// Canvas is y-up, documents are y-down.
struct xform {
    double ppu = 40.0;
    double margin = 1.0;
    double canvas_h = 0.0;
    double px(double x) const { return (x + margin) * ppu; }
    double py(double y) const { return (canvas_h + margin - y) * ppu; }
};

std::string path_data(const closed_path& path, const xform& t) {
    vec2 s = piece_start(path.pieces.front());
    std::string d = "M " + fmt(t.px(s.x)) + " " + fmt(t.py(s.y));
    for (const auto& piece : path.pieces) {
        vec2 e = piece_end(piece);
        if (std::holds_alternative<segment_piece>(piece)) {
            d += " L " + fmt(t.px(e.x)) + " " + fmt(t.py(e.y));
        } else {
            const auto& a = std::get<arc_piece>(piece);
            double sweep = arc_sweep(a);
            const char* large = std::abs(sweep) > kPi ? "1" : "0";
            const char* flag = a.ccw ? "0" : "1"; // orientation flips with the y axis
            d += " A " + fmt(a.radius * t.ppu) + " " + fmt(a.radius * t.ppu) + " 0 ";
            d += large;
            d += " ";
            d += flag;
            d += " " + fmt(t.px(e.x)) + " " + fmt(t.py(e.y));
        }
    }
    d += " Z";
    return d;
}

struct bounds {
    double x0 = 1e30, y0 = 1e30, x1 = -1e30, y1 = -1e30;
    void add(double x, double y) {
        x0 = std::min(x0, x);
        y0 = std::min(y0, y);
        x1 = std::max(x1, x);
        y1 = std::max(y1, y);
    }
};

bounds region_bounds(const face_region& region) {
    bounds bb;
    for (const auto& path : region.boundaries)
        for (const auto& piece : path.pieces) {
            if (std::holds_alternative<segment_piece>(piece)) {
                const auto& s = std::get<segment_piece>(piece);
                bb.add(s.a.x, s.a.y);
                bb.add(s.b.x, s.b.y);
            } else {
                const auto& a = std::get<arc_piece>(piece);
                bb.add(a.center.x - a.radius, a.center.y - a.radius);
                bb.add(a.center.x + a.radius, a.center.y + a.radius);
            }
        }
    return bb;
}

closed_path scaled_copy(const closed_path& path, vec2 c, double f) {
    closed_path out;
    for (const auto& piece : path.pieces) {
        if (std::holds_alternative<segment_piece>(piece)) {
            const auto& s = std::get<segment_piece>(piece);
            out.pieces.push_back(segment_piece{c + f * (s.a - c), c + f * (s.b - c)});
        } else {
            const auto& a = std::get<arc_piece>(piece);
            out.pieces.push_back(
                arc_piece{c + f * (a.center - c), f * a.radius, a.start_angle, a.end_angle, a.ccw});
        }
    }
    return out;
}

void emit_line(std::string& out, const xform& t, double x1, double y1, double x2, double y2,
               const std::string& color, double width_px) {
    out += "<line x1=\"" + fmt(t.px(x1)) + "\" y1=\"" + fmt(t.py(y1)) + "\" x2=\"" +
           fmt(t.px(x2)) + "\" y2=\"" + fmt(t.py(y2)) + "\" stroke=\"" + color +
           "\" stroke-width=\"" + fmt(width_px) + "\"/>\n";
}

double fill_spacing(fill_density d) {
    switch (d) {
    case fill_density::sparse: return 0.6;
    case fill_density::dense: return 0.25;
    case fill_density::medium: break;
    }
    return 0.4;
}

void emit_region_fill(std::string& out, const face_region& region, size_t region_id,
                      const fill_spec& fill, const std::string& color, const render_params& eff,
                      const xform& t) {
    double sp = fill_spacing(fill.density);
    double wpx = eff.stroke * 0.5 * eff.px_per_unit;
    bounds bb = region_bounds(region);
    out += "<g clip-path=\"url(#region-" + std::to_string(region_id) + ")\">\n";
    switch (fill.kind) {
    case fill_kind::hatch_h: {
        int k0 = int(std::floor(bb.y0 / sp)), k1 = int(std::ceil(bb.y1 / sp));
        for (int k = k0; k <= k1; ++k)
            emit_line(out, t, bb.x0 - sp, k * sp, bb.x1 + sp, k * sp, color, wpx);
        break;
    }
    case fill_kind::hatch_v: {
        int k0 = int(std::floor(bb.x0 / sp)), k1 = int(std::ceil(bb.x1 / sp));
        for (int k = k0; k <= k1; ++k)
            emit_line(out, t, k * sp, bb.y0 - sp, k * sp, bb.y1 + sp, color, wpx);
        break;
    }
    case fill_kind::hatch_d: {
        // lines x - y = c, spaced sp apart along the normal
        double step = sp * std::sqrt(2.0);
        int k0 = int(std::floor((bb.x0 - bb.y1) / step));
        int k1 = int(std::ceil((bb.x1 - bb.y0) / step));
        for (int k = k0; k <= k1; ++k) {
            double c = k * step;
            emit_line(out, t, bb.x0 - sp, bb.x0 - sp - c, bb.x1 + sp, bb.x1 + sp - c, color, wpx);
        }
        break;
    }
    case fill_kind::checker: {
        int i0 = int(std::floor(bb.x0 / sp)), i1 = int(std::ceil(bb.x1 / sp));
        int j0 = int(std::floor(bb.y0 / sp)), j1 = int(std::ceil(bb.y1 / sp));
        for (int j = j0; j < j1; ++j)
            for (int i = i0; i < i1; ++i) {
                if (((i + j) & 1) != 0) continue;
                out += "<rect x=\"" + fmt(t.px(i * sp)) + "\" y=\"" + fmt(t.py((j + 1) * sp)) +
                       "\" width=\"" + fmt(sp * t.ppu) + "\" height=\"" + fmt(sp * t.ppu) +
                       "\" fill=\"" + color + "\"/>\n";
            }
        break;
    }
    case fill_kind::dots: {
        int i0 = int(std::floor(bb.x0 / sp)), i1 = int(std::ceil(bb.x1 / sp));
        int j0 = int(std::floor(bb.y0 / sp)), j1 = int(std::ceil(bb.y1 / sp));
        for (int j = j0; j < j1; ++j)
            for (int i = i0; i < i1; ++i)
                out += "<circle cx=\"" + fmt(t.px((i + 0.5) * sp)) + "\" cy=\"" +
                       fmt(t.py((j + 0.5) * sp)) + "\" r=\"" + fmt(0.15 * sp * t.ppu) +
                       "\" fill=\"" + color + "\"/>\n";
        break;
    }
    case fill_kind::concentric: {
        // shrunken copies of the outer boundary, stepping inward by sp
        if (region.outer_boundary < 0) break;
        const closed_path& outer = region.boundaries[size_t(region.outer_boundary)];
        vec2 centroid{0, 0};
        double count = 0;
        auto sample = [&](vec2 p) {
            centroid = centroid + p;
            count += 1;
        };
        for (const auto& piece : outer.pieces) {
            if (std::holds_alternative<segment_piece>(piece)) {
                const auto& s = std::get<segment_piece>(piece);
                sample(s.a);
                sample(s.b);
            } else {
                const auto& a = std::get<arc_piece>(piece);
                double sweep = arc_sweep(a);
                for (int i = 0; i <= 8; ++i) {
                    double ang = a.start_angle + sweep * (double(i) / 8.0);
                    sample(a.center + a.radius * vec2{std::cos(ang), std::sin(ang)});
                }
            }
        }
        centroid = (1.0 / count) * centroid;
        double r_max = 0;
        for (const auto& piece : outer.pieces) {
            vec2 p = piece_start(piece);
            r_max = std::max(r_max, norm(p - centroid));
        }
        if (r_max <= 0) break;
        for (int step = 1;; ++step) {
            double f = 1.0 - step * sp / r_max;
            if (f < 0.05) break;
            out += "<path d=\"" + path_data(scaled_copy(outer, centroid, f), t) +
                   "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + fmt(wpx) +
                   "\"/>\n";
        }
        break;
    }
    case fill_kind::empty: break;
    }
    out += "</g>\n";
}

std::string escape_text(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (c == '&')
            out += "&amp;";
        else if (c == '<')
            out += "&lt;";
        else if (c == '>')
            out += "&gt;";
        else
            out += c;
    }
    return out;
}

double size_attr(const std::string& doc, const char* name) {
    std::string needle = std::string(name) + "=\"";
    size_t pos = doc.find(needle);
    if (pos == std::string::npos)
        fail(errc::parse, std::string("document lacks a ") + name + " attribute");
    return std::strtod(doc.c_str() + pos + needle.size(), nullptr);
}

std::string replace_all(std::string text, const std::string& from, const std::string& to) {
    size_t pos = 0;
    while ((pos = text.find(from, pos)) != std::string::npos) {
        text.replace(pos, from.size(), to);
        pos += to.size();
    }
    return text;
}

} // namespace

std::string render_svg(const gate_config& config, const render_plan& plan,
                       const render_params& params) {
    render_params eff = params;
    eff.dot_radius = plan.dot_radius;
    eff.check();

    const grid_spec& g = config.grid;
    xform t{eff.px_per_unit, eff.margin, double(g.canvas_h())};
    double w_px = (g.canvas_w() + 2 * eff.margin) * eff.px_per_unit;
    double h_px = (g.canvas_h() + 2 * eff.margin) * eff.px_per_unit;
    std::string color = to_hex(plan.color);

    std::vector<closed_path> center = smooth_path(trace(config), g);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w_px) + "\" height=\"" +
           fmt(h_px) + "\" viewBox=\"0 0 " + fmt(w_px) + " " + fmt(h_px) + "\">\n";

    bool want_fill = plan.fill.kind != fill_kind::empty;
    face_set fs;
    if (want_fill) {
        fs = faces(config);
        out += "<defs>\n";
        for (size_t k = 0; k < fs.regions.size(); ++k) {
            if (fs.regions[k].exterior) continue;
            std::string d;
            for (const auto& b : fs.regions[k].boundaries) {
                if (!d.empty()) d += " ";
                d += path_data(b, t);
            }
            out += "<clipPath id=\"region-" + std::to_string(k) + "\"><path d=\"" + d +
                   "\" clip-rule=\"evenodd\"/></clipPath>\n";
        }
        out += "</defs>\n";
    }

    out += "<rect x=\"0.0000\" y=\"0.0000\" width=\"" + fmt(w_px) + "\" height=\"" + fmt(h_px) +
           "\" fill=\"" + kGround + "\"/>\n";

    if (want_fill)
        for (size_t k = 0; k < fs.regions.size(); ++k) {
            if (fs.regions[k].exterior) continue;
            emit_region_fill(out, fs.regions[k], k, plan.fill, color, eff, t);
        }

    double stroke_px = eff.stroke * eff.px_per_unit;
    auto stroke_path = [&](const closed_path& p) {
        out += "<path d=\"" + path_data(p, t) + "\" fill=\"none\" stroke=\"" + color +
               "\" stroke-width=\"" + fmt(stroke_px) +
               "\" stroke-linejoin=\"round\" stroke-linecap=\"round\"/>\n";
    };
    if (plan.line == line_kind::single) {
        for (const auto& p : center) stroke_path(p);
    } else {
        std::vector<closed_path> outer, inner;
        for (const auto& p : center) {
            outer.push_back(offset_path(p, eff.gap_delta));
            inner.push_back(offset_path(p, -eff.gap_delta));
        }
        if (plan.line == line_kind::double_filled) {
            std::string d;
            for (size_t i = 0; i < outer.size(); ++i) {
                if (!d.empty()) d += " ";
                d += path_data(outer[i], t) + " " + path_data(inner[i], t);
            }
            out += "<path d=\"" + d + "\" fill=\"" + color + "\" fill-rule=\"evenodd\"/>\n";
        }
        for (const auto& p : outer) stroke_path(p);
        for (const auto& p : inner) stroke_path(p);
    }

    for (int j = 0; j < g.height; ++j)
        for (int i = 0; i < g.width; ++i)
            out += "<circle cx=\"" + fmt(t.px(2 * i + 1)) + "\" cy=\"" + fmt(t.py(2 * j + 1)) +
                   "\" r=\"" + fmt(plan.dot_radius * t.ppu) + "\" fill=\"" + color + "\"/>\n";

    out += "</svg>\n";
    return out;
}

std::string render_ascii(const gate_config& config) {
    const grid_spec& g = config.grid;
    std::string out;
    for (int y = g.canvas_h(); y >= 0; --y) {
        for (int x = 0; x <= g.canvas_w(); ++x) {
            char ch = ' ';
            bool xo = x % 2 == 1, yo = y % 2 == 1;
            if (xo && yo) {
                ch = 'o';
            } else if (xo != yo) {
                int site = g.site_index(x, y);
                if (site < 0)
                    ch = '#'; // wall vertex
                else if (!config.closed(site))
                    ch = '.';
                else
                    ch = xo ? '-' : '|';
            }
            out += ch;
        }
        out += '\n';
    }
    return out;
}

std::string contact_sheet(const std::vector<sheet_item>& items, int columns) {
    if (items.empty()) fail(errc::index_range, "contact sheet needs at least one document");
    if (columns < 1) fail(errc::index_range, "contact sheet needs at least one column");
    double child_w = 0, child_h = 0;
    for (const auto& item : items) {
        child_w = std::max(child_w, size_attr(item.document, "width"));
        child_h = std::max(child_h, size_attr(item.document, "height"));
    }
    const double caption_h = 24.0;
    int rows = (int(items.size()) + columns - 1) / columns;
    double sheet_w = columns * child_w;
    double sheet_h = rows * (child_h + caption_h);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(sheet_w) + "\" height=\"" +
           fmt(sheet_h) + "\" viewBox=\"0 0 " + fmt(sheet_w) + " " + fmt(sheet_h) + "\">\n";
    out += "<rect x=\"0.0000\" y=\"0.0000\" width=\"" + fmt(sheet_w) + "\" height=\"" +
           fmt(sheet_h) + "\" fill=\"" + kGround + "\"/>\n";
    for (size_t i = 0; i < items.size(); ++i) {
        int col = int(i) % columns, row = int(i) / columns;
        double slot_x = col * child_w;
        double slot_y = row * (child_h + caption_h);
        const std::string& doc = items[i].document;
        double w = size_attr(doc, "width"), h = size_attr(doc, "height");
        size_t svg_at = doc.find("<svg ");
        if (svg_at == std::string::npos) fail(errc::parse, "document lacks an svg element");
        std::string body = doc.substr(svg_at);
        body = replace_all(std::move(body), "region-", "c" + std::to_string(i) + "-region-");
        double x = slot_x + (child_w - w) / 2.0;
        double y = slot_y + (child_h - h) / 2.0;
        out += "<svg x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" " + body.substr(5);
        if (out.back() != '\n') out += '\n';
        out += "<text x=\"" + fmt(slot_x + child_w / 2.0) + "\" y=\"" +
               fmt(slot_y + child_h + 17.0) +
               "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"13\" fill=\"" +
               kCaptionInk + "\">" + escape_text(items[i].caption) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace kolam
