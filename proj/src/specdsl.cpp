#include "kolam/specdsl.hpp"

#include "kolam/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace kolam {

namespace {

enum class tok {
    ident,
    number,
    dims, // 3x3
    arrow,
    darrow,
    dotdot,
    lbrace,
    rbrace,
    comma,
    colon,
    slash,
    end,
};

struct token {
    tok kind = tok::end;
    std::string text;
    double num = 0.0;
    int dims_w = 0, dims_h = 0;
    int col = 1;
};

bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool ident_char(char c) {
    return ident_start(c) || (c >= '0' && c <= '9');
}
bool digit(char c) {
    return c >= '0' && c <= '9';
}

struct line_tokens {
    std::vector<token> toks; // terminated by a tok::end entry
    bool ok = true;
    diagnostic err;
};

line_tokens lex_line(std::string_view s, int line_no) {
    line_tokens out;
    size_t i = 0, n = s.size();
    auto push = [&](tok kind, size_t start, size_t len) {
        token t;
        t.kind = kind;
        t.text = std::string(s.substr(start, len));
        t.col = int(start) + 1;
        out.toks.push_back(std::move(t));
    };
    while (i < n) {
        char c = s[i];
        if (c == ' ' || c == '\t') {
            ++i;
            continue;
        }
        if (c == '#') break;
        size_t start = i;
        if (ident_start(c)) {
            while (i < n && ident_char(s[i])) ++i;
            push(tok::ident, start, i - start);
            continue;
        }
        bool neg = c == '-' && i + 1 < n &&
                   (digit(s[i + 1]) || (s[i + 1] == '.' && i + 2 < n && digit(s[i + 2])));
        if (digit(c) || neg || (c == '.' && i + 1 < n && digit(s[i + 1]))) {
            if (s[i] == '-') ++i;
            size_t digits_start = i;
            while (i < n && digit(s[i])) ++i;
            if (!neg && i > digits_start && i < n && s[i] == 'x' && i + 1 < n && digit(s[i + 1])) {
                // dimensions like 3x3 read as one token
                token t;
                t.kind = tok::dims;
                auto r1 = std::from_chars(s.data() + digits_start, s.data() + i, t.dims_w);
                ++i;
                size_t hs = i;
                while (i < n && digit(s[i])) ++i;
                auto r2 = std::from_chars(s.data() + hs, s.data() + i, t.dims_h);
                if (r1.ec != std::errc() || r2.ec != std::errc()) {
                    out.ok = false;
                    out.err = {severity::error, "grid dimensions out of range", line_no,
                               int(start) + 1};
                    return out;
                }
                t.text = std::string(s.substr(start, i - start));
                t.col = int(start) + 1;
                out.toks.push_back(std::move(t));
                continue;
            }
            // a '..' range separator ends the number
            if (i < n && s[i] == '.' && !(i + 1 < n && s[i + 1] == '.')) {
                ++i;
                while (i < n && digit(s[i])) ++i;
            }
            if (i < n && (s[i] == 'e' || s[i] == 'E')) {
                size_t j = i + 1;
                if (j < n && (s[j] == '+' || s[j] == '-')) ++j;
                if (j < n && digit(s[j])) {
                    i = j;
                    while (i < n && digit(s[i])) ++i;
                }
            }
            token t;
            t.kind = tok::number;
            t.text = std::string(s.substr(start, i - start));
            t.num = std::strtod(t.text.c_str(), nullptr);
            t.col = int(start) + 1;
            out.toks.push_back(std::move(t));
            continue;
        }
        if (c == '-' && i + 1 < n && s[i + 1] == '>') {
            push(tok::arrow, start, 2);
            i += 2;
            continue;
        }
        if (c == '=' && i + 1 < n && s[i + 1] == '>') {
            push(tok::darrow, start, 2);
            i += 2;
            continue;
        }
        if (c == '.' && i + 1 < n && s[i + 1] == '.') {
            push(tok::dotdot, start, 2);
            i += 2;
            continue;
        }
        if (c == '{' || c == '}' || c == ',' || c == ':' || c == '/') {
            tok kind = c == '{'   ? tok::lbrace
                       : c == '}' ? tok::rbrace
                       : c == ',' ? tok::comma
                       : c == ':' ? tok::colon
                                  : tok::slash;
            push(kind, start, 1);
            ++i;
            continue;
        }
        out.ok = false;
        out.err = {severity::error, std::string("unexpected character '") + c + "'", line_no,
                   int(start) + 1};
        return out;
    }
    token fin;
    fin.kind = tok::end;
    fin.col = int(i) + 1;
    out.toks.push_back(fin);
    return out;
}

struct cursor {
    const std::vector<token>& toks;
    int line;
    std::vector<diagnostic>& diags;
    size_t i = 0;

    const token& peek() const { return toks[i]; }
    void advance() {
        if (toks[i].kind != tok::end) ++i;
    }
    bool done() const { return toks[i].kind == tok::end; }
    ast_pos here() const { return {line, toks[i].col}; }

    bool error(std::string msg) {
        diags.push_back({severity::error, std::move(msg), line, toks[i].col});
        return false;
    }
    bool error_at(std::string msg, ast_pos p) {
        diags.push_back({severity::error, std::move(msg), p.line, p.column});
        return false;
    }
    bool expect(tok kind, const char* msg) {
        if (peek().kind != kind) return error(msg);
        advance();
        return true;
    }
    bool expect_number(double* out) {
        if (peek().kind != tok::number) return error("expected a number");
        *out = peek().num;
        advance();
        return true;
    }
};

bool parse_grid_line(cursor& c, spec_ast& ast) {
    ast_pos kw = c.here();
    c.advance();
    int w = 0, h = 0;
    ast_pos dims_pos = c.here();
    if (c.peek().kind == tok::dims) {
        w = c.peek().dims_w;
        h = c.peek().dims_h;
        c.advance();
    } else if (c.peek().kind == tok::number) {
        // spaced form: kolam 3 x 3
        double a = c.peek().num;
        if (a != std::floor(a) || a < 0 || a > 1e6)
            return c.error("expected grid dimensions like 3x3");
        c.advance();
        if (!(c.peek().kind == tok::ident && c.peek().text == "x"))
            return c.error("expected grid dimensions like 3x3");
        c.advance();
        if (c.peek().kind != tok::number) return c.error("expected grid dimensions like 3x3");
        double b = c.peek().num;
        if (b != std::floor(b) || b < 0 || b > 1e6)
            return c.error("expected grid dimensions like 3x3");
        c.advance();
        w = int(a);
        h = int(b);
    } else {
        return c.error("expected grid dimensions like 3x3");
    }
    if (ast.grid_declared) return c.error_at("grid declared twice", kw);
    ast.grid_declared = true;
    ast.grid_w = w;
    ast.grid_h = h;
    ast.grid_pos = dims_pos;
    return true;
}

bool parse_symmetry_line(cursor& c, spec_ast& ast) {
    ast_pos kw = c.here();
    c.advance();
    ast_pos name_pos = c.here();
    if (c.peek().kind != tok::ident) return c.error("expected a symmetry name");
    std::string name = c.peek().text;
    c.advance();
    auto g = parse_symmetry(name);
    // the file grammar names five groups; hv stays an engine-level option
    if (!g || *g == symmetry_group::hv)
        return c.error_at("unknown symmetry '" + name + "'", name_pos);
    if (ast.symmetry_declared) return c.error_at("symmetry declared twice", kw);
    ast.symmetry_declared = true;
    ast.symmetry = *g;
    return true;
}

bool parse_value(cursor& c, ast_value& v) {
    v.pos = c.here();
    if (c.peek().kind == tok::number) {
        v.is_number = true;
        v.number = c.peek().num;
        v.text = c.peek().text;
        c.advance();
        return true;
    }
    if (c.peek().kind != tok::ident) return c.error("expected a category value");
    v.text = c.peek().text;
    c.advance();
    if (c.peek().kind == tok::slash) {
        c.advance();
        v.density_pos = c.here();
        if (c.peek().kind != tok::ident) return c.error("expected a fill density after '/'");
        v.density = c.peek().text;
        c.advance();
    }
    return true;
}

bool parse_map_line(cursor& c, spec_ast& ast) {
    ast_binding b;
    b.pos = c.here();
    c.advance();
    if (c.peek().kind != tok::ident) return c.error("expected a field name");
    b.field = c.peek().text;
    c.advance();
    if (!c.expect(tok::arrow, "expected '->' after the field name")) return false;
    b.channel_pos = c.here();
    if (c.peek().kind != tok::ident) return c.error("expected a channel name");
    std::string chan = c.peek().text;
    auto ch = parse_channel(chan);
    if (!ch) return c.error("unknown channel '" + chan + "'");
    b.target = *ch;
    c.advance();
    b.scale_pos = c.here();
    if (c.peek().kind == tok::ident && c.peek().text == "linear") {
        b.is_linear = true;
        c.advance();
        if (!c.expect_number(&b.linear.in_lo)) return false;
        if (!c.expect(tok::dotdot, "expected '..' between range bounds")) return false;
        if (!c.expect_number(&b.linear.in_hi)) return false;
        if (!c.expect(tok::darrow, "expected '=>' between ranges")) return false;
        if (!c.expect_number(&b.linear.out_lo)) return false;
        if (!c.expect(tok::dotdot, "expected '..' between range bounds")) return false;
        if (!c.expect_number(&b.linear.out_hi)) return false;
        if (c.peek().kind == tok::ident && c.peek().text == "clamp") {
            b.linear.clamp = true;
            c.advance();
        }
    } else if (c.peek().kind == tok::lbrace) {
        c.advance();
        while (true) {
            ast_pair p;
            p.key_pos = c.here();
            if (c.peek().kind != tok::ident) return c.error("expected a category name");
            p.key = c.peek().text;
            c.advance();
            if (!c.expect(tok::colon, "expected ':' after the category name")) return false;
            if (!parse_value(c, p.value)) return false;
            b.pairs.push_back(std::move(p));
            if (c.peek().kind == tok::comma) {
                c.advance();
                continue;
            }
            if (c.peek().kind == tok::rbrace) {
                c.advance();
                break;
            }
            return c.error("expected ',' or '}'");
        }
    } else {
        return c.error("expected 'linear' or '{'");
    }
    ast.bindings.push_back(std::move(b));
    return true;
}

bool parse_pigment_line(cursor& c, spec_ast& ast) {
    c.advance();
    ast_pigment p;
    p.pos = c.here();
    if (c.peek().kind != tok::ident) return c.error("expected a pigment name");
    p.name = c.peek().text;
    c.advance();
    if (!c.expect_number(&p.color.r)) return false;
    if (!c.expect_number(&p.color.g)) return false;
    if (!c.expect_number(&p.color.b)) return false;
    for (const auto& prev : ast.pigments)
        if (prev.name == p.name) return c.error_at("pigment '" + p.name + "' declared twice", p.pos);
    ast.pigments.push_back(std::move(p));
    return true;
}

std::string num4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string num_text(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_value(const ast_value& v) {
    if (v.is_number) return num_text(v.number);
    std::string out = v.text;
    if (!v.density.empty() && v.density != "medium") out += "/" + v.density;
    return out;
}

} // namespace

std::string to_string(const diagnostic& d) {
    return "line " + std::to_string(d.line) + ", column " + std::to_string(d.column) + ": " +
           d.message;
}

parse_result parse_spec(std::string_view source) {
    parse_result out;
    spec_ast ast;
    int line_no = 0;
    size_t pos = 0;
    bool more = true;
    while (more) {
        std::string_view raw;
        size_t nl = source.find('\n', pos);
        if (nl == std::string_view::npos) {
            raw = source.substr(pos);
            more = false;
        } else {
            raw = source.substr(pos, nl - pos);
            pos = nl + 1;
        }
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        line_tokens lx = lex_line(raw, line_no);
        if (!lx.ok) {
            out.diagnostics.push_back(lx.err);
            continue;
        }
        cursor c{lx.toks, line_no, out.diagnostics};
        if (c.done()) continue;
        if (c.peek().kind != tok::ident) {
            c.error("expected a declaration");
            continue;
        }
        const std::string dir = c.peek().text;
        bool parsed = false;
        if (dir == "kolam")
            parsed = parse_grid_line(c, ast);
        else if (dir == "symmetry")
            parsed = parse_symmetry_line(c, ast);
        else if (dir == "map")
            parsed = parse_map_line(c, ast);
        else if (dir == "pigment")
            parsed = parse_pigment_line(c, ast);
        else {
            c.error("unknown directive '" + dir + "'");
            continue;
        }
        if (parsed && !c.done()) c.error("unexpected '" + c.peek().text + "'");
    }
    bool has_error = false;
    for (const auto& d : out.diagnostics)
        if (d.sev == severity::error) has_error = true;
    if (!has_error) out.ast = std::move(ast);
    return out;
}

lower_result lower_spec(const spec_ast& ast) {
    lower_result out;
    auto diag = [&](std::string msg, ast_pos p) {
        out.diagnostics.push_back({severity::error, std::move(msg), p.line, p.column});
    };
    mapping_spec spec;
    if (!ast.grid_declared) {
        diag("missing grid declaration", {1, 1});
    } else {
        try {
            spec.grid = make_grid(ast.grid_w, ast.grid_h);
        } catch (const error& e) {
            diag(e.what(), ast.grid_pos);
        }
    }
    spec.symmetry = ast.symmetry;
    spec.symmetry_declared = ast.symmetry_declared;

    spec.pigments = builtin_pigments();
    std::vector<pigment> extras;
    for (const auto& p : ast.pigments) {
        bool replaced = false;
        for (auto& existing : spec.pigments)
            if (existing.name == p.name) {
                existing.color = p.color;
                replaced = true;
                break;
            }
        if (!replaced) extras.push_back(pigment{p.name, p.color});
    }
    std::sort(extras.begin(), extras.end(),
              [](const pigment& a, const pigment& b) { return a.name < b.name; });
    spec.pigments.insert(spec.pigments.end(), extras.begin(), extras.end());

    bool seen[5] = {};
    for (const auto& b : ast.bindings) {
        if (seen[int(b.target)]) {
            diag(std::string("channel '") + to_string(b.target) + "' bound twice", b.channel_pos);
            continue;
        }
        seen[int(b.target)] = true;
        binding mb;
        mb.field = b.field;
        mb.target = b.target;
        if (b.target == channel::dot_size) {
            if (!b.is_linear) {
                diag("channel 'dot_size' needs a linear scale", b.scale_pos);
                continue;
            }
            try {
                mb.linear = make_linear_scale(b.linear.in_lo, b.linear.in_hi, b.linear.out_lo,
                                              b.linear.out_hi, b.linear.clamp);
            } catch (const error& e) {
                diag(e.what(), b.scale_pos);
                continue;
            }
            if (!(b.linear.out_lo > 0.0)) {
                diag("dot_size range must stay positive", b.scale_pos);
                continue;
            }
            if (!(b.linear.out_hi < dot_radius_ceiling())) {
                diag("dot_size range exceeds the " + num4(dot_radius_ceiling()) + " ceiling",
                     b.scale_pos);
                continue;
            }
        } else {
            if (b.is_linear) {
                diag(std::string("channel '") + to_string(b.target) + "' needs a category map",
                     b.scale_pos);
                continue;
            }
            bool clean = true;
            for (size_t pi = 0; pi < b.pairs.size(); ++pi) {
                const ast_pair& p = b.pairs[pi];
                bool dup = false;
                for (size_t pj = 0; pj < pi; ++pj)
                    if (b.pairs[pj].key == p.key) dup = true;
                if (dup) {
                    diag("category '" + p.key + "' repeated in this map", p.key_pos);
                    clean = false;
                    continue;
                }
                const ast_value& v = p.value;
                if (!v.density.empty() && b.target != channel::fill) {
                    diag("density suffix only applies to fill values", v.density_pos);
                    clean = false;
                    continue;
                }
                switch (b.target) {
                case channel::line_type: {
                    auto k = v.is_number ? std::optional<line_kind>{} : parse_line_kind(v.text);
                    if (!k) {
                        diag("unknown line kind '" + v.text + "'", v.pos);
                        clean = false;
                        break;
                    }
                    mb.lines.emplace_back(p.key, *k);
                    break;
                }
                case channel::color: {
                    const pigment* found = nullptr;
                    if (!v.is_number)
                        for (const auto& pg : spec.pigments)
                            if (pg.name == v.text) found = &pg;
                    if (!found) {
                        diag("unknown pigment '" + v.text + "'", v.pos);
                        clean = false;
                        break;
                    }
                    mb.colors.emplace_back(p.key, v.text);
                    break;
                }
                case channel::fill: {
                    auto k = v.is_number ? std::optional<fill_kind>{} : parse_fill_kind(v.text);
                    if (!k) {
                        diag("unknown fill kind '" + v.text + "'", v.pos);
                        clean = false;
                        break;
                    }
                    fill_spec fs;
                    fs.kind = *k;
                    if (!v.density.empty()) {
                        auto d = parse_fill_density(v.density);
                        if (!d) {
                            diag("unknown fill density '" + v.density + "'", v.density_pos);
                            clean = false;
                            break;
                        }
                        fs.density = *d;
                    }
                    mb.fills.emplace_back(p.key, fs);
                    break;
                }
                case channel::pattern: {
                    if (!v.is_number || v.number < 0 || v.number != std::floor(v.number)) {
                        diag("pattern index must be a non-negative integer", v.pos);
                        clean = false;
                        break;
                    }
                    mb.patterns.emplace_back(p.key, std::uint64_t(v.number));
                    break;
                }
                case channel::dot_size:
                    break;
                }
            }
            if (!clean) continue;
        }
        spec.bindings.push_back(std::move(mb));
    }
    std::stable_sort(spec.bindings.begin(), spec.bindings.end(),
                     [](const binding& a, const binding& b) { return a.target < b.target; });
    if (out.diagnostics.empty()) out.spec = std::move(spec);
    return out;
}

lower_result compile_spec(std::string_view source) {
    parse_result parsed = parse_spec(source);
    if (!parsed.ok()) {
        lower_result out;
        out.diagnostics = std::move(parsed.diagnostics);
        return out;
    }
    return lower_spec(*parsed.ast);
}

std::string format_spec(const spec_ast& ast) {
    std::string out;
    if (ast.grid_declared)
        out += "kolam " + std::to_string(ast.grid_w) + "x" + std::to_string(ast.grid_h) + "\n";
    if (ast.symmetry_declared) out += std::string("symmetry ") + to_string(ast.symmetry) + "\n";
    std::vector<const ast_pigment*> pigs;
    for (const auto& p : ast.pigments) pigs.push_back(&p);
    std::sort(pigs.begin(), pigs.end(),
              [](const ast_pigment* a, const ast_pigment* b) { return a->name < b->name; });
    for (const ast_pigment* p : pigs)
        out += "pigment " + p->name + " " + num_text(p->color.r) + " " + num_text(p->color.g) +
               " " + num_text(p->color.b) + "\n";
    std::vector<const ast_binding*> binds;
    for (const auto& b : ast.bindings) binds.push_back(&b);
    std::stable_sort(binds.begin(), binds.end(),
                     [](const ast_binding* a, const ast_binding* b) { return a->target < b->target; });
    for (const ast_binding* b : binds) {
        out += "map " + b->field + " -> ";
        out += to_string(b->target);
        if (b->is_linear) {
            const ast_linear& l = b->linear;
            out += " linear " + num_text(l.in_lo) + ".." + num_text(l.in_hi) + " => " +
                   num_text(l.out_lo) + ".." + num_text(l.out_hi);
            if (l.clamp) out += " clamp";
        } else {
            out += " { ";
            bool first = true;
            for (const auto& p : b->pairs) {
                if (!first) out += ", ";
                first = false;
                out += p.key + ": " + format_value(p.value);
            }
            out += " }";
        }
        out += "\n";
    }
    return out;
}

} // namespace kolam
