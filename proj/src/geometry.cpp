#include "kolam/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <unordered_map>

#include "kolam/error.hpp"

namespace kolam {

namespace {

constexpr double kTau = 6.2831853071795864769252867665590058;

double wrap_positive(double a) {
    double r = std::fmod(a, kTau);
    if (r < 0) r += kTau;
    return r;
}

dir2 bounce(dir2 d, step_action a) {
    if (a == step_action::bounce_x) return {-d.dx, d.dy};
    if (a == step_action::bounce_y) return {d.dx, -d.dy};
    return d;
}

vec2 to_vec(int x, int y) { return {double(x), double(y)}; }

double angle_of(vec2 v) { return std::atan2(v.y, v.x); }

} // namespace

vec2 piece_start(const path_piece& piece) {
    if (const auto* s = std::get_if<segment_piece>(&piece)) return s->a;
    const auto& a = std::get<arc_piece>(piece);
    return a.center + a.radius * vec2{std::cos(a.start_angle), std::sin(a.start_angle)};
}

vec2 piece_end(const path_piece& piece) {
    if (const auto* s = std::get_if<segment_piece>(&piece)) return s->b;
    const auto& a = std::get<arc_piece>(piece);
    return a.center + a.radius * vec2{std::cos(a.end_angle), std::sin(a.end_angle)};
}

double arc_sweep(const arc_piece& arc) {
    double d = wrap_positive(arc.ccw ? arc.end_angle - arc.start_angle
                                     : arc.start_angle - arc.end_angle);
    if (d == 0.0) d = kTau; // coincident endpoints read as a full turn
    return arc.ccw ? d : -d;
}

static vec2 arc_tangent(const arc_piece& a, double angle) {
    vec2 t{-std::sin(angle), std::cos(angle)};
    return a.ccw ? t : -1.0 * t;
}

vec2 piece_start_tangent(const path_piece& piece) {
    if (const auto* s = std::get_if<segment_piece>(&piece)) {
        vec2 d = s->b - s->a;
        return (1.0 / norm(d)) * d;
    }
    const auto& a = std::get<arc_piece>(piece);
    return arc_tangent(a, a.start_angle);
}

vec2 piece_end_tangent(const path_piece& piece) {
    if (const auto* s = std::get_if<segment_piece>(&piece)) {
        vec2 d = s->b - s->a;
        return (1.0 / norm(d)) * d;
    }
    const auto& a = std::get<arc_piece>(piece);
    return arc_tangent(a, a.end_angle);
}

double piece_length(const path_piece& piece) {
    if (const auto* s = std::get_if<segment_piece>(&piece)) return norm(s->b - s->a);
    const auto& a = std::get<arc_piece>(piece);
    return a.radius * std::abs(arc_sweep(a));
}

vec2 piece_point(const path_piece& piece, double t) {
    if (const auto* s = std::get_if<segment_piece>(&piece)) return s->a + t * (s->b - s->a);
    const auto& a = std::get<arc_piece>(piece);
    double ang = a.start_angle + t * arc_sweep(a);
    return a.center + a.radius * vec2{std::cos(ang), std::sin(ang)};
}

std::vector<closed_path> smooth_path(const loop_set& loops, const grid_spec& grid) {
    (void)grid;
    std::vector<closed_path> out;
    out.reserve(loops.loops.size());
    for (const auto& loop : loops.loops) {
        struct turn {
            arc_piece arc;
            vec2 in, out;
        };
        std::vector<turn> turns;
        for (const auto& e : loop.events) {
            if (e.action == step_action::pass) continue;
            dir2 din = e.incoming;
            dir2 dout = bounce(din, e.action);
            vec2 v = to_vec(e.x, e.y);
            vec2 m_in = v - 0.5 * vec2{double(din.dx), double(din.dy)};
            vec2 m_out = v + 0.5 * vec2{double(dout.dx), double(dout.dy)};
            vec2 c = v + 0.5 * vec2{double(dout.dx - din.dx), double(dout.dy - din.dy)};
            bool ccw = (din.dx * dout.dy - din.dy * dout.dx) > 0;
            arc_piece arc{c, kStrandClearance, angle_of(m_in - c), angle_of(m_out - c), ccw};
            turns.push_back({arc, m_in, m_out});
        }
        if (turns.empty())
            fail(errc::invalid_grid, "loop without any turning event");
        closed_path path;
        for (size_t k = 0; k < turns.size(); ++k) {
            path.pieces.push_back(turns[k].arc);
            const vec2 a = turns[k].out;
            const vec2 b = turns[(k + 1) % turns.size()].in;
            vec2 d = b - a;
            if (dot(d, d) > 1e-18) path.pieces.push_back(segment_piece{a, b});
        }
        out.push_back(std::move(path));
    }
    return out;
}

closed_path offset_path(const closed_path& path, double delta) {
    constexpr double kLimit = 0.29289321881345247559915563789515; // (2 - sqrt(2)) / 2
    if (!(std::abs(delta) < kLimit))
        fail(errc::offset_range, "offset magnitude must stay below (2 - sqrt(2))/2");
    closed_path out;
    out.pieces.reserve(path.pieces.size());
    for (const auto& piece : path.pieces) {
        if (const auto* s = std::get_if<segment_piece>(&piece)) {
            vec2 d = s->b - s->a;
            vec2 u = (1.0 / norm(d)) * d;
            vec2 n{-u.y, u.x};
            out.pieces.push_back(segment_piece{s->a + delta * n, s->b + delta * n});
        } else {
            arc_piece a = std::get<arc_piece>(piece);
            double r = a.ccw ? a.radius - delta : a.radius + delta;
            if (!(r > 0))
                fail(errc::offset_range, "offset collapses an arc");
            a.radius = r;
            out.pieces.push_back(a);
        }
    }
    return out;
}

void render_params::check() const {
    if (!(dot_radius > 0) || !(stroke > 0) || !(gap_delta >= 0) ||
        !(px_per_unit > 0) || !(margin >= 0))
        fail(errc::offset_range, "render parameters must be positive");
    if (!(2.0 * gap_delta < 2.0 - std::sqrt(2.0)))
        fail(errc::offset_range, "gap_delta too large for parallel strands");
    if (!(dot_radius + stroke / 2.0 < kStrandClearance - gap_delta))
        fail(errc::offset_range, "dot radius and stroke leave no clearance to the strand");
}

namespace {

struct disjoint {
    std::vector<int> parent;
    explicit disjoint(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Drawn boundary element: either a quarter arc around a dot or one half of a
// cell diagonal (from a strand vertex to the cell center). p[0] -> p[1] is
// the ccw direction for arcs. left[k] is the region on the left when walking
// from p[k] to p[k^1].
struct boundary_elem {
    bool is_arc = false;
    vec2 p[2];
    vec2 center;   // arcs only
    dir2 seg_d{};  // half diagonals only: direction from the vertex p[0] to p[1]
    int left[2] = {-1, -1};
};

long long point_key(vec2 p, int canvas_w) {
    long long kx = std::llround(2.0 * p.x);
    long long ky = std::llround(2.0 * p.y);
    return ky * (4LL * canvas_w + 8) + kx;
}

} // namespace

face_set faces(const gate_config& config) {
    const grid_spec& g = config.grid;
    const int cw = g.canvas_w(), ch = g.canvas_h();

    face_set fs;
    fs.grid = g;
    std::vector<int> fidx((cw + 1) * (ch + 1), -1);
    auto cell = [&](int x, int y) { return y * (cw + 1) + x; };
    for (int y = 0; y <= ch; ++y)
        for (int x = y % 2; x <= cw; x += 2) {
            face_class cls;
            if (x % 2 == 1)
                cls = face_class::dot;
            else if (x == 0 || y == 0 || x == cw || y == ch)
                cls = face_class::wall;
            else
                cls = face_class::corridor;
            fidx[cell(x, y)] = int(fs.faces.size());
            fs.faces.push_back({x, y, cls});
        }
    auto face_at = [&](int x, int y) {
        int f = x >= 0 && x <= cw && y >= 0 && y <= ch ? fidx[cell(x, y)] : -1;
        if (f < 0) fail(errc::invalid_grid, "face lookup off the lattice");
        return f;
    };

    disjoint dsu(int(fs.faces.size()));
    for (int x = 1; x < cw; x += 2) {
        dsu.unite(face_at(x - 1, 0), face_at(x + 1, 0));
        dsu.unite(face_at(x - 1, ch), face_at(x + 1, ch));
    }
    for (int y = 1; y < ch; y += 2) {
        dsu.unite(face_at(0, y - 1), face_at(0, y + 1));
        dsu.unite(face_at(cw, y - 1), face_at(cw, y + 1));
    }
    for (int s = 0; s < g.site_count(); ++s) {
        if (!config.closed(s)) continue;
        gate_site site = g.site_at(s);
        if (site.kind == site_kind::v_site)
            dsu.unite(face_at(site.x - 1, site.y), face_at(site.x + 1, site.y));
        else
            dsu.unite(face_at(site.x, site.y - 1), face_at(site.x, site.y + 1));
    }

    fs.region_of.assign(fs.faces.size(), -1);
    std::vector<int> region_of_root(fs.faces.size(), -1);
    for (int f = 0; f < int(fs.faces.size()); ++f) {
        int root = dsu.find(f);
        if (region_of_root[root] < 0) {
            region_of_root[root] = int(fs.regions.size());
            fs.regions.push_back({});
        }
        int r = region_of_root[root];
        fs.region_of[f] = r;
        fs.regions[r].face_ids.push_back(f);
        if (fs.faces[f].cls == face_class::wall) fs.regions[r].exterior = true;
        if (fs.faces[f].cls == face_class::dot)
            fs.regions[r].dot_ids.push_back(g.dot_index(fs.faces[f].cx, fs.faces[f].cy));
    }

    auto region_at = [&](int x, int y) { return fs.region_of[face_at(x, y)]; };
    auto rot90 = [](dir2 d) { return dir2{-d.dy, d.dx}; };

    std::vector<boundary_elem> elems;
    auto add_half = [&](int vx, int vy, dir2 d) {
        boundary_elem e;
        e.p[0] = to_vec(vx, vy);
        e.p[1] = e.p[0] + 0.5 * vec2{double(d.dx), double(d.dy)};
        e.seg_d = d;
        dir2 r = rot90(d);
        e.left[0] = region_at(vx + (d.dx + r.dx) / 2, vy + (d.dy + r.dy) / 2);
        e.left[1] = region_at(vx + (d.dx - r.dx) / 2, vy + (d.dy - r.dy) / 2);
        elems.push_back(e);
    };
    auto add_arc = [&](int dot_x, int dot_y, vec2 m1, vec2 m2, int outer_face_x, int outer_face_y) {
        boundary_elem e;
        e.is_arc = true;
        e.center = to_vec(dot_x, dot_y);
        if (cross(m1 - e.center, m2 - e.center) < 0) std::swap(m1, m2);
        e.p[0] = m1;
        e.p[1] = m2;
        e.left[0] = region_at(dot_x, dot_y);
        e.left[1] = region_at(outer_face_x, outer_face_y);
        elems.push_back(e);
    };

    const std::array<dir2, 4> kDirs{{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}};
    for (int s = 0; s < g.site_count(); ++s) {
        gate_site site = g.site_at(s);
        const int x = site.x, y = site.y;
        if (!config.closed(s)) {
            for (dir2 d : kDirs) add_half(x, y, d);
        } else if (site.kind == site_kind::v_site) {
            add_arc(x, y - 1, {x - 0.5, y - 0.5}, {x + 0.5, y - 0.5}, x - 1, y);
            add_arc(x, y + 1, {x - 0.5, y + 0.5}, {x + 0.5, y + 0.5}, x - 1, y);
        } else {
            add_arc(x - 1, y, {x - 0.5, y - 0.5}, {x - 0.5, y + 0.5}, x, y - 1);
            add_arc(x + 1, y, {x + 0.5, y - 0.5}, {x + 0.5, y + 0.5}, x, y - 1);
        }
    }
    for (int x = 1; x < cw; x += 2) {
        add_arc(x, 1, {x - 0.5, 0.5}, {x + 0.5, 0.5}, x - 1, 0);
        add_arc(x, ch - 1, {x - 0.5, ch - 0.5}, {x + 0.5, ch - 0.5}, x - 1, ch);
    }
    for (int y = 1; y < ch; y += 2) {
        add_arc(1, y, {0.5, y - 0.5}, {0.5, y + 0.5}, 0, y - 1);
        add_arc(cw - 1, y, {cw - 0.5, y - 0.5}, {cw - 0.5, y + 0.5}, cw, y - 1);
    }

    // Junction lookup: cell centers have both doubled coordinates odd and
    // join exactly two element ends; open vertices have them even and join
    // four half diagonals, where the walk turns left.
    std::unordered_map<long long, std::vector<std::pair<int, int>>> junctions;
    for (int e = 0; e < int(elems.size()); ++e) {
        junctions[point_key(elems[e].p[0], cw)].push_back({e, 0});
        junctions[point_key(elems[e].p[1], cw)].push_back({e, 1});
    }

    std::vector<bool> visited(2 * elems.size(), false);
    auto emit = [&](std::vector<path_piece>& pieces, int e, int dir) {
        const boundary_elem& el = elems[e];
        vec2 from = el.p[dir], to = el.p[dir ^ 1];
        if (!el.is_arc) {
            if (!pieces.empty()) {
                if (auto* prev = std::get_if<segment_piece>(&pieces.back())) {
                    vec2 u = prev->b - prev->a, w = to - from;
                    if (std::abs(cross(u, w)) < 1e-12 && dot(u, w) > 0 &&
                        norm(from - prev->b) < 1e-12) {
                        prev->b = to;
                        return;
                    }
                }
            }
            pieces.push_back(segment_piece{from, to});
        } else {
            pieces.push_back(arc_piece{el.center, kStrandClearance,
                                       angle_of(from - el.center),
                                       angle_of(to - el.center), dir == 0});
        }
    };

    for (int start = 0; start < 2 * int(elems.size()); ++start) {
        if (visited[start]) continue;
        const int region = elems[start / 2].left[start % 2];
        std::vector<path_piece> pieces;
        int e = start / 2, dir = start % 2;
        do {
            if (elems[e].left[dir] != region)
                fail(errc::invalid_grid, "face boundary walk left an inconsistent region");
            visited[2 * e + dir] = true;
            emit(pieces, e, dir);
            vec2 head = elems[e].p[dir ^ 1];
            long long key = point_key(head, cw);
            bool at_vertex = std::llround(2.0 * head.x) % 2 == 0;
            const auto& inc = junctions.at(key);
            if (at_vertex) {
                dir2 u = elems[e].seg_d; // arrived traveling against seg_d
                dir2 turn = rot90({-u.dx, -u.dy});
                int next = -1;
                for (auto [cand, end] : inc)
                    if (end == 0 && elems[cand].seg_d.dx == turn.dx &&
                        elems[cand].seg_d.dy == turn.dy)
                        next = cand;
                if (next < 0) fail(errc::invalid_grid, "open vertex missing a half diagonal");
                e = next;
                dir = 0;
            } else {
                if (inc.size() != 2) fail(errc::invalid_grid, "cell center junction degree");
                auto other = inc[0].first == e && inc[0].second == (dir ^ 1) ? inc[1] : inc[0];
                e = other.first;
                dir = other.second;
            }
        } while (2 * e + dir != start);
        // the wrap junction can continue a straight run started mid chain
        if (pieces.size() >= 2) {
            auto* first = std::get_if<segment_piece>(&pieces.front());
            auto* last = std::get_if<segment_piece>(&pieces.back());
            if (first && last) {
                vec2 u = last->b - last->a, w = first->b - first->a;
                if (std::abs(cross(u, w)) < 1e-12 && dot(u, w) > 0 &&
                    norm(first->a - last->b) < 1e-12) {
                    first->a = last->a;
                    pieces.pop_back();
                }
            }
        }
        fs.regions[region].boundaries.push_back(closed_path{std::move(pieces)});
    }

    for (auto& r : fs.regions) {
        if (r.exterior) continue;
        double best = 0.0;
        for (int b = 0; b < int(r.boundaries.size()); ++b) {
            double a = signed_area(r.boundaries[b]);
            if (r.outer_boundary < 0 || a > best) {
                best = a;
                r.outer_boundary = b;
            }
        }
        if (r.outer_boundary < 0 || !(best > 0))
            fail(errc::invalid_grid, "interior region lacks a positive boundary");
    }
    return fs;
}

std::vector<bool> enclosure_check(const gate_config& config) {
    face_set fs = faces(config);
    std::vector<bool> enclosed(fs.grid.dot_count(), false);
    for (size_t f = 0; f < fs.faces.size(); ++f) {
        if (fs.faces[f].cls != face_class::dot) continue;
        int dot = fs.grid.dot_index(fs.faces[f].cx, fs.faces[f].cy);
        enclosed[dot] = !fs.regions[fs.region_of[f]].exterior;
    }
    return enclosed;
}

namespace {

double point_piece_distance(vec2 p, const path_piece& piece) {
    if (const auto* s = std::get_if<segment_piece>(&piece)) {
        vec2 ab = s->b - s->a;
        double t = std::clamp(dot(p - s->a, ab) / dot(ab, ab), 0.0, 1.0);
        return norm(p - (s->a + t * ab));
    }
    const auto& a = std::get<arc_piece>(piece);
    vec2 v = p - a.center;
    double sweep = arc_sweep(a);
    double rel = wrap_positive(std::atan2(v.y, v.x) - a.start_angle);
    bool inside = sweep > 0 ? rel <= sweep : rel >= kTau + sweep || rel == 0.0;
    if (inside) return std::abs(norm(v) - a.radius);
    return std::min(norm(p - piece_start(piece)), norm(p - piece_end(piece)));
}

} // namespace

double min_clearance(const std::vector<closed_path>& paths, const grid_spec& grid) {
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < grid.height; ++j)
        for (int i = 0; i < grid.width; ++i) {
            vec2 dot{double(2 * i + 1), double(2 * j + 1)};
            for (const auto& path : paths)
                for (const auto& piece : path.pieces)
                    best = std::min(best, point_piece_distance(dot, piece));
        }
    return best;
}

double max_tangent_mismatch(const closed_path& path) {
    const size_t n = path.pieces.size();
    double worst = 0.0;
    for (size_t i = 0; i < n; ++i) {
        vec2 u = piece_end_tangent(path.pieces[i]);
        vec2 w = piece_start_tangent(path.pieces[(i + 1) % n]);
        worst = std::max(worst, std::atan2(std::abs(cross(u, w)), dot(u, w)));
    }
    return worst;
}

double total_turning(const closed_path& path) {
    double sum = 0.0;
    for (const auto& piece : path.pieces)
        if (const auto* a = std::get_if<arc_piece>(&piece)) sum += arc_sweep(*a);
    return sum;
}

int non_diagonal_segment_count(const std::vector<closed_path>& paths) {
    int count = 0;
    for (const auto& path : paths)
        for (const auto& piece : path.pieces)
            if (const auto* s = std::get_if<segment_piece>(&piece)) {
                vec2 d = s->b - s->a;
                if (std::abs(std::abs(d.x) - std::abs(d.y)) > 1e-9) ++count;
            }
    return count;
}

double signed_area(const closed_path& path) {
    double twice_chords = 0.0, bulge = 0.0;
    for (const auto& piece : path.pieces) {
        twice_chords += cross(piece_start(piece), piece_end(piece));
        if (const auto* a = std::get_if<arc_piece>(&piece)) {
            double phi = arc_sweep(*a);
            bulge += 0.5 * a->radius * a->radius * (phi - std::sin(phi));
        }
    }
    return 0.5 * twice_chords + bulge;
}

} // namespace kolam
