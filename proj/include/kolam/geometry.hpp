#pragma once

#include <cmath>
#include <variant>
#include <vector>

#include "kolam/trace.hpp"

namespace kolam {

struct vec2 {
    double x = 0.0, y = 0.0;
    bool operator==(const vec2&) const = default;
};

inline vec2 operator+(vec2 a, vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline vec2 operator-(vec2 a, vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline vec2 operator*(double s, vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(vec2 a, vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(vec2 a, vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(vec2 a) { return std::sqrt(dot(a, a)); }

struct segment_piece {
    vec2 a, b;
};

// Circular arc from start_angle to end_angle around center, sweeping in the
// ccw direction when ccw is set, cw otherwise. Engine arcs are quarter turns
// of radius 1/sqrt(2) centered on dots.
struct arc_piece {
    vec2 center;
    double radius = 0.0;
    double start_angle = 0.0;
    double end_angle = 0.0;
    bool ccw = true;
};

using path_piece = std::variant<segment_piece, arc_piece>;

struct closed_path {
    std::vector<path_piece> pieces;
};

vec2 piece_start(const path_piece& piece);
vec2 piece_end(const path_piece& piece);
vec2 piece_start_tangent(const path_piece& piece); // unit
vec2 piece_end_tangent(const path_piece& piece);   // unit
double piece_length(const path_piece& piece);
vec2 piece_point(const path_piece& piece, double t); // t in [0, 1]
double arc_sweep(const arc_piece& arc);              // signed, ccw positive

// Distance from the curve to every dot center; the construction puts every
// piece exactly 1/sqrt(2) away.
inline constexpr double kStrandClearance = 0.70710678118654752440;

// One smooth G1 path per traced loop: quarter arcs at bounce events joined
// by the straight diagonal runs between them.
std::vector<closed_path> smooth_path(const loop_set& loops, const grid_spec& grid);

// Parallel curve at signed distance delta (positive offsets to the left of
// travel). Throws offset_range unless 2|delta| < 2 - sqrt(2).
closed_path offset_path(const closed_path& path, double delta);

struct render_params {
    double dot_radius = 0.35;
    double stroke = 0.06;      // line width in canvas units
    double gap_delta = 0.12;   // half-distance between double lines
    double px_per_unit = 40.0;
    double margin = 1.0;       // canvas units around the drawing

    // Enforces dot_radius + stroke/2 < 1/sqrt(2) - gap_delta and
    // 2*gap_delta < 2 - sqrt(2).
    void check() const; // throws index_range
};

enum class face_class { dot, corridor, wall };

// Atomic faces are the diamonds of the strand-line arrangement, indexed by
// their center point in (y, x) order: dots at odd-odd centers, corridors at
// interior even-even centers, wall slivers at boundary even-even centers.
struct atomic_face {
    int cx = 0, cy = 0;
    face_class cls = face_class::dot;
};

struct face_region {
    std::vector<int> face_ids; // ascending
    bool exterior = false;
    std::vector<int> dot_ids;            // dots whose face lies in this region
    std::vector<closed_path> boundaries; // one per boundary component
    int outer_boundary = -1;             // index into boundaries, -1 for the exterior
};

struct face_set {
    grid_spec grid;
    std::vector<atomic_face> faces;
    std::vector<int> region_of; // face index -> index into regions
    std::vector<face_region> regions;

    int interior_region_count() const {
        int n = 0;
        for (const auto& r : regions)
            if (!r.exterior) ++n;
        return n;
    }
};

// Merge relation: a CLOSED V-site joins its west/east neighbor faces, a
// CLOSED H-site its south/north ones, wall vertices join their flanking wall
// slivers, OPEN sites join nothing. Dot faces never merge. The exterior is
// the merge of all wall faces and always comes out as regions[0].
face_set faces(const gate_config& config);

// Per-dot enclosure flags in row-major dot order, derived from the face
// structure.
std::vector<bool> enclosure_check(const gate_config& config);

double min_clearance(const std::vector<closed_path>& paths, const grid_spec& grid);
double max_tangent_mismatch(const closed_path& path); // radians
double total_turning(const closed_path& path);        // sum of signed sweeps
int non_diagonal_segment_count(const std::vector<closed_path>& paths);
double signed_area(const closed_path& path);

} // namespace kolam
