#pragma once

#include <string>
#include <vector>

// Shared fixture table: mapping-language sources with either the exact
// diagnostics they must produce or their canonical formatting.

namespace dsl_corpus {

struct expected_diag {
    int line = 0;
    int column = 0;
    std::string message;
};

struct dsl_case {
    std::string name;
    std::string source;
    std::vector<expected_diag> diags; // empty: must compile cleanly
    std::string canonical;            // expected canonical text when valid
};

inline const std::vector<dsl_case>& cases() {
    static const std::vector<dsl_case> all = {
        {"grid only", "kolam 3x3\n", {}, "kolam 3x3\n"},
        {"full journal spec",
         "kolam 3x3\n"
         "symmetry rot180\n"
         "map sleep_hours -> dot_size linear 4..9 => 0.18..0.50 clamp\n"
         "map energy -> line_type { high: double, moderate: double_filled, low: single }\n"
         "map mood -> color { calm: rice_white, positive: turmeric, stressed: kumkum }\n"
         "map activity -> fill { none: empty, strength: hatch_v, yoga: hatch_h }\n",
         {},
         "kolam 3x3\n"
         "symmetry rot180\n"
         "map sleep_hours -> dot_size linear 4..9 => 0.18..0.5 clamp\n"
         "map energy -> line_type { high: double, moderate: double_filled, low: single }\n"
         "map mood -> color { calm: rice_white, positive: turmeric, stressed: kumkum }\n"
         "map activity -> fill { none: empty, strength: hatch_v, yoga: hatch_h }\n"},
        {"declarations reordered",
         "pigment moss 0.2 0.5 0.3\nmap mood -> color { calm: moss }\nkolam 2x2\n", {},
         "kolam 2x2\npigment moss 0.2 0.5 0.3\nmap mood -> color { calm: moss }\n"},
        {"comments and blank lines dropped",
         "kolam 3x3\n# just a comment\n\nmap z -> pattern { night: 2 } # idx\n", {},
         "kolam 3x3\nmap z -> pattern { night: 2 }\n"},
        {"fill densities kept",
         "kolam 3x3\nmap a -> fill { x: hatch_d/dense, y: checker/sparse, z: dots }\n", {},
         "kolam 3x3\nmap a -> fill { x: hatch_d/dense, y: checker/sparse, z: dots }\n"},
        {"medium density left implicit",
         "kolam 3x3\nmap a -> fill { x: concentric/medium }\n", {},
         "kolam 3x3\nmap a -> fill { x: concentric }\n"},
        {"spaced grid dimensions", "kolam 3 x 3\n", {}, "kolam 3x3\n"},
        {"two digit dimensions", "kolam 12x7\n", {}, "kolam 12x7\n"},
        {"negative scale bounds",
         "kolam 3x3\nmap t -> dot_size linear -5..5 => 0.2..0.3\n", {},
         "kolam 3x3\nmap t -> dot_size linear -5..5 => 0.2..0.3\n"},
        {"pattern defaults",
         "kolam 3x3\nmap day -> pattern { default: 0, special: 12 }\n", {},
         "kolam 3x3\nmap day -> pattern { default: 0, special: 12 }\n"},
        {"pigment override",
         "kolam 3x3\npigment rice_white 1 1 1\nmap m -> color { a: rice_white }\n", {},
         "kolam 3x3\npigment rice_white 1 1 1\nmap m -> color { a: rice_white }\n"},

        {"unknown channel", "map x -> sparkle { a: 1 }",
         {{1, 10, "unknown channel 'sparkle'"}}, ""},
        {"unknown symmetry", "kolam 3x3\nsymmetry diag\n",
         {{2, 10, "unknown symmetry 'diag'"}}, ""},
        {"hv not in the file grammar", "kolam 3x3\nsymmetry hv\n",
         {{2, 10, "unknown symmetry 'hv'"}}, ""},
        {"grid declared twice", "kolam 3x3\nkolam 4x4\n", {{2, 1, "grid declared twice"}}, ""},
        {"symmetry declared twice", "kolam 3x3\nsymmetry rot180\nsymmetry h\n",
         {{3, 1, "symmetry declared twice"}}, ""},
        {"pigment declared twice",
         "kolam 3x3\npigment moss 0.2 0.5 0.3\npigment moss 1 1 1\n",
         {{3, 9, "pigment 'moss' declared twice"}}, ""},
        {"dot size over the ceiling",
         "kolam 3x3\nmap sleep -> dot_size linear 4..9 => 0.18..0.9\n",
         {{2, 23, "dot_size range exceeds the 0.5571 ceiling"}}, ""},
        {"unknown pigment", "kolam 3x3\nmap a -> color { x: nopigment }\n",
         {{2, 21, "unknown pigment 'nopigment'"}}, ""},
        {"channel bound twice",
         "kolam 3x3\nmap a -> color { c: rice_white }\nmap b -> color { d: kumkum }\n",
         {{3, 10, "channel 'color' bound twice"}}, ""},
        {"linear scale on a categorical channel",
         "kolam 3x3\nmap e -> line_type linear 0..1 => 0..1\n",
         {{2, 20, "channel 'line_type' needs a category map"}}, ""},
        {"category map on dot size", "kolam 3x3\nmap s -> dot_size { a: 1 }\n",
         {{2, 19, "channel 'dot_size' needs a linear scale"}}, ""},
        {"unknown fill kind", "kolam 3x3\nmap f -> fill { a: stripes }\n",
         {{2, 20, "unknown fill kind 'stripes'"}}, ""},
        {"unknown fill density", "kolam 3x3\nmap f -> fill { a: hatch_h/loose }\n",
         {{2, 28, "unknown fill density 'loose'"}}, ""},
        {"density on a non fill channel",
         "kolam 3x3\nmap m -> line_type { a: double/dense }\n",
         {{2, 32, "density suffix only applies to fill values"}}, ""},
        {"pattern index not an integer", "kolam 3x3\nmap p -> pattern { a: x }\n",
         {{2, 23, "pattern index must be a non-negative integer"}}, ""},
        {"category repeated",
         "kolam 3x3\nmap m -> line_type { a: double, a: single }\n",
         {{2, 33, "category 'a' repeated in this map"}}, ""},
        {"missing grid", "map q -> color { c: kumkum }\n",
         {{1, 1, "missing grid declaration"}}, ""},
        {"empty scale domain", "kolam 3x3\nmap s -> dot_size linear 5..5 => 0.1..0.2\n",
         {{2, 19, "scale domain is empty or reversed"}}, ""},
        {"reversed scale range", "kolam 3x3\nmap s -> dot_size linear 4..9 => 0.5..0.18\n",
         {{2, 19, "scale range is reversed"}}, ""},
        {"zero dot size", "kolam 3x3\nmap s -> dot_size linear 0..1 => 0..0.3\n",
         {{2, 19, "dot_size range must stay positive"}}, ""},
        {"trailing tokens",
         "kolam 3x3\nmap s -> dot_size linear 4..9 => 0.18..0.5 clamp extra\n",
         {{2, 50, "unexpected 'extra'"}}, ""},
        {"truncated map", "kolam 3x3\nmap s ->\n", {{2, 9, "expected a channel name"}}, ""},
        {"unknown directive", "kolam 3x3\nbogus stuff\n",
         {{2, 1, "unknown directive 'bogus'"}}, ""},
        {"missing brace", "kolam 3x3\nmap m -> color calm: rice_white\n",
         {{2, 16, "expected 'linear' or '{'"}}, ""},
        {"stray character",
         "kolam 3x3\nmap s -> dot_size linear 4..9 => 0.18..0.5 @\n",
         {{2, 44, "unexpected character '@'"}}, ""},
        {"empty category map", "kolam 3x3\nmap m -> fill { }\n",
         {{2, 17, "expected a category name"}}, ""},
        {"missing comma", "kolam 3x3\nmap m -> fill { a: dots b: dots }\n",
         {{2, 25, "expected ',' or '}'"}}, ""},
        {"errors on every line collected",
         "kolam 9z9\nmap x -> sparkle { a: 1 }\nsymmetry diag\n",
         {{1, 8, "expected grid dimensions like 3x3"},
          {2, 10, "unknown channel 'sparkle'"},
          {3, 10, "unknown symmetry 'diag'"}},
         ""},
    };
    return all;
}

} // namespace dsl_corpus
