#pragma once

#include "kolam/geometry.hpp"
#include "kolam/mapping.hpp"
#include "kolam/trace.hpp"

#include <string>
#include <vector>

namespace kolam {

// SVG document, drawn bottom layer first: dark ground, per-region fills
// clipped to the face boundaries, the powder band for double_filled lines,
// strand strokes, dots on top. Numbers are fixed 4-decimal so identical
// inputs give byte-identical documents.
std::string render_svg(const gate_config& config, const render_plan& plan,
                       const render_params& params = {});

// (2W+1) x (2H+1) character map, top row (y = 2H) first: dots 'o', CLOSED
// V-sites '-', CLOSED H-sites '|', OPEN sites '.', wall vertices '#'.
std::string render_ascii(const gate_config& config);

struct sheet_item {
    std::string caption;  // drawn beneath the cell
    std::string document; // a render_svg result
};

// Grid of earlier renders, left to right then top to bottom, uniform cells
// sized to the largest child. Clip ids are rewritten per cell so documents
// can repeat. Throws on an empty list or columns < 1.
std::string contact_sheet(const std::vector<sheet_item>& items, int columns);

} // namespace kolam
