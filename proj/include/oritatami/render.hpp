#pragma once

#include "oritatami/conformation.hpp"

#include <string>

namespace oritatami {

enum class RenderFormat { ascii, svg };

struct RenderOptions
{
    RenderFormat format = RenderFormat::svg;
    double scale = 24.0;         // pixels per unit edge; must be positive
    bool show_bonds = true;
    bool label_beads = true;
};

// SVG: beads as circles at their Cartesian positions (y pointing up), the
// path as one polyline and every bond as a dashed line of class "bond".
// ASCII: one text line per grid row, top row first, each row shifted by half
// a cell so that lattice neighbours line up. Byte-stable for equal input.
// Throws InvalidInput if scale <= 0.
std::string render(const Conformation& c, const RenderOptions& options = {});

} // namespace oritatami
