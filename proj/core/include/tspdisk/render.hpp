#pragma once

#include <string>

#include "tspdisk/selection.hpp"

namespace tspdisk {

/// SVG picture of a coordinate instance: city dots, all candidate edges
/// faint, selected triangles shaded, boundary edges in a bold stroke.
/// Pass sel = nullptr to draw the bare instance.
std::string render_svg(const Instance& inst, const Selection* sel);

}  // namespace tspdisk
