#pragma once

#include "tspdisk/selection.hpp"

namespace tspdisk {

/// Fan triangulation of a tour: the city at apex_position plays the hub,
/// giving the n-2 triangles {apex, v_i, v_i+1}. The result is the
/// canonical selection of that triangle set. Throws when a fan triangle
/// is missing from the complex (names the missing triangle).
Selection fan_encode(const Tour& tour, int apex_position, const Complex& cx);

/// Tries every apex position in order and returns the first fan fully
/// contained in the complex. Throws when none fits.
Selection fan_encode_any_apex(const Tour& tour, const Complex& cx);

}  // namespace tspdisk
