#pragma once

#include <array>

namespace ngopt::internal {

// Random polytope for the largest-inscribed-sphere benchmark: 200 rows
// {a_x, a_y, b}, each defining the half-plane a_x*y_1 + a_y*y_2 <= b.
// Generated once offline from a fixed RNG seed; do not edit.
extern const std::array<std::array<double, 3>, 200> kPolytopeRows;

}  // namespace ngopt::internal
