#pragma once

#include "ngopt/problem.hpp"

namespace ngopt::internal {

// The ten inequality-only CEC2006 test problems, each with hand-coded
// gradients and variable bounds appended as extra constraints (nonlinear
// constraints first, then per-dimension lower/upper bounds).
Problem make_g01();
Problem make_g04();
Problem make_g06();
Problem make_g07();
Problem make_g08();
Problem make_g09();
Problem make_g10();
Problem make_g18();
Problem make_g19();
Problem make_g24();

}  // namespace ngopt::internal
