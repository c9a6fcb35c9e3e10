#pragma once

#include "percox/common.hpp"

namespace percox {

// Homogeneous strict system: eq rows e.x = 0, pos rows r.x > 0.
struct StrictSystem {
  int dim = 0;
  Mat eq;
  Mat pos;
};

// Exact witness of strict feasibility, or nullopt when infeasible.
std::optional<Vec> strict_feasible(const StrictSystem& sys);

// Exact rational z with M z >= 1 (componentwise), via Phase-I simplex.
std::optional<Vec> simplex_geq1(const Mat& m);

} // namespace percox
