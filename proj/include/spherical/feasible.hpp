#pragma once

#include <vector>

#include "spherical/numeric.hpp"

// Exact rational feasibility of homogeneous systems  a . x  REL  0  with
// mixed weak/strict relations, via Gaussian elimination on the equalities
// followed by Fourier-Motzkin elimination. Returns a rational witness when
// feasible.

namespace spherical {

enum class Rel { EQ, GE, GT };

struct LinRow {
  VecQ a;
  Rel rel = Rel::GE;
};

struct Feasibility {
  bool feasible = false;
  VecQ witness;  // defined only when feasible
};

Feasibility solve_homogeneous(std::vector<LinRow> rows, Eigen::Index nvars);

}  // namespace spherical
