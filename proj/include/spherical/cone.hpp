#pragma once

#include <string>
#include <vector>

#include "spherical/feasible.hpp"
#include "spherical/numeric.hpp"

// Rational polyhedral cones with exact facet data. Conventions: rays live in
// the dual lattice of the weight lattice, facets are integral functionals
// nonnegative on the cone, span_eqs cut out the linear span.

namespace spherical {

struct Cone {
  Eigen::Index rank = 0;        // ambient dimension
  std::vector<VecZ> rays;       // primitive, pairwise distinct
  std::vector<VecZ> facets;     // primitive supporting functionals, >= 0 on cone
  std::vector<VecZ> span_eqs;   // primitive basis of span^perp, == 0 on cone
  Eigen::Index dim = 0;
  bool contains_line = false;
};

Cone cone_from_rays(const std::vector<VecQ>& rays, Eigen::Index rank);
Cone cone_from_rays_z(const std::vector<VecZ>& rays, Eigen::Index rank);

enum class Membership { Boundary, Interior };

// Boundary mode: closed cone membership. Interior mode: relative interior.
bool cone_membership(const Cone& c, const VecQ& v, Membership mode);
bool cone_contains(const Cone& c, const VecZ& v);
bool cone_contains(const Cone& c, const VecQ& v);

// Rays of c lying in the (candidate) common face with other: used by fans.
std::vector<VecZ> rays_in(const Cone& c, const Cone& other);

// F must be a cone built from rays contained in c.
bool is_face_of(const Cone& face, const Cone& c);

// True when the set c1 \cap c2 is contained in the candidate face g (g must
// already be known to be a face of c1).
bool intersection_within(const Cone& c1, const Cone& c2, const Cone& g);

// Common-face candidate generated by the rays of each cone lying in the
// other; equals c1 \cap c2 exactly when the pair satisfies the fan axiom.
Cone common_face_candidate(const Cone& c1, const Cone& c2);

// Feasibility rows expressing membership, appended to sys over vars 0..rank-1.
void append_membership_rows(std::vector<LinRow>& sys, const Cone& c, Membership mode);

bool cones_equal(const Cone& a, const Cone& b);

}  // namespace spherical
