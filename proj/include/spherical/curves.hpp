#pragma once

#include <string>
#include <variant>
#include <vector>

#include "spherical/divisors.hpp"

// Curve classes dual to divisors on a complete spherical variety: wall
// classes C_mu and color-orbit classes C_{D,Y}, the generators of the
// effective cone, and the weight-based degree formulas.

namespace spherical {

struct WallClass {
  Wall wall;
};
struct ColorOrbitClass {
  std::string color;
  std::string orbit;
};
using CurveClass = std::variant<WallClass, ColorOrbitClass>;

std::string curve_class_name(const CurveClass& c);

// C_mu . delta = (chi_{mu+} - chi_{mu-}) / v.
Rat wall_class_eval(const SphericalDatum& d, const ColoredFan& fan, const Wall& w,
                    const DivisorZ& div);

// C_{D,Y} . delta = n_D - <rho(nu_D), chi_Y>; D must avoid Delta_Y(X).
Rat color_orbit_class_eval(const SphericalDatum& d, const ColoredFan& fan,
                           const std::string& color, const std::string& orbit,
                           const DivisorZ& div);

Rat curve_class_eval(const SphericalDatum& d, const ColoredFan& fan, const CurveClass& c,
                     const DivisorZ& div);

struct EffectiveCone {
  std::vector<CurveClass> generators;       // all walls, all admissible (D, Y)
  std::vector<CurveClass> quotient_basis;   // one C_D per ring color
};

EffectiveCone effective_cone_generators(const SphericalDatum& d, const ColoredFan& fan);

bool nef_via_curves(const SphericalDatum& d, const ColoredFan& fan, const DivisorZ& div);

// (L . C) = (L_x - L_y) / chi for a torus acting through chi with fixed-point
// weights L_x, L_y.
Rat degree_from_weights(const VecQ& l_x, const VecQ& l_y, const VecQ& chi);

// (L . C) = <alpha^vee, L_x> for curves raised with type U.
Int degree_type_u(const RootSystem& rs, int alpha, const VecQ& l_x);

}  // namespace spherical
