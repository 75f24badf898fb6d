#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spherical/cone.hpp"
#include "spherical/root_system.hpp"

// Colored fans over a spherical datum: the combinatorial side of an
// embedding. Orbits correspond to colored cones; closed orbits to the
// maximal ones.

namespace spherical {

struct RaiseU {
  int alpha = 0;           // simple root of the raising parabolic
  std::vector<int> iset;   // simple roots I with G.C = G/P_I
};
struct RaiseT {};
struct RaiseN {};
using RaiseType = std::variant<RaiseU, RaiseT, RaiseN>;

std::string raise_name(const RaiseType& r);

struct ColorRecord {
  std::string id;
  VecQ rho;          // image of the color valuation in Lambda(X)^vee tensor Q
  RaiseType raise;
};

struct GStableRay {
  std::string id;
  VecZ ray;          // primitive
};

struct SphericalDatum {
  Eigen::Index rank = 0;
  Cone valuation_cone;
  bool v_full_dim = false;
  std::vector<ColorRecord> colors;
  std::vector<GStableRay> gstable;
  std::optional<RootSystem> root_system;

  const ColorRecord* color(const std::string& id) const;
  const GStableRay* gray(const std::string& id) const;
  bool is_divisor_id(const std::string& id) const { return color(id) || gray(id); }
  std::vector<std::string> divisor_ids() const;  // colors first, then G-stable
};

struct ColoredCone {
  std::string id;
  Cone cone;
  std::vector<std::string> colors;
};

struct ColoredFan {
  std::vector<ColoredCone> cones;
  std::vector<std::string> closed_orbit_ids;

  const ColoredCone* cone(const std::string& id) const;
  std::vector<const ColoredCone*> maximal() const;  // in closed_orbit_ids order
};

struct PLFunction {
  std::map<std::string, VecZ> per_cone;  // chi_Y per closed-orbit id
};

struct Wall {
  Cone face;
  std::string plus_id, minus_id;
  VecZ v;  // primitive, vanishing on face, positive on the plus cone
  std::string name() const { return plus_id + "|" + minus_id; }
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool complete = false;
  bool ok() const { return errors.empty(); }
};

ValidationReport validate_datum(const SphericalDatum& d);
ValidationReport fan_validate(const ColoredFan& fan, const SphericalDatum& d);

bool fan_is_complete(const ColoredFan& fan, const SphericalDatum& d);

std::vector<Wall> walls(const ColoredFan& fan, const SphericalDatum& d);

enum class Convexity { NotConvex, Convex, StrictlyConvex };
std::string convexity_name(Convexity c);

// Paper convention: l is convex when each piece dominates every other piece
// on its own cone. Requires a complete fan and compatible PL data.
Convexity pl_convexity(const ColoredFan& fan, const PLFunction& l, const SphericalDatum& d);

// Compatibility of PL data across shared faces; throws "not piecewise linear"
// on violation.
void check_pl_compatible(const ColoredFan& fan, const PLFunction& l);

}  // namespace spherical
