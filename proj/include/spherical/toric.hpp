#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spherical/divisors.hpp"

// Independent classical toric implementation used for differential testing of
// the main path on color-free inputs. It shares the exact-arithmetic kernels
// (cones, Smith form, Fourier-Motzkin) but none of the divisor-theory logic:
// convexity is checked wall-locally from ray data, not via the all-pairs
// definition the main path implements.

namespace spherical {

struct ToricFan {
  Eigen::Index rank = 0;
  std::vector<VecZ> rays;               // primitive
  std::vector<std::vector<int>> cones;  // maximal cones as ray-index lists
  bool complete = false;

  std::string ray_id(int i) const { return "R" + std::to_string(i); }
};

struct ToricDivisor {
  std::vector<Int> by_ray;  // coefficient per ray index
};

struct ToricClassGroup {
  AbelianGroup group;
  std::vector<VecZ> ray_classes;
  VecZ classify(const ToricDivisor& d) const;
};

ToricClassGroup toric_class_group(const ToricFan& fan);

// Per-cone linear data m_sigma with <ray, m_sigma> = a_ray; nullopt when the
// divisor is not Cartier.
std::optional<std::vector<VecZ>> toric_cartier(const ToricFan& fan, const ToricDivisor& d);

bool toric_globally_generated(const ToricFan& fan, const ToricDivisor& d);
bool toric_ample(const ToricFan& fan, const ToricDivisor& d);
bool toric_quasi_projective(const ToricFan& fan);

// Degrees of the Cartier divisor on the invariant curves, one per wall,
// keyed by the (unordered) pair of maximal-cone indices.
struct ToricWallDegree {
  size_t c1, c2;
  Rat degree;
};
std::vector<ToricWallDegree> toric_wall_degrees(const ToricFan& fan, const ToricDivisor& d);

ToricDivisor toric_anticanonical(const ToricFan& fan);

// Deterministic by seed. Rank 1 is the projective-line fan; rank 2 sorts
// random primitive rays in circular order; rank 3 refines the octahedral fan
// by stellar subdivisions.
ToricFan random_complete_fan(int rank, std::uint64_t seed);

// Bridge into the main path: toric data as a color-free spherical datum.
struct ToricAsSpherical {
  SphericalDatum datum;
  ColoredFan fan;
};
ToricAsSpherical to_spherical(const ToricFan& fan);
DivisorZ to_divisor(const ToricFan& fan, const ToricDivisor& d);

}  // namespace spherical
