#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spherical/divisors.hpp"

// The explicit B-stable anticanonical divisor on complete toroidal models and
// its pushforward along a toroidal resolution.

namespace spherical {

struct FanMap {
  // Source G-stable ray label -> target divisor id, or nullopt = contracted.
  std::map<std::string, std::optional<std::string>> ray_image;
  std::map<std::string, std::string> color_image;  // bijection on color ids
};

struct Resolution {
  SphericalDatum source;
  ColoredFan source_fan;
  FanMap map;
};

// Coefficients: 1 on G-stable divisors and on colors raised with type T or N,
// 2<alpha^vee, rho - rho_I> on colors raised with type U.
DivisorZ anticanonical_toroidal(const SphericalDatum& d, const ColoredFan& fan);

struct AnticanonicalPrototype {
  DivisorZ known;                       // all-ones part on G-stable divisors
  std::vector<std::string> unknown_colors;  // symbolic nonnegative coefficients
};

AnticanonicalPrototype anticanonical_prototype(const SphericalDatum& d, const ColoredFan& fan);

DivisorZ pushforward_divisor(const FanMap& map, const DivisorZ& div);

// Anticanonical divisor of the target computed through a smooth complete
// toroidal resolution.
DivisorZ canonical_general(const SphericalDatum& target, const Resolution& res);

FanMap compose(const FanMap& first, const FanMap& then);

}  // namespace spherical
