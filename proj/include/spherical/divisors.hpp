#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spherical/fan.hpp"
#include "spherical/linalg.hpp"

// Divisor class group, Picard group, Cartier data and the positivity,
// factoriality, smoothness, affineness and quasi-projectivity criteria of a
// spherical datum with a colored fan.

namespace spherical {

struct DivisorZ {
  std::map<std::string, Int> coeffs;

  Int coeff(const std::string& id) const {
    auto it = coeffs.find(id);
    return it == coeffs.end() ? Int(0) : it->second;
  }
  DivisorZ& add(const std::string& id, const Int& n) {
    if (n != 0) {
      coeffs[id] += n;
      if (coeffs[id] == 0) coeffs.erase(id);
    }
    return *this;
  }
  DivisorZ operator+(const DivisorZ& o) const {
    DivisorZ r = *this;
    for (const auto& [id, n] : o.coeffs) r.add(id, n);
    return r;
  }
  DivisorZ operator-() const {
    DivisorZ r;
    for (const auto& [id, n] : coeffs) r.coeffs[id] = -n;
    return r;
  }
};

std::string show(const DivisorZ& d);

struct DivisorSetInfo {
  std::vector<std::string> colors;      // Delta(X)
  std::vector<std::string> gstable;     // D(X) \ Delta(X)
  std::vector<std::string> delta_ring;  // colors contained in no orbit closure
  std::map<std::string, std::vector<std::string>> d_orbit;  // D_Y per cone id
  bool toroidal = false;
};

DivisorSetInfo divisor_set(const SphericalDatum& d, const ColoredFan& fan);

// div(chi) = sum <rho(nu_D), chi> D. Throws when a pairing is non-integral.
DivisorZ principal_divisor(const SphericalDatum& d, const VecZ& chi);

struct DivisorClassGroup {
  AbelianGroup group;
  std::vector<std::string> divisor_order;
  VecZ classify(const DivisorZ& div) const;
  std::map<std::string, VecZ> class_of;  // per prime divisor
};

DivisorClassGroup class_group(const SphericalDatum& d, const ColoredFan& fan);

struct NotCartier {
  std::string orbit;
};
using CartierResult = std::variant<PLFunction, NotCartier>;

CartierResult cartier_data(const SphericalDatum& d, const ColoredFan& fan, const DivisorZ& div);

// Throwing convenience wrapper used by the positivity criteria.
PLFunction require_cartier(const SphericalDatum& d, const ColoredFan& fan, const DivisorZ& div);

struct PicardGroup {
  AbelianGroup group;
  std::vector<std::string> delta_ring;          // generator block 1
  Eigen::Index pl_rank = 0;                     // generator block 2 (PL/L part)
  std::map<std::string, std::optional<VecZ>> class_of;  // per prime divisor; nullopt = not Cartier
  // Internals needed to map divisors to classes:
  std::vector<std::string> maximal_ids;
  MatZ pl_basis;        // columns: basis of the compatible-tuple lattice
  MatZ pl_proj;         // coords in pl_basis -> coords of the free quotient
  VecZ classify(const SphericalDatum& d, const ColoredFan& fan, const DivisorZ& div) const;
};

PicardGroup picard_group(const SphericalDatum& d, const ColoredFan& fan);

bool is_globally_generated(const SphericalDatum& d, const ColoredFan& fan, const DivisorZ& div);
bool is_ample(const SphericalDatum& d, const ColoredFan& fan, const DivisorZ& div);

enum class Factoriality { Factorial, QFactorial, Neither };
std::string factoriality_name(Factoriality f);

struct FactorialityResult {
  Factoriality verdict;
  std::optional<std::string> witness;  // first orbit failing the stronger test
};

FactorialityResult factoriality(const SphericalDatum& d, const ColoredFan& fan);

bool is_smooth_toroidal(const SphericalDatum& d, const ColoredFan& fan);

struct AffineResult {
  bool affine = false;
  std::optional<VecZ> witness;  // integral chi for the Knop criterion
};

AffineResult is_affine_criterion(const SphericalDatum& d, const ColoredFan& fan);

bool is_quasi_projective(const SphericalDatum& d, const ColoredFan& fan);

}  // namespace spherical
