#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "spherical/numeric.hpp"

// Exact integer linear algebra: Smith normal form with transforms, integral
// linear systems, saturated kernels and finitely generated abelian groups
// presented as cokernels.

namespace spherical {

struct SmithForm {
  MatZ u;                      // unimodular, rows transform: u * a * v = s
  MatZ v;                      // unimodular
  std::vector<Int> diag;       // d_1 | d_2 | ... | d_rank, all positive
  Eigen::Index rank = 0;
};

SmithForm smith_form(const MatZ& a);

// Solves a * x = b over the integers; nullopt when no integral solution.
std::optional<VecZ> solve_integral(const MatZ& a, const VecZ& b);

// Columns form a basis of the saturated lattice { x in Z^n : a * x = 0 }.
MatZ kernel_basis(const MatZ& a);

Eigen::Index rank_q(const MatQ& a);

// One rational solution of a * x = b, if any.
std::optional<VecQ> solve_q(const MatQ& a, const VecQ& b);

// Coordinates of x in the (column) lattice basis b, if x lies in it.
std::optional<VecZ> lattice_coordinates(const MatZ& basis, const VecZ& x);

// Finitely generated abelian group Z^m / (column span of rel), kept with the
// transform needed to map elements of Z^m to canonical coordinates.
struct AbelianGroup {
  Eigen::Index generators = 0;
  std::vector<Int> torsion;    // elementary divisors > 1, divisibility chain
  Eigen::Index free_rank = 0;
  MatZ to_coords;              // rows: torsion part first, then free part
  std::vector<Int> moduli;     // per torsion row

  // Canonical coordinates of a class: torsion entries reduced into [0, d).
  VecZ coords(const VecZ& x) const {
    if (x.size() != generators)
      throw std::invalid_argument("AbelianGroup::coords: element size mismatch");
    VecZ y = to_coords * x;
    for (size_t i = 0; i < moduli.size(); ++i) {
      Int r;
      mpz_fdiv_r(r.get_mpz_t(), y(static_cast<Eigen::Index>(i)).get_mpz_t(),
                 moduli[i].get_mpz_t());
      y(static_cast<Eigen::Index>(i)) = r;
    }
    return y;
  }

  bool is_trivial_class(const VecZ& x) const { return is_zero(coords(x)); }

  std::string describe() const;
};

AbelianGroup cokernel(Eigen::Index m, const MatZ& rel);

// Basis change making a sublattice quotient explicit: given bases of lattices
// sub <= big (as columns), returns the quotient big/sub as an AbelianGroup on
// big's coordinates together with representative columns for the free part.
struct LatticeQuotient {
  AbelianGroup group;          // on coordinates in big's basis
  MatZ free_reps;              // columns: representatives in ambient coords
};

LatticeQuotient lattice_quotient(const MatZ& big, const MatZ& sub);

}  // namespace spherical
