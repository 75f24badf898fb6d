#include "spherical/linalg.hpp"

#include <Eigen/LU>
#include <stdexcept>

namespace spherical {

namespace {

void swap_rows(MatZ& m, Eigen::Index i, Eigen::Index j) { m.row(i).swap(m.row(j)); }
void swap_cols(MatZ& m, Eigen::Index i, Eigen::Index j) { m.col(i).swap(m.col(j)); }

// row(i) -= q * row(j), mirrored in the transform.
void add_row(MatZ& m, MatZ& u, Eigen::Index i, Eigen::Index j, const Int& q) {
  if (q == 0) return;
  m.row(i) -= (q * m.row(j).array()).matrix();
  u.row(i) -= (q * u.row(j).array()).matrix();
}

void add_col(MatZ& m, MatZ& v, Eigen::Index i, Eigen::Index j, const Int& q) {
  if (q == 0) return;
  m.col(i) -= (q * m.col(j).array()).matrix();
  v.col(i) -= (q * v.col(j).array()).matrix();
}

}  // namespace

SmithForm smith_form(const MatZ& a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  MatZ s = a;
  SmithForm f;
  f.u = MatZ::Identity(rows, rows);
  f.v = MatZ::Identity(cols, cols);

  Eigen::Index t = 0;
  while (t < rows && t < cols) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    Eigen::Index pi = -1, pj = -1;
    Int best = 0;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j) {
        if (s(i, j) == 0) continue;
        Int av = abs(s(i, j));
        if (pi < 0 || av < best) {
          best = av;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    swap_rows(s, t, pi);
    f.u.row(t).swap(f.u.row(pi));
    swap_cols(s, t, pj);
    f.v.col(t).swap(f.v.col(pj));

    bool clean = true;
    for (Eigen::Index i = t + 1; i < rows; ++i)
      if (s(i, t) != 0) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        add_row(s, f.u, i, t, q);
        if (s(i, t) != 0) clean = false;
      }
    for (Eigen::Index j = t + 1; j < cols; ++j)
      if (s(t, j) != 0) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        add_col(s, f.v, j, t, q);
        if (s(t, j) != 0) clean = false;
      }
    if (!clean) continue;  // smaller remainders appeared, re-pivot

    // Divisibility fix-up: pivot must divide the whole remaining block.
    bool fixed = true;
    for (Eigen::Index i = t + 1; i < rows && fixed; ++i)
      for (Eigen::Index j = t + 1; j < cols && fixed; ++j)
        if (s(i, j) % s(t, t) != 0) {
          add_row(s, f.u, t, i, Int(-1));  // row t += row i
          fixed = false;
        }
    if (!fixed) continue;

    if (s(t, t) < 0) {
      s.row(t) = -s.row(t);
      f.u.row(t) = -f.u.row(t);
    }
    ++t;
  }

  f.rank = t;
  f.diag.resize(static_cast<size_t>(t));
  MatZ check = f.u * a * f.v;
  for (Eigen::Index i = 0; i < t; ++i) f.diag[static_cast<size_t>(i)] = s(i, i);
  // Internal consistency: U a V must equal the accumulated diagonal.
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      Int want = (i == j && i < t) ? s(i, i) : Int(0);
      if (check(i, j) != want) throw std::logic_error("smith_form: transform mismatch");
    }
  return f;
}

std::optional<VecZ> solve_integral(const MatZ& a, const VecZ& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_integral: size mismatch");
  SmithForm f = smith_form(a);
  VecZ c = f.u * b;
  VecZ y = VecZ::Zero(a.cols());
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(a.rows()); ++i) {
    if (i < f.rank) {
      const Int& d = f.diag[static_cast<size_t>(i)];
      if (c(i) % d != 0) return std::nullopt;
      if (i < a.cols()) y(i) = c(i) / d;
    } else if (c(i) != 0) {
      return std::nullopt;
    }
  }
  return f.v * y;
}

MatZ kernel_basis(const MatZ& a) {
  SmithForm f = smith_form(a);
  const Eigen::Index n = a.cols();
  MatZ k(n, n - f.rank);
  for (Eigen::Index j = f.rank; j < n; ++j) k.col(j - f.rank) = f.v.col(j);
  return k;
}

Eigen::Index rank_q(const MatQ& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::FullPivLU<MatQ> lu(a);
  return lu.rank();
}

std::optional<VecQ> solve_q(const MatQ& a, const VecQ& b) {
  if (a.rows() == 0) return VecQ::Zero(a.cols());
  Eigen::FullPivLU<MatQ> lu(a);
  VecQ x = lu.solve(b);
  VecQ r = a * x - b;
  for (Eigen::Index i = 0; i < r.size(); ++i)
    if (r(i) != 0) return std::nullopt;
  return x;
}

std::optional<VecZ> lattice_coordinates(const MatZ& basis, const VecZ& x) {
  return solve_integral(basis, x);
}

std::string AbelianGroup::describe() const {
  std::string s;
  if (free_rank > 0) {
    s = "Z";
    if (free_rank > 1) s += "^" + std::to_string(free_rank);
  }
  for (const Int& d : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.get_str();
  }
  if (s.empty()) s = "0";
  return s;
}

AbelianGroup cokernel(Eigen::Index m, const MatZ& rel) {
  if (rel.size() > 0 && rel.rows() != m)
    throw std::invalid_argument("cokernel: relation rows must match generator count");
  MatZ r = rel.size() > 0 ? rel : MatZ::Zero(m, 0);
  SmithForm f = smith_form(r);
  AbelianGroup g;
  g.generators = m;
  std::vector<Eigen::Index> torsion_rows;
  for (Eigen::Index i = 0; i < f.rank; ++i)
    if (f.diag[static_cast<size_t>(i)] > 1) torsion_rows.push_back(i);
  g.free_rank = m - f.rank;
  g.to_coords =
      MatZ(static_cast<Eigen::Index>(torsion_rows.size()) + g.free_rank, m);
  Eigen::Index out = 0;
  for (Eigen::Index i : torsion_rows) {
    g.to_coords.row(out++) = f.u.row(i);
    g.torsion.push_back(f.diag[static_cast<size_t>(i)]);
    g.moduli.push_back(f.diag[static_cast<size_t>(i)]);
  }
  for (Eigen::Index i = f.rank; i < m; ++i) g.to_coords.row(out++) = f.u.row(i);
  return g;
}

LatticeQuotient lattice_quotient(const MatZ& big, const MatZ& sub) {
  const Eigen::Index n = big.cols();
  MatZ coords(n, sub.cols());
  for (Eigen::Index j = 0; j < sub.cols(); ++j) {
    auto c = lattice_coordinates(big, VecZ(sub.col(j)));
    if (!c) throw std::invalid_argument("lattice_quotient: sub is not inside big");
    coords.col(j) = *c;
  }
  LatticeQuotient q;
  q.group = cokernel(n, coords);
  // Free-part representatives: rows of to_coords past the torsion block pick
  // out coordinates; lift the dual basis through big.
  // Solve to_coords * c_i = e_i on the free rows with torsion rows zero.
  const Eigen::Index t = static_cast<Eigen::Index>(q.group.torsion.size());
  q.free_reps = MatZ(big.rows(), q.group.free_rank);
  if (q.group.free_rank > 0) {
    // to_coords is a full-rank (t+f) x n integer matrix made of rows of a
    // unimodular matrix, so an integral right inverse exists.
    MatZ rhs = MatZ::Zero(t + q.group.free_rank, q.group.free_rank);
    for (Eigen::Index j = 0; j < q.group.free_rank; ++j) rhs(t + j, j) = 1;
    for (Eigen::Index j = 0; j < q.group.free_rank; ++j) {
      auto c = solve_integral(q.group.to_coords, VecZ(rhs.col(j)));
      if (!c) throw std::logic_error("lattice_quotient: no integral lift");
      q.free_reps.col(j) = big * (*c);
    }
  }
  return q;
}

}  // namespace spherical
