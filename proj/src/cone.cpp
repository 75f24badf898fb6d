#include "spherical/cone.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "spherical/linalg.hpp"

namespace spherical {

namespace {

MatZ rows_matrix(const std::vector<VecZ>& rows, Eigen::Index cols) {
  MatZ m(static_cast<Eigen::Index>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = rows[i];
  return m;
}

std::set<std::string> ray_keys(const std::vector<VecZ>& rays) {
  std::set<std::string> s;
  for (const auto& r : rays) s.insert(show(r));
  return s;
}

// All subsets of {0..n-1} of the given size, in lexicographic order.
void for_each_subset(size_t n, size_t k, const std::function<void(const std::vector<size_t>&)>& f) {
  std::vector<size_t> idx(k);
  for (size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    f(idx);
    size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Cone cone_from_rays(const std::vector<VecQ>& rays, Eigen::Index rank) {
  if (rank < 1) throw std::invalid_argument("cone_from_rays: rank must be >= 1");
  Cone c;
  c.rank = rank;

  std::set<std::string> seen;
  for (const auto& r : rays) {
    if (r.size() != rank) throw std::invalid_argument("cone_from_rays: ray rank mismatch");
    if (is_zero(r)) continue;
    VecZ p = primitive(r);
    if (seen.insert(show(p)).second) c.rays.push_back(p);
  }

  MatZ m = rows_matrix(c.rays, rank);
  // span^perp: saturated kernel of the transpose pairing.
  MatZ k = kernel_basis(m);
  c.dim = rank - k.cols();
  for (Eigen::Index j = 0; j < k.cols(); ++j) c.span_eqs.push_back(primitive(VecZ(k.col(j))));

  if (c.rays.empty()) return c;  // zero cone: dim 0, no facets

  // Nonnegative-combination membership over a chosen generating subset.
  auto in_hull = [&](const std::vector<VecZ>& gens, const VecZ& x) {
    const Eigen::Index n = static_cast<Eigen::Index>(gens.size());
    std::vector<LinRow> sys;
    for (Eigen::Index coord = 0; coord < rank; ++coord) {
      LinRow eq;
      eq.a = VecQ::Zero(n + 1);
      for (Eigen::Index j = 0; j < n; ++j) eq.a(j) = Rat(gens[static_cast<size_t>(j)](coord));
      eq.a(n) = Rat(-x(coord));
      eq.rel = Rel::EQ;
      sys.push_back(std::move(eq));
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      LinRow ge;
      ge.a = VecQ::Zero(n + 1);
      ge.a(j) = 1;
      ge.rel = Rel::GE;
      sys.push_back(std::move(ge));
    }
    LinRow scale;
    scale.a = VecQ::Zero(n + 1);
    scale.a(n) = 1;
    scale.rel = Rel::GT;
    sys.push_back(std::move(scale));
    return solve_homogeneous(sys, n + 1).feasible;
  };

  // Lineality: a nontrivial nonnegative combination of rays summing to zero.
  {
    const Eigen::Index n = static_cast<Eigen::Index>(c.rays.size());
    std::vector<LinRow> sys;
    for (Eigen::Index coord = 0; coord < rank; ++coord) {
      LinRow eq;
      eq.a = VecQ::Zero(n);
      for (Eigen::Index j = 0; j < n; ++j) eq.a(j) = Rat(c.rays[static_cast<size_t>(j)](coord));
      eq.rel = Rel::EQ;
      sys.push_back(std::move(eq));
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      LinRow ge;
      ge.a = VecQ::Zero(n);
      ge.a(j) = 1;
      ge.rel = Rel::GE;
      sys.push_back(std::move(ge));
    }
    LinRow pos;
    pos.a = VecQ::Ones(n);
    pos.rel = Rel::GT;
    sys.push_back(std::move(pos));
    c.contains_line = solve_homogeneous(sys, n).feasible;
  }

  // Redundant generators of pointed cones are dropped: every face is then
  // generated by exactly the stored rays it contains.
  if (!c.contains_line && c.rays.size() > 1) {
    std::vector<VecZ> extreme;
    for (size_t i = 0; i < c.rays.size(); ++i) {
      std::vector<VecZ> others;
      for (size_t j = 0; j < c.rays.size(); ++j)
        if (j != i) others.push_back(c.rays[j]);
      if (!in_hull(others, c.rays[i])) extreme.push_back(c.rays[i]);
    }
    c.rays = std::move(extreme);
  }

  // Facets: normals vanishing on a (dim-1)-subset of rays with the whole ray
  // set on one side. Tight sets are deduplicated.
  if (c.dim >= 1) {
    const size_t want = static_cast<size_t>(c.dim) - 1;
    std::set<std::vector<size_t>> tight_seen;
    MatZ span_rows = rows_matrix(c.span_eqs, rank);
    auto in_span_perp = [&](const VecZ& f) {
      if (c.span_eqs.empty()) return false;
      // f lies in the span of span_eqs iff adding it does not raise the rank.
      MatQ a(span_rows.rows() + 1, rank);
      for (Eigen::Index i = 0; i < span_rows.rows(); ++i) a.row(i) = to_q(VecZ(span_rows.row(i)));
      a.row(span_rows.rows()) = to_q(f);
      return rank_q(a) == span_rows.rows();
    };
    for_each_subset(c.rays.size(), want, [&](const std::vector<size_t>& subset) {
      MatZ sel(static_cast<Eigen::Index>(subset.size()), rank);
      for (size_t i = 0; i < subset.size(); ++i)
        sel.row(static_cast<Eigen::Index>(i)) = c.rays[subset[i]];
      MatZ ker = kernel_basis(sel);
      // The quotient of ker by span^perp must be one-dimensional to define a
      // hyperplane in the span; pick any representative outside span^perp.
      if (ker.cols() != static_cast<Eigen::Index>(c.span_eqs.size()) + 1) return;
      VecZ f;
      bool found = false;
      for (Eigen::Index j = 0; j < ker.cols() && !found; ++j) {
        VecZ cand(ker.col(j));
        if (!in_span_perp(cand)) {
          f = primitive(cand);
          found = true;
        }
      }
      if (!found) return;
      int sign = 0;
      std::vector<size_t> tight;
      for (size_t i = 0; i < c.rays.size(); ++i) {
        Int v = dot_zz(f, c.rays[i]);
        if (v == 0) {
          tight.push_back(i);
        } else if (v > 0) {
          if (sign < 0) return;
          sign = 1;
        } else {
          if (sign > 0) return;
          sign = -1;
        }
      }
      if (sign == 0) return;  // f kills every ray: it is a span equation
      if (sign < 0) f = -f;
      MatZ tm(static_cast<Eigen::Index>(tight.size()), rank);
      for (size_t i = 0; i < tight.size(); ++i) tm.row(static_cast<Eigen::Index>(i)) = c.rays[tight[i]];
      if (rank_q(to_q(tm)) != c.dim - 1) return;
      if (tight_seen.insert(tight).second) c.facets.push_back(f);
    });
  }

  // Every stored ray must satisfy the stored facet system.
  for (const auto& r : c.rays) {
    for (const auto& f : c.facets)
      if (dot_zz(f, r) < 0) throw std::logic_error("cone_from_rays: facet check failed");
    for (const auto& e : c.span_eqs)
      if (dot_zz(e, r) != 0) throw std::logic_error("cone_from_rays: span check failed");
  }
  return c;
}

Cone cone_from_rays_z(const std::vector<VecZ>& rays, Eigen::Index rank) {
  std::vector<VecQ> q;
  q.reserve(rays.size());
  for (const auto& r : rays) q.push_back(to_q(r));
  return cone_from_rays(q, rank);
}

bool cone_membership(const Cone& c, const VecQ& v, Membership mode) {
  if (v.size() != c.rank) throw std::invalid_argument("cone_membership: rank mismatch");
  for (const auto& e : c.span_eqs)
    if (dot_qz(v, e) != 0) return false;
  for (const auto& f : c.facets) {
    Rat p = dot_qz(v, f);
    if (mode == Membership::Boundary ? p < 0 : p <= 0) return false;
  }
  return true;
}

bool cone_contains(const Cone& c, const VecZ& v) { return cone_membership(c, to_q(v), Membership::Boundary); }
bool cone_contains(const Cone& c, const VecQ& v) { return cone_membership(c, v, Membership::Boundary); }

std::vector<VecZ> rays_in(const Cone& c, const Cone& other) {
  std::vector<VecZ> out;
  for (const auto& r : c.rays)
    if (cone_contains(other, r)) out.push_back(r);
  return out;
}

Cone common_face_candidate(const Cone& c1, const Cone& c2) {
  std::vector<VecZ> rays = rays_in(c1, c2);
  for (auto& r : rays_in(c2, c1)) rays.push_back(r);
  Cone g = cone_from_rays_z(rays, c1.rank);
  return g;
}

bool cones_equal(const Cone& a, const Cone& b) {
  return a.dim == b.dim && ray_keys(a.rays) == ray_keys(b.rays);
}

bool is_face_of(const Cone& face, const Cone& c) {
  for (const auto& r : face.rays)
    if (!cone_contains(c, r)) return false;
  // Facets of c tight on all of face.
  std::vector<size_t> tight_facets;
  for (size_t i = 0; i < c.facets.size(); ++i) {
    bool tight = true;
    for (const auto& r : face.rays)
      if (dot_zz(c.facets[i], r) != 0) { tight = false; break; }
    if (tight) tight_facets.push_back(i);
  }
  // The face of c they cut out is generated by the rays of c they kill.
  std::vector<VecZ> cut;
  for (const auto& r : c.rays) {
    bool in = true;
    for (size_t i : tight_facets)
      if (dot_zz(c.facets[i], r) != 0) { in = false; break; }
    if (in) cut.push_back(r);
  }
  Cone cut_cone = cone_from_rays_z(cut, c.rank);
  return cones_equal(face, cut_cone);
}

void append_membership_rows(std::vector<LinRow>& sys, const Cone& c, Membership mode) {
  for (const auto& e : c.span_eqs) {
    LinRow r;
    r.a = to_q(e);
    r.rel = Rel::EQ;
    sys.push_back(std::move(r));
  }
  for (const auto& f : c.facets) {
    LinRow r;
    r.a = to_q(f);
    r.rel = mode == Membership::Boundary ? Rel::GE : Rel::GT;
    sys.push_back(std::move(r));
  }
}

bool intersection_within(const Cone& c1, const Cone& c2, const Cone& g) {
  // u = sum of the facets of c1 tight on g; x in c1 with <u,x> = 0 lies in
  // the face of c1 cut out by them, which equals g when g is a face.
  VecZ u = VecZ::Zero(c1.rank);
  for (const auto& f : c1.facets) {
    bool tight = true;
    for (const auto& r : g.rays)
      if (dot_zz(f, r) != 0) { tight = false; break; }
    if (tight) u += f;
  }
  if (is_zero(u)) return true;  // g is c1 itself
  std::vector<LinRow> sys;
  append_membership_rows(sys, c1, Membership::Boundary);
  append_membership_rows(sys, c2, Membership::Boundary);
  LinRow sep;
  sep.a = to_q(u);
  sep.rel = Rel::GT;
  sys.push_back(std::move(sep));
  return !solve_homogeneous(sys, c1.rank).feasible;
}

}  // namespace spherical
