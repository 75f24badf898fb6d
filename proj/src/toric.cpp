#include "spherical/toric.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace spherical {

namespace {

MatZ cone_matrix(const ToricFan& fan, const std::vector<int>& cone) {
  MatZ a(static_cast<Eigen::Index>(cone.size()), fan.rank);
  for (size_t i = 0; i < cone.size(); ++i)
    a.row(static_cast<Eigen::Index>(i)) = fan.rays[static_cast<size_t>(cone[i])];
  return a;
}

struct Adjacency {
  size_t c1, c2;
  std::vector<int> shared;  // ray indices of the common facet
  int test1;                // ray of c1 off the shared hyperplane
};

std::vector<Adjacency> adjacencies(const ToricFan& fan) {
  std::vector<Adjacency> out;
  for (size_t i = 0; i < fan.cones.size(); ++i)
    for (size_t j = i + 1; j < fan.cones.size(); ++j) {
      std::vector<int> shared;
      std::set<int> sj(fan.cones[j].begin(), fan.cones[j].end());
      for (int r : fan.cones[i])
        if (sj.count(r)) shared.push_back(r);
      if (static_cast<Eigen::Index>(shared.size()) != fan.rank - 1) continue;
      MatZ m = cone_matrix(fan, shared);
      if (rank_q(to_q(m)) != fan.rank - 1) continue;
      int test = -1;
      MatQ span(shared.size() + 1, fan.rank);
      for (size_t t = 0; t < shared.size(); ++t)
        span.row(static_cast<Eigen::Index>(t)) = to_q(fan.rays[static_cast<size_t>(shared[t])]);
      for (int r : fan.cones[i]) {
        if (std::find(shared.begin(), shared.end(), r) != shared.end()) continue;
        span.row(static_cast<Eigen::Index>(shared.size())) = to_q(fan.rays[static_cast<size_t>(r)]);
        if (rank_q(span) == fan.rank) {
          test = r;
          break;
        }
      }
      if (test < 0) continue;
      out.push_back({i, j, shared, test});
    }
  return out;
}

}  // namespace

VecZ ToricClassGroup::classify(const ToricDivisor& d) const {
  VecZ x(static_cast<Eigen::Index>(d.by_ray.size()));
  for (size_t i = 0; i < d.by_ray.size(); ++i) x(static_cast<Eigen::Index>(i)) = d.by_ray[i];
  return group.coords(x);
}

ToricClassGroup toric_class_group(const ToricFan& fan) {
  const Eigen::Index m = static_cast<Eigen::Index>(fan.rays.size());
  MatZ rel(m, fan.rank);
  for (Eigen::Index i = 0; i < m; ++i) rel.row(i) = fan.rays[static_cast<size_t>(i)];
  ToricClassGroup out;
  out.group = cokernel(m, rel);
  for (Eigen::Index i = 0; i < m; ++i) {
    VecZ e = VecZ::Zero(m);
    e(i) = 1;
    out.ray_classes.push_back(out.group.coords(e));
  }
  return out;
}

std::optional<std::vector<VecZ>> toric_cartier(const ToricFan& fan, const ToricDivisor& d) {
  if (d.by_ray.size() != fan.rays.size())
    throw std::invalid_argument("toric_cartier: coefficient count mismatch");
  std::vector<VecZ> out;
  for (const auto& cone : fan.cones) {
    MatZ a = cone_matrix(fan, cone);
    VecZ b(static_cast<Eigen::Index>(cone.size()));
    for (size_t i = 0; i < cone.size(); ++i)
      b(static_cast<Eigen::Index>(i)) = d.by_ray[static_cast<size_t>(cone[i])];
    auto m = solve_integral(a, b);
    if (!m) return std::nullopt;
    out.push_back(*m);
  }
  return out;
}

namespace {

// Wall-local convexity value across one adjacency: <chi_1 - chi_2, test ray
// of cone 1>. Positive on every wall = strictly convex support data.
Rat wall_value(const ToricFan& fan, const std::vector<VecZ>& chi, const Adjacency& a) {
  VecZ diff = chi[a.c1] - chi[a.c2];
  return Rat(dot_zz(diff, fan.rays[static_cast<size_t>(a.test1)]));
}

}  // namespace

bool toric_globally_generated(const ToricFan& fan, const ToricDivisor& d) {
  if (!fan.complete) throw std::invalid_argument("complete case only");
  auto chi = toric_cartier(fan, d);
  if (!chi) throw std::invalid_argument("divisor is not Cartier");
  for (const auto& a : adjacencies(fan))
    if (wall_value(fan, *chi, a) < 0) return false;
  return true;
}

bool toric_ample(const ToricFan& fan, const ToricDivisor& d) {
  if (!fan.complete) throw std::invalid_argument("complete case only");
  auto chi = toric_cartier(fan, d);
  if (!chi) throw std::invalid_argument("divisor is not Cartier");
  for (const auto& a : adjacencies(fan))
    if (wall_value(fan, *chi, a) <= 0) return false;
  return true;
}

bool toric_quasi_projective(const ToricFan& fan) {
  const Eigen::Index r = fan.rank;
  const Eigen::Index k = static_cast<Eigen::Index>(fan.cones.size());
  std::vector<LinRow> sys;
  for (const auto& a : adjacencies(fan)) {
    for (int s : a.shared) {
      LinRow row;
      row.a = VecQ::Zero(k * r);
      for (Eigen::Index t = 0; t < r; ++t) {
        row.a(static_cast<Eigen::Index>(a.c1) * r + t) = Rat(fan.rays[static_cast<size_t>(s)](t));
        row.a(static_cast<Eigen::Index>(a.c2) * r + t) = -Rat(fan.rays[static_cast<size_t>(s)](t));
      }
      row.rel = Rel::EQ;
      sys.push_back(std::move(row));
    }
    LinRow strict;
    strict.a = VecQ::Zero(k * r);
    for (Eigen::Index t = 0; t < r; ++t) {
      strict.a(static_cast<Eigen::Index>(a.c1) * r + t) = Rat(fan.rays[static_cast<size_t>(a.test1)](t));
      strict.a(static_cast<Eigen::Index>(a.c2) * r + t) = -Rat(fan.rays[static_cast<size_t>(a.test1)](t));
    }
    strict.rel = Rel::GT;
    sys.push_back(std::move(strict));
  }
  return solve_homogeneous(sys, k * r).feasible;
}

std::vector<ToricWallDegree> toric_wall_degrees(const ToricFan& fan, const ToricDivisor& d) {
  if (!fan.complete) throw std::invalid_argument("complete case only");
  auto chi = toric_cartier(fan, d);
  if (!chi) throw std::invalid_argument("divisor is not Cartier");
  std::vector<ToricWallDegree> out;
  for (const auto& a : adjacencies(fan)) {
    // Primitive normal of the wall hyperplane, oriented toward cone c1.
    MatZ rows = cone_matrix(fan, a.shared);
    MatZ ker = kernel_basis(rows);
    if (ker.cols() != 1) throw std::logic_error("toric_wall_degrees: wall normal not unique");
    VecZ w = primitive(VecZ(ker.col(0)));
    const VecZ& t = fan.rays[static_cast<size_t>(a.test1)];
    Int wt = dot_zz(w, t);
    if (wt == 0) throw std::logic_error("toric_wall_degrees: degenerate test ray");
    if (wt < 0) { w = -w; wt = -wt; }
    VecZ diff = (*chi)[a.c1] - (*chi)[a.c2];
    out.push_back({a.c1, a.c2, Rat(dot_zz(diff, t)) / Rat(wt)});
  }
  return out;
}

ToricDivisor toric_anticanonical(const ToricFan& fan) {
  ToricDivisor d;
  d.by_ray.assign(fan.rays.size(), Int(1));
  return d;
}

namespace {

VecZ make_ray(Eigen::Index rank, std::initializer_list<long> v) {
  VecZ r(rank);
  Eigen::Index i = 0;
  for (long x : v) r(i++) = x;
  return r;
}

// Circular order without floating point: upper half-plane first (including
// the positive x-axis), then by cross-product within each half.
bool angle_less(const VecZ& a, const VecZ& b) {
  auto half = [](const VecZ& v) { return (v(1) > 0 || (v(1) == 0 && v(0) > 0)) ? 0 : 1; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  Int cross = a(0) * b(1) - a(1) * b(0);
  return cross > 0;
}

}  // namespace

ToricFan random_complete_fan(int rank, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ToricFan fan;
  fan.rank = rank;
  fan.complete = true;
  if (rank == 1) {
    fan.rays = {make_ray(1, {1}), make_ray(1, {-1})};
    fan.cones = {{0}, {1}};
    return fan;
  }
  if (rank == 2) {
    std::set<std::string> seen;
    std::vector<VecZ> rays;
    auto push = [&](const VecZ& v) {
      VecZ p = primitive(v);
      if (seen.insert(show(p)).second) rays.push_back(p);
    };
    push(make_ray(2, {1, 0}));
    push(make_ray(2, {0, 1}));
    push(make_ray(2, {-1, 0}));
    push(make_ray(2, {0, -1}));
    const int extra = static_cast<int>(rng() % 5);
    for (int i = 0; i < extra; ++i) {
      long x = static_cast<long>(rng() % 11) - 5;
      long y = static_cast<long>(rng() % 11) - 5;
      if (x == 0 && y == 0) continue;
      push(make_ray(2, {x, y}));
    }
    std::sort(rays.begin(), rays.end(), angle_less);
    fan.rays = rays;
    for (size_t i = 0; i < rays.size(); ++i)
      fan.cones.push_back({static_cast<int>(i), static_cast<int>((i + 1) % rays.size())});
    return fan;
  }
  if (rank == 3) {
    fan.rays = {make_ray(3, {1, 0, 0}),  make_ray(3, {-1, 0, 0}), make_ray(3, {0, 1, 0}),
                make_ray(3, {0, -1, 0}), make_ray(3, {0, 0, 1}),  make_ray(3, {0, 0, -1})};
    for (int x : {0, 1})
      for (int y : {2, 3})
        for (int z : {4, 5}) fan.cones.push_back({x, y, z});
    const int splits = static_cast<int>(rng() % 5);
    for (int s = 0; s < splits; ++s) {
      size_t ci = rng() % fan.cones.size();
      std::vector<int> cone = fan.cones[ci];
      VecZ sum = VecZ::Zero(3);
      for (int r : cone) {
        long w = static_cast<long>(rng() % 3) + 1;
        sum += Int(w) * fan.rays[static_cast<size_t>(r)];
      }
      VecZ nr = primitive(sum);
      bool dup = false;
      for (const auto& r : fan.rays)
        if (show(r) == show(nr)) dup = true;
      if (dup) continue;
      int ni = static_cast<int>(fan.rays.size());
      fan.rays.push_back(nr);
      fan.cones.erase(fan.cones.begin() + static_cast<long>(ci));
      fan.cones.push_back({cone[0], cone[1], ni});
      fan.cones.push_back({cone[0], ni, cone[2]});
      fan.cones.push_back({ni, cone[1], cone[2]});
    }
    return fan;
  }
  throw std::invalid_argument("random_complete_fan: rank must be 1, 2 or 3");
}

ToricAsSpherical to_spherical(const ToricFan& fan) {
  ToricAsSpherical out;
  out.datum.rank = fan.rank;
  std::vector<VecQ> vrays;
  for (Eigen::Index i = 0; i < fan.rank; ++i) {
    VecQ e = VecQ::Zero(fan.rank);
    e(i) = 1;
    vrays.push_back(e);
    VecQ f = VecQ::Zero(fan.rank);
    f(i) = -1;
    vrays.push_back(f);
  }
  out.datum.valuation_cone = cone_from_rays(vrays, fan.rank);
  out.datum.v_full_dim = true;
  for (size_t i = 0; i < fan.rays.size(); ++i)
    out.datum.gstable.push_back({fan.ray_id(static_cast<int>(i)), fan.rays[i]});
  for (size_t c = 0; c < fan.cones.size(); ++c) {
    ColoredCone cc;
    cc.id = "sigma" + std::to_string(c);
    std::vector<VecQ> rays;
    for (int r : fan.cones[c]) rays.push_back(to_q(fan.rays[static_cast<size_t>(r)]));
    cc.cone = cone_from_rays(rays, fan.rank);
    out.fan.cones.push_back(std::move(cc));
    out.fan.closed_orbit_ids.push_back("sigma" + std::to_string(c));
  }
  return out;
}

DivisorZ to_divisor(const ToricFan& fan, const ToricDivisor& d) {
  DivisorZ out;
  for (size_t i = 0; i < d.by_ray.size(); ++i)
    out.add(fan.ray_id(static_cast<int>(i)), d.by_ray[i]);
  return out;
}

}  // namespace spherical
