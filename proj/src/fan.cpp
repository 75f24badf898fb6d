#include "spherical/fan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "spherical/linalg.hpp"

namespace spherical {

std::string raise_name(const RaiseType& r) {
  if (std::holds_alternative<RaiseU>(r)) return "U";
  if (std::holds_alternative<RaiseT>(r)) return "T";
  return "N";
}

const ColorRecord* SphericalDatum::color(const std::string& id) const {
  for (const auto& c : colors)
    if (c.id == id) return &c;
  return nullptr;
}

const GStableRay* SphericalDatum::gray(const std::string& id) const {
  for (const auto& g : gstable)
    if (g.id == id) return &g;
  return nullptr;
}

std::vector<std::string> SphericalDatum::divisor_ids() const {
  std::vector<std::string> out;
  for (const auto& c : colors) out.push_back(c.id);
  for (const auto& g : gstable) out.push_back(g.id);
  return out;
}

const ColoredCone* ColoredFan::cone(const std::string& id) const {
  for (const auto& c : cones)
    if (c.id == id) return &c;
  return nullptr;
}

std::vector<const ColoredCone*> ColoredFan::maximal() const {
  std::vector<const ColoredCone*> out;
  for (const auto& id : closed_orbit_ids) {
    const ColoredCone* c = cone(id);
    if (!c) throw std::invalid_argument("closed orbit '" + id + "' has no cone");
    out.push_back(c);
  }
  return out;
}

ValidationReport validate_datum(const SphericalDatum& d) {
  ValidationReport rep;
  std::set<std::string> ids;
  for (const auto& c : d.colors) {
    if (!ids.insert(c.id).second) rep.errors.push_back("duplicate divisor id '" + c.id + "'");
    if (c.rho.size() != d.rank) rep.errors.push_back("color '" + c.id + "': rho rank mismatch");
    else if (is_zero(c.rho)) rep.errors.push_back("color '" + c.id + "': rho must be nonzero");
    if (const auto* u = std::get_if<RaiseU>(&c.raise)) {
      if (d.root_system) {
        if (u->alpha < 0 || u->alpha >= d.root_system->n)
          rep.errors.push_back("color '" + c.id + "': raising root out of range");
        for (int i : u->iset) {
          if (i < 0 || i >= d.root_system->n)
            rep.errors.push_back("color '" + c.id + "': I contains an invalid simple index");
          if (i == u->alpha)
            rep.errors.push_back("color '" + c.id + "': raising root must not lie in I");
        }
      }
    }
  }
  for (const auto& g : d.gstable) {
    if (!ids.insert(g.id).second) rep.errors.push_back("duplicate divisor id '" + g.id + "'");
    if (g.ray.size() != d.rank) {
      rep.errors.push_back("G-stable ray '" + g.id + "': rank mismatch");
      continue;
    }
    if (is_zero(g.ray)) {
      rep.errors.push_back("G-stable ray '" + g.id + "': zero ray");
      continue;
    }
    VecZ p = primitive(g.ray);
    for (Eigen::Index i = 0; i < p.size(); ++i)
      if (p(i) != g.ray(i)) {
        rep.errors.push_back("G-stable ray '" + g.id + "': not primitive");
        break;
      }
    if (!cone_contains(d.valuation_cone, g.ray))
      rep.errors.push_back("G-stable ray '" + g.id + "': not inside the valuation cone");
  }
  return rep;
}

namespace {

// x = 0 settles the degenerate cases: it satisfies every EQ/GE row, so these
// feasibility calls are exact for zero cones and subspace cones as well.
bool relint_meets_v(const Cone& c, const Cone& v) {
  std::vector<LinRow> sys;
  append_membership_rows(sys, c, Membership::Interior);
  append_membership_rows(sys, v, Membership::Boundary);
  return solve_homogeneous(sys, c.rank).feasible;
}

bool relints_overlap_in_v(const Cone& a, const Cone& b, const Cone& v) {
  std::vector<LinRow> sys;
  append_membership_rows(sys, a, Membership::Interior);
  append_membership_rows(sys, b, Membership::Interior);
  append_membership_rows(sys, v, Membership::Boundary);
  return solve_homogeneous(sys, a.rank).feasible;
}

}  // namespace

bool fan_is_complete(const ColoredFan& fan, const SphericalDatum& d) {
  for (const auto* m : fan.maximal())
    if (m->cone.dim != d.rank) return false;
  for (const auto& vray : d.valuation_cone.rays) {
    bool covered = false;
    for (const auto& c : fan.cones)
      if (cone_contains(c.cone, vray)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

ValidationReport fan_validate(const ColoredFan& fan, const SphericalDatum& d) {
  ValidationReport rep = validate_datum(d);

  std::set<std::string> cids;
  for (const auto& c : fan.cones) {
    if (!cids.insert(c.id).second) rep.errors.push_back("duplicate cone id '" + c.id + "'");
    if (c.cone.rank != d.rank) rep.errors.push_back("cone '" + c.id + "': rank mismatch");
  }
  for (const auto& id : fan.closed_orbit_ids)
    if (!fan.cone(id)) rep.errors.push_back("closed orbit '" + id + "' has no cone");
  if (!rep.errors.empty()) return rep;

  for (const auto& c : fan.cones) {
    if (c.cone.contains_line)
      rep.warnings.push_back("cone '" + c.id + "' contains a line");
    for (const auto& col : c.colors) {
      const ColorRecord* rec = d.color(col);
      if (!rec) {
        rep.errors.push_back("cone '" + c.id + "': unknown color '" + col + "'");
        continue;
      }
      if (is_zero(rec->rho)) continue;  // reported by validate_datum
      if (!cone_contains(c.cone, rec->rho))
        rep.errors.push_back("cone '" + c.id + "': color '" + col + "' image outside the cone");
    }
    if (!relint_meets_v(c.cone, d.valuation_cone))
      rep.errors.push_back("cone '" + c.id + "': relative interior misses the valuation cone");
  }

  // Pairwise fan axioms.
  for (size_t i = 0; i < fan.cones.size(); ++i)
    for (size_t j = i + 1; j < fan.cones.size(); ++j) {
      const auto& a = fan.cones[i];
      const auto& b = fan.cones[j];
      Cone g = common_face_candidate(a.cone, b.cone);
      bool face_ok = is_face_of(g, a.cone) && is_face_of(g, b.cone) &&
                     intersection_within(a.cone, b.cone, g);
      if (!face_ok)
        rep.errors.push_back("cones '" + a.id + "' and '" + b.id +
                             "': intersection is not a common face");
      if (relints_overlap_in_v(a.cone, b.cone, d.valuation_cone))
        rep.errors.push_back("cones '" + a.id + "' and '" + b.id +
                             "': relative interiors overlap inside the valuation cone");
    }

  // Non-maximal cones must be faces of some closed-orbit cone.
  std::set<std::string> closed(fan.closed_orbit_ids.begin(), fan.closed_orbit_ids.end());
  for (const auto& c : fan.cones) {
    if (closed.count(c.id)) continue;
    bool face = false;
    for (const auto& id : fan.closed_orbit_ids)
      if (is_face_of(c.cone, fan.cone(id)->cone)) {
        face = true;
        break;
      }
    if (!face)
      rep.errors.push_back("cone '" + c.id + "' is not a face of any closed-orbit cone");
  }

  for (const auto& g : d.gstable) {
    bool inside = false;
    for (const auto& c : fan.cones)
      if (cone_contains(c.cone, g.ray)) {
        inside = true;
        break;
      }
    if (!inside)
      rep.warnings.push_back("G-stable ray '" + g.id + "' lies in no cone of the fan");
  }

  rep.complete = rep.ok() && fan_is_complete(fan, d);
  return rep;
}

std::vector<Wall> walls(const ColoredFan& fan, const SphericalDatum& d) {
  std::vector<Wall> out;
  auto maximal = fan.maximal();
  for (size_t i = 0; i < maximal.size(); ++i)
    for (size_t j = i + 1; j < maximal.size(); ++j) {
      const ColoredCone* a = maximal[i];
      const ColoredCone* b = maximal[j];
      Cone face = common_face_candidate(a->cone, b->cone);
      if (face.dim != d.rank - 1) continue;

      // Wall test: the face must not be contained in the boundary of V.
      bool in_v = true;
      for (const auto& r : face.rays)
        if (!cone_contains(d.valuation_cone, r)) {
          in_v = false;
          break;
        }
      if (in_v) {
        std::vector<LinRow> sys;
        append_membership_rows(sys, face, Membership::Boundary);
        append_membership_rows(sys, d.valuation_cone, Membership::Interior);
        if (!solve_homogeneous(sys, d.rank).feasible) continue;  // face lies in the boundary of V
      }

      // v spans face^perp; orient positive on the plus cone.
      MatZ rows(static_cast<Eigen::Index>(face.rays.size()), d.rank);
      for (size_t k = 0; k < face.rays.size(); ++k)
        rows.row(static_cast<Eigen::Index>(k)) = face.rays[k];
      MatZ ker = kernel_basis(rows);
      if (ker.cols() != 1) throw std::logic_error("walls: face perp is not one-dimensional");
      VecZ v = primitive(VecZ(ker.col(0)));
      int sign = 0;
      for (const auto& r : a->cone.rays) {
        Int p = dot_zz(v, r);
        if (p > 0) { if (sign < 0) throw std::logic_error("walls: face does not support the plus cone"); sign = 1; }
        if (p < 0) { if (sign > 0) throw std::logic_error("walls: face does not support the plus cone"); sign = -1; }
      }
      if (sign == 0) throw std::logic_error("walls: degenerate wall normal");
      if (sign < 0) v = -v;
      out.push_back(Wall{face, a->id, b->id, v});
    }
  return out;
}

std::string convexity_name(Convexity c) {
  switch (c) {
    case Convexity::NotConvex: return "not_convex";
    case Convexity::Convex: return "convex";
    case Convexity::StrictlyConvex: return "strictly_convex";
  }
  return "?";
}

void check_pl_compatible(const ColoredFan& fan, const PLFunction& l) {
  auto maximal = fan.maximal();
  for (const auto* m : maximal)
    if (!l.per_cone.count(m->id))
      throw std::invalid_argument("not piecewise linear: missing value on cone '" + m->id + "'");
  for (size_t i = 0; i < maximal.size(); ++i)
    for (size_t j = i + 1; j < maximal.size(); ++j) {
      const VecZ& ci = l.per_cone.at(maximal[i]->id);
      const VecZ& cj = l.per_cone.at(maximal[j]->id);
      Cone face = common_face_candidate(maximal[i]->cone, maximal[j]->cone);
      for (const auto& r : face.rays)
        if (dot_zz(ci, r) != dot_zz(cj, r))
          throw std::invalid_argument("not piecewise linear: values disagree on the face of '" +
                                      maximal[i]->id + "' and '" + maximal[j]->id + "'");
    }
}

Convexity pl_convexity(const ColoredFan& fan, const PLFunction& l, const SphericalDatum& d) {
  if (!fan_is_complete(fan, d)) throw std::invalid_argument("complete case only");
  check_pl_compatible(fan, l);
  auto maximal = fan.maximal();
  bool strict = true;
  for (const auto* y : maximal)
    for (const auto* z : maximal) {
      if (y == z) continue;
      const VecZ& cy = l.per_cone.at(y->id);
      const VecZ& cz = l.per_cone.at(z->id);
      for (const auto& r : y->cone.rays) {
        Int vy = dot_zz(cy, r), vz = dot_zz(cz, r);
        if (vz > vy) return Convexity::NotConvex;
        if (vz == vy && !cone_contains(z->cone, r)) strict = false;
      }
    }
  return strict ? Convexity::StrictlyConvex : Convexity::Convex;
}

}  // namespace spherical
