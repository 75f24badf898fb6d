#include "spherical/divisors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace spherical {

std::string show(const DivisorZ& d) {
  if (d.coeffs.empty()) return "0";
  std::string s;
  for (const auto& [id, n] : d.coeffs) {
    if (!s.empty()) s += " + ";
    if (n == 1) s += id;
    else s += n.get_str() + "*" + id;
  }
  return s;
}

DivisorSetInfo divisor_set(const SphericalDatum& d, const ColoredFan& fan) {
  DivisorSetInfo info;
  std::set<std::string> colored;  // colors appearing in some cone
  for (const auto& c : fan.cones)
    for (const auto& id : c.colors) colored.insert(id);
  for (const auto& c : d.colors) {
    info.colors.push_back(c.id);
    if (!colored.count(c.id)) info.delta_ring.push_back(c.id);
  }
  for (const auto& g : d.gstable) info.gstable.push_back(g.id);
  for (const auto& c : fan.cones) {
    std::vector<std::string> dy;
    for (const auto& g : d.gstable)
      if (cone_contains(c.cone, g.ray)) dy.push_back(g.id);
    for (const auto& id : c.colors) dy.push_back(id);
    std::sort(dy.begin(), dy.end());
    info.d_orbit[c.id] = std::move(dy);
  }
  info.toroidal = info.delta_ring.size() == info.colors.size();
  return info;
}

namespace {

// Integral pairing row of a divisor: its rho/ray vector against the basis of
// Lambda(X). Colors must pair integrally to define valuations.
VecZ pairing_row(const SphericalDatum& d, const std::string& id) {
  if (const auto* c = d.color(id)) {
    if (!is_integral(c->rho))
      throw std::invalid_argument("color '" + id + "' has non-integral pairings with Lambda(X)");
    return to_z(c->rho);
  }
  if (const auto* g = d.gray(id)) return g->ray;
  throw std::invalid_argument("unknown divisor id '" + id + "'");
}

void check_support(const SphericalDatum& d, const DivisorZ& div) {
  for (const auto& [id, n] : div.coeffs)
    if (!d.is_divisor_id(id)) throw std::invalid_argument("unknown divisor id '" + id + "'");
}

}  // namespace

DivisorZ principal_divisor(const SphericalDatum& d, const VecZ& chi) {
  DivisorZ out;
  for (const auto& id : d.divisor_ids()) {
    VecZ row = pairing_row(d, id);
    out.add(id, dot_zz(row, chi));
  }
  return out;
}

VecZ DivisorClassGroup::classify(const DivisorZ& div) const {
  VecZ x = VecZ::Zero(static_cast<Eigen::Index>(divisor_order.size()));
  for (const auto& [id, n] : div.coeffs) {
    auto it = std::find(divisor_order.begin(), divisor_order.end(), id);
    if (it == divisor_order.end()) throw std::invalid_argument("unknown divisor id '" + id + "'");
    x(static_cast<Eigen::Index>(it - divisor_order.begin())) = n;
  }
  return group.coords(x);
}

DivisorClassGroup class_group(const SphericalDatum& d, const ColoredFan& fan) {
  (void)fan;
  DivisorClassGroup out;
  out.divisor_order = d.divisor_ids();
  const Eigen::Index m = static_cast<Eigen::Index>(out.divisor_order.size());
  MatZ rel(m, d.rank);
  for (Eigen::Index i = 0; i < m; ++i) {
    VecZ row = pairing_row(d, out.divisor_order[static_cast<size_t>(i)]);
    for (Eigen::Index j = 0; j < d.rank; ++j) rel(i, j) = row(j);
  }
  out.group = cokernel(m, rel);
  for (const auto& id : out.divisor_order) {
    DivisorZ prime;
    prime.add(id, 1);
    out.class_of[id] = out.classify(prime);
  }
  return out;
}

CartierResult cartier_data(const SphericalDatum& d, const ColoredFan& fan, const DivisorZ& div) {
  check_support(d, div);
  DivisorSetInfo info = divisor_set(d, fan);
  PLFunction l;
  std::set<std::string> closed(fan.closed_orbit_ids.begin(), fan.closed_orbit_ids.end());
  for (const auto& c : fan.cones) {
    const auto& dy = info.d_orbit.at(c.id);
    MatZ a(static_cast<Eigen::Index>(dy.size()), d.rank);
    VecZ b(static_cast<Eigen::Index>(dy.size()));
    for (size_t i = 0; i < dy.size(); ++i) {
      VecZ row = pairing_row(d, dy[i]);
      for (Eigen::Index j = 0; j < d.rank; ++j) a(static_cast<Eigen::Index>(i), j) = row(j);
      b(static_cast<Eigen::Index>(i)) = div.coeff(dy[i]);
    }
    auto chi = solve_integral(a, b);
    if (!chi) return NotCartier{c.id};
    if (closed.count(c.id)) l.per_cone[c.id] = *chi;
  }
  return l;
}

PLFunction require_cartier(const SphericalDatum& d, const ColoredFan& fan, const DivisorZ& div) {
  CartierResult r = cartier_data(d, fan, div);
  if (const auto* nc = std::get_if<NotCartier>(&r))
    throw std::invalid_argument("divisor is not Cartier at orbit '" + nc->orbit + "'");
  return std::get<PLFunction>(std::move(r));
}

namespace {

// Compatible integral tuples (chi_Y per maximal cone) as a lattice: kernel of
// the shared-face pairing rows inside Z^{k*r}.
MatZ pl_tuple_lattice(const SphericalDatum& d, const ColoredFan& fan,
                      const std::vector<const ColoredCone*>& maximal) {
  const Eigen::Index r = d.rank;
  const Eigen::Index k = static_cast<Eigen::Index>(maximal.size());
  std::vector<VecZ> rows;
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = i + 1; j < k; ++j) {
      Cone face = common_face_candidate(maximal[static_cast<size_t>(i)]->cone,
                                        maximal[static_cast<size_t>(j)]->cone);
      for (const auto& ray : face.rays) {
        VecZ row = VecZ::Zero(k * r);
        for (Eigen::Index t = 0; t < r; ++t) {
          row(i * r + t) = ray(t);
          row(j * r + t) = -ray(t);
        }
        rows.push_back(std::move(row));
      }
    }
  MatZ a(static_cast<Eigen::Index>(rows.size()), k * r);
  for (size_t i = 0; i < rows.size(); ++i) a.row(static_cast<Eigen::Index>(i)) = rows[i];
  return kernel_basis(a);
}

// Per-cone span-orthogonal tuples: PL data representing the zero function.
MatZ pl_zero_lattice(const SphericalDatum& d, const std::vector<const ColoredCone*>& maximal) {
  const Eigen::Index r = d.rank;
  const Eigen::Index k = static_cast<Eigen::Index>(maximal.size());
  std::vector<VecZ> cols;
  for (Eigen::Index i = 0; i < k; ++i)
    for (const auto& e : maximal[static_cast<size_t>(i)]->cone.span_eqs) {
      VecZ col = VecZ::Zero(k * r);
      for (Eigen::Index t = 0; t < r; ++t) col(i * r + t) = e(t);
      cols.push_back(std::move(col));
    }
  MatZ m(k * r, static_cast<Eigen::Index>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = cols[j];
  return m;
}

VecZ tuple_of(const PLFunction& l, const std::vector<std::string>& ids, Eigen::Index r) {
  VecZ t = VecZ::Zero(static_cast<Eigen::Index>(ids.size()) * r);
  for (size_t i = 0; i < ids.size(); ++i) {
    const VecZ& chi = l.per_cone.at(ids[i]);
    for (Eigen::Index j = 0; j < r; ++j) t(static_cast<Eigen::Index>(i) * r + j) = chi(j);
  }
  return t;
}

}  // namespace

PicardGroup picard_group(const SphericalDatum& d, const ColoredFan& fan) {
  PicardGroup out;
  DivisorSetInfo info = divisor_set(d, fan);
  out.delta_ring = info.delta_ring;
  auto maximal = fan.maximal();
  for (const auto* m : maximal) out.maximal_ids.push_back(m->id);
  const Eigen::Index r = d.rank;

  MatZ tuples = pl_tuple_lattice(d, fan, maximal);
  MatZ zeros = pl_zero_lattice(d, maximal);
  LatticeQuotient q = lattice_quotient(tuples, zeros);
  if (!q.group.torsion.empty())
    throw std::logic_error("picard_group: PL quotient has torsion");
  out.pl_rank = q.group.free_rank;
  out.pl_basis = tuples;
  out.pl_proj = q.group.to_coords;  // rows map tuple-basis coords to PL/0 coords

  const Eigen::Index nd = static_cast<Eigen::Index>(out.delta_ring.size());
  const Eigen::Index gens = nd + out.pl_rank;
  MatZ rel(gens, r);
  for (Eigen::Index j = 0; j < r; ++j) {
    VecZ chi = VecZ::Zero(r);
    chi(j) = 1;
    for (Eigen::Index i = 0; i < nd; ++i)
      rel(i, j) = dot_zz(pairing_row(d, out.delta_ring[static_cast<size_t>(i)]), chi);
    // Constant tuple (chi, ..., chi) in PL coordinates.
    VecZ constant = VecZ::Zero(static_cast<Eigen::Index>(maximal.size()) * r);
    for (size_t i = 0; i < maximal.size(); ++i) constant(static_cast<Eigen::Index>(i) * r + j) = 1;
    auto coords = lattice_coordinates(tuples, constant);
    if (!coords) throw std::logic_error("picard_group: constant tuple outside the PL lattice");
    VecZ pl = out.pl_proj * (*coords);
    for (Eigen::Index i = 0; i < out.pl_rank; ++i) rel(nd + i, j) = pl(i);
  }
  out.group = cokernel(gens, rel);

  for (const auto& id : d.divisor_ids()) {
    DivisorZ prime;
    prime.add(id, 1);
    CartierResult cr = cartier_data(d, fan, prime);
    if (std::holds_alternative<NotCartier>(cr)) {
      out.class_of[id] = std::nullopt;
    } else {
      out.class_of[id] = out.classify(d, fan, prime);
    }
  }
  return out;
}

VecZ PicardGroup::classify(const SphericalDatum& d, const ColoredFan& fan, const DivisorZ& div) const {
  PLFunction l = require_cartier(d, fan, div);
  const Eigen::Index r = d.rank;
  const Eigen::Index nd = static_cast<Eigen::Index>(delta_ring.size());

  // Split div = (div - realize(l)) + realize(l): the first summand lives on
  // the ring of colors, the second is the PL part.
  DivisorSetInfo info = divisor_set(d, fan);
  DivisorZ realized;
  for (const auto& id : d.divisor_ids()) {
    bool in_ring = std::find(delta_ring.begin(), delta_ring.end(), id) != delta_ring.end();
    if (in_ring) continue;
    // Pick any maximal cone whose orbit divisor set contains id.
    const std::string* owner = nullptr;
    for (const auto& mid : maximal_ids) {
      const auto& dy = info.d_orbit.at(mid);
      if (std::find(dy.begin(), dy.end(), id) != dy.end()) {
        owner = &mid;
        break;
      }
    }
    if (!owner)
      throw std::invalid_argument("divisor '" + id + "' lies in no closed-orbit cone; Picard classes undefined");
    realized.add(id, dot_zz(pairing_row(d, id), l.per_cone.at(*owner)));
  }

  VecZ x = VecZ::Zero(nd + pl_rank);
  for (const auto& [id, n] : div.coeffs) {
    auto it = std::find(delta_ring.begin(), delta_ring.end(), id);
    if (it != delta_ring.end()) x(static_cast<Eigen::Index>(it - delta_ring.begin())) = n;
  }
  // Sanity: outside the ring, div must equal its realization.
  for (const auto& id : d.divisor_ids()) {
    bool in_ring = std::find(delta_ring.begin(), delta_ring.end(), id) != delta_ring.end();
    if (!in_ring && div.coeff(id) != realized.coeff(id))
      throw std::logic_error("picard classify: Cartier data does not realize the divisor");
  }
  VecZ tuple = tuple_of(l, maximal_ids, r);
  auto coords = lattice_coordinates(pl_basis, tuple);
  if (!coords) throw std::logic_error("picard classify: tuple outside the PL lattice");
  VecZ pl = pl_proj * (*coords);
  for (Eigen::Index i = 0; i < pl_rank; ++i) x(nd + i) = pl(i);
  return group.coords(x);
}

bool is_globally_generated(const SphericalDatum& d, const ColoredFan& fan, const DivisorZ& div) {
  if (!fan_is_complete(fan, d)) throw std::invalid_argument("complete case only");
  PLFunction l = require_cartier(d, fan, div);
  if (pl_convexity(fan, l, d) == Convexity::NotConvex) return false;
  DivisorSetInfo info = divisor_set(d, fan);
  for (const auto& mid : fan.closed_orbit_ids)
    for (const auto& id : info.delta_ring) {
      Rat lhs = dot_qz(d.color(id)->rho, l.per_cone.at(mid));
      if (lhs > Rat(div.coeff(id))) return false;
    }
  return true;
}

bool is_ample(const SphericalDatum& d, const ColoredFan& fan, const DivisorZ& div) {
  if (!fan_is_complete(fan, d)) throw std::invalid_argument("complete case only");
  PLFunction l = require_cartier(d, fan, div);
  if (pl_convexity(fan, l, d) != Convexity::StrictlyConvex) return false;
  DivisorSetInfo info = divisor_set(d, fan);
  for (const auto& mid : fan.closed_orbit_ids)
    for (const auto& id : info.delta_ring) {
      Rat lhs = dot_qz(d.color(id)->rho, l.per_cone.at(mid));
      if (lhs >= Rat(div.coeff(id))) return false;
    }
  return true;
}

std::string factoriality_name(Factoriality f) {
  switch (f) {
    case Factoriality::Factorial: return "factorial";
    case Factoriality::QFactorial: return "Q-factorial";
    case Factoriality::Neither: return "neither";
  }
  return "?";
}

FactorialityResult factoriality(const SphericalDatum& d, const ColoredFan& fan) {
  DivisorSetInfo info = divisor_set(d, fan);
  bool all_factorial = true;
  std::optional<std::string> witness;
  for (const auto& c : fan.cones) {
    const auto& dy = info.d_orbit.at(c.id);
    MatZ a(static_cast<Eigen::Index>(dy.size()), d.rank);
    for (size_t i = 0; i < dy.size(); ++i)
      a.row(static_cast<Eigen::Index>(i)) = pairing_row(d, dy[i]);
    if (rank_q(to_q(a)) != static_cast<Eigen::Index>(dy.size()))
      return {Factoriality::Neither, c.id};
    SmithForm f = smith_form(a);
    bool basis_part = true;
    for (const Int& e : f.diag)
      if (e != 1) basis_part = false;
    if (!basis_part && all_factorial) {
      all_factorial = false;
      witness = c.id;
    }
  }
  if (all_factorial) return {Factoriality::Factorial, std::nullopt};
  return {Factoriality::QFactorial, witness};
}

bool is_smooth_toroidal(const SphericalDatum& d, const ColoredFan& fan) {
  DivisorSetInfo info = divisor_set(d, fan);
  if (!info.toroidal) throw std::invalid_argument("criterion valid only for toroidal varieties");
  return factoriality(d, fan).verdict == Factoriality::Factorial;
}

AffineResult is_affine_criterion(const SphericalDatum& d, const ColoredFan& fan) {
  if (fan.closed_orbit_ids.size() != 1) return {false, std::nullopt};
  DivisorSetInfo info = divisor_set(d, fan);

  std::vector<LinRow> sys;
  for (const auto& vray : d.valuation_cone.rays) {
    LinRow row;
    row.a = -to_q(vray);
    row.rel = Rel::GE;  // chi(vray) <= 0
    sys.push_back(std::move(row));
  }
  // chi vanishes on C_X = the union of all cones (faces of the single
  // maximal cone).
  for (const auto& c : fan.cones)
    for (const auto& ray : c.cone.rays) {
      LinRow row;
      row.a = to_q(ray);
      row.rel = Rel::EQ;
      sys.push_back(std::move(row));
    }
  for (const auto& id : info.delta_ring) {
    LinRow row;
    row.a = d.color(id)->rho;
    row.rel = Rel::GT;
    sys.push_back(std::move(row));
  }
  Feasibility f = solve_homogeneous(sys, d.rank);
  if (!f.feasible) return {false, std::nullopt};
  if (is_zero(f.witness)) return {true, VecZ::Zero(d.rank)};
  return {true, primitive(f.witness)};
}

bool is_quasi_projective(const SphericalDatum& d, const ColoredFan& fan) {
  auto maximal = fan.maximal();
  const Eigen::Index r = d.rank;
  const Eigen::Index k = static_cast<Eigen::Index>(maximal.size());
  std::vector<LinRow> sys;
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) {
      if (i == j) continue;
      if (j < i) {
        // Shared-face equalities once per unordered pair.
        continue;
      }
      Cone face = common_face_candidate(maximal[static_cast<size_t>(i)]->cone,
                                        maximal[static_cast<size_t>(j)]->cone);
      for (const auto& ray : face.rays) {
        LinRow row;
        row.a = VecQ::Zero(k * r);
        for (Eigen::Index t = 0; t < r; ++t) {
          row.a(i * r + t) = Rat(ray(t));
          row.a(j * r + t) = -Rat(ray(t));
        }
        row.rel = Rel::EQ;
        sys.push_back(std::move(row));
      }
    }
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) {
      if (i == j) continue;
      for (const auto& ray : maximal[static_cast<size_t>(i)]->cone.rays) {
        if (cone_contains(maximal[static_cast<size_t>(j)]->cone, ray)) continue;
        LinRow row;
        row.a = VecQ::Zero(k * r);
        for (Eigen::Index t = 0; t < r; ++t) {
          row.a(i * r + t) = Rat(ray(t));
          row.a(j * r + t) = -Rat(ray(t));
        }
        row.rel = Rel::GT;  // chi_i(ray) > chi_j(ray) off the shared face
        sys.push_back(std::move(row));
      }
    }
  return solve_homogeneous(sys, k * r).feasible;
}

}  // namespace spherical
