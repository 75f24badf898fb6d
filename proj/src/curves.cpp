#include "spherical/curves.hpp"

#include <algorithm>
#include <stdexcept>

namespace spherical {

std::string curve_class_name(const CurveClass& c) {
  if (const auto* w = std::get_if<WallClass>(&c)) return "C[" + w->wall.name() + "]";
  const auto& co = std::get<ColorOrbitClass>(c);
  return "C[" + co.color + "," + co.orbit + "]";
}

Rat wall_class_eval(const SphericalDatum& d, const ColoredFan& fan, const Wall& w,
                    const DivisorZ& div) {
  if (!fan_is_complete(fan, d)) throw std::invalid_argument("complete case only");
  PLFunction l = require_cartier(d, fan, div);
  VecZ diff = l.per_cone.at(w.plus_id) - l.per_cone.at(w.minus_id);
  Eigen::Index j = -1;
  for (Eigen::Index i = 0; i < w.v.size(); ++i)
    if (w.v(i) != 0) { j = i; break; }
  Rat c = Rat(diff(j)) / Rat(w.v(j));
  for (Eigen::Index i = 0; i < w.v.size(); ++i)
    if (Rat(diff(i)) != c * Rat(w.v(i)))
      throw std::logic_error("wall_class_eval: chi difference is not a multiple of the wall normal");
  return c;
}

Rat color_orbit_class_eval(const SphericalDatum& d, const ColoredFan& fan,
                           const std::string& color, const std::string& orbit,
                           const DivisorZ& div) {
  if (!fan_is_complete(fan, d)) throw std::invalid_argument("complete case only");
  const ColorRecord* rec = d.color(color);
  if (!rec) throw std::invalid_argument("'" + color + "' is not a color");
  const ColoredCone* c = fan.cone(orbit);
  if (!c || std::find(fan.closed_orbit_ids.begin(), fan.closed_orbit_ids.end(), orbit) ==
                fan.closed_orbit_ids.end())
    throw std::invalid_argument("'" + orbit + "' is not a closed orbit");
  if (std::find(c->colors.begin(), c->colors.end(), color) != c->colors.end())
    throw std::invalid_argument("class undefined for this pair: color '" + color +
                                "' belongs to Delta_Y of '" + orbit + "'");
  PLFunction l = require_cartier(d, fan, div);
  return Rat(div.coeff(color)) - dot_qz(rec->rho, l.per_cone.at(orbit));
}

Rat curve_class_eval(const SphericalDatum& d, const ColoredFan& fan, const CurveClass& c,
                     const DivisorZ& div) {
  if (const auto* w = std::get_if<WallClass>(&c)) return wall_class_eval(d, fan, w->wall, div);
  const auto& co = std::get<ColorOrbitClass>(c);
  return color_orbit_class_eval(d, fan, co.color, co.orbit, div);
}

EffectiveCone effective_cone_generators(const SphericalDatum& d, const ColoredFan& fan) {
  if (!fan_is_complete(fan, d)) throw std::invalid_argument("complete case only");
  EffectiveCone out;
  for (const auto& w : walls(fan, d)) out.generators.push_back(WallClass{w});
  DivisorSetInfo info = divisor_set(d, fan);
  for (const auto& c : d.colors)
    for (const auto& oid : fan.closed_orbit_ids) {
      const ColoredCone* cc = fan.cone(oid);
      if (std::find(cc->colors.begin(), cc->colors.end(), c.id) != cc->colors.end()) continue;
      out.generators.push_back(ColorOrbitClass{c.id, oid});
    }
  for (const auto& id : info.delta_ring)
    out.quotient_basis.push_back(ColorOrbitClass{id, fan.closed_orbit_ids.front()});
  return out;
}

bool nef_via_curves(const SphericalDatum& d, const ColoredFan& fan, const DivisorZ& div) {
  EffectiveCone gens = effective_cone_generators(d, fan);
  for (const auto& c : gens.generators)
    if (curve_class_eval(d, fan, c, div) < 0) return false;
  return true;
}

Rat degree_from_weights(const VecQ& l_x, const VecQ& l_y, const VecQ& chi) {
  if (l_x.size() != l_y.size() || l_x.size() != chi.size())
    throw std::invalid_argument("degree_from_weights: size mismatch");
  VecQ diff = l_x - l_y;
  if (is_zero(chi)) {
    if (is_zero(diff)) return 0;
    throw std::invalid_argument("weight difference is not proportional to the character");
  }
  Eigen::Index j = -1;
  for (Eigen::Index i = 0; i < chi.size(); ++i)
    if (chi(i) != 0) { j = i; break; }
  Rat c = diff(j) / chi(j);
  for (Eigen::Index i = 0; i < chi.size(); ++i)
    if (diff(i) != c * chi(i))
      throw std::invalid_argument("weight difference is not proportional to the character");
  return c;
}

Int degree_type_u(const RootSystem& rs, int alpha, const VecQ& l_x) {
  if (alpha < 0 || alpha >= rs.n) throw std::invalid_argument("degree_type_u: bad simple index");
  Rat p = rs.pair_coroot(alpha, l_x);
  if (!is_integral(p)) throw std::invalid_argument("weight is not in the weight lattice");
  return p.get_num();
}

}  // namespace spherical
