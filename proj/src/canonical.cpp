#include "spherical/canonical.hpp"

#include <stdexcept>

namespace spherical {

DivisorZ anticanonical_toroidal(const SphericalDatum& d, const ColoredFan& fan) {
  DivisorSetInfo info = divisor_set(d, fan);
  if (!info.toroidal) throw std::invalid_argument("anticanonical_toroidal: fan is not toroidal");
  if (!fan_is_complete(fan, d)) throw std::invalid_argument("anticanonical_toroidal: fan is not complete");
  DivisorZ out;
  for (const auto& g : d.gstable) out.add(g.id, 1);
  for (const auto& c : d.colors) {
    if (std::holds_alternative<RaiseU>(c.raise)) {
      if (!d.root_system)
        throw std::invalid_argument("anticanonical_toroidal: type U color '" + c.id +
                                    "' needs a root system");
      const auto& u = std::get<RaiseU>(c.raise);
      out.add(c.id, 2 * rho_pairing(*d.root_system, u.alpha, u.iset));
    } else {
      out.add(c.id, 1);
    }
  }
  return out;
}

AnticanonicalPrototype anticanonical_prototype(const SphericalDatum& d, const ColoredFan& fan) {
  (void)fan;
  AnticanonicalPrototype p;
  for (const auto& g : d.gstable) p.known.add(g.id, 1);
  for (const auto& c : d.colors) p.unknown_colors.push_back(c.id);
  return p;
}

DivisorZ pushforward_divisor(const FanMap& map, const DivisorZ& div) {
  DivisorZ out;
  for (const auto& [id, n] : div.coeffs) {
    auto ci = map.color_image.find(id);
    if (ci != map.color_image.end()) {
      out.add(ci->second, n);
      continue;
    }
    auto ri = map.ray_image.find(id);
    if (ri != map.ray_image.end()) {
      if (ri->second) out.add(*ri->second, n);
      continue;  // contracted
    }
    throw std::invalid_argument("pushforward: unknown divisor id '" + id + "'");
  }
  return out;
}

DivisorZ canonical_general(const SphericalDatum& target, const Resolution& res) {
  DivisorSetInfo info = divisor_set(res.source, res.source_fan);
  if (!info.toroidal)
    throw std::invalid_argument("canonical_general: resolution source is not toroidal");
  if (!fan_is_complete(res.source_fan, res.source))
    throw std::invalid_argument("canonical_general: resolution source is not complete");
  if (!is_smooth_toroidal(res.source, res.source_fan))
    throw std::invalid_argument("canonical_general: resolution source is not smooth");
  for (const auto& [src, img] : res.map.color_image)
    if (!target.color(img))
      throw std::invalid_argument("canonical_general: color image '" + img + "' is not a target color");
  for (const auto& [src, img] : res.map.ray_image)
    if (img && !target.is_divisor_id(*img))
      throw std::invalid_argument("canonical_general: ray image '" + *img + "' is not a target divisor");

  DivisorZ anti = anticanonical_toroidal(res.source, res.source_fan);
  // Pushing forward -K and negating back lands on the same coefficients.
  return pushforward_divisor(res.map, anti);
}

FanMap compose(const FanMap& first, const FanMap& then) {
  FanMap out;
  for (const auto& [id, img] : first.ray_image) {
    if (!img) {
      out.ray_image[id] = std::nullopt;
      continue;
    }
    auto ri = then.ray_image.find(*img);
    if (ri != then.ray_image.end()) {
      out.ray_image[id] = ri->second;
      continue;
    }
    throw std::invalid_argument("compose: ray image '" + *img + "' unknown to the second map");
  }
  for (const auto& [id, img] : first.color_image) {
    auto ci = then.color_image.find(img);
    if (ci == then.color_image.end())
      throw std::invalid_argument("compose: color image '" + img + "' unknown to the second map");
    out.color_image[id] = ci->second;
  }
  return out;
}

}  // namespace spherical
