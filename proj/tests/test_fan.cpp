#include "spherical/fan.hpp"

#include "doctest.h"
#include "fixtures_builders.hpp"

using namespace spherical;
using namespace spherical::testing;

TEST_CASE("P^1 fan validates and is complete") {
  Model m = toric_p1();
  auto rep = fan_validate(m.fan, m.datum);
  CHECK(rep.ok());
  CHECK(rep.complete);
}

TEST_CASE("the SL2/T embedding validates with a single colored cone") {
  Model m = p1xp1_sl2t();
  auto rep = fan_validate(m.fan, m.datum);
  CHECK(rep.ok());
  CHECK(rep.complete);
}

TEST_CASE("overlapping maximal cones are both reported") {
  Model m = toric_p1();
  // Second copy of the positive cone under a new name.
  ColoredCone dup;
  dup.id = "dup";
  dup.cone = m.fan.cones[0].cone;
  m.fan.cones.push_back(dup);
  m.fan.closed_orbit_ids.push_back("dup");
  auto rep = fan_validate(m.fan, m.datum);
  CHECK(!rep.ok());
  bool mentions = false;
  for (const auto& e : rep.errors)
    if (e.find("sigma0") != std::string::npos && e.find("dup") != std::string::npos &&
        e.find("overlap") != std::string::npos)
      mentions = true;
  CHECK(mentions);
}

TEST_CASE("single injected violations are caught") {
  // Color image outside its cone.
  Model m = p1xp1_sl2t();
  m.fan.cones[0].colors.push_back("Dplus");  // rho = +1, cone = <-1>
  CHECK(!fan_validate(m.fan, m.datum).ok());

  // Relative interior missing the valuation cone.
  Model m2 = p1xp1_sl2t();
  m2.fan.cones[0].cone = line_cone({1}, 1);
  m2.datum.gstable[0].ray = zvec({1});
  CHECK(!fan_validate(m2.fan, m2.datum).ok());

  // Intersection not a face: two rank-2 cones glued along an interior ray.
  Model m3 = toric_model({{"A", {1, 0}}, {"B", {0, 1}}, {"C", {1, 1}}, {"D", {2, 1}}},
                         {{"A", "B"}, {"C", "D"}}, 2);
  auto rep3 = fan_validate(m3.fan, m3.datum);
  CHECK(!rep3.ok());

  // Non-primitive G-stable ray.
  Model m4 = toric_p1();
  m4.datum.gstable[0].ray = zvec({2});
  CHECK(!fan_validate(m4.fan, m4.datum).ok());
}

TEST_CASE("line-containing cones warn but do not fail") {
  Model m = toric_model({{"A", {1}}, {"B", {-1}}}, {{"A", "B"}}, 1);
  auto rep = fan_validate(m.fan, m.datum);
  CHECK(rep.ok());
  CHECK(!rep.warnings.empty());
}

TEST_CASE("completeness bookkeeping") {
  CHECK(fan_is_complete(toric_p2().fan, toric_p2().datum));
  CHECK(fan_is_complete(toric_p1p1().fan, toric_p1p1().datum));
  CHECK(!fan_is_complete(toric_a2().fan, toric_a2().datum));
  CHECK(!fan_is_complete(toric_quadric_cone().fan, toric_quadric_cone().datum));
  CHECK(fan_is_complete(p2_sl2n().fan, p2_sl2n().datum));
}

TEST_CASE("walls of the small fans") {
  Model p1 = toric_p1();
  auto w1 = walls(p1.fan, p1.datum);
  REQUIRE(w1.size() == 1);
  CHECK(w1[0].face.dim == 0);
  CHECK(show(w1[0].v) == "(1)");
  CHECK(w1[0].plus_id == "sigma0");

  Model sl2 = p1xp1_sl2t();
  CHECK(walls(sl2.fan, sl2.datum).empty());

  Model p2 = toric_p2();
  auto w2 = walls(p2.fan, p2.datum);
  CHECK(w2.size() == 3);
  for (const auto& w : w2) CHECK(w.face.dim == 1);
}

TEST_CASE("wall orientation flips with the cone order") {
  Model p1 = toric_p1();
  auto w = walls(p1.fan, p1.datum);
  REQUIRE(w.size() == 1);
  std::swap(p1.fan.closed_orbit_ids[0], p1.fan.closed_orbit_ids[1]);
  auto w2 = walls(p1.fan, p1.datum);
  REQUIRE(w2.size() == 1);
  CHECK(w2[0].plus_id == w[0].minus_id);
  CHECK(w2[0].v == VecZ(-w[0].v));
}

TEST_CASE("pl convexity on the line") {
  Model p1 = toric_p1();
  PLFunction l;
  l.per_cone["sigma0"] = zvec({1});
  l.per_cone["sigma1"] = zvec({0});
  CHECK(pl_convexity(p1.fan, l, p1.datum) == Convexity::StrictlyConvex);

  PLFunction zero;
  zero.per_cone["sigma0"] = zvec({0});
  zero.per_cone["sigma1"] = zvec({0});
  CHECK(pl_convexity(p1.fan, zero, p1.datum) == Convexity::Convex);

  PLFunction bad;
  bad.per_cone["sigma0"] = zvec({-1});
  bad.per_cone["sigma1"] = zvec({0});
  CHECK(pl_convexity(p1.fan, bad, p1.datum) == Convexity::NotConvex);
}

TEST_CASE("incompatible pl data is rejected") {
  Model p2 = toric_p2();
  PLFunction l;
  l.per_cone["sigma0"] = zvec({1, 0});
  l.per_cone["sigma1"] = zvec({0, 1});  // disagrees on the shared ray D2
  l.per_cone["sigma2"] = zvec({0, 0});
  CHECK_THROWS_AS(pl_convexity(p2.fan, l, p2.datum), std::invalid_argument);
}

TEST_CASE("adding a global linear function preserves the verdict") {
  Model p2 = toric_p2();
  // Support data of O(1): 1 on D1, 0 elsewhere.
  PLFunction l;
  l.per_cone["sigma0"] = zvec({1, 0});
  l.per_cone["sigma1"] = zvec({0, 0});
  l.per_cone["sigma2"] = zvec({1, -1});
  Convexity base = pl_convexity(p2.fan, l, p2.datum);
  CHECK(base == Convexity::StrictlyConvex);
  for (auto chi : {zvec({3, -2}), zvec({-1, 5})}) {
    PLFunction shifted;
    for (const auto& [id, v] : l.per_cone) shifted.per_cone[id] = v + chi;
    CHECK(pl_convexity(p2.fan, shifted, p2.datum) == base);
  }
}

TEST_CASE("pl convexity requires a complete fan") {
  Model a2 = toric_a2();
  PLFunction l;
  l.per_cone["sigma0"] = zvec({0, 0});
  CHECK_THROWS_AS(pl_convexity(a2.fan, l, a2.datum), std::invalid_argument);
}
