#include "spherical/curves.hpp"

#include <random>

#include "doctest.h"
#include "fixtures_builders.hpp"

using namespace spherical;
using namespace spherical::testing;

TEST_CASE("wall class on the line") {
  Model p1 = toric_p1();
  auto w = walls(p1.fan, p1.datum);
  REQUIRE(w.size() == 1);
  CHECK(wall_class_eval(p1.datum, p1.fan, w[0], divisor({{"D0", 1}})) == 1);
  CHECK(wall_class_eval(p1.datum, p1.fan, w[0], divisor({{"Dinf", 1}})) == 1);
  CHECK(wall_class_eval(p1.datum, p1.fan, w[0], principal_divisor(p1.datum, zvec({7}))) == 0);
}

TEST_CASE("wall classes on the plane evaluate O(1) to degree one") {
  Model p2 = toric_p2();
  auto ws = walls(p2.fan, p2.datum);
  REQUIRE(ws.size() == 3);
  for (const auto& w : ws)
    CHECK(wall_class_eval(p2.datum, p2.fan, w, divisor({{"D1", 1}})) == 1);
}

TEST_CASE("color-orbit classes") {
  Model m = p1xp1_sl2t();
  DivisorZ mk = divisor({{"Dplus", 1}, {"Dminus", 1}, {"Ddiag", 1}});
  CHECK(color_orbit_class_eval(m.datum, m.fan, "Dplus", "Ydiag", mk) == 2);

  // C_{D,Y} . D' = delta_{D,D'} on ring colors.
  for (const std::string& d : {"Dplus", "Dminus"})
    for (const std::string& dp : {"Dplus", "Dminus"}) {
      DivisorZ prime = divisor({{dp, 1}});
      Rat expect = d == dp ? 1 : 0;
      CHECK(color_orbit_class_eval(m.datum, m.fan, d, "Ydiag", prime) == expect);
    }

  CHECK(color_orbit_class_eval(m.datum, m.fan, "Dplus", "Ydiag",
                               principal_divisor(m.datum, zvec({3}))) == 0);

  // Pairs with D in Delta_Y are rejected.
  IgModel ig = ig_model(2);
  CHECK_THROWS_AS(color_orbit_class_eval(ig.target, ig.target_fan, "DY", "Y", DivisorZ{}),
                  std::invalid_argument);
  CHECK(color_orbit_class_eval(ig.target, ig.target_fan, "DY", "Z", divisor({{"DY", 1}})) == 1);
}

TEST_CASE("effective cone generators") {
  Model m = p1xp1_sl2t();
  auto eff = effective_cone_generators(m.datum, m.fan);
  CHECK(eff.generators.size() == 2);  // no walls, two color classes
  CHECK(eff.quotient_basis.size() == 2);

  Model p1 = toric_p1();
  auto eff1 = effective_cone_generators(p1.datum, p1.fan);
  CHECK(eff1.generators.size() == 1);
  CHECK(eff1.quotient_basis.empty());

  Model p2 = toric_p2();
  auto eff2 = effective_cone_generators(p2.datum, p2.fan);
  CHECK(eff2.generators.size() == 3);
  CHECK(eff2.quotient_basis.empty());
}

TEST_CASE("duality identity on the quotient basis") {
  Model m = p1xp1_sl2t();
  auto eff = effective_cone_generators(m.datum, m.fan);
  DivisorSetInfo info = divisor_set(m.datum, m.fan);
  REQUIRE(eff.quotient_basis.size() == info.delta_ring.size());
  for (size_t i = 0; i < eff.quotient_basis.size(); ++i)
    for (size_t j = 0; j < info.delta_ring.size(); ++j) {
      DivisorZ prime = divisor({{info.delta_ring[j], 1}});
      Rat expect = i == j ? 1 : 0;
      CHECK(curve_class_eval(m.datum, m.fan, eff.quotient_basis[i], prime) == expect);
    }
}

TEST_CASE("curve classes kill principal divisors") {
  std::mt19937_64 rng(41);
  for (const Model& m : {toric_p1(), toric_p2(), toric_p1p1(), p1xp1_sl2t(), p2_sl2n()}) {
    auto eff = effective_cone_generators(m.datum, m.fan);
    for (int t = 0; t < 10; ++t) {
      VecZ chi = random_zvec(rng, m.datum.rank, -4, 4);
      DivisorZ d = principal_divisor(m.datum, chi);
      for (const auto& c : eff.generators) CHECK(curve_class_eval(m.datum, m.fan, c, d) == 0);
    }
  }
}

TEST_CASE("nef via curves") {
  Model p1 = toric_p1();
  CHECK(nef_via_curves(p1.datum, p1.fan, DivisorZ{}));
  CHECK(nef_via_curves(p1.datum, p1.fan, divisor({{"D0", 1}, {"Dinf", -1}})));
  CHECK(!nef_via_curves(p1.datum, p1.fan, divisor({{"D0", -1}})));

  Model m = p1xp1_sl2t();
  CHECK(!nef_via_curves(m.datum, m.fan, divisor({{"Ddiag", -1}})));
  CHECK(nef_via_curves(m.datum, m.fan, divisor({{"Dplus", 1}, {"Dminus", 1}, {"Ddiag", 1}})));
}

TEST_CASE("nef agrees with global generation") {
  std::mt19937_64 rng(43);
  for (const Model& m : {toric_p1(), toric_p2(), toric_p1p1(), p1xp1_sl2t(), p2_sl2n()}) {
    auto ids = m.datum.divisor_ids();
    for (int t = 0; t < 25; ++t) {
      DivisorZ d;
      for (const auto& id : ids)
        d.add(id, static_cast<long>(rng() % 9) - 4);
      if (std::holds_alternative<NotCartier>(cartier_data(m.datum, m.fan, d))) continue;
      CHECK(nef_via_curves(m.datum, m.fan, d) == is_globally_generated(m.datum, m.fan, d));
    }
  }
}

TEST_CASE("degrees from torus weights") {
  CHECK(degree_from_weights(qvec({2}), qvec({0}), qvec({1})) == 2);
  CHECK(degree_from_weights(qvec({5}), qvec({5}), qvec({1})) == 0);

  // O(n) on the line with L_x = n chi, L_y = 0.
  for (long n : {1L, 4L, -2L})
    CHECK(degree_from_weights(to_q(zvec({2 * n, -n})), qvec({0, 0}), to_q(zvec({2, -1}))) == n);

  CHECK_THROWS_AS(degree_from_weights(qvec({1, 0}), qvec({0, 0}), qvec({0, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(degree_from_weights(qvec({1}), qvec({0}), qvec({0})), std::invalid_argument);
  CHECK(degree_from_weights(qvec({1}), qvec({1}), qvec({0})) == 0);
}

TEST_CASE("degrees of type U curves") {
  RootSystem a2 = build_root_system(Family::A, 2);
  CHECK(degree_type_u(a2, 0, a2.rho) == 1);
  CHECK(degree_type_u(a2, 1, a2.rho) == 1);
  CHECK(degree_type_u(a2, 0, VecQ(VecQ::Zero(3))) == 0);
  VecQ w = fundamental_weight(a2, 0) + 2 * fundamental_weight(a2, 1);
  CHECK(degree_type_u(a2, 0, w) == 1);
  CHECK(degree_type_u(a2, 1, w) == 2);
}
