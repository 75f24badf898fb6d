#include "spherical/feasible.hpp"

#include <random>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace spherical;
using namespace spherical::testing;

namespace {

LinRow row(std::initializer_list<Rat> a, Rel rel) {
  return LinRow{qvec(a), rel};
}

}  // namespace

TEST_CASE("strict interior of the orthant") {
  auto f = solve_homogeneous({row({1, 0}, Rel::GT), row({0, 1}, Rel::GT)}, 2);
  REQUIRE(f.feasible);
  CHECK(f.witness(0) > 0);
  CHECK(f.witness(1) > 0);
}

TEST_CASE("pinched strict system is infeasible") {
  auto f = solve_homogeneous({row({1}, Rel::GE), row({-1}, Rel::GE), row({1}, Rel::GT)}, 1);
  CHECK(!f.feasible);
}

TEST_CASE("equalities substitute through") {
  // x = y, x + y > 0, -x >= -3y.
  auto f = solve_homogeneous({row({1, -1}, Rel::EQ), row({1, 1}, Rel::GT), row({-1, 3}, Rel::GE)}, 2);
  REQUIRE(f.feasible);
  CHECK(f.witness(0) == f.witness(1));
  CHECK(f.witness(0) > 0);

  // x = y and x = -y force zero; x > 0 becomes impossible.
  auto g = solve_homogeneous({row({1, -1}, Rel::EQ), row({1, 1}, Rel::EQ), row({1, 0}, Rel::GT)}, 2);
  CHECK(!g.feasible);
}

TEST_CASE("weak system always admits zero") {
  auto f = solve_homogeneous({row({3, -2, 5}, Rel::GE), row({-1, -1, -1}, Rel::GE)}, 3);
  REQUIRE(f.feasible);
}

TEST_CASE("strictness propagates through combinations") {
  // y > 0 and y < 0 via x: x >= y, -x >= y ... contradiction needs x elimination.
  auto f = solve_homogeneous({row({1, -1}, Rel::GE), row({-1, -1}, Rel::GE), row({0, 1}, Rel::GT)}, 2);
  CHECK(!f.feasible);
  auto g = solve_homogeneous({row({1, -1}, Rel::GE), row({-1, -1}, Rel::GE), row({0, -1}, Rel::GT)}, 2);
  REQUIRE(g.feasible);
  CHECK(g.witness(1) < 0);
}

TEST_CASE("random systems: verified witnesses and order-invariance") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 4);
    size_t m = 1 + rng() % 6;
    std::vector<LinRow> sys;
    for (size_t i = 0; i < m; ++i) {
      LinRow r;
      r.a = to_q(random_zvec(rng, n, -3, 3));
      unsigned long pick = rng() % 4;
      r.rel = pick == 0 ? Rel::EQ : (pick == 1 ? Rel::GT : Rel::GE);
      sys.push_back(std::move(r));
    }
    // solve_homogeneous verifies any witness internally (throws on failure).
    Feasibility a = solve_homogeneous(sys, n);
    std::vector<LinRow> rev(sys.rbegin(), sys.rend());
    Feasibility b = solve_homogeneous(rev, n);
    CHECK(a.feasible == b.feasible);
  }
}
