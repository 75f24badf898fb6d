#include "spherical/root_system.hpp"

#include <map>
#include <queue>
#include <set>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace spherical;
using namespace spherical::testing;

namespace {

// Subgroup generated by the parabolic's simple reflections.
size_t parabolic_order(const RootSystem& rs, const std::vector<int>& p) {
  std::set<std::string> seen;
  std::queue<WeylElement> work;
  WeylElement id{};
  auto key = [&](const WeylElement& w) { return show(rs.act(w.word, rs.rho)); };
  seen.insert(key(id));
  work.push(id);
  while (!work.empty()) {
    WeylElement w = work.front();
    work.pop();
    for (int i : p) {
      WeylElement nw = weyl_mul(rs, i, w);
      if (seen.insert(key(nw)).second) work.push(nw);
    }
  }
  return seen.size();
}

std::vector<std::vector<int>> all_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("root counts and Weyl orders") {
  struct Row {
    Family f;
    int n;
    size_t roots;
    size_t weyl;
  };
  for (const Row& r : {Row{Family::A, 2, 6, 6}, Row{Family::C, 2, 8, 8}, Row{Family::B, 2, 8, 8},
                       Row{Family::A, 3, 12, 24}, Row{Family::C, 3, 18, 48},
                       Row{Family::G, 2, 12, 12}, Row{Family::D, 4, 24, 192}}) {
    RootSystem rs = build_root_system(r.f, r.n);
    CHECK(rs.positive_roots.size() * 2 == r.roots);
    CHECK(enumerate_weyl(rs).size() == r.weyl);
  }
  CHECK(build_root_system(Family::F, 4).positive_roots.size() == 24);
  CHECK(build_root_system(Family::E, 6).positive_roots.size() == 36);
  CHECK_THROWS(build_root_system(Family::G, 3));
  CHECK_THROWS(build_root_system(Family::E, 9));
  CHECK_THROWS(build_root_system(Family::A, 0));
}

TEST_CASE("C_n has rho = (n, n-1, ..., 1)") {
  for (int n = 2; n <= 5; ++n) {
    RootSystem rs = build_root_system(Family::C, n);
    for (int i = 0; i < n; ++i) CHECK(rs.rho(i) == Rat(n - i));
  }
}

TEST_CASE("cartan matrices reproduce the pairings") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::B, 2}, {Family::C, 3}, {Family::G, 2}, {Family::F, 4}}) {
    RootSystem rs = build_root_system(f, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rat p = rs.pair_coroot(i, rs.simple_roots[static_cast<size_t>(j)]);
        CHECK(p == Rat(rs.cartan(i, j)));
      }
    // Sum of positive roots is 2 rho by construction; pairings with simple
    // coroots must all equal 1 for rho itself.
    for (int i = 0; i < n; ++i) CHECK(rs.pair_coroot(i, rs.rho) == 1);
  }
}

TEST_CASE("reduced words") {
  RootSystem a2 = build_root_system(Family::A, 2);
  CHECK(is_reduced(a2, {}).reduced);
  CHECK(is_reduced(a2, {}).length == 0);
  auto braid = is_reduced(a2, {0, 1, 0});
  CHECK(braid.reduced);
  CHECK(braid.length == 3);
  auto square = is_reduced(a2, {0, 0});
  CHECK(!square.reduced);
  CHECK(square.length == 0);
}

TEST_CASE("canonical words are lexicographically minimal") {
  RootSystem a2 = build_root_system(Family::A, 2);
  CHECK(weyl_element(a2, {1, 0, 1}).word == std::vector<int>{0, 1, 0});
  CHECK(weyl_element(a2, {0, 0}).word == std::vector<int>{});
  CHECK(weyl_element(a2, {1, 1, 0}).word == std::vector<int>{0});
  RootSystem b2 = build_root_system(Family::B, 2);
  CHECK(weyl_element(b2, {1, 0, 1, 0}).word == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("minimal coset representatives") {
  RootSystem a2 = build_root_system(Family::A, 2);
  CHECK(minimal_coset_reps(a2, {0, 1}).size() == 1);
  CHECK(minimal_coset_reps(a2, {}).size() == 6);
  auto reps = minimal_coset_reps(a2, {0});
  REQUIRE(reps.size() == 3);
  CHECK(reps[0].word.size() == 0);
  CHECK(reps[1].word.size() == 1);
  CHECK(reps[2].word.size() == 2);
}

TEST_CASE("coset counting over many parabolics") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::C, 3}}) {
    RootSystem rs = build_root_system(f, n);
    size_t w = enumerate_weyl(rs).size();
    for (const auto& p : all_subsets(n)) {
      size_t wp = parabolic_order(rs, p);
      size_t reps = minimal_coset_reps(rs, p).size();
      CHECK(reps * wp == w);
    }
  }
}

TEST_CASE("classify_beta on the three spec cases") {
  RootSystem a2 = build_root_system(Family::A, 2);
  std::vector<int> p = {0};

  WeylElement e{};
  auto c0 = classify_beta(a2, e, 0, p);
  CHECK(c0.kind == BetaClass::CaseB);
  CHECK(c0.gamma == 0);
  CHECK(c0.sign == 1);

  WeylElement s2 = weyl_element(a2, {1});
  auto c1 = classify_beta(a2, s2, 0, p);  // beta = s2(a1) = a1 + a2
  CHECK(c1.kind == BetaClass::CaseA);
  auto c2 = classify_beta(a2, s2, 1, p);  // beta = -a2, not a simple root of P
  CHECK(c2.kind == BetaClass::NoRaise);

  WeylElement s1 = weyl_element(a2, {0});
  CHECK_THROWS(classify_beta(a2, s1, 0, p));  // s1 is not in W^P
}

TEST_CASE("classify_beta partitions and case A raises length") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 2}, {Family::B, 2}, {Family::A, 3}}) {
    RootSystem rs = build_root_system(f, n);
    for (const auto& p : all_subsets(n)) {
      for (const auto& w : minimal_coset_reps(rs, p)) {
        for (int alpha = 0; alpha < n; ++alpha) {
          auto c = classify_beta(rs, w, alpha, p);
          if (c.kind == BetaClass::CaseA) {
            WeylElement sw = weyl_mul(rs, alpha, w);
            CHECK(sw.word.size() == w.word.size() + 1);
          }
          if (c.kind == BetaClass::CaseB) CHECK(c.sign != 0);
        }
      }
    }
  }
}

TEST_CASE("rho pairings") {
  RootSystem a2 = build_root_system(Family::A, 2);
  for (int i = 0; i < 2; ++i) CHECK(rho_pairing(a2, i, {}) == 1);
  for (int n = 2; n <= 5; ++n) {
    RootSystem cn = build_root_system(Family::C, n);
    std::vector<int> iset;
    for (int i = 2; i < n; ++i) iset.push_back(i);
    CHECK(rho_pairing(cn, 1, iset) == n - 1);
    CHECK(rho_pairing(cn, 0, iset) == 1);
  }
}

TEST_CASE("fundamental weights pair to delta") {
  RootSystem a2 = build_root_system(Family::A, 2);
  VecQ w1 = fundamental_weight(a2, 0);
  VecQ w2 = fundamental_weight(a2, 1);
  CHECK(a2.pair_coroot(0, w1) == 1);
  CHECK(a2.pair_coroot(1, w1) == 0);
  CHECK(a2.pair_coroot(0, VecQ(w1 + 2 * w2)) == 1);
}
