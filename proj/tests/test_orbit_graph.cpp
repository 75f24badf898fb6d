#include "spherical/orbit_graph.hpp"

#include <map>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace spherical;

namespace {

OrbitGraph z_graph() {
  OrbitGraph g;
  g.rs = build_root_system(Family::A, 2);
  g.vertices = {{"zb", 0, 1}, {"zt", 1, 2}};
  g.edges = {{"zb", "zt", 0, EdgeType::N}};
  return g;
}

// The six-orbit graph the induction produces, with its classical vertex names.
OrbitGraph gl3_graph() {
  OrbitGraph g;
  g.rs = build_root_system(Family::A, 2);
  g.vertices = {{"Y", 0, 1},  {"Y1", 0, 2}, {"Y2", 1, 2},
                {"Y3", 0, 3}, {"Y4", 1, 3}, {"X", 1, 4}};
  g.edges = {{"Y", "Y1", 1, EdgeType::U},  {"Y", "Y2", 0, EdgeType::N},
             {"Y1", "Y3", 0, EdgeType::U}, {"Y2", "Y4", 1, EdgeType::U},
             {"Y4", "X", 0, EdgeType::U},  {"Y3", "X", 1, EdgeType::N}};
  return g;
}

OrbitGraph point_graph(const RootSystem& rs) {
  OrbitGraph g;
  g.rs = rs;
  g.vertices = {{"pt", 0, 0}};
  return g;
}

// P^1 x P^1 as SL2/T embedding: the two divisor orbits raise with type T to
// the dense orbit.
OrbitGraph t_config_graph() {
  OrbitGraph g;
  g.rs = build_root_system(Family::A, 1);
  g.vertices = {{"Dplus", 0, 1}, {"Dminus", 0, 1}, {"Xdense", 1, 2}};
  g.edges = {{"Dplus", "Xdense", 0, EdgeType::T}, {"Dminus", "Xdense", 0, EdgeType::T}};
  return g;
}

using Perm = std::map<std::string, std::string>;

Perm compose(const Perm& f, const Perm& g) {  // f after g
  Perm out;
  for (const auto& [k, v] : g) out[k] = f.at(v);
  return out;
}

Perm alternating(const OrbitGraph& g, int i, int j, int m) {
  Perm acc;
  for (const auto& v : g.vertices) acc[v.id] = v.id;
  for (int k = 0; k < m; ++k) {
    int root = (k % 2 == 0) ? i : j;
    acc = compose(knop_step(g, root), acc);
  }
  return acc;
}

void check_braids(const OrbitGraph& g) {
  for (int i = 0; i < g.rs.n; ++i) {
    Perm s = knop_step(g, i);
    Perm ss = compose(s, s);
    for (const auto& v : g.vertices) CHECK(ss.at(v.id) == v.id);
    for (int j = i + 1; j < g.rs.n; ++j) {
      int m = g.rs.coxeter_m(i, j);
      CHECK(alternating(g, i, j, m) == alternating(g, j, i, m));
    }
  }
}

}  // namespace

TEST_CASE("graph validation") {
  CHECK(graph_validate(gl3_graph()).ok());
  CHECK(graph_validate(z_graph()).ok());
  OrbitGraph empty;
  empty.rs = build_root_system(Family::A, 2);
  CHECK(graph_validate(empty).ok());

  OrbitGraph bad = gl3_graph();
  bad.edges[0].type = EdgeType::N;  // U edge with rank jump 0 relabeled N
  CHECK(!graph_validate(bad).ok());

  OrbitGraph jump = z_graph();
  jump.edges[0].type = EdgeType::U;  // N edge must raise the rank
  CHECK(!graph_validate(jump).ok());

  OrbitGraph dup = gl3_graph();
  dup.edges.push_back({"Y", "Y1", 1, EdgeType::U});
  CHECK(!graph_validate(dup).ok());
}

TEST_CASE("parabolic induction reproduces the classical six-orbit graph") {
  RootSystem a2 = build_root_system(Family::A, 2);
  OrbitGraph induced = parabolic_induce(z_graph(), a2, {0});
  CHECK(graph_validate(induced).ok());
  CHECK(induced.vertices.size() == 6);
  int n_edges = 0, u_edges = 0;
  for (const auto& e : induced.edges) {
    if (e.type == EdgeType::N) ++n_edges;
    if (e.type == EdgeType::U) ++u_edges;
  }
  CHECK(n_edges == 2);
  CHECK(u_edges == 4);
  CHECK(induced.edges.size() == 6);
  CHECK(graphs_isomorphic_by_invariants(induced, gl3_graph()));
}

TEST_CASE("induction by the full parabolic is the identity") {
  RootSystem a2 = build_root_system(Family::A, 2);
  OrbitGraph induced = parabolic_induce(z_graph(), a2, {0, 1});
  CHECK(graphs_isomorphic_by_invariants(induced, z_graph()));
}

TEST_CASE("induction from a point gives the Weyl graph") {
  RootSystem a2 = build_root_system(Family::A, 2);
  OrbitGraph gb = parabolic_induce(point_graph(a2), a2, {});
  CHECK(gb.vertices.size() == 6);
  CHECK(gb.edges.size() == 6);
  for (const auto& e : gb.edges) CHECK(e.type == EdgeType::U);
  CHECK(graph_validate(gb).ok());

  // Levi mismatch: an edge outside the parabolic.
  CHECK_THROWS(parabolic_induce(z_graph(), a2, {1}));
}

TEST_CASE("non-normality detection") {
  auto pairs = detect_nonnormal(gl3_graph());
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].first == "Y3");
  CHECK(pairs[0].second == "Y2");

  RootSystem a2 = build_root_system(Family::A, 2);
  OrbitGraph gb = parabolic_induce(point_graph(a2), a2, {});
  CHECK(detect_nonnormal(gb).empty());
  CHECK(detect_nonnormal(t_config_graph()).empty());
}

TEST_CASE("multiplicity-free orbits") {
  OrbitGraph g = gl3_graph();
  CHECK(multiplicity_free(g, "X"));
  CHECK(!multiplicity_free(g, "Y"));
  CHECK(!multiplicity_free(g, "Y1"));  // Y3 -> X is type N above Y1
  CHECK(multiplicity_free(g, "Y4"));
  RootSystem a2 = build_root_system(Family::A, 2);
  OrbitGraph gb = parabolic_induce(point_graph(a2), a2, {});
  for (const auto& v : gb.vertices) CHECK(multiplicity_free(gb, v.id));
}

TEST_CASE("knop involutions on the T configuration") {
  OrbitGraph g = t_config_graph();
  auto s = knop_step(g, 0);
  CHECK(s.at("Dplus") == "Dminus");
  CHECK(s.at("Dminus") == "Dplus");
  CHECK(s.at("Xdense") == "Xdense");
}

TEST_CASE("knop braid relations") {
  check_braids(gl3_graph());
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 2}, {Family::B, 2}}) {
    RootSystem rs = build_root_system(f, n);
    OrbitGraph gb = parabolic_induce(point_graph(rs), rs, {});
    check_braids(gb);
  }
}

TEST_CASE("knop rejects incomplete configurations") {
  OrbitGraph g = t_config_graph();
  g.edges.pop_back();  // lone type T edge
  CHECK_THROWS(knop_step(g, 0));
}

TEST_CASE("chain statistics") {
  OrbitGraph g = gl3_graph();
  ChainStats empty = chain_stats(g, {});
  CHECK(empty.degree == 1);
  CHECK(empty.rank_delta == 0);
  CHECK(empty.reduced);

  std::vector<OrbitEdge> path = {{"Y", "Y2", 0, EdgeType::N},
                                 {"Y2", "Y4", 1, EdgeType::U},
                                 {"Y4", "X", 0, EdgeType::U}};
  ChainStats st = chain_stats(g, path);
  CHECK(st.l_n == 1);
  CHECK(st.l_t == 0);
  CHECK(st.degree == 2);
  CHECK(st.rank_delta == 1);
  CHECK(st.reduced);
  CHECK(st.word == std::vector<int>{0, 1, 0});

  ChainStats single = chain_stats(g, {{"Y", "Y1", 1, EdgeType::U}});
  CHECK(single.degree == 1);
  CHECK(single.rank_delta == 0);

  std::vector<OrbitEdge> broken = {{"Y", "Y2", 0, EdgeType::N}, {"Y4", "X", 0, EdgeType::U}};
  CHECK_THROWS(chain_stats(g, broken));
}

TEST_CASE("rank delta equals the number of T and N edges on every chain") {
  RootSystem a2 = build_root_system(Family::A, 2);
  for (const OrbitGraph& g : {gl3_graph(), parabolic_induce(z_graph(), a2, {0})}) {
    auto chains = maximal_chains(g);
    CHECK(!chains.empty());
    for (const auto& chain : chains) {
      ChainStats st = chain_stats(g, chain);
      CHECK(st.rank_delta == st.l_n + st.l_t);
    }
  }
}

TEST_CASE("dot export is deterministic and doubles N edges") {
  OrbitGraph empty;
  empty.rs = build_root_system(Family::A, 2);
  CHECK(export_dot(empty) == "digraph orbits {\n  rankdir=BT;\n}\n");

  OrbitGraph g = z_graph();
  std::string dot = export_dot(g);
  CHECK(dot.find("\"zb\" -> \"zt\" [label=\"1\", color=\"black:invis:black\"]") != std::string::npos);

  std::string gl3 = export_dot(gl3_graph());
  CHECK(gl3 == export_dot(gl3_graph()));
  CHECK(gl3.find("\"Y\" -> \"Y2\" [label=\"1\", color=\"black:invis:black\"];") != std::string::npos);
  size_t nodes = 0;
  for (size_t pos = 0; (pos = gl3.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
  CHECK(nodes == 12);  // 6 vertices + 6 edges
}
