#pragma once

#include <map>
#include <string>
#include <vector>

#include "spherical/root_system.hpp"

// The graph of B-orbits: vertices carry (rank, dim), edges carry a simple
// root and one of the three raising types. Parabolic induction, the case-wise
// Weyl involutions, non-normality detection and chain bookkeeping live here.

namespace spherical {

enum class EdgeType { U, T, N };

std::string edge_type_name(EdgeType t);
EdgeType parse_edge_type(const std::string& s);

struct OrbitVertex {
  std::string id;
  int rank = 0;
  int dim = 0;
};

struct OrbitEdge {
  std::string from, to;
  int root = 0;  // simple-root index, 0-based
  EdgeType type = EdgeType::U;
};

struct OrbitGraph {
  RootSystem rs;
  std::vector<OrbitVertex> vertices;
  std::vector<OrbitEdge> edges;

  const OrbitVertex* find(const std::string& id) const;
};

struct GraphReport {
  std::vector<std::string> errors;
  bool ok() const { return errors.empty(); }
};

GraphReport graph_validate(const OrbitGraph& g);

// Vertices of the induced graph are "<orbit>@<word>"; dims shift by word
// length, ranks are inherited.
OrbitGraph parabolic_induce(const OrbitGraph& z, const RootSystem& ambient,
                            const std::vector<int>& parabolic);

// (Y3, Y2) pairs: Y3 is not normal along Y2.
std::vector<std::pair<std::string, std::string>> detect_nonnormal(const OrbitGraph& g);

bool multiplicity_free(const OrbitGraph& g, const std::string& vertex);

// The involution s_alpha on vertices; throws when the local configuration at
// some vertex is not one of the four defined cases.
std::map<std::string, std::string> knop_step(const OrbitGraph& g, int alpha);
std::map<std::string, std::string> knop_action(const OrbitGraph& g, const std::vector<int>& word);

struct ChainStats {
  std::vector<int> word;  // [root(e_l), ..., root(e_1)]
  bool reduced = false;
  Eigen::Index word_length = 0;
  int l_n = 0;
  int l_t = 0;
  Int degree;
  int rank_delta = 0;
};

ChainStats chain_stats(const OrbitGraph& g, const std::vector<OrbitEdge>& path);

// All maximal raising chains (paths from a source vertex to a sink vertex).
std::vector<std::vector<OrbitEdge>> maximal_chains(const OrbitGraph& g);

std::string export_dot(const OrbitGraph& g);

// Isomorphism respecting rank, dim, edge roots and edge types; vertices are
// matched by (rank, dim) which identifies them uniquely in the fixtures.
bool graphs_isomorphic_by_invariants(const OrbitGraph& a, const OrbitGraph& b);

}  // namespace spherical
