#include "spherical/orbit_graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spherical {

std::string edge_type_name(EdgeType t) {
  switch (t) {
    case EdgeType::U: return "U";
    case EdgeType::T: return "T";
    case EdgeType::N: return "N";
  }
  return "?";
}

EdgeType parse_edge_type(const std::string& s) {
  if (s == "U") return EdgeType::U;
  if (s == "T") return EdgeType::T;
  if (s == "N") return EdgeType::N;
  throw std::invalid_argument("unknown edge type '" + s + "'");
}

const OrbitVertex* OrbitGraph::find(const std::string& id) const {
  for (const auto& v : vertices)
    if (v.id == id) return &v;
  return nullptr;
}

GraphReport graph_validate(const OrbitGraph& g) {
  GraphReport rep;
  std::set<std::string> ids;
  for (const auto& v : g.vertices) {
    if (!ids.insert(v.id).second) rep.errors.push_back("duplicate vertex id '" + v.id + "'");
    if (v.dim < v.rank)
      rep.errors.push_back("vertex '" + v.id + "': dim < rank");
    if (v.rank < 0 || v.dim < 0)
      rep.errors.push_back("vertex '" + v.id + "': negative rank or dim");
  }
  std::set<std::pair<std::string, int>> out_slots;
  for (const auto& e : g.edges) {
    const OrbitVertex* a = g.find(e.from);
    const OrbitVertex* b = g.find(e.to);
    if (!a || !b) {
      rep.errors.push_back("edge " + e.from + "->" + e.to + ": unknown endpoint");
      continue;
    }
    if (e.root < 0 || e.root >= g.rs.n)
      rep.errors.push_back("edge " + e.from + "->" + e.to + ": root index out of range");
    if (b->dim != a->dim + 1)
      rep.errors.push_back("edge " + e.from + "->" + e.to + ": dim must raise by one");
    int want = e.type == EdgeType::U ? 0 : 1;
    if (b->rank - a->rank != want)
      rep.errors.push_back("edge " + e.from + "->" + e.to + ": rank step " +
                           std::to_string(b->rank - a->rank) + " invalid for type " +
                           edge_type_name(e.type));
    if (!out_slots.insert({e.from, e.root}).second)
      rep.errors.push_back("vertex '" + e.from + "': two edges at root " + std::to_string(e.root + 1));
  }
  return rep;
}

OrbitGraph parabolic_induce(const OrbitGraph& z, const RootSystem& ambient,
                            const std::vector<int>& parabolic) {
  std::set<int> pset(parabolic.begin(), parabolic.end());
  for (const auto& e : z.edges)
    if (!pset.count(e.root))
      throw std::invalid_argument("parabolic_induce: edge root " + std::to_string(e.root + 1) +
                                  " is not a simple root of the parabolic");

  OrbitGraph out;
  out.rs = ambient;
  std::vector<WeylElement> reps = minimal_coset_reps(ambient, parabolic);

  auto vid = [](const std::string& orbit, const WeylElement& w) {
    return orbit + "@" + word_to_string(w.word);
  };

  for (const auto& w : reps) {
    Eigen::Index len = static_cast<Eigen::Index>(w.word.size());
    for (const auto& v : z.vertices)
      out.vertices.push_back({vid(v.id, w), v.rank, v.dim + static_cast<int>(len)});
  }

  for (const auto& w : reps) {
    for (int alpha = 0; alpha < ambient.n; ++alpha) {
      BetaClass c = classify_beta(ambient, w, alpha, parabolic);
      if (c.kind == BetaClass::CaseA) {
        WeylElement sw = weyl_mul(ambient, alpha, w);
        for (const auto& v : z.vertices)
          out.edges.push_back({vid(v.id, w), vid(v.id, sw), alpha, EdgeType::U});
      } else if (c.kind == BetaClass::CaseB) {
        for (const auto& e : z.edges)
          if (e.root == c.gamma)
            out.edges.push_back({vid(e.from, w), vid(e.to, w), alpha, e.type});
      }
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> detect_nonnormal(const OrbitGraph& g) {
  std::set<std::pair<std::string, std::string>> found;
  for (const auto& e1 : g.edges) {
    if (e1.type == EdgeType::N) continue;  // e1: Y -> Y1, type U or T
    for (const auto& e2 : g.edges) {
      if (e2.type != EdgeType::N || e2.from != e1.from) continue;  // e2: Y -> Y2
      for (const auto& e3 : g.edges) {
        if (e3.type == EdgeType::N) continue;
        if (e3.from == e1.to && e3.root == e2.root)  // P2 raises Y1 -> Y3
          found.insert({e3.to, e2.to});
      }
    }
  }
  return {found.begin(), found.end()};
}

bool multiplicity_free(const OrbitGraph& g, const std::string& vertex) {
  if (!g.find(vertex)) throw std::invalid_argument("unknown vertex '" + vertex + "'");
  std::set<std::string> up;
  std::vector<std::string> work = {vertex};
  up.insert(vertex);
  while (!work.empty()) {
    std::string v = work.back();
    work.pop_back();
    for (const auto& e : g.edges)
      if (e.from == v && up.insert(e.to).second) work.push_back(e.to);
  }
  for (const auto& e : g.edges)
    if (e.type == EdgeType::N && up.count(e.from)) return false;
  return true;
}

std::map<std::string, std::string> knop_step(const OrbitGraph& g, int alpha) {
  if (alpha < 0 || alpha >= g.rs.n) throw std::invalid_argument("knop_step: root index out of range");

  std::map<std::string, std::vector<const OrbitEdge*>> out_e, in_e;
  for (const auto& e : g.edges) {
    if (e.root != alpha) continue;
    out_e[e.from].push_back(&e);
    in_e[e.to].push_back(&e);
  }

  std::map<std::string, std::string> perm;
  auto set_image = [&](const std::string& a, const std::string& b) {
    auto it = perm.find(a);
    if (it != perm.end() && it->second != b)
      throw std::runtime_error("graph not alpha-complete: conflicting images at '" + a + "'");
    perm[a] = b;
  };

  for (const auto& v : g.vertices) {
    const auto oi = out_e.find(v.id);
    const auto ii = in_e.find(v.id);
    const bool has_out = oi != out_e.end();
    const bool has_in = ii != in_e.end();
    if (has_out && has_in)
      throw std::runtime_error("graph not alpha-complete: vertex '" + v.id + "' both raised and a raise target at the same root");
    if (has_out) {
      if (oi->second.size() != 1)
        throw std::runtime_error("graph not alpha-complete: vertex '" + v.id + "' has two raisings at one root");
      const OrbitEdge* e = oi->second[0];
      switch (e->type) {
        case EdgeType::U:
          set_image(v.id, e->to);
          set_image(e->to, v.id);
          break;
        case EdgeType::N:
          set_image(v.id, v.id);
          set_image(e->to, e->to);
          break;
        case EdgeType::T: {
          // The full configuration: exactly two type-T sources into the target.
          const auto ti = in_e.find(e->to);
          std::vector<std::string> sources;
          for (const OrbitEdge* f : ti->second) {
            if (f->type != EdgeType::T)
              throw std::runtime_error("graph not alpha-complete: mixed edge types into '" + e->to + "'");
            sources.push_back(f->from);
          }
          if (sources.size() != 2)
            throw std::runtime_error("graph not alpha-complete: type T target '" + e->to + "' needs exactly two sources");
          set_image(sources[0], sources[1]);
          set_image(sources[1], sources[0]);
          set_image(e->to, e->to);
          break;
        }
      }
    } else if (has_in) {
      // Images were assigned while processing the sources; verify type mix.
      EdgeType t = ii->second[0]->type;
      for (const OrbitEdge* f : ii->second)
        if (f->type != t)
          throw std::runtime_error("graph not alpha-complete: mixed edge types into '" + v.id + "'");
      if (t == EdgeType::U && ii->second.size() != 1)
        throw std::runtime_error("graph not alpha-complete: two type U raisings onto '" + v.id + "'");
    } else {
      set_image(v.id, v.id);  // P fixes the orbit
    }
  }
  return perm;
}

std::map<std::string, std::string> knop_action(const OrbitGraph& g, const std::vector<int>& word) {
  std::map<std::string, std::string> acc;
  for (const auto& v : g.vertices) acc[v.id] = v.id;
  // Word acts as s_{w_0} ... s_{w_{k-1}} applied rightmost first.
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto step = knop_step(g, *it);
    for (auto& [v, img] : acc) img = step.at(img);
  }
  return acc;
}

ChainStats chain_stats(const OrbitGraph& g, const std::vector<OrbitEdge>& path) {
  ChainStats st;
  st.degree = 1;
  if (path.empty()) {
    st.reduced = true;
    return st;
  }
  for (size_t i = 0; i < path.size(); ++i) {
    if (!g.find(path[i].from) || !g.find(path[i].to))
      throw std::invalid_argument("chain_stats: edge endpoint not in graph");
    if (i > 0 && path[i].from != path[i - 1].to)
      throw std::invalid_argument("chain_stats: path is not connected");
    if (path[i].type == EdgeType::N) ++st.l_n;
    if (path[i].type == EdgeType::T) ++st.l_t;
  }
  // w = s_{alpha_l} ... s_{alpha_1}: leftmost letter is the last edge.
  for (size_t i = path.size(); i-- > 0;) st.word.push_back(path[i].root);
  ReducedCheck rc = is_reduced(g.rs, st.word);
  st.reduced = rc.reduced;
  st.word_length = rc.length;
  mpz_ui_pow_ui(st.degree.get_mpz_t(), 2, static_cast<unsigned long>(st.l_n));
  st.rank_delta = g.find(path.back().to)->rank - g.find(path.front().from)->rank;
  return st;
}

std::vector<std::vector<OrbitEdge>> maximal_chains(const OrbitGraph& g) {
  std::set<std::string> has_in;
  for (const auto& e : g.edges) has_in.insert(e.to);
  std::vector<std::vector<OrbitEdge>> out;
  std::vector<OrbitEdge> cur;

  std::function<void(const std::string&)> walk = [&](const std::string& v) {
    bool extended = false;
    for (const auto& e : g.edges)
      if (e.from == v) {
        extended = true;
        cur.push_back(e);
        walk(e.to);
        cur.pop_back();
      }
    if (!extended && !cur.empty()) out.push_back(cur);
  };
  for (const auto& v : g.vertices)
    if (!has_in.count(v.id)) walk(v.id);
  return out;
}

std::string export_dot(const OrbitGraph& g) {
  std::vector<const OrbitVertex*> vs;
  for (const auto& v : g.vertices) vs.push_back(&v);
  std::sort(vs.begin(), vs.end(), [](const OrbitVertex* a, const OrbitVertex* b) {
    if (a->dim != b->dim) return a->dim < b->dim;
    return a->id < b->id;
  });
  std::vector<const OrbitEdge*> es;
  for (const auto& e : g.edges) es.push_back(&e);
  std::sort(es.begin(), es.end(), [](const OrbitEdge* a, const OrbitEdge* b) {
    if (a->from != b->from) return a->from < b->from;
    if (a->to != b->to) return a->to < b->to;
    return a->root < b->root;
  });

  std::ostringstream os;
  os << "digraph orbits {\n  rankdir=BT;\n";
  for (const OrbitVertex* v : vs)
    os << "  \"" << v->id << "\" [label=\"" << v->id << "\\nrk " << v->rank << ", dim " << v->dim
       << "\"];\n";
  for (const OrbitEdge* e : es) {
    os << "  \"" << e->from << "\" -> \"" << e->to << "\" [label=\"" << (e->root + 1) << "\"";
    if (e->type == EdgeType::N) os << ", color=\"black:invis:black\"";
    if (e->type == EdgeType::T) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

bool graphs_isomorphic_by_invariants(const OrbitGraph& a, const OrbitGraph& b) {
  if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) return false;
  std::map<std::pair<int, int>, std::string> map_a, map_b;
  for (const auto& v : a.vertices)
    if (!map_a.emplace(std::make_pair(v.rank, v.dim), v.id).second) return false;
  for (const auto& v : b.vertices)
    if (!map_b.emplace(std::make_pair(v.rank, v.dim), v.id).second) return false;
  std::map<std::string, std::string> a_to_b;
  for (const auto& [key, id] : map_a) {
    auto it = map_b.find(key);
    if (it == map_b.end()) return false;
    a_to_b[id] = it->second;
  }
  std::set<std::string> ea, eb;
  for (const auto& e : a.edges)
    ea.insert(a_to_b[e.from] + ">" + a_to_b[e.to] + "#" + std::to_string(e.root) + edge_type_name(e.type));
  for (const auto& e : b.edges)
    eb.insert(e.from + ">" + e.to + "#" + std::to_string(e.root) + edge_type_name(e.type));
  return ea == eb;
}

}  // namespace spherical
