#include "spherical/root_system.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "spherical/linalg.hpp"

namespace spherical {

namespace {

VecQ eps(Eigen::Index dim, std::initializer_list<std::pair<int, Rat>> entries) {
  VecQ v = VecQ::Zero(dim);
  for (const auto& [i, c] : entries) v(i) = c;
  return v;
}

Rat dot(const VecQ& a, const VecQ& b) {
  Rat s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

bool vec_eq(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

std::string key(const VecQ& v) { return show(v); }

}  // namespace

Family parse_family(const std::string& s) {
  if (s.size() == 1) {
    switch (s[0]) {
      case 'A': return Family::A;
      case 'B': return Family::B;
      case 'C': return Family::C;
      case 'D': return Family::D;
      case 'E': return Family::E;
      case 'F': return Family::F;
      case 'G': return Family::G;
      default: break;
    }
  }
  throw std::invalid_argument("unknown root-system family '" + s + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
  }
  return "?";
}

Rat RootSystem::pair_coroot(int i, const VecQ& v) const { return dot(simple_coroots[static_cast<size_t>(i)], v); }

VecQ RootSystem::reflect(int i, const VecQ& v) const {
  return v - pair_coroot(i, v) * simple_roots[static_cast<size_t>(i)];
}

VecQ RootSystem::act(const std::vector<int>& word, const VecQ& v) const {
  VecQ r = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = reflect(*it, r);
  return r;
}

VecQ RootSystem::act_inverse(const std::vector<int>& word, const VecQ& v) const {
  VecQ r = v;
  for (int i : word) r = reflect(i, r);
  return r;
}

bool RootSystem::is_positive_root(const VecQ& v) const {
  for (const auto& b : positive_roots)
    if (vec_eq(b, v)) return true;
  return false;
}

int RootSystem::simple_index_of(const VecQ& v) const {
  for (size_t i = 0; i < simple_roots.size(); ++i)
    if (vec_eq(simple_roots[i], v)) return static_cast<int>(i);
  return -1;
}

Eigen::Index RootSystem::length(const std::vector<int>& word) const {
  Eigen::Index len = 0;
  for (const auto& b : positive_roots) {
    VecQ img = act(word, b);
    bool positive = is_positive_root(img);
    if (!positive) ++len;
  }
  return len;
}

int RootSystem::coxeter_m(int i, int j) const {
  if (i == j) return 1;
  Int prod = cartan(i, j) * cartan(j, i);
  if (prod == 0) return 2;
  if (prod == 1) return 3;
  if (prod == 2) return 4;
  if (prod == 3) return 6;
  throw std::logic_error("coxeter_m: invalid cartan product");
}

RootSystem build_root_system(const std::string& family, int n) {
  return build_root_system(parse_family(family), n);
}

RootSystem build_root_system(Family f, int n) {
  RootSystem rs;
  rs.family = f;
  rs.n = n;
  auto bad = [&]() {
    throw std::invalid_argument("invalid family/rank pair " + family_name(f) + std::to_string(n));
  };
  switch (f) {
    case Family::A: {
      if (n < 1) bad();
      rs.ambient = n + 1;
      for (int i = 0; i < n; ++i)
        rs.simple_roots.push_back(eps(rs.ambient, {{i, 1}, {i + 1, -1}}));
      break;
    }
    case Family::B: {
      if (n < 2) bad();
      rs.ambient = n;
      for (int i = 0; i + 1 < n; ++i)
        rs.simple_roots.push_back(eps(rs.ambient, {{i, 1}, {i + 1, -1}}));
      rs.simple_roots.push_back(eps(rs.ambient, {{n - 1, 1}}));
      break;
    }
    case Family::C: {
      if (n < 2) bad();
      rs.ambient = n;
      for (int i = 0; i + 1 < n; ++i)
        rs.simple_roots.push_back(eps(rs.ambient, {{i, 1}, {i + 1, -1}}));
      rs.simple_roots.push_back(eps(rs.ambient, {{n - 1, 2}}));
      break;
    }
    case Family::D: {
      if (n < 3) bad();
      rs.ambient = n;
      for (int i = 0; i + 1 < n; ++i)
        rs.simple_roots.push_back(eps(rs.ambient, {{i, 1}, {i + 1, -1}}));
      rs.simple_roots.push_back(eps(rs.ambient, {{n - 2, 1}, {n - 1, 1}}));
      break;
    }
    case Family::G: {
      if (n != 2) bad();
      rs.ambient = 3;
      rs.simple_roots.push_back(eps(3, {{0, 1}, {1, -1}}));
      rs.simple_roots.push_back(eps(3, {{0, -2}, {1, 1}, {2, 1}}));
      break;
    }
    case Family::F: {
      if (n != 4) bad();
      rs.ambient = 4;
      rs.simple_roots.push_back(eps(4, {{1, 1}, {2, -1}}));
      rs.simple_roots.push_back(eps(4, {{2, 1}, {3, -1}}));
      rs.simple_roots.push_back(eps(4, {{3, 1}}));
      rs.simple_roots.push_back(eps(4, {{0, Rat(1, 2)}, {1, Rat(-1, 2)}, {2, Rat(-1, 2)}, {3, Rat(-1, 2)}}));
      break;
    }
    case Family::E: {
      if (n < 6 || n > 8) bad();
      rs.ambient = 8;
      // Bourbaki numbering inside E8.
      std::vector<VecQ> e8;
      VecQ a1 = VecQ::Zero(8);
      a1(0) = Rat(1, 2);
      a1(7) = Rat(1, 2);
      for (int i = 1; i <= 6; ++i) a1(i) = Rat(-1, 2);
      e8.push_back(a1);
      e8.push_back(eps(8, {{0, 1}, {1, 1}}));
      e8.push_back(eps(8, {{1, 1}, {0, -1}}));
      e8.push_back(eps(8, {{2, 1}, {1, -1}}));
      e8.push_back(eps(8, {{3, 1}, {2, -1}}));
      e8.push_back(eps(8, {{4, 1}, {3, -1}}));
      e8.push_back(eps(8, {{5, 1}, {4, -1}}));
      e8.push_back(eps(8, {{6, 1}, {5, -1}}));
      for (int i = 0; i < n; ++i) rs.simple_roots.push_back(e8[static_cast<size_t>(i)]);
      break;
    }
  }

  for (const auto& a : rs.simple_roots) {
    Rat norm = dot(a, a);
    rs.simple_coroots.push_back((Rat(2) / norm) * a);
  }

  rs.cartan = MatZ(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat p = dot(rs.simple_coroots[static_cast<size_t>(i)], rs.simple_roots[static_cast<size_t>(j)]);
      if (!is_integral(p)) throw std::logic_error("cartan entry not integral");
      rs.cartan(i, j) = p.get_num();
    }
  for (int i = 0; i < n; ++i)
    if (rs.cartan(i, i) != 2) throw std::logic_error("cartan diagonal must be 2");

  // Close the simple roots under simple reflections to enumerate all roots.
  std::map<std::string, VecQ> roots;
  std::queue<VecQ> work;
  for (const auto& a : rs.simple_roots) {
    roots.emplace(key(a), a);
    work.push(a);
  }
  while (!work.empty()) {
    VecQ b = work.front();
    work.pop();
    for (int i = 0; i < n; ++i) {
      VecQ c = rs.reflect(i, b);
      if (roots.emplace(key(c), c).second) work.push(c);
    }
  }

  // Positivity: nonnegative coordinates in the simple-root basis.
  MatQ simples(rs.ambient, n);
  for (int j = 0; j < n; ++j) simples.col(j) = rs.simple_roots[static_cast<size_t>(j)];
  for (const auto& [k, r] : roots) {
    auto coeffs = solve_q(simples, r);
    if (!coeffs) throw std::logic_error("root outside simple-root span");
    bool pos = true, neg = true;
    for (Eigen::Index i = 0; i < coeffs->size(); ++i) {
      if ((*coeffs)(i) < 0) pos = false;
      if ((*coeffs)(i) > 0) neg = false;
    }
    if (pos == neg) throw std::logic_error("root with mixed signs");
    if (pos) rs.positive_roots.push_back(r);
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [](const VecQ& a, const VecQ& b) { return show(a) < show(b); });

  rs.rho = VecQ::Zero(rs.ambient);
  for (const auto& r : rs.positive_roots) rs.rho += r;
  rs.rho /= 2;
  return rs;
}

std::vector<int> canonical_word(const RootSystem& rs, const std::vector<int>& word) {
  for (int i : word)
    if (i < 0 || i >= rs.n) throw std::invalid_argument("word index out of range");
  // Greedy left-descent normal form: repeatedly strip the smallest i with
  // l(s_i w) < l(w), detected by w^{-1}(alpha_i) < 0.
  std::vector<int> w = word;
  std::vector<int> out;
  Eigen::Index len = rs.length(w);
  while (len > 0) {
    int descent = -1;
    for (int i = 0; i < rs.n && descent < 0; ++i) {
      VecQ beta = rs.act_inverse(w, rs.simple_roots[static_cast<size_t>(i)]);
      if (!rs.is_positive_root(beta)) descent = i;
    }
    if (descent < 0) throw std::logic_error("canonical_word: no descent in nontrivial element");
    out.push_back(descent);
    std::vector<int> nw = {descent};
    nw.insert(nw.end(), w.begin(), w.end());
    w = std::move(nw);
    --len;
    // w now represents s_d * (original); keep acting on the shrinking element.
  }
  return out;
}

WeylElement weyl_element(const RootSystem& rs, const std::vector<int>& word) {
  return WeylElement{canonical_word(rs, word)};
}

WeylElement weyl_mul(const RootSystem& rs, int simple, const WeylElement& w) {
  std::vector<int> word = {simple};
  word.insert(word.end(), w.word.begin(), w.word.end());
  return weyl_element(rs, word);
}

ReducedCheck is_reduced(const RootSystem& rs, const std::vector<int>& word) {
  for (int i : word)
    if (i < 0 || i >= rs.n) throw std::invalid_argument("word index out of range");
  Eigen::Index len = rs.length(word);
  return {len == static_cast<Eigen::Index>(word.size()), len};
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, size_t cap) {
  std::map<std::string, WeylElement> seen;
  std::queue<WeylElement> work;
  WeylElement id{};
  seen.emplace(key(rs.act(id.word, rs.rho)), id);
  work.push(id);
  while (!work.empty()) {
    WeylElement w = work.front();
    work.pop();
    for (int i = 0; i < rs.n; ++i) {
      WeylElement nw = weyl_mul(rs, i, w);
      std::string k = key(rs.act(nw.word, rs.rho));
      if (seen.emplace(k, nw).second) {
        if (seen.size() > cap) throw std::runtime_error("Weyl group too large for enumeration");
        work.push(nw);
      }
    }
  }
  std::vector<WeylElement> out;
  for (auto& [k, w] : seen) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

bool in_minimal_coset(const RootSystem& rs, const WeylElement& w, const std::vector<int>& parabolic) {
  for (int p : parabolic) {
    if (p < 0 || p >= rs.n) throw std::invalid_argument("parabolic index out of range");
    VecQ img = rs.act(w.word, rs.simple_roots[static_cast<size_t>(p)]);
    if (!rs.is_positive_root(img)) return false;
  }
  return true;
}

std::vector<WeylElement> minimal_coset_reps(const RootSystem& rs, const std::vector<int>& parabolic) {
  std::vector<WeylElement> out;
  for (const auto& w : enumerate_weyl(rs))
    if (in_minimal_coset(rs, w, parabolic)) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

BetaClass classify_beta(const RootSystem& rs, const WeylElement& w, int alpha,
                        const std::vector<int>& parabolic) {
  if (!in_minimal_coset(rs, w, parabolic))
    throw std::invalid_argument("classify_beta: w is not a minimal coset representative");
  VecQ beta = rs.act_inverse(w.word, rs.simple_roots[static_cast<size_t>(alpha)]);
  int idx = rs.simple_index_of(beta);
  if (idx >= 0 && std::find(parabolic.begin(), parabolic.end(), idx) != parabolic.end())
    return {BetaClass::CaseB, idx, +1};
  VecQ neg = -beta;
  idx = rs.simple_index_of(neg);
  if (idx >= 0 && std::find(parabolic.begin(), parabolic.end(), idx) != parabolic.end())
    return {BetaClass::CaseB, idx, -1};
  if (rs.is_positive_root(beta)) {
    WeylElement sw = weyl_mul(rs, alpha, w);
    if (in_minimal_coset(rs, sw, parabolic)) return {BetaClass::CaseA, -1, 0};
  }
  return {BetaClass::NoRaise, -1, 0};
}

Int rho_pairing(const RootSystem& rs, int alpha, const std::vector<int>& subset) {
  if (alpha < 0 || alpha >= rs.n) throw std::invalid_argument("rho_pairing: bad simple index");
  MatQ simples(rs.ambient, rs.n);
  for (int j = 0; j < rs.n; ++j) simples.col(j) = rs.simple_roots[static_cast<size_t>(j)];
  std::vector<bool> in_subset(static_cast<size_t>(rs.n), false);
  for (int i : subset) {
    if (i < 0 || i >= rs.n) throw std::invalid_argument("rho_pairing: bad subset index");
    in_subset[static_cast<size_t>(i)] = true;
  }
  VecQ rho_i = VecQ::Zero(rs.ambient);
  for (const auto& r : rs.positive_roots) {
    auto coeffs = solve_q(simples, r);
    bool supported = true;
    for (Eigen::Index i = 0; i < coeffs->size(); ++i)
      if ((*coeffs)(i) != 0 && !in_subset[static_cast<size_t>(i)]) { supported = false; break; }
    if (supported) rho_i += r;
  }
  rho_i /= 2;
  Rat p = rs.pair_coroot(alpha, rs.rho - rho_i);
  if (!is_integral(p)) throw std::logic_error("rho_pairing: non-integral value");
  return p.get_num();
}

VecQ fundamental_weight(const RootSystem& rs, int i) {
  // Unique solution inside the span of the simple roots.
  MatQ a(rs.n, rs.n);
  for (int r = 0; r < rs.n; ++r)
    for (int c = 0; c < rs.n; ++c)
      a(r, c) = dot(rs.simple_coroots[static_cast<size_t>(r)], rs.simple_roots[static_cast<size_t>(c)]);
  VecQ b = VecQ::Zero(rs.n);
  b(i) = 1;
  auto x = solve_q(a, b);
  if (!x) throw std::logic_error("fundamental_weight: singular cartan");
  VecQ w = VecQ::Zero(rs.ambient);
  for (int c = 0; c < rs.n; ++c) w += (*x)(c)*rs.simple_roots[static_cast<size_t>(c)];
  return w;
}

std::string word_to_string(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) s += ".";
    s += "s" + std::to_string(word[i] + 1);
  }
  return s;
}

}  // namespace spherical
