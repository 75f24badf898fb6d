#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spherical/numeric.hpp"

// Root systems in the standard epsilon-coordinate realizations, with the
// Weyl-group machinery needed for orbit graphs and canonical divisors:
// reduced words, minimal coset representatives, raising classification and
// rho / rho_I coroot pairings.

namespace spherical {

enum class Family { A, B, C, D, E, F, G };

Family parse_family(const std::string& s);
std::string family_name(Family f);

struct RootSystem {
  Family family;
  int n = 0;             // rank
  Eigen::Index ambient = 0;
  std::vector<VecQ> simple_roots;    // size n
  std::vector<VecQ> simple_coroots;  // alpha^vee = 2 alpha / (alpha, alpha)
  MatZ cartan;                        // <alpha_i^vee, alpha_j>
  std::vector<VecQ> positive_roots;
  VecQ rho;

  Rat pair_coroot(int i, const VecQ& v) const;  // <alpha_i^vee, v>
  VecQ reflect(int i, const VecQ& v) const;     // s_i(v)
  VecQ act(const std::vector<int>& word, const VecQ& v) const;      // s_{w_0} ... s_{w_k-1}(v), rightmost first
  VecQ act_inverse(const std::vector<int>& word, const VecQ& v) const;
  bool is_positive_root(const VecQ& v) const;
  int simple_index_of(const VecQ& v) const;     // -1 when v is not simple
  Eigen::Index length(const std::vector<int>& word) const;  // Coxeter length of the product
  int coxeter_m(int i, int j) const;            // order of s_i s_j
};

RootSystem build_root_system(Family f, int n);
RootSystem build_root_system(const std::string& family, int n);

// Canonical form: the lexicographically minimal reduced word.
std::vector<int> canonical_word(const RootSystem& rs, const std::vector<int>& word);

struct WeylElement {
  std::vector<int> word;  // canonical
  bool operator==(const WeylElement& o) const { return word == o.word; }
  bool operator<(const WeylElement& o) const {
    if (word.size() != o.word.size()) return word.size() < o.word.size();
    return word < o.word;
  }
};

WeylElement weyl_element(const RootSystem& rs, const std::vector<int>& word);
WeylElement weyl_mul(const RootSystem& rs, int simple, const WeylElement& w);  // s_i * w

struct ReducedCheck {
  bool reduced;
  Eigen::Index length;
};
ReducedCheck is_reduced(const RootSystem& rs, const std::vector<int>& word);

// All of W as canonical elements; throws above the cap (desk-scale tool).
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, size_t cap = 100000);

bool in_minimal_coset(const RootSystem& rs, const WeylElement& w, const std::vector<int>& parabolic);
std::vector<WeylElement> minimal_coset_reps(const RootSystem& rs, const std::vector<int>& parabolic);

struct BetaClass {
  enum Kind { CaseA, CaseB, NoRaise } kind;
  int gamma = -1;   // CaseB: simple index of the parabolic
  int sign = 0;     // CaseB: +1 when beta itself is the simple root, -1 for -beta
};
BetaClass classify_beta(const RootSystem& rs, const WeylElement& w, int alpha,
                        const std::vector<int>& parabolic);

// <alpha^vee, rho - rho_I> for a simple root alpha and a subset I of simples.
Int rho_pairing(const RootSystem& rs, int alpha, const std::vector<int>& subset);

VecQ fundamental_weight(const RootSystem& rs, int i);

std::string word_to_string(const std::vector<int>& word);  // "e" or e.g. "s2.s1"

}  // namespace spherical
