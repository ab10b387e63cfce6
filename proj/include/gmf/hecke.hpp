#pragma once

#include <map>
#include <string>
#include <vector>

#include "gmf/poly.hpp"
#include "gmf/series.hpp"

namespace gmf {

// One-line notation over 1..m.
using Permutation = std::vector<int>;

Permutation identity_perm(int m);
Permutation simple_reflection(int m, int i);  // s_i swaps i and i+1, 1-based
Permutation perm_mul(const Permutation& a, const Permutation& b);  // (ab)(k) = a(b(k))
Permutation perm_inverse(const Permutation& p);
Permutation longest_element(int m);
int perm_length(const Permutation& p);  // number of inversions
bool is_permutation(const Permutation& p);
std::vector<Permutation> all_permutations(int m);
// reduced word (indices i of s_i) with p = s_{i1} ... s_{ik}
std::vector<int> reduced_word(const Permutation& p);
std::string perm_to_string(const Permutation& p);
Permutation parse_perm(const std::string& s);  // "321" or "3 2 1"

// Element of the Hecke algebra in the basis T_w.
struct HeckeElement {
  int m = 0;
  std::map<Permutation, Laurent> t;

  static HeckeElement T(const Permutation& w);
  static HeckeElement unit(int m);
  bool is_zero() const { return t.empty(); }
  Laurent coeff(const Permutation& w) const;
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  HeckeElement scaled(const Laurent& c) const;
  bool operator==(const HeckeElement& o) const { return m == o.m && t == o.t; }
  bool operator!=(const HeckeElement& o) const { return !(*this == o); }
  std::string to_string() const;
};

// T_w T_s = T_ws if l(ws) > l(w), else (q^2 - 1) T_w + q^2 T_ws
HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b);
HeckeElement hecke_mul_simple(const HeckeElement& a, int i);
// q -> q^-1, T_w -> T_{w^-1}^{-1}
HeckeElement hecke_bar(const HeckeElement& a);

// Kazhdan-Lusztig basis element, H_s = q^-1 (T_e + T_s)
HeckeElement kl_element(const Permutation& w);

using Shape = std::vector<int>;
Shape rsk_shape(const Permutation& w);
bool vanishing_predicate(const Permutation& w, int n);

struct BSWord {
  std::vector<int> word;
  int shift = 0;
};
BSWord parse_bsword(const std::string& text);  // "s1 s2 s1 <3>"
std::string bsword_to_string(const BSWord& w);

// q^{-shift} H_{i1} ... H_{ik}; [X<k>] = q^{-k}[X]
HeckeElement grothendieck_class(const BSWord& w, int m);
HeckeElement grothendieck_class(const std::vector<BSWord>& sum, int m);

struct RelationResult {
  bool equal = false;
  HeckeElement difference;  // lhs - rhs
};
RelationResult verify_relation(const std::vector<BSWord>& lhs, const std::vector<BSWord>& rhs, int m);

struct Relation {
  std::vector<BSWord> lhs, rhs;
};
struct RelationFile {
  int m = 0;
  std::vector<Relation> relations;
};
// {"m":3,"relations":[{"lhs":{"words":["s1 s2 s1","s1"],"shifts":[0,0]},"rhs":{...}}]};
// words may also be integer lists; throws std::invalid_argument on malformed input
RelationFile parse_relation_file(const std::string& json_text);

// S/(relations)<shift> over x1..xm, y1..ym of degree unit
struct BSPresentation {
  RingPtr ring;
  std::vector<Poly> relations;
  int shift = 0;
  // blocks of consecutive strands merged by the word (size >= 2)
  std::vector<std::pair<int, int>> blocks;  // (first strand, size), 1-based
};
// Supported: words whose product is a reduced expression of the longest
// element of a parabolic subgroup (empty word, single letters, distant
// pairs, longest elements); throws std::invalid_argument otherwise.
BSPresentation bs_presentation(const BSWord& w, int m, int unit = 2);

}  // namespace gmf
