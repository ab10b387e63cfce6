#pragma once

#include <map>
#include <vector>

#include "gmf/mf.hpp"
#include "gmf/stabilize.hpp"

namespace gmf {

// A bounded complex of graded free modules with a square-zero nullhomotopy s
// for w: a dg-module over the Koszul algebra K_w = (S<-d> --w--> S).
// terms[i] sits in cohomological degree lo + i. del[i]: terms[i] -> terms[i+1]
// (internal degree 0), s[i]: terms[i] -> terms[i-1] (internal degree d).
struct KwModule {
  RingPtr ring;
  Poly w;
  int d = 0;
  int lo = 0;
  std::vector<GradedFreeModule> terms;
  std::vector<Mat> del, s;

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  bool in_range(int k) const { return k >= lo && k <= hi(); }
  size_t rank(int k) const { return in_range(k) ? terms[k - lo].rank() : 0; }
  GradedFreeModule term(int k) const;
  // zero matrices of the right shape outside the range
  Mat del_at(int k) const;
  Mat s_at(int k) const;
  bool is_zero() const;
};

// Componentwise maps of cohomological degree 0 keyed by the degree.
struct KwMorphism {
  KwModule source, target;
  std::map<int, Mat> phi;
  Mat at(int k) const;
};

// A bounded complex read over S/(w) (w may be zero), e.g. a truncated Bar
// resolution tensored down to S/(w).
struct FreeComplex {
  RingPtr ring;
  Poly w;
  int d = 0;
  int lo = 0;
  std::vector<GradedFreeModule> terms;
  std::vector<Mat> del;  // del[i]: terms[i] -> terms[i+1]
  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
};
// dim of the homology at cohomological degree k, internal degree e, over S/(w)
long long complex_homology(const FreeComplex& c, int k, int e);

// Checks shapes, entry degrees, del^2 = 0, s^2 = 0 and del s + s del = w.
Report validate_kw(const KwModule& m);
void require_valid_kw(const KwModule& m, const char* where);
Report check_kw_morphism(const KwMorphism& phi);

KwModule zero_kw(const RingPtr& ring, const Poly& w, int d);
// K_w as a module over itself: S<-d> in degree -1, S in degree 0, del = w, s = 1.
KwModule koszul_algebra(const RingPtr& ring, const Poly& w, int d);
// F^{-k} of the resolution in degree -k with s = s_1; throws std::invalid_argument
// when some s_n, n >= 2, is nonzero.
KwModule kw_from_homotopies(const HigherHomotopies& h);

// (+ F^{2n}<-nd> --del+s--> + F^{2n-1}<-nd>), terms in descending cohomological degree
MF fold(const KwModule& m);
MFMorphism fold_morphism(const KwMorphism& phi);
// M^{-1} in degree -1, M^0 in degree 0, del = g, s = f
KwModule iota(const MF& m);

// degree-n summands M^i (x) N^{n-i} in descending i; Koszul signs on del and s
KwModule tensor_kw(const KwModule& m, const KwModule& n);
// D(M)^n = hom(M^{-(n+1)}, S)<-d>, del f = (-1)^{n+1} f del, s.f = (-1)^n f s
KwModule kw_dual(const KwModule& m);
// G^n = F^{1-n}<nd> with del_G = -s, s_G = -del: the roles of s and del swapped
// on F[1], so that fold(G) = fold(F)[1].
KwModule swap_ds(const KwModule& m);
// cone^k = Q^k + P^{k+1}, del = [[del_Q, phi], [0, -del_P]], s = [[s_Q, 0], [0, -s_P]]
KwModule kw_cone(const KwMorphism& phi);
KwMorphism kw_identity(const KwModule& m);
KwModule kw_shift(const KwModule& m, int k);  // (F[k])^n = F^{n+k}, del and s times (-1)^k

// Explicit signed permutations realizing fold(tensor_kw(M, N)) ~= tensor_mf(fold M, fold N)
// and fold(kw_dual(M)) ~= dualize(fold M, wdual).
MFMorphism fold_tensor_iso(const KwModule& m, const KwModule& n);
MFMorphism fold_dual_iso(const KwModule& m);

// K_w (x) S[t] (x) M truncated at t^depth with the Bar differential, and the
// augmentation a (x) t^n (x) m -> [n = 0] a.m. Basis of each degree: blocks
// (a, n, j) with a in {1, s}, n ascending, then the basis of M^j.
struct BarTruncation {
  KwModule module;
  KwMorphism comparison;
  int depth = 0;
};
BarTruncation bar_truncate(const KwModule& m, int depth);
// smallest depth for which the truncation is exact in internal degrees <= hi
int bar_required_depth(const KwModule& m, int hi);
// (S[t] (x) M, t^n (x) del m + t^(n-1) (x) s m) truncated at t^depth, read mod w
FreeComplex bar_mod_w(const KwModule& m, int depth);
// the mapping cone of the comparison, as a complex over S
FreeComplex comparison_cone(const BarTruncation& b);

}  // namespace gmf
