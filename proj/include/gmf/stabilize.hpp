#pragma once

#include <array>
#include <optional>
#include <vector>

#include "gmf/mf.hpp"

namespace gmf {

// Bounded free resolution F^0 <- F^-1 <- ... <- F^-N. terms[k] = F^{-k};
// diffs[k-1] : F^{-k} -> F^{-k+1}, degree 0.
struct FreeResolution {
  RingPtr ring;
  std::vector<GradedFreeModule> terms;
  std::vector<Mat> diffs;
  int length() const { return static_cast<int>(terms.size()) - 1; }
  const Mat& diff(int k) const { return diffs[k - 1]; }
};

Report validate_resolution(const FreeResolution& f);

// s[n][k] : F^{-k} -> F^{-(k+2n-1)} of internal degree n*d, for n >= 1 and
// k + 2n - 1 <= N. Higher s_n beyond s.size()-1 are zero.
struct HigherHomotopies {
  FreeResolution res;
  Poly w;
  int d = 0;
  std::vector<std::vector<Mat>> s;
  // s_n on F^{-k}; n = 0 is the differential; nullptr when zero or out of range
  const Mat* map(int n, int k) const;
};

// s0 s1 + s1 s0 = w and sum_{p+q=n} s_p s_q = 0 for every n where some term can be nonzero
Report validate_homotopies(const HigherHomotopies& h);

// Koszul resolution of S/(xs). Basis of F^{-k} = exterior k-subsets, ordered
// as they occur in the iterated tensor product of the one-variable complexes.
FreeResolution koszul_resolution(const std::vector<Poly>& xs);
std::vector<std::vector<int>> koszul_subsets(size_t l, size_t k);
// square-zero homotopies s1 = mult(sum y_i e_i), s_n = 0 for n >= 2
HigherHomotopies koszul_homotopies(const std::vector<Poly>& xs, const std::vector<Poly>& ys);

// Solves s1 and then s_n inductively by degreewise linear algebra. depth < 0
// selects N/2 + 1. Throws std::invalid_argument when w does not annihilate the
// cokernel of F^-1 -> F^0.
HigherHomotopies find_higher_homotopies(const FreeResolution& f, const Poly& w, int d, int depth = -1);

// Truncation of (D . (x) F, sum t^(m-k) (x) s_k) to C^0..C^{-length}, to be read mod w.
struct EisenbudResolution {
  RingPtr ring;
  Poly w;
  int d = 0;
  std::vector<GradedFreeModule> terms;  // terms[c] = C^{-c}
  std::vector<Mat> diffs;               // diffs[c-1] : C^{-c} -> C^{-c+1}
};
EisenbudResolution eisenbud_resolution(const HigherHomotopies& h, int length);
// consecutive composites vanish mod w
bool eisenbud_composites_vanish(const EisenbudResolution& e);
// dim of homology mod w at C^{-c} in internal degree e, for 1 <= c < length
long long eisenbud_homology(const EisenbudResolution& r, int c, int e);
// dim of (C^0 / im C^-1) mod w in internal degree e
long long eisenbud_cokernel(const EisenbudResolution& r, int e);

// (+F^{-2n}<dn>, +F^{-(2n+1)}<dn>, sum s_n)
MF stabilize_module(const HigherHomotopies& h);

// ys with w = sum x_i y_i by substituting a linear variable of each x_i in turn;
// nullopt when some x_i has no such variable or w is not in the ideal
std::optional<std::vector<Poly>> telescoping_coefficients(const std::vector<Poly>& xs, const Poly& w);
// homogeneous ys by linear solve; nullopt when w is not in the ideal
std::optional<std::vector<Poly>> ideal_coefficients(const std::vector<Poly>& xs, const Poly& w);
// koszul_factorization(xs, ys); regularity of xs is the caller's responsibility
MF stabilize_ci(const std::vector<Poly>& xs, const Poly& w);

// Length-2 Koszul factorization in the basis (e1, e2) / (1, e1e2).
MF koszul2(const std::array<Poly, 2>& x, const std::array<Poly, 2>& y);

// Data of a module map S/(x) -> S/(xt) given by multiplication with alpha:
// alpha x_i = sum_j lambda[i][j] xt_j, and mu, quotient as in the morphism
// formula below.
struct MorphismStabData {
  std::array<Poly, 2> x, xt, y, yt;
  Poly alpha;
  std::array<std::array<Poly, 2>, 2> lambda;
  Poly mu, discriminant_quotient;
};
// Computes mu and the discriminant quotient and checks every identity;
// throws std::invalid_argument naming the failed one.
MorphismStabData make_morphism_stab_data(const std::array<Poly, 2>& x, const std::array<Poly, 2>& xt,
                                         const std::array<Poly, 2>& y, const std::array<Poly, 2>& yt,
                                         const Poly& alpha, const std::array<std::array<Poly, 2>, 2>& lambda);
// koszul2(x, y) -> koszul2(xt, yt)<deg alpha>: odd [[l11, l21], [l12, l22]], even [[alpha, 0], [mu, q]]
MFMorphism stabilize_morphism_ci2(const MorphismStabData& data);

// KR(Gamma_0)<-1> and KR(Gamma_1)<-1> on x1, x2, y1, y2 of degree 2, and the
// chi-morphisms written out entrywise.
struct ChiMorphisms {
  MF gamma0, gamma1;
  MFMorphism chi0, chi1;  // chi0: gamma1 -> gamma0<2>, chi1: gamma0 -> gamma1
  MorphismStabData data0, data1;
};
ChiMorphisms chi_morphisms(int n, const Q& lambda);

// s_n(x (x) y) = s_n(x) (x) y + (-1)^{|x|} x (x) s'_n(y); potentials add
HigherHomotopies tensor_homotopies(const HigherHomotopies& a, const HigherHomotopies& b);

}  // namespace gmf
