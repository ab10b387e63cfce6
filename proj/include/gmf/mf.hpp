#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gmf/module.hpp"

namespace gmf {

// M0 --f--> M1 --g--> M0 with f of degree d, g of degree 0, gf = w, fg = w.
// d is stored because w may be zero.
struct MF {
  RingPtr ring;
  Poly w;
  int d = 0;
  GradedFreeModule m0, m1;
  Mat f, g;

  GradedMatrix f_graded() const { return {m0, m1, d, f}; }
  GradedMatrix g_graded() const { return {m1, m0, 0, g}; }
  size_t rank0() const { return m0.rank(); }
  size_t rank1() const { return m1.rank(); }
  bool is_zero() const { return m0.rank() == 0 && m1.rank() == 0; }
};

struct Report {
  bool ok = true;
  std::vector<std::string> problems;
  void fail(std::string why) {
    ok = false;
    problems.push_back(std::move(why));
  }
  std::string to_string() const;
};

struct MFMorphism {
  MF source, target;
  Mat alpha, beta;  // M0 -> N0, M1 -> N1, degree 0
};

struct MFHomotopy {
  Mat D0, D1;  // M0 -> N1 degree 0, M1 -> N0 degree -d
};

struct MFFingerprint {
  PoincareSeries rank0, rank1;
  bool operator==(const MFFingerprint& o) const { return rank0 == o.rank0 && rank1 == o.rank1; }
  bool operator!=(const MFFingerprint& o) const { return !(*this == o); }
  std::string to_string() const;
};

enum class DualKind { star, wdual, sigma };

Report validate_mf(const MF& m);
void require_valid(const MF& m, const char* where);

MF zero_mf(const RingPtr& ring, const Poly& w, int d);
// S -> 0 -> S with potential zero, the tensor unit
MF unit_mf(const RingPtr& ring, int d);
MF koszul_factorization(const std::vector<Poly>& xs, const std::vector<Poly>& ys);
MF direct_sum(const MF& a, const MF& b);
MF tensor_mf(const MF& m, const MF& n);
MF shift_mf(const MF& m, int cohomological, int internal);
MF cone_mf(const MFMorphism& phi);
MF dualize(const MF& m, DualKind kind);
MF hom_factorization(const MF& m, const MF& n);
MF change_ring(const MF& m, const RingPtr& target);

Report check_morphism(const MFMorphism& phi);
MFMorphism identity_morphism(const MF& m);
MFMorphism zero_morphism(const MF& m, const MF& n);
MFMorphism compose(const MFMorphism& second, const MFMorphism& first);
Report check_homotopy(const MFMorphism& phi, const MFMorphism& psi, const MFHomotopy& h);

// Literal equality of normalized data (ring, potential, d, shifts, matrices).
bool same_data(const MF& a, const MF& b);
// Search for generator permutations (no signs) making the data literally equal.
std::optional<std::pair<std::vector<size_t>, std::vector<size_t>>> same_up_to_reordering(const MF& a, const MF& b);
MF permute_mf(const MF& m, const std::vector<size_t>& p0, const std::vector<size_t>& p1);

// The reduced factorization with comparison morphisms incl: red -> M and
// proj: M -> red, proj o incl = id.
struct Reduction {
  MF reduced;
  MFMorphism incl, proj;
};
Reduction reduce_with_maps(const MF& m);
MF reduce_mf(const MF& m);
MFFingerprint fingerprint(const MF& m);

// Cohomology of the 2-periodic complex M (x) S/(w) in internal degrees [lo, hi].
// H0 = ker f / im g on M0, H1 = ker g / im f on M1.
struct FoldedCohomology {
  PoincareSeries H0, H1;
};
FoldedCohomology folded_cohomology(const MF& m, int lo, int hi);
// (dim H0_e, dim H1_e) in a single degree
std::pair<long long, long long> folded_cohomology_degree(const MF& m, int e);

// dim of ker(A)/im(B) mod w in one degree, for maps B: X -> Y, A: Y -> Z
long long homology_mod_w(const GradedMatrix& a, const GradedMatrix& b, const Poly& w, int dw, int e);

std::string mf_to_string(const MF& m);

}  // namespace gmf
