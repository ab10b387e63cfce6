#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gmf/mf.hpp"

namespace gmf {

// Solve g'D0 + D1 f = alpha - alpha', f'D1 + D0 g = beta - beta'. Entry degrees
// are forced by generator degrees, so the system is finite and none-found is
// definitive.
std::optional<MFHomotopy> find_homotopy(const MFMorphism& phi, const MFMorphism& psi);

// Basis of the rational vector space of degree-0 morphisms M -> N.
std::vector<MFMorphism> morphism_space(const MF& m, const MF& n);

// Two-sided inverse of an isomorphism, or nullopt.
std::optional<MFMorphism> invert_morphism(const MFMorphism& phi);

// constant part of a degree-0 map is invertible (graded Nakayama)
bool constant_part_invertible(const Mat& a);

enum class CertificateLevel { different, fingerprint_equal, certified };
std::string to_string(CertificateLevel l);

struct EquivalenceCertificate {
  CertificateLevel level = CertificateLevel::different;
  MFFingerprint fp_a, fp_b;
  // present when certified: morphisms between the original factorizations
  std::optional<MFMorphism> forward, backward;
  // explicit homotopies backward*forward ~ id and forward*backward ~ id, when checked
  bool composites_checked = false;
  std::string note;
};

struct EquivalenceOptions {
  unsigned seed = 12345;
  int attempts = 4;
  bool check_composites = true;  // search homotopies to the identity on the originals
  size_t composite_rank_limit = 48;
};

EquivalenceCertificate find_equivalence(const MF& a, const MF& b, const EquivalenceOptions& opt = {});

}  // namespace gmf
