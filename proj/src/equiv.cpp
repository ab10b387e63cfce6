#include "gmf/equiv.hpp"

#include <random>
#include <stdexcept>

namespace gmf {

std::optional<MFHomotopy> find_homotopy(const MFMorphism& phi, const MFMorphism& psi) {
  const MF &M = phi.source, &N = phi.target;
  LinearSystem sys(M.ring);
  int d0 = sys.add_unknown(M.m0, N.m1, 0);
  int d1 = sys.add_unknown(M.m1, N.m0, -M.d);
  sys.add_equation({{d0, &N.g, nullptr}, {d1, nullptr, &M.f}}, phi.alpha - psi.alpha);
  sys.add_equation({{d1, &N.f, nullptr}, {d0, nullptr, &M.g}}, phi.beta - psi.beta);
  auto x = sys.solve();
  if (!x) return std::nullopt;
  MFHomotopy h{sys.extract(d0, *x), sys.extract(d1, *x)};
  if (!check_homotopy(phi, psi, h).ok) throw std::logic_error("find_homotopy: solution fails verification");
  return h;
}

std::vector<MFMorphism> morphism_space(const MF& m, const MF& n) {
  LinearSystem sys(m.ring);
  int a = sys.add_unknown(m.m0, n.m0, 0);
  int b = sys.add_unknown(m.m1, n.m1, 0);
  Mat z;
  sys.add_equation({{a, &n.f, nullptr}, {b, nullptr, &m.f, Q(-1)}}, z);
  sys.add_equation({{b, &n.g, nullptr}, {a, nullptr, &m.g, Q(-1)}}, z);
  std::vector<MFMorphism> out;
  for (auto& v : sys.nullspace()) out.push_back({m, n, sys.extract(a, v), sys.extract(b, v)});
  return out;
}

bool constant_part_invertible(const Mat& a) {
  if (a.rows != a.cols) return false;
  std::vector<SparseRow> rows;
  for (size_t i = 0; i < a.rows; ++i) {
    SparseRow r;
    for (size_t j = 0; j < a.cols; ++j) {
      Q c = a(i, j).constant_term();
      if (c != 0) r[static_cast<int>(j)] = c;
    }
    rows.push_back(r);
  }
  return sparse_rank(rows) == a.rows;
}

std::optional<MFMorphism> invert_morphism(const MFMorphism& phi) {
  if (!constant_part_invertible(phi.alpha) || !constant_part_invertible(phi.beta)) return std::nullopt;
  const MF &M = phi.source, &N = phi.target;
  LinearSystem sys(M.ring);
  int a = sys.add_unknown(N.m0, M.m0, 0);
  int b = sys.add_unknown(N.m1, M.m1, 0);
  sys.add_equation({{a, &phi.alpha, nullptr}}, Mat::identity(N.rank0(), M.ring));
  sys.add_equation({{b, &phi.beta, nullptr}}, Mat::identity(N.rank1(), M.ring));
  auto x = sys.solve();
  if (!x) return std::nullopt;
  MFMorphism inv{N, M, sys.extract(a, *x), sys.extract(b, *x)};
  if (inv.alpha * phi.alpha != Mat::identity(M.rank0(), M.ring)) return std::nullopt;
  if (inv.beta * phi.beta != Mat::identity(M.rank1(), M.ring)) return std::nullopt;
  if (!check_morphism(inv).ok) return std::nullopt;
  return inv;
}

std::string to_string(CertificateLevel l) {
  switch (l) {
    case CertificateLevel::different:
      return "different";
    case CertificateLevel::fingerprint_equal:
      return "fingerprint-equal";
    case CertificateLevel::certified:
      return "certified";
  }
  return "?";
}

EquivalenceCertificate find_equivalence(const MF& a, const MF& b, const EquivalenceOptions& opt) {
  EquivalenceCertificate cert;
  Reduction ra = reduce_with_maps(a), rb = reduce_with_maps(b);
  cert.fp_a = {graded_rank(ra.reduced.m0), graded_rank(ra.reduced.m1)};
  cert.fp_b = {graded_rank(rb.reduced.m0), graded_rank(rb.reduced.m1)};
  if (cert.fp_a != cert.fp_b || a.w != b.w || a.d != b.d) {
    cert.note = "fingerprints or potentials differ";
    return cert;
  }
  cert.level = CertificateLevel::fingerprint_equal;
  if (!check_morphism(ra.incl).ok || !check_morphism(ra.proj).ok || !check_morphism(rb.incl).ok ||
      !check_morphism(rb.proj).ok)
    throw std::logic_error("find_equivalence: reduction maps are not morphisms");
  const MF &A = ra.reduced, &B = rb.reduced;
  std::optional<MFMorphism> iso, inv;
  if (A.is_zero()) {
    iso = zero_morphism(A, B);
    inv = zero_morphism(B, A);
  } else {
    auto basis = morphism_space(A, B);
    std::mt19937 rng(opt.seed);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int t = 0; t < opt.attempts && !inv; ++t) {
      MFMorphism c = zero_morphism(A, B);
      for (auto& m : basis) {
        Q k = coef(rng);
        if (k == 0) continue;
        c.alpha += k * m.alpha;
        c.beta += k * m.beta;
      }
      if (auto i = invert_morphism(c)) {
        iso = c;
        inv = i;
      }
    }
  }
  if (!inv) {
    cert.note = "no isomorphism between reduced forms found by random search";
    return cert;
  }
  cert.forward = compose(rb.incl, compose(*iso, ra.proj));
  cert.backward = compose(ra.incl, compose(*inv, rb.proj));
  if (!check_morphism(*cert.forward).ok || !check_morphism(*cert.backward).ok)
    throw std::logic_error("find_equivalence: composed maps are not morphisms");
  cert.level = CertificateLevel::certified;
  if (opt.check_composites && a.rank0() + a.rank1() <= opt.composite_rank_limit &&
      b.rank0() + b.rank1() <= opt.composite_rank_limit) {
    auto ba = compose(*cert.backward, *cert.forward);
    auto ab = compose(*cert.forward, *cert.backward);
    bool h1 = find_homotopy(ba, identity_morphism(a)).has_value();
    bool h2 = find_homotopy(ab, identity_morphism(b)).has_value();
    if (!h1 || !h2) {
      cert.level = CertificateLevel::fingerprint_equal;
      cert.note = "composites not homotopic to identities";
      return cert;
    }
    cert.composites_checked = true;
  }
  cert.note = "isomorphism of reduced forms composed with reduction maps";
  return cert;
}

}  // namespace gmf
