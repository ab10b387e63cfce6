#include <doctest.h>

#include <random>

#include "gmf/equiv.hpp"
#include "gmf/mf.hpp"

using namespace gmf;

namespace {

RingPtr xy_ring() { return make_ring({"x", "y"}, {1, 1}); }

MF kxy() {
  RingPtr r = xy_ring();
  return koszul_factorization({Poly::var(r, "x")}, {Poly::var(r, "y")});
}

Poly pi_xy(const RingPtr& r, int n) {
  Poly x = Poly::var(r, "x"), y = Poly::var(r, "y"), p(r);
  for (int i = 0; i <= n; ++i) p += x.pow(i) * y.pow(n - i);
  return p;
}

Poly random_hom(const RingPtr& r, int deg, std::mt19937& rng) {
  Poly p(r);
  if (deg < 0) return p;
  std::uniform_int_distribution<int> coef(-2, 2);
  for (auto& m : r->monomials(deg)) p.add_term(m, coef(rng));
  return p;
}

// random Koszul factorization of potential degree d in l factors
MF random_koszul(const RingPtr& r, int l, int d, std::mt19937& rng) {
  std::vector<Poly> xs, ys;
  std::uniform_int_distribution<int> split(1, d - 1);
  for (int i = 0; i < l; ++i) {
    int a = split(rng);
    Poly x = random_hom(r, a, rng), y = random_hom(r, d - a, rng);
    if (x.is_zero()) x = Poly::var(r, 0).pow(a);
    if (y.is_zero()) y = Poly::var(r, 1).pow(d - a);
    xs.push_back(x);
    ys.push_back(y);
  }
  return koszul_factorization(xs, ys);
}

}  // namespace

TEST_CASE("validation of elementary factorizations") {
  MF k = kxy();
  CHECK(validate_mf(k).ok);
  CHECK(k.m0.shifts == std::vector<int>{0});
  CHECK(k.m1.shifts == std::vector<int>{-1});
  CHECK(k.f(0, 0) == Poly::var(k.ring, "y"));
  CHECK(k.g(0, 0) == Poly::var(k.ring, "x"));
  MF bad = k;
  bad.w = Poly::var(k.ring, "x").pow(2);
  Report rep = validate_mf(bad);
  CHECK(!rep.ok);
  CHECK(!rep.problems.empty());

  RingPtr r = xy_ring();
  Poly x = Poly::var(r, "x"), y = Poly::var(r, "y");
  MF u = koszul_factorization({x - y}, {pi_xy(r, 2)});
  CHECK(validate_mf(u).ok);
  CHECK(u.w == x.pow(3) - y.pow(3));
  CHECK(u.d == 3);
}

TEST_CASE("two-factor Koszul matches the unknot matrices") {
  RingPtr r = xy_ring();
  Poly x = Poly::var(r, "x"), y = Poly::var(r, "y"), p = pi_xy(r, 2);
  MF k = koszul_factorization({y - x, x - y}, {p, p});
  CHECK(validate_mf(k).ok);
  CHECK(k.w.is_zero());
  CHECK(k.d == 3);
  // odd part: up to the order of the two odd generators, g = [[y-x, x-y], [-pi, pi]]
  Mat g_lit(2, 2, r), f_lit(2, 2, r);
  g_lit(0, 0) = y - x;
  g_lit(0, 1) = x - y;
  g_lit(1, 0) = -p;
  g_lit(1, 1) = p;
  f_lit(0, 0) = p;
  f_lit(0, 1) = y - x;
  f_lit(1, 0) = p;
  f_lit(1, 1) = y - x;
  MF lit{r, k.w, 3, GradedFreeModule{r, {0, 1}}, GradedFreeModule{r, {-1, -1}}, f_lit, g_lit};
  CHECK(validate_mf(lit).ok);
  CHECK(fingerprint(lit) == fingerprint(k));
  auto cert = find_equivalence(k, lit);
  CHECK(cert.level == CertificateLevel::certified);
}

TEST_CASE("tensor product") {
  RingPtr r = make_ring({"a", "b", "c", "e"}, {1, 1, 1, 1});
  Poly a = Poly::var(r, "a"), b = Poly::var(r, "b"), c = Poly::var(r, "c"), e = Poly::var(r, "e");
  MF k1 = koszul_factorization({a}, {b}), k2 = koszul_factorization({c}, {e});
  CHECK(same_data(tensor_mf(k1, k2), koszul_factorization({a, c}, {b, e})));

  MF unit = unit_mf(r, 2);
  MF t = tensor_mf(k1, unit);
  CHECK(same_data(t, k1));
  CHECK(same_data(tensor_mf(unit, k1), k1));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    MF m = random_koszul(r, 1 + trial % 2, 3, rng);
    MF n = random_koszul(r, 1, 3, rng);
    MF tn = tensor_mf(m, n);
    CHECK(validate_mf(tn).ok);
    CHECK(tn.w == m.w + n.w);
  }
}

TEST_CASE("shifts") {
  MF k = kxy();
  CHECK(same_data(shift_mf(k, 0, 0), k));
  CHECK(same_data(shift_mf(k, 2, 0), shift_mf(k, 0, 2)));
  MF s1 = shift_mf(k, 1, 0);
  // [1]: S<-1><d> --(-x)--> S --(-y)--> ...
  CHECK(s1.m0.shifts == std::vector<int>{1});
  CHECK(s1.m1.shifts == std::vector<int>{0});
  CHECK(s1.f(0, 0) == -Poly::var(k.ring, "x"));
  CHECK(s1.g(0, 0) == -Poly::var(k.ring, "y"));
  CHECK(validate_mf(s1).ok);
  CHECK(same_data(shift_mf(s1, -1, 0), k));

  RingPtr r = make_ring({"a", "b", "c"}, {1, 1, 2});
  std::mt19937 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    MF m = random_koszul(r, 2, 4, rng);
    CHECK(same_data(shift_mf(m, 2, 0), shift_mf(m, 0, m.d)));
    CHECK(same_data(shift_mf(shift_mf(m, 3, 1), -3, -1), m));
  }
}

TEST_CASE("dualities on {x,y}") {
  MF k = kxy();
  RingPtr r = k.ring;
  Poly x = Poly::var(r, "x"), y = Poly::var(r, "y");
  CHECK(same_data(dualize(k, DualKind::wdual), shift_mf(k, -2, 1)));
  CHECK(same_data(dualize(k, DualKind::star), shift_mf(koszul_factorization({x}, {-y}), -1, 1)));
  CHECK(same_data(dualize(dualize(k, DualKind::sigma), DualKind::sigma), k));
  MF ss = dualize(dualize(k, DualKind::star), DualKind::star);
  CHECK(ss.w == k.w);
  CHECK(fingerprint(ss) == fingerprint(k));
}

TEST_CASE("cones") {
  MF k = kxy();
  MF c = cone_mf(identity_morphism(k));
  CHECK(validate_mf(c).ok);
  CHECK(reduce_mf(c).is_zero());
  MF z = cone_mf(zero_morphism(k, k));
  CHECK(same_data(z, direct_sum(k, shift_mf(k, 1, 0))));
}

TEST_CASE("hom factorization") {
  MF k = kxy();
  MF h = hom_factorization(k, k);
  CHECK(validate_mf(h).ok);
  CHECK(h.w.is_zero());
  MF u = unit_mf(k.ring, k.d);
  CHECK(same_data(hom_factorization(u, k), k));

  RingPtr r = make_ring({"a", "b", "c"}, {1, 1, 1});
  std::mt19937 rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    MF m = random_koszul(r, 1 + trial % 2, 3, rng), n = random_koszul(r, 2, 3, rng);
    MF hm = hom_factorization(m, n), sm = tensor_mf(dualize(m, DualKind::star), n);
    CHECK(validate_mf(hm).ok);
    CHECK(graded_rank(hm.m0) == graded_rank(sm.m0));
    CHECK(graded_rank(hm.m1) == graded_rank(sm.m1));
  }
}

TEST_CASE("morphisms and homotopies") {
  MF k = kxy();
  CHECK(check_morphism(identity_morphism(k)).ok);
  auto h = find_homotopy(identity_morphism(k), identity_morphism(k));
  REQUIRE(h.has_value());
  CHECK(h->D0.is_zero());
  CHECK(h->D1.is_zero());
  CHECK(!find_homotopy(identity_morphism(k), zero_morphism(k, k)).has_value());

  // the identity of a contractible factorization is nullhomotopic
  MF c = cone_mf(identity_morphism(k));
  CHECK(find_homotopy(identity_morphism(c), zero_morphism(c, c)).has_value());
}

TEST_CASE("reduction and fingerprints") {
  MF k = kxy();
  CHECK(fingerprint(zero_mf(k.ring, k.w, k.d)) == MFFingerprint{});
  MFFingerprint fk = fingerprint(k);
  CHECK(fk.rank0 == LaurentInt::mono(0));
  CHECK(fk.rank1 == LaurentInt::mono(1));
  MF big = direct_sum(k, cone_mf(identity_morphism(k)));
  CHECK(fingerprint(big) == fk);

  RingPtr r = xy_ring();
  Poly x = Poly::var(r, "x"), y = Poly::var(r, "y");
  Poly w = x * x * y;
  MF one_w = koszul_factorization({Poly(r, 1)}, {w});
  CHECK(validate_mf(one_w).ok);
  CHECK(reduce_mf(one_w).is_zero());

  Reduction red = reduce_with_maps(big);
  CHECK(check_morphism(red.incl).ok);
  CHECK(check_morphism(red.proj).ok);
  auto pi = compose(red.proj, red.incl);
  CHECK(pi.alpha == Mat::identity(red.reduced.rank0(), r));
  MF rr = reduce_mf(red.reduced);
  CHECK(same_data(rr, red.reduced));
  auto cert = find_equivalence(big, k);
  CHECK(cert.level == CertificateLevel::certified);
  CHECK(cert.composites_checked);
}

TEST_CASE("folded cohomology of the unknot complex") {
  for (int n = 2; n <= 3; ++n) {
    RingPtr r = xy_ring();
    Poly x = Poly::var(r, "x"), y = Poly::var(r, "y"), p = pi_xy(r, n);
    MF direct = koszul_factorization({y - x, x - y}, {p, p});
    auto h = folded_cohomology(direct, -2, 2 * n + 4);
    LaurentInt expect;
    for (int i = 1; i <= n; ++i) expect += LaurentInt::mono(i);
    CHECK(h.H0 == LaurentInt{});
    CHECK(h.H1 == expect);
  }
  MF k = kxy();
  auto z = folded_cohomology(zero_mf(k.ring, Poly(k.ring), 2), 0, 4);
  CHECK(z.H0 == LaurentInt{});
  CHECK(z.H1 == LaurentInt{});
}
