#include <doctest.h>

#include "gmf/equiv.hpp"
#include "gmf/stabilize.hpp"
#include "gmf/symfun.hpp"

using namespace gmf;

namespace {

Poly geometric(const Poly& x, const Poly& y, int n) {
  Poly p(x.ring());
  for (int i = 0; i <= n; ++i) p += x.pow(i) * y.pow(n - i);
  return p;
}

}  // namespace

TEST_CASE("Koszul homotopies") {
  RingPtr r = make_ring({"x", "q"}, {1, 2});
  Poly x = Poly::var(r, "x"), q = Poly::var(r, "q");
  HigherHomotopies h = koszul_homotopies({x}, {q});
  CHECK(validate_homotopies(h).ok);
  REQUIRE(h.map(1, 0) != nullptr);
  CHECK((*h.map(1, 0))(0, 0) == q);
  HigherHomotopies g = find_higher_homotopies(h.res, x * q, 3);
  CHECK((*g.map(1, 0))(0, 0) == q);

  RingPtr r4 = make_ring({"x1", "x2", "y1", "y2"}, {1, 1, 2, 2});
  Poly x1 = Poly::var(r4, 0), x2 = Poly::var(r4, 1), y1 = Poly::var(r4, 2), y2 = Poly::var(r4, 3);
  HigherHomotopies k2 = koszul_homotopies({x1, x2}, {y1, y2});
  CHECK(validate_homotopies(k2).ok);
  CHECK(((*k2.map(1, 1)) * (*k2.map(1, 0))).is_zero());
  CHECK(same_data(stabilize_module(k2), koszul_factorization({x1, x2}, {y1, y2})));

  RingPtr r6 = make_ring({"a", "b", "c", "u", "v", "t"}, {1, 1, 1, 1, 1, 1});
  std::vector<Poly> xs{Poly::var(r6, 0), Poly::var(r6, 1), Poly::var(r6, 2)};
  std::vector<Poly> ys{Poly::var(r6, 3), Poly::var(r6, 4), Poly::var(r6, 5)};
  HigherHomotopies k3 = koszul_homotopies(xs, ys);
  CHECK(validate_homotopies(k3).ok);
  MF s3 = stabilize_module(k3), t3 = koszul_factorization(xs, ys);
  CHECK(same_up_to_reordering(s3, t3).has_value());
}

TEST_CASE("generic higher homotopies") {
  RingPtr r = make_ring({"x1", "x2"}, {1, 1});
  Poly x1 = Poly::var(r, 0), x2 = Poly::var(r, 1);
  FreeResolution F = koszul_resolution({x1, x2});
  CHECK(validate_resolution(F).ok);
  Poly w = x1.pow(3) + x2.pow(3);
  HigherHomotopies h = find_higher_homotopies(F, w, 3);
  CHECK(validate_homotopies(h).ok);
  MF m = stabilize_module(h);
  CHECK(validate_mf(m).ok);
  CHECK(fingerprint(m) == fingerprint(koszul_factorization({x1, x2}, {x1 * x1, x2 * x2})));

  RingPtr r3 = make_ring({"x1", "x2", "z"}, {1, 1, 1});
  FreeResolution G = koszul_resolution({Poly::var(r3, 0), Poly::var(r3, 1)});
  CHECK_THROWS_AS(find_higher_homotopies(G, Poly::var(r3, 2).pow(3), 3), std::invalid_argument);
}

TEST_CASE("Eisenbud resolution") {
  RingPtr r = make_ring({"x", "y"}, {1, 1});
  Poly x = Poly::var(r, 0), y = Poly::var(r, 1);
  FreeResolution F = koszul_resolution({x - y});
  HigherHomotopies h = find_higher_homotopies(F, x.pow(3) - y.pow(3), 3);
  EisenbudResolution e = eisenbud_resolution(h, 4);
  CHECK(e.terms[0].shifts == std::vector<int>{0});
  CHECK(e.terms[1].shifts == std::vector<int>{-1});
  CHECK(e.terms[2].shifts == std::vector<int>{-3});
  CHECK(e.terms[3].shifts == std::vector<int>{-4});
  CHECK(e.diffs[0](0, 0) == x - y);
  CHECK(e.diffs[1](0, 0) == geometric(x, y, 2));
  CHECK(e.diffs[2](0, 0) == x - y);
  CHECK(eisenbud_composites_vanish(e));
  for (int c = 1; c <= 3; ++c)
    for (int deg = 0; deg <= 8; ++deg) CHECK(eisenbud_homology(e, c, deg) == 0);
  // S/(x-y) has one basis element per degree
  for (int deg = 0; deg <= 6; ++deg) CHECK(eisenbud_cokernel(e, deg) == 1);

  RingPtr r2 = make_ring({"x1", "x2"}, {1, 1});
  Poly x1 = Poly::var(r2, 0), x2 = Poly::var(r2, 1);
  HigherHomotopies h2 = find_higher_homotopies(koszul_resolution({x1, x2}), x1.pow(3) + x2.pow(3), 3);
  EisenbudResolution e2 = eisenbud_resolution(h2, 6);
  CHECK(eisenbud_composites_vanish(e2));
  for (int c = 1; c <= 4; ++c)
    for (int deg = 0; deg <= 10; ++deg) CHECK(eisenbud_homology(e2, c, deg) == 0);
  CHECK(eisenbud_cokernel(e2, 0) == 1);
  for (int deg = 1; deg <= 6; ++deg) CHECK(eisenbud_cokernel(e2, deg) == 0);
}

TEST_CASE("stabilization of complete intersections") {
  RingPtr r = make_ring({"x", "y"}, {1, 1});
  Poly x = Poly::var(r, 0), y = Poly::var(r, 1);
  for (int n = 1; n <= 4; ++n) {
    MF s = stabilize_ci({x - y}, x.pow(n + 1) - y.pow(n + 1));
    CHECK(same_data(s, koszul_factorization({x - y}, {geometric(x, y, n)})));
  }
  CHECK_THROWS_AS(stabilize_ci({x - y}, x.pow(3)), std::invalid_argument);

  RingPtr rs = symmetric_ring(2, 1);
  std::vector<Poly> X{Poly::var(rs, "X1"), Poly::var(rs, "X2")}, Y{Poly::var(rs, "Y1"), Poly::var(rs, "Y2")};
  Poly P = power_sum_elem(X, 1) - power_sum_elem(Y, 1);
  auto ys = telescoping_coefficients({X[0] - Y[0], X[1] - Y[1]}, P);
  REQUIRE(ys.has_value());
  CHECK(*ys == star_coefficients(2, 1));

  HigherHomotopies empty;
  empty.w = Poly(r);
  empty.d = 3;
  empty.res.ring = r;
  CHECK(stabilize_module(empty).is_zero());
}

TEST_CASE("choice of coefficients does not matter") {
  RingPtr r = make_ring({"x1", "x2", "z"}, {1, 1, 1});
  Poly x1 = Poly::var(r, 0), x2 = Poly::var(r, 1), z = Poly::var(r, 2);
  MF a = koszul_factorization({x1, x2}, {x2 * z + x1 * x1, x2 * x2});
  MF b = koszul_factorization({x1, x2}, {x1 * x1, x1 * z + x2 * x2});
  CHECK(a.w == b.w);
  auto lin = ideal_coefficients({x1, x2}, a.w);
  REQUIRE(lin.has_value());
  MF c = koszul_factorization({x1, x2}, *lin);
  auto cert = find_equivalence(a, b);
  CHECK(cert.level == CertificateLevel::certified);
  CHECK(find_equivalence(a, c).level == CertificateLevel::certified);
}

TEST_CASE("duals of complete intersections") {
  RingPtr r = make_ring({"x1", "x2"}, {1, 1});
  Poly x1 = Poly::var(r, 0), x2 = Poly::var(r, 1);
  std::vector<std::vector<Poly>> seqs{{x1}, {x1, x2}};
  Poly w = x1.pow(3) + x2.pow(3);
  for (auto& xs : seqs) {
    int l = static_cast<int>(xs.size());
    int sum = 0;
    for (auto& p : xs) sum += *p.degree();
    MF m = stabilize_ci(xs, l == 1 ? x1.pow(3) : w);
    MF wd = dualize(m, DualKind::wdual);
    CHECK(find_equivalence(wd, shift_mf(m, -(l + 1), sum)).level == CertificateLevel::certified);
    MF st = dualize(m, DualKind::star);
    MF other = stabilize_ci(xs, -m.w);
    CHECK(find_equivalence(st, shift_mf(other, -l, sum)).level == CertificateLevel::certified);
  }
}

TEST_CASE("chi morphisms") {
  for (int lam = 0; lam <= 1; ++lam) {
    ChiMorphisms c = chi_morphisms(2, lam);
    CHECK(validate_mf(c.gamma0).ok);
    CHECK(validate_mf(c.gamma1).ok);
    CHECK(check_morphism(c.chi0).ok);
    CHECK(check_morphism(c.chi1).ok);
    MFMorphism s1 = stabilize_morphism_ci2(c.data1), s0 = stabilize_morphism_ci2(c.data0);
    CHECK(s1.alpha == c.chi1.alpha);
    CHECK(s1.beta == c.chi1.beta);
    CHECK(s0.alpha == c.chi0.alpha);
    CHECK(s0.beta == c.chi0.beta);
    MF cone = cone_mf(c.chi1);
    CHECK(validate_mf(cone).ok);
  }
  ChiMorphisms a = chi_morphisms(2, 0), b = chi_morphisms(2, 1);
  CHECK(find_homotopy(a.chi1, b.chi1).has_value());
  CHECK(find_homotopy(a.chi0, b.chi0).has_value());
  CHECK(!find_homotopy(a.chi1, zero_morphism(a.gamma0, a.gamma1)).has_value());
  CHECK(check_morphism(chi_morphisms(3, 2).chi1).ok);

  // identity data gives the identity morphism
  ChiMorphisms c = chi_morphisms(2, 0);
  RingPtr r = c.gamma0.ring;
  Poly one(r, 1), zero(r);
  auto& g = c.data1;
  MorphismStabData id = make_morphism_stab_data(g.xt, g.xt, g.yt, g.yt, one, {{{one, zero}, {zero, one}}});
  MFMorphism phi = stabilize_morphism_ci2(id);
  CHECK(phi.alpha == Mat::identity(2, r));
  CHECK(phi.beta == Mat::identity(2, r));
}

TEST_CASE("tensor of higher homotopies") {
  RingPtr r = make_ring({"a", "b", "c", "e"}, {1, 1, 1, 1});
  Poly a = Poly::var(r, 0), b = Poly::var(r, 1), c = Poly::var(r, 2), e = Poly::var(r, 3);
  HigherHomotopies h1 = koszul_homotopies({a}, {b}), h2 = koszul_homotopies({c}, {e});
  HigherHomotopies t = tensor_homotopies(h1, h2);
  CHECK(validate_homotopies(t).ok);
  CHECK(same_data(stabilize_module(t), koszul_factorization({a, c}, {b, e})));
  CHECK(same_data(stabilize_module(t), tensor_mf(stabilize_module(h1), stabilize_module(h2))));

  HigherHomotopies unit;
  unit.res.ring = r;
  unit.res.terms = {GradedFreeModule{r, {0}}};
  unit.w = Poly(r);
  unit.d = 2;
  HigherHomotopies u = tensor_homotopies(h1, unit);
  CHECK(same_data(stabilize_module(u), stabilize_module(h1)));

  // generic homotopies with nonzero s2 on one side
  RingPtr r2 = make_ring({"x", "y", "z"}, {1, 1, 1});
  Poly x = Poly::var(r2, 0), y = Poly::var(r2, 1), z = Poly::var(r2, 2);
  HigherHomotopies g1 = find_higher_homotopies(koszul_resolution({x, y}), x.pow(3) + y.pow(3), 3);
  HigherHomotopies g2 = find_higher_homotopies(koszul_resolution({z}), z.pow(3), 3);
  HigherHomotopies tg = tensor_homotopies(g1, g2);
  CHECK(validate_homotopies(tg).ok);
  MF lhs = stabilize_module(tg), rhs = tensor_mf(stabilize_module(g1), stabilize_module(g2));
  CHECK(same_up_to_reordering(lhs, rhs).has_value());
}
