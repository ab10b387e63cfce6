#include <doctest.h>

#include <random>

#include "gmf/hecke.hpp"

using namespace gmf;

namespace {

HeckeElement Ts(int m, int i) { return HeckeElement::T(simple_reflection(m, i)); }

HeckeElement random_element(int m, std::mt19937& rng) {
  HeckeElement h;
  h.m = m;
  std::uniform_int_distribution<int> c(-2, 2), e(-2, 2);
  for (auto& w : all_permutations(m)) {
    if (c(rng) == 0) continue;
    Laurent l = Laurent::mono(e(rng), c(rng)) + Laurent::mono(e(rng), c(rng));
    if (!l.is_zero()) h.t[w] = l;
  }
  return h;
}

}  // namespace

TEST_CASE("permutations") {
  CHECK(perm_length(longest_element(4)) == 6);
  for (auto& w : all_permutations(4)) {
    auto word = reduced_word(w);
    CHECK(static_cast<int>(word.size()) == perm_length(w));
    Permutation p = identity_perm(4);
    for (int i : word) p = perm_mul(p, simple_reflection(4, i));
    CHECK(p == w);
    CHECK(perm_mul(w, perm_inverse(w)) == identity_perm(4));
  }
  CHECK(parse_perm("321") == Permutation{3, 2, 1});
  CHECK_THROWS(parse_perm("322"));
}

TEST_CASE("Hecke multiplication") {
  Laurent q2 = Laurent::mono(2), one = Laurent::mono(0);
  for (int i = 1; i <= 2; ++i) {
    HeckeElement sq = hecke_mul(Ts(3, i), Ts(3, i));
    HeckeElement expect = Ts(3, i).scaled(q2 - one) + HeckeElement::unit(3).scaled(q2);
    CHECK(sq == expect);
  }
  HeckeElement a = hecke_mul(hecke_mul(Ts(3, 1), Ts(3, 2)), Ts(3, 1));
  HeckeElement b = hecke_mul(Ts(3, 1), hecke_mul(Ts(3, 2), Ts(3, 1)));
  CHECK(a == b);
  CHECK(a == HeckeElement::T(longest_element(3)));

  std::mt19937 rng(17);
  for (int m = 2; m <= 4; ++m)
    for (int trial = 0; trial < 4; ++trial) {
      HeckeElement x = random_element(m, rng), y = random_element(m, rng), z = random_element(m, rng);
      CHECK(hecke_mul(hecke_mul(x, y), z) == hecke_mul(x, hecke_mul(y, z)));
      CHECK(hecke_mul(HeckeElement::unit(m), x) == x);
      CHECK(hecke_mul(x, HeckeElement::unit(m)) == x);
    }
  // bar is a ring involution
  HeckeElement x = random_element(3, rng), y = random_element(3, rng);
  CHECK(hecke_bar(hecke_mul(x, y)) == hecke_mul(hecke_bar(x), hecke_bar(y)));
  CHECK(hecke_bar(hecke_bar(x)) == x);
}

TEST_CASE("Kazhdan-Lusztig basis") {
  CHECK(kl_element(identity_perm(3)) == HeckeElement::unit(3));
  HeckeElement hs = (HeckeElement::unit(3) + Ts(3, 1)).scaled(Laurent::mono(-1));
  CHECK(kl_element(simple_reflection(3, 1)) == hs);
  HeckeElement all;
  for (auto& w : all_permutations(3)) all += HeckeElement::T(w);
  CHECK(kl_element(longest_element(3)) == all.scaled(Laurent::mono(-3)));
  // longest element of S4: q^-6 times the sum of all T_v
  HeckeElement all4;
  for (auto& w : all_permutations(4)) all4 += HeckeElement::T(w);
  CHECK(kl_element(longest_element(4)) == all4.scaled(Laurent::mono(-6)));

  for (int m = 3; m <= 4; ++m)
    for (auto& w : all_permutations(m)) {
      HeckeElement h = kl_element(w);
      CHECK(hecke_bar(h) == h);
      for (auto& [y, c] : h.t)
        for (auto& [e, k] : c.c) {
          CHECK(k > 0);
          CHECK(e >= -perm_length(w));
        }
    }
  // the first singular Schubert variety in S4: 3412 has P_{e,w} = 1 + q^2
  HeckeElement h3412 = kl_element({3, 4, 1, 2});
  CHECK(h3412.coeff(identity_perm(4)) == Laurent::mono(-4) + Laurent::mono(-2));
}

TEST_CASE("intro identity and quadratic relation") {
  Permutation s = simple_reflection(3, 1), t = simple_reflection(3, 2), sts = longest_element(3);
  HeckeElement Hs = kl_element(s), Ht = kl_element(t);
  HeckeElement lhs = hecke_mul(hecke_mul(Hs, Ht), Hs) - Hs;
  HeckeElement rhs = hecke_mul(hecke_mul(Ht, Hs), Ht) - Ht;
  CHECK(lhs == rhs);
  CHECK(lhs == kl_element(sts));
  Laurent qq = Laurent::mono(1) + Laurent::mono(-1);
  for (int m = 2; m <= 4; ++m)
    for (int i = 1; i < m; ++i) {
      HeckeElement h = kl_element(simple_reflection(m, i));
      CHECK(hecke_mul(h, h) == h.scaled(qq));
    }
}

TEST_CASE("RSK shapes") {
  CHECK(rsk_shape(identity_perm(4)) == Shape{4});
  CHECK(rsk_shape({3, 2, 1}) == Shape{1, 1, 1});
  CHECK(rsk_shape({2, 1, 3}) == Shape{2, 1});
  CHECK(rsk_shape({2, 4, 1, 3}) == Shape{2, 2});
  for (auto& w : all_permutations(4)) CHECK(rsk_shape(w) == rsk_shape(perm_inverse(w)));
  CHECK(vanishing_predicate({3, 2, 1}, 2));
  CHECK(!vanishing_predicate(identity_perm(3), 1));
  CHECK(vanishing_predicate(longest_element(4), 3));
  CHECK(!vanishing_predicate(longest_element(4), 4));
}

TEST_CASE("Bott-Samelson words and relations") {
  BSWord w = parse_bsword("s1 s2 s1 <3>");
  CHECK(w.word == std::vector<int>{1, 2, 1});
  CHECK(w.shift == 3);
  CHECK(bsword_to_string(w) == "s1 s2 s1 <3>");
  CHECK_THROWS(parse_bsword("s1 t2"));
  CHECK_THROWS(parse_bsword("s1 <x>"));

  CHECK(grothendieck_class(parse_bsword("s2"), 3) == kl_element(simple_reflection(3, 2)));
  CHECK(grothendieck_class(parse_bsword("s1 s2 s1"), 3) ==
        kl_element(longest_element(3)) + kl_element(simple_reflection(3, 1)));
  CHECK(grothendieck_class(parse_bsword("s1 s1"), 3) ==
        kl_element(simple_reflection(3, 1)).scaled(Laurent::mono(1) + Laurent::mono(-1)));
  CHECK(grothendieck_class(parse_bsword("s1 <2>"), 2) == kl_element(simple_reflection(2, 1)).scaled(Laurent::mono(-2)));

  auto side = [](std::initializer_list<const char*> ws) {
    std::vector<BSWord> v;
    for (auto s : ws) v.push_back(parse_bsword(s));
    return v;
  };
  CHECK(verify_relation(side({"s1 s2 s1", "s2"}), side({"s2 s1 s2", "s1"}), 3).equal);
  CHECK(!verify_relation(side({"s1"}), side({"s2"}), 3).equal);
  CHECK(verify_relation(side({"s1 s1"}), side({"s1 <1>", "s1 <-1>"}), 3).equal);
  auto r = verify_relation(side({"s1"}), side({"s2"}), 3);
  CHECK(r.difference == kl_element(simple_reflection(3, 1)) - kl_element(simple_reflection(3, 2)));
  // multiplicativity: append a common letter
  CHECK(verify_relation(side({"s1 s2 s1 s2", "s2 s2"}), side({"s2 s1 s2 s2", "s1 s2"}), 3).equal);

  RelationFile f = parse_relation_file(
      R"({"m":3,"relations":[{"lhs":{"words":["s1 s2 s1",[2]],"shifts":[0,0]},"rhs":{"words":[[2,1,2],"s1"]}}]})");
  REQUIRE(f.relations.size() == 1);
  CHECK(verify_relation(f.relations[0].lhs, f.relations[0].rhs, f.m).equal);
  CHECK_THROWS_AS(parse_relation_file(R"({"m":3,"relations":[{"lhs":{"words":[[3]]},"rhs":{"words":[]}}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_relation_file("{"), std::invalid_argument);
}

TEST_CASE("Bott-Samelson presentations") {
  BSPresentation p = bs_presentation(parse_bsword("s1"), 2, 1);
  REQUIRE(p.relations.size() == 2);
  RingPtr r = p.ring;
  Poly x1 = Poly::var(r, "x1"), x2 = Poly::var(r, "x2"), y1 = Poly::var(r, "y1"), y2 = Poly::var(r, "y2");
  CHECK(p.relations[0] == x1 + x2 - y1 - y2);
  CHECK(p.relations[1] == x1 * x2 - y1 * y2);
  CHECK(p.shift == 1);

  BSPresentation e = bs_presentation(BSWord{}, 3, 1);
  CHECK(e.relations.size() == 3);
  CHECK(e.shift == 0);
  CHECK(e.relations[0] == Poly::var(e.ring, "x1") - Poly::var(e.ring, "y1"));

  BSPresentation l = bs_presentation(parse_bsword("s1 s2 s1"), 3, 1);
  CHECK(l.relations.size() == 3);
  CHECK(l.shift == 3);
  BSPresentation d = bs_presentation(parse_bsword("s1 s3"), 4, 1);
  CHECK(d.relations.size() == 4);
  CHECK(d.shift == 2);
  BSPresentation l3 = bs_presentation(parse_bsword("s2 s3 s2"), 4, 1);
  CHECK(l3.shift == 3);
  CHECK(l3.relations.size() == 4);
  CHECK_THROWS_AS(bs_presentation(parse_bsword("s1 s2"), 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(bs_presentation(parse_bsword("s1 s1"), 3, 1), std::invalid_argument);
}
