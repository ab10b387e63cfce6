#include <doctest.h>

#include "gmf/serialize.hpp"

using namespace gmf;

TEST_CASE("JSON round trips") {
  RingPtr r = make_ring({"x", "y"}, {1, 2});
  Poly x = Poly::var(r, 0), y = Poly::var(r, 1);
  MF m = shift_mf(koszul_factorization({x, y}, {Q(1, 2) * x * y, x * x - y}), 1, 2);
  Json j = mf_json(m);
  CHECK(j["m0_degrees"].size() == m.rank0());
  CHECK(same_data(mf_from_json(j), m));
  CHECK(same_data(mf_from_json(Json::parse(j.dump())), m));
  CHECK(mf_json(mf_from_json(j)).dump() == j.dump());

  // zero potential needs its degree
  MF u = unit_mf(r, 4);
  CHECK(same_data(mf_from_json(mf_json(u)), u));
  Json bad = mf_json(u);
  bad.erase("potential_degree");
  CHECK_THROWS_AS(mf_from_json(bad), std::invalid_argument);
  CHECK_THROWS_AS(mf_from_json(Json{{"ring", 3}}), std::invalid_argument);

  PoincareSeries p;
  p.add(-1, 1);
  p.add(0, 2);
  p.add(3, 1);
  CHECK(series_json(p).dump() == R"({"-1":1,"0":2,"3":1})");
  CHECK(series_from_json(series_json(p)) == p);

  KwModule k = iota(m);
  Json kj = kw_json(k);
  CHECK(kj["terms"].size() == 2);
  CHECK(kj["terms"][0]["degree"] == -1);
  CHECK(kj["terms"][1]["s_entries"].size() == m.rank1());
}
