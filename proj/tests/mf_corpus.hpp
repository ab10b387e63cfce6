#pragma once

#include "gmf/moy.hpp"
#include "gmf/stabilize.hpp"

namespace gmf {

struct Ring2 {
  RingPtr r = make_ring({"x", "y"}, {1, 1});
  Poly x = Poly::var(r, 0), y = Poly::var(r, 1);
};

inline Poly pi_xy(const Poly& x, const Poly& y, int n) {
  Poly p(x.ring());
  for (int i = 0; i <= n; ++i) p += x.pow(i) * y.pow(n - i);
  return p;
}

// factorizations of assorted shapes, ranks and potentials
inline std::vector<MF> corpus() {
  std::vector<MF> c;
  Ring2 R;
  Poly x = R.x, y = R.y;
  RingPtr r = R.r;
  for (int n = 1; n <= 4; ++n) c.push_back(koszul_factorization({x - y}, {pi_xy(x, y, n)}));
  c.push_back(koszul_factorization({x}, {y}));
  c.push_back(koszul_factorization({x * x}, {y * y}));
  c.push_back(koszul_factorization({x, y}, {x * x, y * y}));
  c.push_back(koszul_factorization({x + y, x * y}, {x * x - x * y + y * y, Poly(r, 0) - x - y}));
  MF k = koszul_factorization({x}, {y});
  c.push_back(shift_mf(k, 1, 0));
  c.push_back(shift_mf(k, 0, 3));
  c.push_back(shift_mf(k, -1, -2));
  c.push_back(direct_sum(k, shift_mf(k, 0, 2)));
  c.push_back(tensor_mf(k, koszul_factorization({x}, {Poly(r, 0) - y})));
  c.push_back(koszul_factorization({Poly(r, 1)}, {x * y}));
  c.push_back(zero_mf(r, x * y, 2));
  c.push_back(dualize(k, DualKind::wdual));
  c.push_back(dualize(k, DualKind::star));
  c.push_back(stabilize_ci({x - y}, x * x * x - y * y * y));
  c.push_back(cone_mf(identity_morphism(k)));
  c.push_back(hom_factorization(k, k));
  c.push_back(compile_graph(parse_graph("outer a mark x\nouter b mark y\nedge b -> a\n"), 2, 2));
  c.push_back(compile_graph(braid_to_graph(parse_braid("m=2: s1")), 2, 2));
  c.push_back(reduce_mf(c.back()));
  return c;
}

}  // namespace gmf
