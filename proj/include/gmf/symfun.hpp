#pragma once

#include <vector>

#include "gmf/poly.hpp"

namespace gmf {

// e_l of the given variables (as polynomials); throws when l > |vars|
Poly elementary_symmetric(const std::vector<Poly>& vars, int l);

// e_l of the union of alphabets, each given by its own e_1..e_nu generators
Poly elementary_of_union(const std::vector<std::vector<Poly>>& parts, int l, const RingPtr& ring);

// Determinant P with x_1^{n+1} + ... + x_m^{n+1} = P(e_1, ..., e_m); gens[l-1]
// holds the generator standing for e_l.
Poly power_sum_elem(const std::vector<Poly>& gens, int n);
// convenience: ring X1..Xm with deg X_l = l
Poly power_sum_elem(int n, int m);

// *_1..*_m with sum_i *_i (X_i - Y_i) = P(X) - P(Y), by telescoping quotients
std::vector<Poly> star_coefficients(const std::vector<Poly>& X, const std::vector<Poly>& Y, int n);
// convenience: ring X1..Xm, Y1..Ym with deg l*unit
std::vector<Poly> star_coefficients(int m, int n, int unit = 1);

RingPtr symmetric_ring(int m, int unit = 1);  // X1..Xm, Y1..Ym

}  // namespace gmf
