#include "gmf/symfun.hpp"

#include <functional>
#include <stdexcept>

namespace gmf {

Poly elementary_symmetric(const std::vector<Poly>& vars, int l) {
  if (l < 0 || l > static_cast<int>(vars.size())) throw std::out_of_range("elementary_symmetric: l out of range");
  RingPtr ring = vars.empty() ? nullptr : vars[0].ring();
  // e_k via the recurrence e_k(x_1..x_j) = e_k(x_1..x_{j-1}) + x_j e_{k-1}(x_1..x_{j-1})
  std::vector<Poly> e(l + 1, Poly(ring));
  e[0] = Poly(ring, 1);
  for (auto& x : vars)
    for (int k = l; k >= 1; --k) e[k] += x * e[k - 1];
  return e[l];
}

Poly elementary_of_union(const std::vector<std::vector<Poly>>& parts, int l, const RingPtr& ring) {
  // coefficients of prod_j (1 + e_1(j) t + ... + e_nu(j) t^nu)
  std::vector<Poly> acc{Poly(ring, 1)};
  for (auto& part : parts) {
    std::vector<Poly> next(acc.size() + part.size(), Poly(ring));
    for (size_t a = 0; a < acc.size(); ++a) {
      next[a] += acc[a];
      for (size_t b = 0; b < part.size(); ++b) next[a + b + 1] += acc[a] * part[b];
    }
    acc = std::move(next);
  }
  if (l < 0 || l >= static_cast<int>(acc.size())) throw std::out_of_range("elementary_of_union: l out of range");
  return acc[l];
}

Poly power_sum_elem(const std::vector<Poly>& gens, int n) {
  if (n < 1 || gens.empty()) throw std::invalid_argument("power_sum_elem: need n >= 1 and m >= 1");
  RingPtr ring = gens[0].ring();
  int m = static_cast<int>(gens.size());
  auto e = [&](int l) -> Poly {
    if (l == 0) return Poly(ring, 1);
    if (l < 0 || l > m) return Poly(ring);
    return gens[l - 1];
  };
  int k = n + 1;
  std::vector<std::vector<Poly>> a(k, std::vector<Poly>(k, Poly(ring)));
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k - 1; ++c) a[r][c] = e(c - r + 1);
    a[r][k - 1] = e(k - r) * Q(k - r);
  }
  // Laplace expansion along the first column, memoized on the remaining row set
  std::map<unsigned, Poly> memo;
  std::function<Poly(int, unsigned)> det = [&](int col, unsigned rows) -> Poly {
    if (col == k) return Poly(ring, 1);
    auto it = memo.find(rows);
    if (it != memo.end()) return it->second;
    Poly s(ring);
    int sign = 1;
    for (int r = 0; r < k; ++r) {
      if (!(rows & (1u << r))) continue;
      if (!a[r][col].is_zero()) {
        Poly t = a[r][col] * det(col + 1, rows & ~(1u << r));
        if (sign > 0)
          s += t;
        else
          s -= t;
      }
      sign = -sign;
    }
    memo.emplace(rows, s);
    return s;
  };
  return det(0, (1u << k) - 1);
}

Poly power_sum_elem(int n, int m) {
  std::vector<std::string> names;
  std::vector<int> degs;
  for (int l = 1; l <= m; ++l) {
    names.push_back("X" + std::to_string(l));
    degs.push_back(l);
  }
  RingPtr r = make_ring(names, degs);
  std::vector<Poly> gens;
  for (int l = 0; l < m; ++l) gens.push_back(Poly::var(r, l));
  return power_sum_elem(gens, n);
}

std::vector<Poly> star_coefficients(const std::vector<Poly>& X, const std::vector<Poly>& Y, int n) {
  if (X.size() != Y.size() || X.empty()) throw std::invalid_argument("star_coefficients: alphabet size mismatch");
  size_t m = X.size();
  // mixed_i = P(Y_1..Y_i, X_{i+1}..X_m)
  std::vector<Poly> mixed;
  for (size_t i = 0; i <= m; ++i) {
    std::vector<Poly> g;
    for (size_t l = 0; l < m; ++l) g.push_back(l < i ? Y[l] : X[l]);
    mixed.push_back(power_sum_elem(g, n));
  }
  std::vector<Poly> out;
  for (size_t i = 0; i < m; ++i) {
    Poly num = mixed[i] - mixed[i + 1];
    auto q = num.divide_exact(X[i] - Y[i]);
    if (!q) throw std::logic_error("star_coefficients: inexact telescoping quotient");
    out.push_back(*q);
  }
  return out;
}

RingPtr symmetric_ring(int m, int unit) {
  std::vector<std::string> names;
  std::vector<int> degs;
  for (const char* a : {"X", "Y"})
    for (int l = 1; l <= m; ++l) {
      names.push_back(a + std::to_string(l));
      degs.push_back(l * unit);
    }
  return make_ring(names, degs);
}

std::vector<Poly> star_coefficients(int m, int n, int unit) {
  RingPtr r = symmetric_ring(m, unit);
  std::vector<Poly> X, Y;
  for (int l = 0; l < m; ++l) {
    X.push_back(Poly::var(r, l));
    Y.push_back(Poly::var(r, m + l));
  }
  return star_coefficients(X, Y, n);
}

}  // namespace gmf
