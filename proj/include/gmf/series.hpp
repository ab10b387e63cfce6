#pragma once

#include <map>
#include <string>

namespace gmf {

// Element of Z[q, q^-1]; used for Poincare series and Hecke coefficients.
struct Laurent {
  std::map<int, long long> c;

  Laurent() = default;
  static Laurent mono(int exp, long long coef = 1);

  bool is_zero() const { return c.empty(); }
  long long at(int e) const;
  long long total() const;  // value at q = 1
  void add(int exp, long long coef);

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator-() const;
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  bool operator==(const Laurent& o) const { return c == o.c; }
  bool operator!=(const Laurent& o) const { return c != o.c; }

  Laurent shifted(int k) const;  // multiply by q^k
  Laurent bar() const;           // q -> q^-1

  std::string to_string() const;  // "q^-1 + 2 + q^3"
};

using PoincareSeries = Laurent;
using LaurentInt = Laurent;

}  // namespace gmf
