#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gmf {

using Q = mpq_class;
using Exp = std::vector<int>;

// Polynomial ring over Q with positive integer variable degrees.
struct PolyRing {
  std::vector<std::string> names;
  std::vector<int> degrees;

  size_t nvars() const { return names.size(); }
  int index(const std::string& name) const;  // -1 when absent
  int exp_degree(const Exp& e) const;
  bool same_as(const PolyRing& o) const { return names == o.names && degrees == o.degrees; }

  // monomials of a given weighted degree, in lex-descending order; cached
  const std::vector<Exp>& monomials(int degree) const;
  size_t slice_dim(int degree) const { return degree < 0 ? 0 : monomials(degree).size(); }

 private:
  mutable std::map<int, std::vector<Exp>> mono_cache_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> names, std::vector<int> degrees);
bool same_ring(const RingPtr& a, const RingPtr& b);

class Poly {
 public:
  using Terms = std::map<Exp, Q>;

  Poly() = default;
  explicit Poly(RingPtr r) : ring_(std::move(r)) {}
  Poly(RingPtr r, const Q& c);

  static Poly var(const RingPtr& r, int i);
  static Poly var(const RingPtr& r, const std::string& name);
  static Poly monomial(const RingPtr& r, const Exp& e, const Q& c = 1);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t nterms() const { return terms_.size(); }

  bool is_homogeneous() const;
  // degree of a nonzero homogeneous polynomial; nullopt for zero or inhomogeneous
  std::optional<int> degree() const;
  Q constant_term() const;
  bool is_constant() const;
  int max_exponent(int var) const;

  void add_term(const Exp& e, const Q& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Q& c);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Q& c) { return a *= c; }
  friend Poly operator*(const Q& c, Poly a) { return a *= c; }
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(int k) const;

  // homogeneous component of given weighted degree
  Poly component(int deg) const;
  // substitute variable i := images[i]; images live in a common target ring
  Poly substitute(const std::vector<Poly>& images, const RingPtr& target) const;
  Poly substitute_var(int var, const Poly& value) const;
  // rename into another ring by variable names; throws if a used variable is missing
  Poly embed(const RingPtr& target) const;
  // exact quotient by d, or nullopt when the single-divisor division leaves a remainder
  std::optional<Poly> divide_exact(const Poly& d) const;
  // reduce modulo h, assumed to have a constant leading coefficient in variable v
  Poly reduce_univariate(const Poly& h, int v) const;

  std::string to_string() const;

 private:
  void adopt(const Poly& o);
  RingPtr ring_;
  Terms terms_;
};

Poly parse_poly(const RingPtr& r, const std::string& text);
std::string rational_to_string(const Q& q);

}  // namespace gmf
