#include "gmf/series.hpp"

#include <cstdlib>
#include <sstream>

namespace gmf {

Laurent Laurent::mono(int exp, long long coef) {
  Laurent l;
  l.add(exp, coef);
  return l;
}

long long Laurent::at(int e) const {
  auto it = c.find(e);
  return it == c.end() ? 0 : it->second;
}

long long Laurent::total() const {
  long long s = 0;
  for (auto& [e, v] : c) s += v;
  return s;
}

void Laurent::add(int exp, long long coef) {
  if (!coef) return;
  long long& v = c[exp];
  v += coef;
  if (!v) c.erase(exp);
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (auto& [e, v] : o.c) add(e, v);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (auto& [e, v] : o.c) add(e, -v);
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (auto& [e, v] : c) r.c[e] = -v;
  return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (auto& [ea, va] : a.c)
    for (auto& [eb, vb] : b.c) r.add(ea + eb, va * vb);
  return r;
}

Laurent Laurent::shifted(int k) const {
  Laurent r;
  for (auto& [e, v] : c) r.c[e + k] = v;
  return r;
}

Laurent Laurent::bar() const {
  Laurent r;
  for (auto& [e, v] : c) r.c[-e] = v;
  return r;
}

std::string Laurent::to_string() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, v] : c) {
    long long a = std::llabs(v);
    if (first)
      os << (v < 0 ? "-" : "");
    else
      os << (v < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace gmf
