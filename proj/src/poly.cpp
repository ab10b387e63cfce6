#include "gmf/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gmf {

int PolyRing::index(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

int PolyRing::exp_degree(const Exp& e) const {
  int d = 0;
  for (size_t i = 0; i < e.size(); ++i) d += e[i] * degrees[i];
  return d;
}

const std::vector<Exp>& PolyRing::monomials(int degree) const {
  auto it = mono_cache_.find(degree);
  if (it != mono_cache_.end()) return it->second;
  std::vector<Exp> out;
  if (degree >= 0) {
    Exp cur(nvars(), 0);
    std::function<void(size_t, int)> rec = [&](size_t i, int left) {
      if (i == nvars()) {
        if (left == 0) out.push_back(cur);
        return;
      }
      for (int k = left / degrees[i]; k >= 0; --k) {
        cur[i] = k;
        rec(i + 1, left - k * degrees[i]);
      }
      cur[i] = 0;
    };
    rec(0, degree);
  }
  return mono_cache_.emplace(degree, std::move(out)).first->second;
}

RingPtr make_ring(std::vector<std::string> names, std::vector<int> degrees) {
  if (names.size() != degrees.size()) throw std::invalid_argument("ring: names/degrees length mismatch");
  std::set<std::string> seen;
  for (size_t i = 0; i < names.size(); ++i) {
    if (degrees[i] < 1) throw std::invalid_argument("ring: variable degree must be >= 1: " + names[i]);
    if (!seen.insert(names[i]).second) throw std::invalid_argument("ring: duplicate variable " + names[i]);
  }
  auto r = std::make_shared<PolyRing>();
  r->names = std::move(names);
  r->degrees = std::move(degrees);
  return r;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

Poly::Poly(RingPtr r, const Q& c) : ring_(std::move(r)) {
  if (c != 0) terms_[Exp(ring_->nvars(), 0)] = c;
}

Poly Poly::var(const RingPtr& r, int i) {
  Exp e(r->nvars(), 0);
  e.at(i) = 1;
  return monomial(r, e);
}

Poly Poly::var(const RingPtr& r, const std::string& name) {
  int i = r->index(name);
  if (i < 0) throw std::invalid_argument("unknown variable " + name);
  return var(r, i);
}

Poly Poly::monomial(const RingPtr& r, const Exp& e, const Q& c) {
  Poly p(r);
  if (c != 0) p.terms_[e] = c;
  return p;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = ring_->exp_degree(terms_.begin()->first);
  for (auto& [e, c] : terms_)
    if (ring_->exp_degree(e) != d) return false;
  return true;
}

std::optional<int> Poly::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return ring_->exp_degree(terms_.begin()->first);
}

Q Poly::constant_term() const {
  if (terms_.empty()) return 0;
  auto it = terms_.find(Exp(ring_->nvars(), 0));
  return it == terms_.end() ? Q(0) : it->second;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && ring_->exp_degree(terms_.begin()->first) == 0);
}

int Poly::max_exponent(int v) const {
  int m = 0;
  for (auto& [e, c] : terms_) m = std::max(m, e[v]);
  return m;
}

void Poly::add_term(const Exp& e, const Q& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::adopt(const Poly& o) {
  if (!o.ring_) return;
  if (!ring_) {
    ring_ = o.ring_;
    return;
  }
  if (ring_ != o.ring_ && !ring_->same_as(*o.ring_)) throw std::invalid_argument("polynomial ring mismatch");
}

Poly& Poly::operator+=(const Poly& o) {
  adopt(o);
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  adopt(o);
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Q& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(a.ring_ ? a.ring_ : b.ring_);
  if (a.ring_ && b.ring_) r.adopt(b);
  if (a.is_zero() || b.is_zero()) return r;
  size_t n = r.ring_->nvars();
  Exp e(n);
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  Poly r(ring_, 1);
  Poly b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

Poly Poly::component(int deg) const {
  Poly r(ring_);
  for (auto& [e, c] : terms_)
    if (ring_->exp_degree(e) == deg) r.terms_.emplace(e, c);
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images, const RingPtr& target) const {
  Poly r(target);
  if (terms_.empty()) return r;
  if (images.size() != ring_->nvars()) throw std::invalid_argument("substitute: image count mismatch");
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](size_t i, int k) -> const Poly& {
    auto& v = powers[i];
    if (v.empty()) v.push_back(Poly(target, 1));
    while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * images[i]);
    return v[k];
  };
  for (auto& [e, c] : terms_) {
    Poly t(target, c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) t = t * power(i, e[i]);
    r += t;
  }
  return r;
}

Poly Poly::substitute_var(int v, const Poly& value) const {
  if (max_exponent(v) == 0) return *this;
  std::vector<Poly> imgs;
  for (size_t i = 0; i < ring_->nvars(); ++i)
    imgs.push_back(static_cast<int>(i) == v ? value : var(ring_, static_cast<int>(i)));
  return substitute(imgs, ring_);
}

Poly Poly::embed(const RingPtr& target) const {
  if (ring_ == target) return *this;
  Poly r(target);
  if (terms_.empty()) return r;
  std::vector<int> map(ring_->nvars(), -1);
  for (size_t i = 0; i < ring_->nvars(); ++i) map[i] = target->index(ring_->names[i]);
  for (auto& [e, c] : terms_) {
    Exp t(target->nvars(), 0);
    for (size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (map[i] < 0) throw std::invalid_argument("embed: variable " + ring_->names[i] + " missing in target");
      t[map[i]] = e[i];
    }
    r.add_term(t, c);
  }
  return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  Poly rem = *this;
  Poly quo(ring_ ? ring_ : d.ring_);
  const auto& [ld, lc] = *d.terms_.rbegin();
  size_t n = ld.size();
  while (!rem.is_zero()) {
    const auto& [lt, c] = *rem.terms_.rbegin();
    Exp q(n);
    for (size_t i = 0; i < n; ++i) {
      q[i] = lt[i] - ld[i];
      if (q[i] < 0) return std::nullopt;
    }
    Poly t = monomial(quo.ring_, q, c / lc);
    quo += t;
    rem -= t * d;
  }
  return quo;
}

Poly Poly::reduce_univariate(const Poly& h, int v) const {
  int k = h.max_exponent(v);
  if (k == 0) throw std::invalid_argument("reduce_univariate: pivot variable absent");
  Poly lead(ring_ ? ring_ : h.ring_);
  for (auto& [e, c] : h.terms_)
    if (e[v] == k) lead.add_term(e, c);
  if (lead.nterms() != 1 || lead.ring_->exp_degree(lead.terms_.begin()->first) != k * lead.ring_->degrees[v])
    throw std::invalid_argument("reduce_univariate: leading coefficient not constant");
  Q lc = lead.terms_.begin()->second;
  Poly r = *this;
  while (true) {
    const Exp* hit = nullptr;
    for (auto it = r.terms_.rbegin(); it != r.terms_.rend(); ++it)
      if (it->first[v] >= k) {
        hit = &it->first;
        break;
      }
    if (!hit) return r;
    Exp q = *hit;
    Q c = r.terms_.at(q) / lc;
    q[v] -= k;
    r -= monomial(r.ring_, q, c) * h;
  }
}

std::string rational_to_string(const Q& q) { return q.get_str(); }

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<const Exp*, const Q*>> ts;
  for (auto& [e, c] : terms_) ts.push_back({&e, &c});
  std::sort(ts.begin(), ts.end(), [&](auto& a, auto& b) {
    int da = ring_->exp_degree(*a.first), db = ring_->exp_degree(*b.first);
    if (da != db) return da > db;
    return *a.first > *b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : ts) {
    Q a = abs(*c);
    bool neg = sgn(*c) < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool constant = ring_->exp_degree(*e) == 0;
    bool wrote = false;
    if (a != 1 || constant) {
      os << a.get_str();
      wrote = true;
    }
    for (size_t i = 0; i < e->size(); ++i) {
      if (!(*e)[i]) continue;
      if (wrote) os << "*";
      os << ring_->names[i];
      if ((*e)[i] > 1) os << "^" << (*e)[i];
      wrote = true;
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const RingPtr& ring;
  const std::string& s;
  size_t pos = 0;

  void ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("parse_poly: " + why + " at offset " + std::to_string(pos) + " in '" + s + "'");
  }
  Poly expr() {
    ws();
    Poly r(ring);
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
    Poly t = term();
    r = neg ? -t : t;
    while (true) {
      ws();
      if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-')) break;
      bool minus = s[pos++] == '-';
      Poly u = term();
      if (minus)
        r -= u;
      else
        r += u;
    }
    return r;
  }
  Poly term() {
    Poly r = power();
    while (true) {
      ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        r = r * power();
      } else if (pos < s.size() && s[pos] == '/') {
        ++pos;
        ws();
        Poly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
        r *= Q(1) / d.constant_term();
      } else {
        break;
      }
    }
    return r;
  }
  Poly power() {
    Poly b = atom();
    ws();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      ws();
      size_t st = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (st == pos) fail("expected exponent");
      b = b.pow(std::stoi(s.substr(st, pos - st)));
    }
    return b;
  }
  Poly atom() {
    ws();
    if (pos >= s.size()) fail("unexpected end");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Poly r = expr();
      ws();
      if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
      ++pos;
      return r;
    }
    if (c == '-') {
      ++pos;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t st = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return Poly(ring, Q(s.substr(st, pos - st)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t st = pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
      std::string name = s.substr(st, pos - st);
      int i = ring->index(name);
      if (i < 0) fail("unknown variable '" + name + "'");
      return Poly::var(ring, i);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Poly parse_poly(const RingPtr& r, const std::string& text) {
  Parser p{r, text};
  Poly out = p.expr();
  p.ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return out;
}

}  // namespace gmf
