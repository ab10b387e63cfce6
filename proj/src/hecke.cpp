#include "gmf/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gmf/symfun.hpp"

namespace gmf {

Permutation identity_perm(int m) {
  Permutation p(m);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

Permutation simple_reflection(int m, int i) {
  if (i < 1 || i >= m) throw std::invalid_argument("simple_reflection: index out of range");
  Permutation p = identity_perm(m);
  std::swap(p[i - 1], p[i]);
  return p;
}

Permutation perm_mul(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("perm_mul: size mismatch");
  Permutation c(a.size());
  for (size_t k = 0; k < b.size(); ++k) c[k] = a[b[k] - 1];
  return c;
}

Permutation perm_inverse(const Permutation& p) {
  Permutation q(p.size());
  for (size_t k = 0; k < p.size(); ++k) q[p[k] - 1] = static_cast<int>(k) + 1;
  return q;
}

Permutation longest_element(int m) {
  Permutation p(m);
  for (int k = 0; k < m; ++k) p[k] = m - k;
  return p;
}

int perm_length(const Permutation& p) {
  int c = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++c;
  return c;
}

bool is_permutation(const Permutation& p) {
  Permutation s = p;
  std::sort(s.begin(), s.end());
  return s == identity_perm(static_cast<int>(p.size()));
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<Permutation> out;
  Permutation p = identity_perm(m);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> reduced_word(const Permutation& p) {
  // peel right descents: w = w' s_i with w(i) > w(i+1)
  Permutation w = p;
  std::vector<int> word;
  for (;;) {
    size_t i = 0;
    while (i + 1 < w.size() && w[i] < w[i + 1]) ++i;
    if (i + 1 >= w.size()) break;
    std::swap(w[i], w[i + 1]);
    word.push_back(static_cast<int>(i) + 1);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::string perm_to_string(const Permutation& p) {
  std::string s;
  bool wide = p.size() > 9;
  for (size_t k = 0; k < p.size(); ++k) {
    if (wide && k) s += ' ';
    s += std::to_string(p[k]);
  }
  return s;
}

Permutation parse_perm(const std::string& s) {
  Permutation p;
  if (s.find(' ') != std::string::npos) {
    std::istringstream is(s);
    int v;
    while (is >> v) p.push_back(v);
  } else {
    for (char c : s) {
      if (c < '1' || c > '9') throw std::invalid_argument("parse_perm: bad character in '" + s + "'");
      p.push_back(c - '0');
    }
  }
  if (!is_permutation(p)) throw std::invalid_argument("parse_perm: not a permutation: '" + s + "'");
  return p;
}

HeckeElement HeckeElement::T(const Permutation& w) {
  HeckeElement h;
  h.m = static_cast<int>(w.size());
  h.t[w] = Laurent::mono(0);
  return h;
}

HeckeElement HeckeElement::unit(int m) { return T(identity_perm(m)); }

Laurent HeckeElement::coeff(const Permutation& w) const {
  auto it = t.find(w);
  return it == t.end() ? Laurent() : it->second;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (m == 0) m = o.m;
  if (o.m != 0 && o.m != m) throw std::invalid_argument("Hecke: strand mismatch");
  for (auto& [w, c] : o.t) {
    Laurent& x = t[w];
    x += c;
    if (x.is_zero()) t.erase(w);
  }
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) { return *this += o.scaled(Laurent::mono(0, -1)); }

HeckeElement HeckeElement::scaled(const Laurent& c) const {
  HeckeElement h;
  h.m = m;
  for (auto& [w, x] : t) {
    Laurent y = x * c;
    if (!y.is_zero()) h.t[w] = y;
  }
  return h;
}

std::string HeckeElement::to_string() const {
  if (t.empty()) return "0";
  std::string s;
  for (auto& [w, c] : t) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")T_" + perm_to_string(w);
  }
  return s;
}

HeckeElement hecke_mul_simple(const HeckeElement& a, int i) {
  HeckeElement out;
  out.m = a.m;
  Laurent q2m1 = Laurent::mono(2) - Laurent::mono(0), q2 = Laurent::mono(2);
  for (auto& [w, c] : a.t) {
    Permutation ws = w;
    std::swap(ws[i - 1], ws[i]);
    HeckeElement term;
    term.m = a.m;
    if (w[i - 1] < w[i]) {
      term.t[ws] = c;
    } else {
      term.t[w] = c * q2m1;
      term.t[ws] = c * q2;
    }
    out += term;
  }
  return out;
}

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b) {
  if (a.m != b.m) throw std::invalid_argument("hecke_mul: strand mismatch");
  HeckeElement out;
  out.m = a.m;
  for (auto& [v, c] : b.t) {
    HeckeElement x = a.scaled(c);
    for (int i : reduced_word(v)) x = hecke_mul_simple(x, i);
    out += x;
  }
  return out;
}

HeckeElement hecke_bar(const HeckeElement& a) {
  // bar(T_s) = T_s^{-1} = q^-2 T_s + (q^-2 - 1) T_e
  HeckeElement out;
  out.m = a.m;
  Laurent qm2 = Laurent::mono(-2), qm2m1 = Laurent::mono(-2) - Laurent::mono(0);
  for (auto& [w, c] : a.t) {
    HeckeElement x = HeckeElement::unit(a.m).scaled(c.bar());
    for (int i : reduced_word(w)) {
      HeckeElement y = hecke_mul_simple(x, i).scaled(qm2);
      y += x.scaled(qm2m1);
      x = y;
    }
    out += x;
  }
  return out;
}

namespace {

std::map<Permutation, HeckeElement>& kl_cache() {
  static std::map<Permutation, HeckeElement> c;
  return c;
}

}  // namespace

HeckeElement kl_element(const Permutation& w) {
  if (!is_permutation(w)) throw std::invalid_argument("kl_element: not a permutation");
  auto& cache = kl_cache();
  if (auto it = cache.find(w); it != cache.end()) return it->second;
  int m = static_cast<int>(w.size());
  HeckeElement res;
  if (perm_length(w) == 0) {
    res = HeckeElement::unit(m);
  } else {
    // w = v s with l(v) < l(w)
    std::vector<int> word = reduced_word(w);
    int s = word.back();
    Permutation v = w;
    std::swap(v[s - 1], v[s]);
    HeckeElement hs = HeckeElement::unit(m) + HeckeElement::T(simple_reflection(m, s));
    hs = hs.scaled(Laurent::mono(-1));
    HeckeElement x = hecke_mul(kl_element(v), hs);
    // x is bar invariant; in T~_y = q^{-l(y)} T_y its coefficients must lie in
    // q^-1 Z[q^-1] below w. Remove integer multiples of lower KL elements.
    for (;;) {
      const Permutation* best = nullptr;
      long long mu = 0;
      for (auto& [y, c] : x.t) {
        if (y == w) continue;
        long long k = c.shifted(perm_length(y)).at(0);
        if (k != 0 && (!best || perm_length(y) > perm_length(*best))) {
          best = &y;
          mu = k;
        }
      }
      if (!best) break;
      Permutation y = *best;
      x -= kl_element(y).scaled(Laurent::mono(0, mu));
    }
    for (auto& [y, c] : x.t) {
      Laurent n = c.shifted(perm_length(y));
      for (auto& [e, k] : n.c)
        if ((y == w && (e != 0 || k != 1)) || (y != w && e >= 0))
          throw std::logic_error("kl_element: normalization failed for " + perm_to_string(w));
    }
    res = x;
  }
  cache[w] = res;
  return res;
}

Shape rsk_shape(const Permutation& w) {
  std::vector<std::vector<int>> rows;
  for (int v : w) {
    int x = v;
    for (size_t r = 0;; ++r) {
      if (r == rows.size()) {
        rows.push_back({x});
        break;
      }
      auto it = std::upper_bound(rows[r].begin(), rows[r].end(), x);
      if (it == rows[r].end()) {
        rows[r].push_back(x);
        break;
      }
      std::swap(*it, x);
    }
  }
  Shape s;
  for (auto& r : rows) s.push_back(static_cast<int>(r.size()));
  return s;
}

bool vanishing_predicate(const Permutation& w, int n) { return static_cast<int>(rsk_shape(w).size()) > n; }

BSWord parse_bsword(const std::string& text) {
  BSWord w;
  std::istringstream is(text);
  std::string tok;
  bool shift_seen = false;
  while (is >> tok) {
    if (shift_seen) throw std::invalid_argument("BS word: text after the shift in '" + text + "'");
    if (tok.front() == '<') {
      if (tok.back() != '>' || tok.size() < 3) throw std::invalid_argument("BS word: bad shift '" + tok + "'");
      try {
        size_t used = 0;
        std::string body = tok.substr(1, tok.size() - 2);
        w.shift = std::stoi(body, &used);
        if (used != body.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("BS word: bad shift '" + tok + "'");
      }
      shift_seen = true;
      continue;
    }
    if (tok.size() < 2 || tok[0] != 's') throw std::invalid_argument("BS word: expected s<i>, got '" + tok + "'");
    try {
      size_t used = 0;
      int i = std::stoi(tok.substr(1), &used);
      if (used != tok.size() - 1 || i < 1) throw std::invalid_argument("");
      w.word.push_back(i);
    } catch (const std::exception&) {
      throw std::invalid_argument("BS word: bad letter '" + tok + "'");
    }
  }
  return w;
}

std::string bsword_to_string(const BSWord& w) {
  std::string s;
  for (int i : w.word) s += (s.empty() ? "s" : " s") + std::to_string(i);
  if (w.shift != 0) s += (s.empty() ? "<" : " <") + std::to_string(w.shift) + ">";
  return s.empty() ? "e" : s;
}

HeckeElement grothendieck_class(const BSWord& w, int m) {
  HeckeElement x = HeckeElement::unit(m);
  for (int i : w.word) {
    if (i < 1 || i >= m) throw std::invalid_argument("grothendieck_class: letter s" + std::to_string(i) + " out of range");
    x = hecke_mul(x, kl_element(simple_reflection(m, i)));
  }
  return x.scaled(Laurent::mono(-w.shift));
}

HeckeElement grothendieck_class(const std::vector<BSWord>& sum, int m) {
  HeckeElement x;
  x.m = m;
  for (auto& w : sum) x += grothendieck_class(w, m);
  return x;
}

RelationResult verify_relation(const std::vector<BSWord>& lhs, const std::vector<BSWord>& rhs, int m) {
  RelationResult r;
  r.difference = grothendieck_class(lhs, m) - grothendieck_class(rhs, m);
  r.equal = r.difference.is_zero();
  return r;
}

RelationFile parse_relation_file(const std::string& text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("relation file: ") + e.what());
  }
  RelationFile f;
  if (!j.is_object() || !j.contains("m") || !j["m"].is_number_integer())
    throw std::invalid_argument("relation file: integer field 'm' required");
  f.m = j["m"].get<int>();
  if (f.m < 1 || f.m > 6) throw std::invalid_argument("relation file: m must be in 1..6");
  if (!j.contains("relations") || !j["relations"].is_array())
    throw std::invalid_argument("relation file: array field 'relations' required");
  auto side = [&](const json& s) {
    std::vector<BSWord> out;
    if (!s.is_object() || !s.contains("words") || !s["words"].is_array())
      throw std::invalid_argument("relation file: each side needs a 'words' array");
    for (auto& w : s["words"]) {
      BSWord b;
      if (w.is_string()) {
        b = parse_bsword(w.get<std::string>());
      } else if (w.is_array()) {
        for (auto& i : w) {
          if (!i.is_number_integer()) throw std::invalid_argument("relation file: word letters must be integers");
          b.word.push_back(i.get<int>());
        }
      } else {
        throw std::invalid_argument("relation file: a word must be a string or an integer list");
      }
      for (int i : b.word)
        if (i < 1 || i >= f.m) throw std::invalid_argument("relation file: letter s" + std::to_string(i) + " out of range");
      out.push_back(b);
    }
    if (s.contains("shifts")) {
      if (!s["shifts"].is_array() || s["shifts"].size() != out.size())
        throw std::invalid_argument("relation file: 'shifts' must match 'words' in length");
      for (size_t k = 0; k < out.size(); ++k) {
        if (!s["shifts"][k].is_number_integer()) throw std::invalid_argument("relation file: shifts must be integers");
        out[k].shift += s["shifts"][k].get<int>();
      }
    }
    return out;
  };
  for (auto& r : j["relations"]) {
    if (!r.is_object() || !r.contains("lhs") || !r.contains("rhs"))
      throw std::invalid_argument("relation file: each relation needs 'lhs' and 'rhs'");
    f.relations.push_back({side(r["lhs"]), side(r["rhs"])});
  }
  return f;
}

BSPresentation bs_presentation(const BSWord& w, int m, int unit) {
  Permutation p = identity_perm(m);
  for (int i : w.word) {
    if (i < 1 || i >= m) throw std::invalid_argument("bs_presentation: letter out of range");
    p = perm_mul(p, simple_reflection(m, i));
  }
  if (perm_length(p) != static_cast<int>(w.word.size()))
    throw std::invalid_argument("bs_presentation: unsupported word '" + bsword_to_string(w) + "' (not reduced)");
  // p must reverse consecutive blocks
  BSPresentation out;
  int k = 0;
  while (k < m) {
    int end = p[k];
    if (end < k + 1) throw std::invalid_argument("bs_presentation: unsupported word '" + bsword_to_string(w) + "'");
    for (int j = k; j < end; ++j)
      if (p[j] != end - (j - k))
        throw std::invalid_argument("bs_presentation: unsupported word '" + bsword_to_string(w) +
                                    "' (not a longest element of a parabolic subgroup)");
    if (end - k >= 2) out.blocks.push_back({k + 1, end - k});
    k = end;
  }
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 1; i <= m; ++i) names.push_back("y" + std::to_string(i));
  out.ring = make_ring(names, std::vector<int>(2 * m, unit));
  std::vector<bool> covered(m, false);
  for (auto [first, size] : out.blocks) {
    std::vector<Poly> xs, ys;
    for (int j = first; j < first + size; ++j) {
      covered[j - 1] = true;
      xs.push_back(Poly::var(out.ring, j - 1));
      ys.push_back(Poly::var(out.ring, m + j - 1));
    }
    for (int l = 1; l <= size; ++l) out.relations.push_back(elementary_symmetric(xs, l) - elementary_symmetric(ys, l));
    out.shift += size * (size - 1) / 2;
  }
  for (int j = 0; j < m; ++j)
    if (!covered[j]) out.relations.push_back(Poly::var(out.ring, j) - Poly::var(out.ring, m + j));
  out.shift += w.shift;
  return out;
}

}  // namespace gmf
