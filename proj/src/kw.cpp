#include "gmf/kw.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace gmf {

namespace {

Mat zeros(size_t r, size_t c, const RingPtr& ring) { return Mat(r, c, ring); }

int sign(int k) { return (k % 2 == 0) ? 1 : -1; }

Mat signed_mat(const Mat& m, int sgn) { return sgn > 0 ? m : -m; }

// copy block b into m at (r0, c0)
void put(Mat& m, size_t r0, size_t c0, const Mat& b) {
  for (size_t i = 0; i < b.rows; ++i)
    for (size_t j = 0; j < b.cols; ++j) m(r0 + i, c0 + j) = b(i, j);
}

GradedFreeModule empty_module(const RingPtr& r) { return GradedFreeModule{r, {}}; }

// Allocates terms lo..hi and fills del/s from callbacks giving maps out of degree k.
template <class Term, class Del, class S>
KwModule build(const RingPtr& ring, const Poly& w, int d, int lo, int hi, Term term, Del del, S s) {
  KwModule m;
  m.ring = ring;
  m.w = w;
  m.d = d;
  m.lo = lo;
  if (hi < lo) return m;
  for (int k = lo; k <= hi; ++k) m.terms.push_back(term(k));
  for (int k = lo; k <= hi; ++k) {
    size_t src = m.rank(k);
    m.del.push_back(k < hi ? del(k) : zeros(0, src, ring));
    m.s.push_back(k > lo ? s(k) : zeros(0, src, ring));
  }
  return m;
}

// Block layout of a fold: for each cohomological degree (descending), the
// offset of its block in M0 (even degrees) or M1 (odd degrees).
struct FoldLayout {
  std::map<int, size_t> offset;
  size_t rank0 = 0, rank1 = 0;
};

bool is_even(int k) { return k % 2 == 0; }

FoldLayout fold_layout(const KwModule& m) {
  FoldLayout l;
  for (int k = m.hi(); k >= m.lo; --k) {
    size_t& r = is_even(k) ? l.rank0 : l.rank1;
    l.offset[k] = r;
    r += m.rank(k);
  }
  return l;
}

// n with F^k placed at <-nd>: k = 2n or k = 2n - 1
int fold_index(int k) { return is_even(k) ? k / 2 : (k + 1) / 2; }

}  // namespace

GradedFreeModule KwModule::term(int k) const { return in_range(k) ? terms[k - lo] : empty_module(ring); }

Mat KwModule::del_at(int k) const {
  if (in_range(k) && in_range(k + 1)) return del[k - lo];
  return zeros(rank(k + 1), rank(k), ring);
}

Mat KwModule::s_at(int k) const {
  if (in_range(k) && in_range(k - 1)) return s[k - lo];
  return zeros(rank(k - 1), rank(k), ring);
}

bool KwModule::is_zero() const {
  for (auto& t : terms)
    if (t.rank()) return false;
  return true;
}

Mat KwMorphism::at(int k) const {
  if (auto it = phi.find(k); it != phi.end()) return it->second;
  return zeros(target.rank(k), source.rank(k), source.ring ? source.ring : target.ring);
}

Report validate_kw(const KwModule& m) {
  Report r;
  if (m.del.size() != m.terms.size() || m.s.size() != m.terms.size()) {
    r.fail("map lists do not match the terms");
    return r;
  }
  if (!m.w.is_zero() && m.w.degree() != m.d) r.fail("potential is not homogeneous of degree " + std::to_string(m.d));
  for (int k = m.lo; k <= m.hi(); ++k) {
    std::string at = " at degree " + std::to_string(k);
    Mat dk = m.del_at(k), sk = m.s_at(k);
    if (dk.rows != m.rank(k + 1) || dk.cols != m.rank(k)) {
      r.fail("del has the wrong shape" + at);
      continue;
    }
    if (sk.rows != m.rank(k - 1) || sk.cols != m.rank(k)) {
      r.fail("s has the wrong shape" + at);
      continue;
    }
    if (auto e = GradedMatrix{m.term(k), m.term(k + 1), 0, dk}.check_homogeneity(); !e.empty())
      r.fail("del" + at + ": " + e);
    if (auto e = GradedMatrix{m.term(k), m.term(k - 1), m.d, sk}.check_homogeneity(); !e.empty())
      r.fail("s" + at + ": " + e);
  }
  if (!r.ok) return r;
  for (int k = m.lo; k <= m.hi(); ++k) {
    std::string at = " at degree " + std::to_string(k);
    if (!(m.del_at(k + 1) * m.del_at(k)).is_zero()) r.fail("del^2 != 0" + at);
    if (!(m.s_at(k - 1) * m.s_at(k)).is_zero()) r.fail("s^2 != 0" + at);
    Mat h = m.del_at(k - 1) * m.s_at(k) + m.s_at(k + 1) * m.del_at(k);
    if (h != Mat::scalar(m.rank(k), m.w)) r.fail("del s + s del != w" + at);
  }
  return r;
}

void require_valid_kw(const KwModule& m, const char* where) {
  Report r = validate_kw(m);
  if (!r.ok) throw std::logic_error(std::string(where) + ": invalid K_w-module: " + r.to_string());
}

Report check_kw_morphism(const KwMorphism& phi) {
  Report r;
  const KwModule &P = phi.source, &Q = phi.target;
  if (!same_ring(P.ring, Q.ring) || P.w != Q.w || P.d != Q.d) {
    r.fail("source and target differ in ring or potential");
    return r;
  }
  for (auto& [k, m] : phi.phi)
    if (m.rows != Q.rank(k) || m.cols != P.rank(k)) r.fail("map at degree " + std::to_string(k) + " has the wrong shape");
  if (!r.ok) return r;
  int lo = std::min(P.lo, Q.lo), hi = std::max(P.hi(), Q.hi());
  for (int k = lo; k <= hi; ++k) {
    std::string at = " at degree " + std::to_string(k);
    Mat f = phi.at(k);
    if (auto e = GradedMatrix{P.term(k), Q.term(k), 0, f}.check_homogeneity(); !e.empty()) r.fail("map" + at + ": " + e);
    if (phi.at(k + 1) * P.del_at(k) != Q.del_at(k) * f) r.fail("does not commute with del" + at);
    if (phi.at(k - 1) * P.s_at(k) != Q.s_at(k) * f) r.fail("does not commute with s" + at);
  }
  return r;
}

long long complex_homology(const FreeComplex& c, int k, int e) {
  auto term = [&](int j) {
    return (j >= c.lo && j <= c.hi()) ? c.terms[j - c.lo] : empty_module(c.ring);
  };
  auto del = [&](int j) {
    if (j >= c.lo && j < c.hi()) return c.del[j - c.lo];
    return zeros(term(j + 1).rank(), term(j).rank(), c.ring);
  };
  GradedMatrix a{term(k), term(k + 1), 0, del(k)};
  GradedMatrix b{term(k - 1), term(k), 0, del(k - 1)};
  return homology_mod_w(a, b, c.w, c.d, e);
}

KwModule zero_kw(const RingPtr& ring, const Poly& w, int d) {
  KwModule m;
  m.ring = ring;
  m.w = w;
  m.d = d;
  return m;
}

KwModule koszul_algebra(const RingPtr& ring, const Poly& w, int d) {
  KwModule m = build(
      ring, w, d, -1, 0, [&](int k) { return GradedFreeModule{ring, {k == -1 ? -d : 0}}; },
      [&](int) { return Mat::scalar(1, w); }, [&](int) { return Mat::identity(1, ring); });
  require_valid_kw(m, "koszul_algebra");
  return m;
}

KwModule kw_from_homotopies(const HigherHomotopies& h) {
  const FreeResolution& f = h.res;
  int N = f.length();
  for (size_t n = 2; n < h.s.size(); ++n)
    for (auto& x : h.s[n])
      if (!x.is_zero()) throw std::invalid_argument("kw_from_homotopies: higher homotopies are not zero");
  auto s1 = [&](int k) -> Mat {  // F^{-k} -> F^{-k-1}
    const Mat* p = h.map(1, k);
    return p ? *p : zeros(f.terms[k + 1].rank(), f.terms[k].rank(), f.ring);
  };
  KwModule m = build(
      f.ring, h.w, h.d, -N, 0, [&](int k) { return f.terms[-k]; }, [&](int k) { return f.diff(-k); },
      [&](int k) { return s1(-k); });
  require_valid_kw(m, "kw_from_homotopies");
  return m;
}

MF fold(const KwModule& m) {
  FoldLayout l = fold_layout(m);
  MF r;
  r.ring = m.ring;
  r.w = m.w;
  r.d = m.d;
  r.m0 = empty_module(m.ring);
  r.m1 = empty_module(m.ring);
  for (int k = m.hi(); k >= m.lo; --k) {
    auto& target = is_even(k) ? r.m0 : r.m1;
    for (int sh : m.term(k).shifts) target.shifts.push_back(sh - fold_index(k) * m.d);
  }
  r.f = zeros(l.rank1, l.rank0, m.ring);
  r.g = zeros(l.rank0, l.rank1, m.ring);
  for (int k = m.lo; k <= m.hi(); ++k) {
    Mat& out = is_even(k) ? r.f : r.g;
    if (m.in_range(k + 1)) put(out, l.offset[k + 1], l.offset[k], m.del_at(k));
    if (m.in_range(k - 1)) put(out, l.offset[k - 1], l.offset[k], m.s_at(k));
  }
  require_valid(r, "fold");
  return r;
}

MFMorphism fold_morphism(const KwMorphism& phi) {
  MFMorphism r;
  r.source = fold(phi.source);
  r.target = fold(phi.target);
  FoldLayout ls = fold_layout(phi.source), lt = fold_layout(phi.target);
  r.alpha = zeros(lt.rank0, ls.rank0, r.source.ring);
  r.beta = zeros(lt.rank1, ls.rank1, r.source.ring);
  for (int k = phi.source.lo; k <= phi.source.hi(); ++k) {
    if (!phi.target.in_range(k)) continue;
    put(is_even(k) ? r.alpha : r.beta, lt.offset[k], ls.offset[k], phi.at(k));
  }
  return r;
}

KwModule iota(const MF& m) {
  KwModule r = build(
      m.ring, m.w, m.d, -1, 0, [&](int k) { return k == -1 ? m.m1 : m.m0; }, [&](int) { return m.g; },
      [&](int) { return m.f; });
  require_valid_kw(r, "iota");
  return r;
}

namespace {

// summands of degree n of M (x) N, i descending, with offsets
struct TensorLayout {
  std::map<int, std::vector<std::pair<int, size_t>>> blocks;  // n -> (i, offset)
  std::map<int, size_t> rank;
};

TensorLayout tensor_layout(const KwModule& m, const KwModule& n) {
  TensorLayout t;
  for (int deg = m.lo + n.lo; deg <= m.hi() + n.hi(); ++deg) {
    size_t off = 0;
    for (int i = m.hi(); i >= m.lo; --i) {
      int j = deg - i;
      if (!n.in_range(j)) continue;
      t.blocks[deg].push_back({i, off});
      off += m.rank(i) * n.rank(j);
    }
    t.rank[deg] = off;
  }
  return t;
}

}  // namespace

KwModule tensor_kw(const KwModule& m, const KwModule& n) {
  if (!same_ring(m.ring, n.ring)) throw std::invalid_argument("tensor_kw: ring mismatch");
  if (m.d != n.d) throw std::invalid_argument("tensor_kw: potential degree mismatch");
  RingPtr ring = m.ring;
  if (m.terms.empty() || n.terms.empty()) return zero_kw(ring, m.w + n.w, m.d);
  TensorLayout t = tensor_layout(m, n);
  auto term = [&](int deg) {
    GradedFreeModule g = empty_module(ring);
    for (auto [i, off] : t.blocks[deg]) g = direct_sum(g, tensor_modules(m.term(i), n.term(deg - i)));
    return g;
  };
  // maps of degree +1 (del) or -1 (s) out of total degree deg
  auto map = [&](int deg, int step, bool is_del) {
    int to = deg + step;
    Mat out = zeros(t.rank[to], t.rank[deg], ring);
    std::map<int, size_t> target_off;
    for (auto [i, off] : t.blocks[to]) target_off[i] = off;
    for (auto [i, off] : t.blocks[deg]) {
      int j = deg - i;
      Mat Im = Mat::identity(m.rank(i), ring), In = Mat::identity(n.rank(j), ring);
      // first factor moves: M^i -> M^{i+step}
      if (auto it = target_off.find(i + step); it != target_off.end()) {
        Mat a = is_del ? m.del_at(i) : m.s_at(i);
        put(out, it->second, off, kron(a, In));
      }
      // second factor moves with the Koszul sign
      if (auto it = target_off.find(i); it != target_off.end() && n.in_range(j + step)) {
        Mat b = is_del ? n.del_at(j) : n.s_at(j);
        put(out, it->second, off, signed_mat(kron(Im, b), sign(i)));
      }
    }
    return out;
  };
  KwModule r = build(
      ring, m.w + n.w, m.d, m.lo + n.lo, m.hi() + n.hi(), term, [&](int deg) { return map(deg, 1, true); },
      [&](int deg) { return map(deg, -1, false); });
  require_valid_kw(r, "tensor_kw");
  return r;
}

KwModule kw_dual(const KwModule& m) {
  RingPtr ring = m.ring;
  if (m.terms.empty()) return zero_kw(ring, m.w, m.d);
  auto term = [&](int n) {
    GradedFreeModule g = empty_module(ring);
    for (int sh : m.term(-(n + 1)).shifts) g.shifts.push_back(-sh - m.d);
    return g;
  };
  KwModule r = build(
      ring, m.w, m.d, -(m.hi() + 1), -(m.lo + 1), term,
      [&](int n) { return signed_mat(m.del_at(-(n + 2)).transpose(), sign(n + 1)); },
      [&](int n) { return signed_mat(m.s_at(-n).transpose(), sign(n)); });
  require_valid_kw(r, "kw_dual");
  return r;
}

KwModule swap_ds(const KwModule& m) {
  RingPtr ring = m.ring;
  if (m.terms.empty()) return zero_kw(ring, m.w, m.d);
  auto term = [&](int n) { return m.term(1 - n).shifted(n * m.d); };
  KwModule r = build(
      ring, m.w, m.d, 1 - m.hi(), 1 - m.lo, term, [&](int n) { return -m.s_at(1 - n); },
      [&](int n) { return -m.del_at(1 - n); });
  require_valid_kw(r, "swap_ds");
  return r;
}

KwModule kw_shift(const KwModule& m, int k) {
  KwModule r = m;
  r.lo = m.lo - k;
  if (k % 2 != 0) {
    for (auto& x : r.del) x = -x;
    for (auto& x : r.s) x = -x;
  }
  return r;
}

KwMorphism kw_identity(const KwModule& m) {
  KwMorphism id{m, m, {}};
  for (int k = m.lo; k <= m.hi(); ++k) id.phi[k] = Mat::identity(m.rank(k), m.ring);
  return id;
}

KwModule kw_cone(const KwMorphism& phi) {
  Report rep = check_kw_morphism(phi);
  if (!rep.ok) throw std::invalid_argument("kw_cone: invalid morphism: " + rep.to_string());
  const KwModule &P = phi.source, &Q = phi.target;
  RingPtr ring = Q.ring ? Q.ring : P.ring;
  bool p_empty = P.terms.empty(), q_empty = Q.terms.empty();
  if (p_empty && q_empty) return zero_kw(ring, Q.w, Q.d);
  int lo = q_empty ? P.lo - 1 : p_empty ? Q.lo : std::min(Q.lo, P.lo - 1);
  int hi = q_empty ? P.hi() - 1 : p_empty ? Q.hi() : std::max(Q.hi(), P.hi() - 1);
  auto term = [&](int k) { return direct_sum(Q.term(k), P.term(k + 1)); };
  auto del = [&](int k) {
    return block2(Q.del_at(k), phi.at(k + 1), zeros(P.rank(k + 2), Q.rank(k), ring), -P.del_at(k + 1));
  };
  auto s = [&](int k) {
    return block2(Q.s_at(k), zeros(Q.rank(k - 1), P.rank(k + 1), ring), zeros(P.rank(k), Q.rank(k), ring),
                  -P.s_at(k + 1));
  };
  KwModule r = build(ring, Q.w, Q.d, lo, hi, term, del, s);
  require_valid_kw(r, "kw_cone");
  return r;
}

MFMorphism fold_tensor_iso(const KwModule& m, const KwModule& n) {
  MFMorphism iso;
  iso.source = fold(tensor_kw(m, n));
  iso.target = tensor_mf(fold(m), fold(n));
  RingPtr ring = m.ring;
  KwModule t = tensor_kw(m, n);
  FoldLayout lt = fold_layout(t), lm = fold_layout(m), ln = fold_layout(n);
  TensorLayout tl = tensor_layout(m, n);
  iso.alpha = zeros(iso.target.rank0(), iso.source.rank0(), ring);
  iso.beta = zeros(iso.target.rank1(), iso.source.rank1(), ring);
  size_t m0 = lm.rank0, n0 = ln.rank0, n1 = ln.rank1;
  for (int deg = t.lo; deg <= t.hi(); ++deg)
    for (auto [i, off] : tl.blocks[deg]) {
      int j = deg - i;
      for (size_t a = 0; a < m.rank(i); ++a)
        for (size_t b = 0; b < n.rank(j); ++b) {
          size_t src = lt.offset[deg] + off + a * n.rank(j) + b;
          size_t ia = lm.offset[i] + a, jb = ln.offset[j] + b;
          size_t dst;
          if (is_even(deg))
            dst = is_even(i) ? ia * n0 + jb : m0 * n0 + ia * n1 + jb;
          else
            dst = is_even(i) ? ia * n1 + jb : m0 * n1 + ia * n0 + jb;
          (is_even(deg) ? iso.alpha : iso.beta)(dst, src) = Poly(ring, 1);
        }
    }
  return iso;
}

MFMorphism fold_dual_iso(const KwModule& m) {
  MFMorphism iso;
  KwModule dm = kw_dual(m);
  iso.source = fold(dm);
  MF fm = fold(m);
  iso.target = dualize(fm, DualKind::wdual);
  RingPtr ring = m.ring;
  FoldLayout ld = fold_layout(dm), lm = fold_layout(m);
  iso.alpha = zeros(iso.target.rank0(), iso.source.rank0(), ring);
  iso.beta = zeros(iso.target.rank1(), iso.source.rank1(), ring);
  // D^n is the dual of M^{-(n+1)}; the dual of an odd M-term is even and vice versa
  for (int n = dm.lo; n <= dm.hi(); ++n) {
    int k = -(n + 1);
    int eps = sign(n * (n + 1) / 2);
    for (size_t a = 0; a < dm.rank(n); ++a)
      (is_even(n) ? iso.alpha : iso.beta)(lm.offset[k] + a, ld.offset[n] + a) = Poly(ring, eps);
  }
  return iso;
}

BarTruncation bar_truncate(const KwModule& m, int depth) {
  if (depth < 0) throw std::invalid_argument("bar_truncate: negative depth");
  RingPtr ring = m.ring;
  int d = m.d;
  BarTruncation out;
  out.depth = depth;
  // generator (a, n, j): a = 0 for 1, a = 1 for s; cohomological degree j - a - 2n
  struct Block {
    int a, n, j;
    size_t off;
  };
  std::map<int, std::vector<Block>> blocks;
  std::map<int, size_t> rank;
  if (!m.terms.empty()) {
    for (int a = 0; a <= 1; ++a)
      for (int n = 0; n <= depth; ++n)
        for (int j = m.lo; j <= m.hi(); ++j) {
          int k = j - a - 2 * n;
          blocks[k].push_back({a, n, j, 0});
        }
    for (auto& [k, bs] : blocks) {
      size_t off = 0;
      for (auto& b : bs) {
        b.off = off;
        off += m.rank(b.j);
      }
      rank[k] = off;
    }
  }
  auto find = [&](int k, int a, int n, int j) -> const Block* {
    auto it = blocks.find(k);
    if (it == blocks.end()) return nullptr;
    for (auto& b : it->second)
      if (b.a == a && b.n == n && b.j == j) return &b;
    return nullptr;
  };
  auto term = [&](int k) {
    GradedFreeModule g = empty_module(ring);
    for (auto& b : blocks[k])
      for (int sh : m.term(b.j).shifts) g.shifts.push_back(sh - b.n * d - b.a * d);
    return g;
  };
  auto del = [&](int k) {
    Mat out = zeros(rank[k + 1], rank[k], ring);
    for (auto& b : blocks[k]) {
      int sa = b.a ? -1 : 1;  // (-1)^{|a|}
      size_t r = m.rank(b.j);
      if (b.a == 1)  // del(s) = w
        if (auto t = find(k + 1, 0, b.n, b.j)) put(out, t->off, b.off, Mat::scalar(r, m.w));
      if (auto t = find(k + 1, b.a, b.n, b.j + 1)) put(out, t->off, b.off, signed_mat(m.del_at(b.j), sa));
      if (b.n >= 1) {
        if (b.a == 0)  // -(a s) (x) t^{n-1} (x) m
          if (auto t = find(k + 1, 1, b.n - 1, b.j)) put(out, t->off, b.off, -Mat::identity(r, ring));
        if (auto t = find(k + 1, b.a, b.n - 1, b.j - 1)) put(out, t->off, b.off, signed_mat(m.s_at(b.j), sa));
      }
    }
    return out;
  };
  auto s = [&](int k) {
    Mat out = zeros(rank[k - 1], rank[k], ring);
    for (auto& b : blocks[k])
      if (b.a == 0)
        if (auto t = find(k - 1, 1, b.n, b.j)) put(out, t->off, b.off, Mat::identity(m.rank(b.j), ring));
    return out;
  };
  if (blocks.empty()) {
    out.module = zero_kw(ring, m.w, d);
  } else {
    out.module = build(ring, m.w, d, blocks.begin()->first, blocks.rbegin()->first, term, del, s);
    require_valid_kw(out.module, "bar_truncate");
  }
  out.comparison.source = out.module;
  out.comparison.target = m;
  for (auto& [k, bs] : blocks) {
    if (!m.in_range(k)) continue;
    Mat e = zeros(m.rank(k), rank[k], ring);
    for (auto& b : bs) {
      if (b.n != 0) continue;
      if (b.a == 0)
        put(e, 0, b.off, Mat::identity(m.rank(k), ring));
      else
        put(e, 0, b.off, m.s_at(b.j));
    }
    out.comparison.phi[k] = e;
  }
  return out;
}

int bar_required_depth(const KwModule& m, int hi) {
  if (m.d <= 0) throw std::invalid_argument("bar_required_depth: potential degree must be positive");
  std::optional<int> mindeg;
  for (auto& t : m.terms)
    for (int sh : t.shifts) mindeg = std::min(mindeg.value_or(-sh), -sh);
  if (!mindeg || hi < *mindeg) return 0;
  return (hi - *mindeg) / m.d;
}

FreeComplex bar_mod_w(const KwModule& m, int depth) {
  if (depth < 0) throw std::invalid_argument("bar_mod_w: negative depth");
  FreeComplex c;
  c.ring = m.ring;
  c.w = m.w;
  c.d = m.d;
  if (m.terms.empty()) return c;
  // t^n (x) M^j in degree j - 2n, n ascending within a degree
  int lo = m.lo - 2 * depth, hi = m.hi();
  c.lo = lo;
  auto parts = [&](int k) {
    std::vector<std::pair<int, size_t>> p;  // (n, offset)
    size_t off = 0;
    for (int n = 0; n <= depth; ++n) {
      int j = k + 2 * n;
      if (!m.in_range(j)) continue;
      p.push_back({n, off});
      off += m.rank(j);
    }
    return std::make_pair(p, off);
  };
  for (int k = lo; k <= hi; ++k) {
    GradedFreeModule g = empty_module(m.ring);
    for (auto [n, off] : parts(k).first)
      for (int sh : m.term(k + 2 * n).shifts) g.shifts.push_back(sh - n * m.d);
    c.terms.push_back(g);
  }
  for (int k = lo; k < hi; ++k) {
    auto [src, sr] = parts(k);
    auto [tgt, tr] = parts(k + 1);
    Mat out = zeros(tr, sr, m.ring);
    auto at = [&](int n) -> std::optional<size_t> {
      for (auto [tn, off] : tgt)
        if (tn == n) return off;
      return std::nullopt;
    };
    for (auto [n, off] : src) {
      int j = k + 2 * n;
      if (auto t = at(n); t && m.in_range(j + 1)) put(out, *t, off, m.del_at(j));
      if (n >= 1)
        if (auto t = at(n - 1); t && m.in_range(j - 1)) put(out, *t, off, m.s_at(j));
    }
    c.del.push_back(out);
  }
  return c;
}

FreeComplex comparison_cone(const BarTruncation& b) {
  const KwModule &Q = b.module, &M = b.comparison.target;
  FreeComplex c;
  c.ring = M.ring;
  c.w = Poly(M.ring);
  c.d = M.d;
  if (Q.terms.empty() && M.terms.empty()) return c;
  int lo = Q.terms.empty() ? M.lo : M.terms.empty() ? Q.lo - 1 : std::min(M.lo, Q.lo - 1);
  int hi = Q.terms.empty() ? M.hi() : M.terms.empty() ? Q.hi() - 1 : std::max(M.hi(), Q.hi() - 1);
  c.lo = lo;
  // cone^k = M^k + Q^{k+1}, del = [[del_M, eps], [0, -del_Q]]
  for (int k = lo; k <= hi; ++k) c.terms.push_back(direct_sum(M.term(k), Q.term(k + 1)));
  for (int k = lo; k < hi; ++k)
    c.del.push_back(block2(M.del_at(k), b.comparison.at(k + 1), zeros(Q.rank(k + 2), M.rank(k), M.ring),
                           -Q.del_at(k + 1)));
  return c;
}

}  // namespace gmf
