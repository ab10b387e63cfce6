#include "gmf/mf.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gmf {

std::string Report::to_string() const {
  if (ok) return "ok";
  std::string s;
  for (auto& p : problems) s += (s.empty() ? "" : "; ") + p;
  return s;
}

std::string MFFingerprint::to_string() const { return "(" + rank0.to_string() + ", " + rank1.to_string() + ")"; }

namespace {

Mat scalar_mat(size_t n, const Poly& w, const RingPtr& ring) {
  Mat m(n, n, ring);
  for (size_t i = 0; i < n; ++i) m(i, i) = w;
  return m;
}

std::string first_mismatch(const Mat& got, const Mat& want) {
  for (size_t i = 0; i < got.rows; ++i)
    for (size_t j = 0; j < got.cols; ++j)
      if (got(i, j) != want(i, j))
        return "(" + std::to_string(i) + "," + std::to_string(j) + "): " + got(i, j).to_string() + " != " +
               want(i, j).to_string();
  return "";
}

}  // namespace

Report validate_mf(const MF& m) {
  Report r;
  if (m.f.rows != m.m1.rank() || m.f.cols != m.m0.rank()) r.fail("f has wrong shape");
  if (m.g.rows != m.m0.rank() || m.g.cols != m.m1.rank()) r.fail("g has wrong shape");
  if (!r.ok) return r;
  if (!m.w.is_zero()) {
    auto dw = m.w.degree();
    if (!dw || *dw != m.d) r.fail("potential " + m.w.to_string() + " is not homogeneous of degree " + std::to_string(m.d));
  }
  std::string h = m.f_graded().check_homogeneity();
  if (!h.empty()) r.fail("f: " + h);
  h = m.g_graded().check_homogeneity();
  if (!h.empty()) r.fail("g: " + h);
  std::string gf = first_mismatch(m.g * m.f, scalar_mat(m.m0.rank(), m.w, m.ring));
  if (!gf.empty()) r.fail("g*f != w*id at " + gf);
  std::string fg = first_mismatch(m.f * m.g, scalar_mat(m.m1.rank(), m.w, m.ring));
  if (!fg.empty()) r.fail("f*g != w*id at " + fg);
  return r;
}

void require_valid(const MF& m, const char* where) {
  Report r = validate_mf(m);
  if (!r.ok) throw std::logic_error(std::string(where) + ": invalid factorization: " + r.to_string());
}

MF zero_mf(const RingPtr& ring, const Poly& w, int d) {
  MF m;
  m.ring = ring;
  m.w = w.ring() ? w : Poly(ring);
  m.d = d;
  m.m0 = {ring, {}};
  m.m1 = {ring, {}};
  return m;
}

MF unit_mf(const RingPtr& ring, int d) {
  MF m = zero_mf(ring, Poly(ring), d);
  m.m0.shifts = {0};
  m.f = Mat(0, 1, ring);
  m.g = Mat(1, 0, ring);
  return m;
}

MF koszul_factorization(const std::vector<Poly>& xs, const std::vector<Poly>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("koszul_factorization: length mismatch");
  if (xs.empty()) throw std::invalid_argument("koszul_factorization: empty sequence");
  RingPtr ring = xs[0].ring() ? xs[0].ring() : ys[0].ring();
  std::optional<int> d;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (!xs[i].is_homogeneous() || !ys[i].is_homogeneous())
      throw std::invalid_argument("koszul_factorization: inhomogeneous entry");
    if (!xs[i].is_zero() && !ys[i].is_zero()) {
      int di = *xs[i].degree() + *ys[i].degree();
      if (d && *d != di) throw std::invalid_argument("koszul_factorization: mixed potential degrees");
      d = di;
    }
  }
  if (!d) throw std::invalid_argument("koszul_factorization: cannot infer potential degree");
  MF acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    int dx;
    if (!xs[i].is_zero())
      dx = *xs[i].degree();
    else if (!ys[i].is_zero())
      dx = *d - *ys[i].degree();
    else
      throw std::invalid_argument("koszul_factorization: both entries zero");
    MF k;
    k.ring = ring;
    k.d = *d;
    k.w = xs[i] * ys[i];
    if (!k.w.ring()) k.w = Poly(ring);
    k.m0 = {ring, {0}};
    k.m1 = {ring, {-dx}};
    k.f = Mat(1, 1, ring);
    k.f(0, 0) = ys[i];
    k.g = Mat(1, 1, ring);
    k.g(0, 0) = xs[i];
    acc = i == 0 ? k : tensor_mf(acc, k);
  }
  return acc;
}

MF direct_sum(const MF& a, const MF& b) {
  if (a.d != b.d) throw std::invalid_argument("direct_sum: potential degree mismatch");
  if (a.w != b.w) throw std::invalid_argument("direct_sum: potential mismatch");
  MF m;
  m.ring = a.ring ? a.ring : b.ring;
  m.w = a.w;
  m.d = a.d;
  m.m0 = direct_sum(a.m0, b.m0);
  m.m1 = direct_sum(a.m1, b.m1);
  m.f = block_diag(a.f, b.f);
  m.g = block_diag(a.g, b.g);
  return m;
}

MF tensor_mf(const MF& m, const MF& n) {
  if (!same_ring(m.ring, n.ring)) throw std::invalid_argument("tensor_mf: ring mismatch");
  if (m.d != n.d) throw std::invalid_argument("tensor_mf: potential degree mismatch");
  RingPtr r = m.ring;
  MF t;
  t.ring = r;
  t.d = m.d;
  t.w = m.w + n.w;
  t.m0 = direct_sum(tensor_modules(m.m0, n.m0), tensor_modules(m.m1, n.m1).shifted(m.d));
  t.m1 = direct_sum(tensor_modules(m.m0, n.m1), tensor_modules(m.m1, n.m0));
  Mat I0 = Mat::identity(m.rank0(), r), I1 = Mat::identity(m.rank1(), r);
  Mat J0 = Mat::identity(n.rank0(), r), J1 = Mat::identity(n.rank1(), r);
  // g: [[1(x)g', g(x)1], [f(x)1, -1(x)f']]   odd -> even
  t.g = block2(kron(I0, n.g), kron(m.g, J0), kron(m.f, J1), -kron(I1, n.f));
  // f: [[1(x)f', g(x)1], [f(x)1, -1(x)g']]   even -> odd
  t.f = block2(kron(I0, n.f), kron(m.g, J1), kron(m.f, J0), -kron(I1, n.g));
  return t;
}

MF shift_mf(const MF& m, int k, int j) {
  MF r = m;
  for (; k > 0; --k) {
    MF s = r;
    s.m0 = r.m1.shifted(r.d);
    s.m1 = r.m0;
    s.f = -r.g;
    s.g = -r.f;
    r = s;
  }
  for (; k < 0; ++k) {
    MF s = r;
    s.m0 = r.m1;
    s.m1 = r.m0.shifted(-r.d);
    s.f = -r.g;
    s.g = -r.f;
    r = s;
  }
  r.m0 = r.m0.shifted(j);
  r.m1 = r.m1.shifted(j);
  return r;
}

MF cone_mf(const MFMorphism& phi) {
  Report rep = check_morphism(phi);
  if (!rep.ok) throw std::invalid_argument("cone_mf: invalid morphism: " + rep.to_string());
  const MF& M = phi.source;
  const MF& N = phi.target;
  MF c;
  c.ring = N.ring;
  c.w = N.w;
  c.d = N.d;
  c.m0 = direct_sum(N.m0, M.m1.shifted(M.d));
  c.m1 = direct_sum(N.m1, M.m0);
  c.f = block2(N.f, phi.beta, Mat(M.rank0(), N.rank0(), c.ring), -M.g);
  c.g = block2(N.g, phi.alpha, Mat(M.rank1(), N.rank1(), c.ring), -M.f);
  return c;
}

MF dualize(const MF& m, DualKind kind) {
  MF r = m;
  switch (kind) {
    case DualKind::star:
      r.w = -m.w;
      r.m0.shifts.clear();
      for (int s : m.m0.shifts) r.m0.shifts.push_back(-s);
      r.m1.shifts.clear();
      for (int s : m.m1.shifts) r.m1.shifts.push_back(-s - m.d);
      r.f = -m.g.transpose();
      r.g = m.f.transpose();
      break;
    case DualKind::wdual:
      r.m0.shifts.clear();
      for (int s : m.m1.shifts) r.m0.shifts.push_back(-s - m.d);
      r.m1.shifts.clear();
      for (int s : m.m0.shifts) r.m1.shifts.push_back(-s - m.d);
      r.f = m.f.transpose();
      r.g = m.g.transpose();
      break;
    case DualKind::sigma:
      r.w = -m.w;
      r.f = -m.f;
      break;
  }
  return r;
}

namespace {

// hom(A, B) basis E_ij (source j major, target i minor), shift t_i - s_j
GradedFreeModule hom_module(const GradedFreeModule& a, const GradedFreeModule& b, int extra) {
  GradedFreeModule h{a.ring ? a.ring : b.ring, {}};
  for (int s : a.shifts)
    for (int t : b.shifts) h.shifts.push_back(t - s + extra);
  return h;
}

// phi -> X phi on hom(P, Q) -> hom(P, Q'), X: Q -> Q'
Mat post(const Mat& x, size_t rank_p, const RingPtr& r) { return kron(Mat::identity(rank_p, r), x); }
// phi -> phi Y on hom(P, Q) -> hom(P', Q), Y: P' -> P
Mat pre(const Mat& y, size_t rank_q, const RingPtr& r) { return kron(y.transpose(), Mat::identity(rank_q, r)); }

}  // namespace

MF hom_factorization(const MF& m, const MF& n) {
  if (!same_ring(m.ring, n.ring)) throw std::invalid_argument("hom_factorization: ring mismatch");
  if (m.d != n.d) throw std::invalid_argument("hom_factorization: potential degree mismatch");
  RingPtr r = m.ring;
  MF h;
  h.ring = r;
  h.d = m.d;
  h.w = n.w - m.w;
  h.m0 = direct_sum(hom_module(m.m0, n.m0, 0), hom_module(m.m1, n.m1, 0));
  h.m1 = direct_sum(hom_module(m.m0, n.m1, 0), hom_module(m.m1, n.m0, -m.d));
  size_t a0 = m.rank0(), a1 = m.rank1(), b0 = n.rank0(), b1 = n.rank1();
  // f_hom = [[f' o -, -(- o f)], [-(- o g), g' o -]]
  h.f = block2(post(n.f, a0, r), -pre(m.f, b1, r), -pre(m.g, b0, r), post(n.g, a1, r));
  // g_hom = [[g' o -, - o f], [- o g, f' o -]]
  h.g = block2(post(n.g, a0, r), pre(m.f, b0, r), pre(m.g, b1, r), post(n.f, a1, r));
  return h;
}

MF change_ring(const MF& m, const RingPtr& target) {
  MF r = m;
  r.ring = target;
  r.w = m.w.embed(target);
  r.m0.ring = target;
  r.m1.ring = target;
  auto emb = [&](const Poly& p) { return p.embed(target); };
  r.f = m.f.map(emb);
  r.g = m.g.map(emb);
  return r;
}

Report check_morphism(const MFMorphism& phi) {
  Report r;
  const MF &M = phi.source, &N = phi.target;
  if (phi.alpha.rows != N.rank0() || phi.alpha.cols != M.rank0()) r.fail("alpha has wrong shape");
  if (phi.beta.rows != N.rank1() || phi.beta.cols != M.rank1()) r.fail("beta has wrong shape");
  if (!r.ok) return r;
  std::string h = GradedMatrix{M.m0, N.m0, 0, phi.alpha}.check_homogeneity();
  if (!h.empty()) r.fail("alpha: " + h);
  h = GradedMatrix{M.m1, N.m1, 0, phi.beta}.check_homogeneity();
  if (!h.empty()) r.fail("beta: " + h);
  std::string s = first_mismatch(N.f * phi.alpha, phi.beta * M.f);
  if (!s.empty()) r.fail("f' alpha != beta f at " + s);
  s = first_mismatch(N.g * phi.beta, phi.alpha * M.g);
  if (!s.empty()) r.fail("g' beta != alpha g at " + s);
  return r;
}

MFMorphism identity_morphism(const MF& m) {
  return {m, m, Mat::identity(m.rank0(), m.ring), Mat::identity(m.rank1(), m.ring)};
}

MFMorphism zero_morphism(const MF& m, const MF& n) {
  return {m, n, Mat(n.rank0(), m.rank0(), m.ring), Mat(n.rank1(), m.rank1(), m.ring)};
}

MFMorphism compose(const MFMorphism& second, const MFMorphism& first) {
  return {first.source, second.target, second.alpha * first.alpha, second.beta * first.beta};
}

Report check_homotopy(const MFMorphism& phi, const MFMorphism& psi, const MFHomotopy& h) {
  Report r;
  const MF &M = phi.source, &N = phi.target;
  if (h.D0.rows != N.rank1() || h.D0.cols != M.rank0() || h.D1.rows != N.rank0() || h.D1.cols != M.rank1()) {
    r.fail("homotopy has wrong shape");
    return r;
  }
  std::string s = first_mismatch(N.g * h.D0 + h.D1 * M.f, phi.alpha - psi.alpha);
  if (!s.empty()) r.fail("g' D0 + D1 f != alpha - alpha' at " + s);
  s = first_mismatch(N.f * h.D1 + h.D0 * M.g, phi.beta - psi.beta);
  if (!s.empty()) r.fail("f' D1 + D0 g != beta - beta' at " + s);
  std::string hd = GradedMatrix{M.m0, N.m1, 0, h.D0}.check_homogeneity();
  if (!hd.empty()) r.fail("D0: " + hd);
  hd = GradedMatrix{M.m1, N.m0, -M.d, h.D1}.check_homogeneity();
  if (!hd.empty()) r.fail("D1: " + hd);
  return r;
}

bool same_data(const MF& a, const MF& b) {
  return same_ring(a.ring, b.ring) && a.d == b.d && a.w == b.w && a.m0.shifts == b.m0.shifts &&
         a.m1.shifts == b.m1.shifts && a.f == b.f && a.g == b.g;
}

MF permute_mf(const MF& m, const std::vector<size_t>& p0, const std::vector<size_t>& p1) {
  // new generator k of M0 is old generator p0[k]
  MF r = m;
  for (size_t k = 0; k < p0.size(); ++k) r.m0.shifts[k] = m.m0.shifts[p0[k]];
  for (size_t k = 0; k < p1.size(); ++k) r.m1.shifts[k] = m.m1.shifts[p1[k]];
  r.f = m.f.select(p1, p0);
  r.g = m.g.select(p0, p1);
  return r;
}

std::optional<std::pair<std::vector<size_t>, std::vector<size_t>>> same_up_to_reordering(const MF& a, const MF& b) {
  if (!same_ring(a.ring, b.ring) || a.d != b.d || a.w != b.w) return std::nullopt;
  size_t n0 = a.rank0(), n1 = a.rank1();
  if (b.rank0() != n0 || b.rank1() != n1) return std::nullopt;
  // signatures: shift plus sorted entries of incident rows/columns
  auto sig0 = [](const MF& m, size_t j) {
    std::vector<std::string> s;
    for (size_t i = 0; i < m.rank1(); ++i) s.push_back("f" + m.f(i, j).to_string());
    for (size_t i = 0; i < m.rank1(); ++i) s.push_back("g" + m.g(j, i).to_string());
    std::sort(s.begin(), s.end());
    s.push_back(std::to_string(m.m0.shifts[j]));
    return s;
  };
  auto sig1 = [](const MF& m, size_t j) {
    std::vector<std::string> s;
    for (size_t i = 0; i < m.rank0(); ++i) s.push_back("g" + m.g(i, j).to_string());
    for (size_t i = 0; i < m.rank0(); ++i) s.push_back("f" + m.f(j, i).to_string());
    std::sort(s.begin(), s.end());
    s.push_back(std::to_string(m.m1.shifts[j]));
    return s;
  };
  std::vector<std::vector<std::string>> sa0, sb0, sa1, sb1;
  for (size_t j = 0; j < n0; ++j) sa0.push_back(sig0(a, j)), sb0.push_back(sig0(b, j));
  for (size_t j = 0; j < n1; ++j) sa1.push_back(sig1(a, j)), sb1.push_back(sig1(b, j));
  // map a-generator -> b-generator
  std::vector<long> m0(n0, -1), m1(n1, -1);
  std::vector<bool> used0(n0), used1(n1);
  // order of assignment: alternate M0, M1
  std::vector<std::pair<int, size_t>> order;
  for (size_t k = 0; k < std::max(n0, n1); ++k) {
    if (k < n0) order.push_back({0, k});
    if (k < n1) order.push_back({1, k});
  }
  std::function<bool(size_t)> rec = [&](size_t pos) -> bool {
    if (pos == order.size()) return true;
    auto [side, j] = order[pos];
    size_t nb = side == 0 ? n0 : n1;
    for (size_t c = 0; c < nb; ++c) {
      if (side == 0) {
        if (used0[c] || sa0[j] != sb0[c]) continue;
        bool ok = true;
        for (size_t i = 0; i < n1 && ok; ++i)
          if (m1[i] >= 0) ok = a.f(i, j) == b.f(m1[i], c) && a.g(j, i) == b.g(c, m1[i]);
        if (!ok) continue;
        m0[j] = c;
        used0[c] = true;
        if (rec(pos + 1)) return true;
        used0[c] = false;
        m0[j] = -1;
      } else {
        if (used1[c] || sa1[j] != sb1[c]) continue;
        bool ok = true;
        for (size_t i = 0; i < n0 && ok; ++i)
          if (m0[i] >= 0) ok = a.g(i, j) == b.g(m0[i], c) && a.f(j, i) == b.f(c, m0[i]);
        if (!ok) continue;
        m1[j] = c;
        used1[c] = true;
        if (rec(pos + 1)) return true;
        used1[c] = false;
        m1[j] = -1;
      }
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  // express as permutations applied to b: permute_mf(b, p0, p1) == a
  std::vector<size_t> p0(n0), p1(n1);
  for (size_t j = 0; j < n0; ++j) p0[j] = m0[j];
  for (size_t j = 0; j < n1; ++j) p1[j] = m1[j];
  return std::make_pair(p0, p1);
}

namespace {

std::vector<size_t> all_but(size_t n, size_t skip) {
  std::vector<size_t> v;
  for (size_t k = 0; k < n; ++k)
    if (k != skip) v.push_back(k);
  return v;
}

GradedFreeModule drop(const GradedFreeModule& m, size_t k) {
  GradedFreeModule r{m.ring, {}};
  for (size_t i = 0; i < m.rank(); ++i)
    if (i != k) r.shifts.push_back(m.shifts[i]);
  return r;
}

struct Elim {
  bool in_g;
  size_t i, j;  // row, column of the constant entry in g (or f)
};

std::optional<Elim> find_unit(const MF& m) {
  for (size_t i = 0; i < m.g.rows; ++i)
    for (size_t j = 0; j < m.g.cols; ++j) {
      const Poly& p = m.g(i, j);
      if (!p.is_zero() && p.is_constant()) return Elim{true, i, j};
    }
  for (size_t i = 0; i < m.f.rows; ++i)
    for (size_t j = 0; j < m.f.cols; ++j) {
      const Poly& p = m.f(i, j);
      if (!p.is_zero() && p.is_constant()) return Elim{false, i, j};
    }
  return std::nullopt;
}

Reduction reduce_impl(const MF& m, bool track) {
  RingPtr r = m.ring;
  MF cur = m;
  Mat inc0, inc1, pr0, pr1;
  if (track) {
    inc0 = Mat::identity(m.rank0(), r);
    inc1 = Mat::identity(m.rank1(), r);
    pr0 = inc0;
    pr1 = inc1;
  }
  while (auto e = find_unit(cur)) {
    // A: P -> Q with constant phi at (i in Q, j in P); B: Q -> P
    Mat& A = e->in_g ? cur.g : cur.f;
    Mat& B = e->in_g ? cur.f : cur.g;
    size_t i = e->i, j = e->j;
    size_t np = A.cols, nq = A.rows;
    Q phi_inv = Q(1) / A(i, j).constant_term();
    auto qk = all_but(nq, i), pk = all_but(np, j);
    Mat A2 = A.select(qk, pk);
    for (size_t a = 0; a < qk.size(); ++a) {
      const Poly& gam = A(qk[a], j);
      if (gam.is_zero()) continue;
      for (size_t b = 0; b < pk.size(); ++b) {
        const Poly& del = A(i, pk[b]);
        if (del.is_zero()) continue;
        A2(a, b) -= gam * del * phi_inv;
      }
    }
    Mat B2 = B.select(pk, qk);
    if (track) {
      // incl_P = [-phi^-1 delta ; I] : P' -> P, incl_Q = [0 ; I] : Q' -> Q
      Mat inP(np, np - 1, r), inQ(nq, nq - 1, r);
      for (size_t b = 0; b < pk.size(); ++b) {
        inP(pk[b], b) = Poly(r, 1);
        inP(j, b) = A(i, pk[b]) * (-phi_inv);
      }
      for (size_t a = 0; a < qk.size(); ++a) inQ(qk[a], a) = Poly(r, 1);
      // proj_Q = [-gamma phi^-1, I] : Q -> Q', proj_P = [0, I] : P -> P'
      Mat prQ(nq - 1, nq, r), prP(np - 1, np, r);
      for (size_t a = 0; a < qk.size(); ++a) {
        prQ(a, qk[a]) = Poly(r, 1);
        prQ(a, i) = A(qk[a], j) * (-phi_inv);
      }
      for (size_t b = 0; b < pk.size(); ++b) prP(b, pk[b]) = Poly(r, 1);
      // g: M1 -> M0 means P = M1, Q = M0
      Mat& in_m0 = e->in_g ? inQ : inP;
      Mat& in_m1 = e->in_g ? inP : inQ;
      Mat& pr_m0 = e->in_g ? prQ : prP;
      Mat& pr_m1 = e->in_g ? prP : prQ;
      inc0 = inc0 * in_m0;
      inc1 = inc1 * in_m1;
      pr0 = pr_m0 * pr0;
      pr1 = pr_m1 * pr1;
    }
    size_t i0 = e->in_g ? i : j, i1 = e->in_g ? j : i;
    cur.m0 = drop(cur.m0, i0);
    cur.m1 = drop(cur.m1, i1);
    A = std::move(A2);
    B = std::move(B2);
  }
  Reduction red;
  red.reduced = cur;
  if (track) {
    red.incl = {cur, m, inc0, inc1};
    red.proj = {m, cur, pr0, pr1};
  }
  return red;
}

}  // namespace

Reduction reduce_with_maps(const MF& m) { return reduce_impl(m, true); }

MF reduce_mf(const MF& m) { return reduce_impl(m, false).reduced; }

MFFingerprint fingerprint(const MF& m) {
  MF r = reduce_mf(m);
  return {graded_rank(r.m0), graded_rank(r.m1)};
}

long long homology_mod_w(const GradedMatrix& a, const GradedMatrix& b, const Poly& w, int dw, int e) {
  // a: Y -> Z, b: X -> Y, everything over S/(w); e is the degree in Y
  const GradedFreeModule& Y = a.source;
  RingPtr ring = Y.ring;
  bool has_w = !w.is_zero();
  auto wmap = [&](const GradedFreeModule& M) { return GradedMatrix{M, M, dw, Mat::scalar(M.rank(), w)}; };
  auto rank_mod = [&](const GradedMatrix& m, int src_deg) -> long long {
    int tdeg = src_deg + m.degree;
    SliceBasis s = slice_basis(m.source, src_deg);
    SliceBasis t = slice_basis(m.target, tdeg);
    Echelon ech;
    size_t base = 0;
    if (has_w) {
      GradedMatrix wm = wmap(m.target);
      SliceBasis tw = slice_basis(m.target, tdeg - dw);
      for (auto& row : slice_images(wm, tdeg - dw, tw, t)) ech.add(row);
      base = ech.rank();
    }
    for (auto& row : slice_images(m, src_deg, s, t)) ech.add(row);
    return static_cast<long long>(ech.rank() - base);
  };
  long long dimY = static_cast<long long>(slice_basis(Y, e).elems.size());
  if (has_w) dimY -= static_cast<long long>(slice_basis(Y, e - dw).elems.size());
  long long ker = dimY - rank_mod(a, e);
  long long img = rank_mod(b, e - b.degree);
  (void)ring;
  return ker - img;
}

std::pair<long long, long long> folded_cohomology_degree(const MF& m, int e) {
  GradedMatrix f = m.f_graded(), g = m.g_graded();
  long long h0 = homology_mod_w(f, g, m.w, m.d, e);
  long long h1 = homology_mod_w(g, f, m.w, m.d, e);
  return {h0, h1};
}

FoldedCohomology folded_cohomology(const MF& m, int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("folded_cohomology: empty window");
  FoldedCohomology out;
  for (int e = lo; e <= hi; ++e) {
    auto [h0, h1] = folded_cohomology_degree(m, e);
    out.H0.add(e, h0);
    out.H1.add(e, h1);
  }
  return out;
}

std::string mf_to_string(const MF& m) {
  std::ostringstream os;
  os << "potential " << m.w.to_string() << " (degree " << m.d << ")\n";
  auto shifts = [&](const GradedFreeModule& g) {
    std::string s = "[";
    for (size_t i = 0; i < g.rank(); ++i) s += (i ? ", " : "") + std::to_string(g.shifts[i]);
    return s + "]";
  };
  os << "M0 shifts " << shifts(m.m0) << ", M1 shifts " << shifts(m.m1) << "\n";
  auto mat = [&](const char* name, const Mat& x) {
    os << name << ":\n";
    for (size_t i = 0; i < x.rows; ++i) {
      os << "  [";
      for (size_t j = 0; j < x.cols; ++j) os << (j ? ", " : "") << x(i, j).to_string();
      os << "]\n";
    }
  };
  mat("f", m.f);
  mat("g", m.g);
  return os.str();
}

}  // namespace gmf
