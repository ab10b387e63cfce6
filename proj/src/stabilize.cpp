#include "gmf/stabilize.hpp"

#include <algorithm>
#include <stdexcept>

#include "gmf/symfun.hpp"

namespace gmf {

namespace {

void place(Mat& big, const Mat& small, size_t r0, size_t c0) {
  for (size_t i = 0; i < small.rows; ++i)
    for (size_t j = 0; j < small.cols; ++j) big(r0 + i, c0 + j) = small(i, j);
}

int hdeg(const Poly& p, const char* what) {
  auto d = p.degree();
  if (!d) throw std::invalid_argument(std::string(what) + ": entries must be nonzero and homogeneous");
  return *d;
}

// s-family accessor shared by validation and folding
const Mat* smap(const HigherHomotopies& h, int n, int k) {
  int N = h.res.length();
  if (k < 0 || k > N) return nullptr;
  if (n == 0) return k >= 1 ? &h.res.diff(k) : nullptr;
  if (n >= static_cast<int>(h.s.size())) return nullptr;
  if (k + 2 * n - 1 > N) return nullptr;
  const Mat& m = h.s[n][k];
  return &m;
}

// sum_{p+q=n} s_p s_q restricted to F^{-k}, optionally skipping p = 0 or q = 0
Mat relation(const HigherHomotopies& h, int n, int k, bool include_ends) {
  const FreeResolution& F = h.res;
  int tgt = k + 2 * n - 2;
  Mat out(F.terms[tgt].rank(), F.terms[k].rank(), F.ring);
  for (int q = 0; q <= n; ++q) {
    int p = n - q;
    if (!include_ends && (p == 0 || q == 0)) continue;
    const Mat* sq = smap(h, q, k);
    if (!sq) continue;
    const Mat* sp = smap(h, p, k + 2 * q - 1);
    if (!sp) continue;
    out += (*sp) * (*sq);
  }
  return out;
}

}  // namespace

const Mat* HigherHomotopies::map(int n, int k) const { return smap(*this, n, k); }

Report validate_resolution(const FreeResolution& f) {
  Report rep;
  if (f.terms.empty()) return rep;
  if (f.diffs.size() + 1 != f.terms.size()) {
    rep.fail("resolution: number of differentials does not match terms");
    return rep;
  }
  for (int k = 1; k <= f.length(); ++k) {
    std::string h = GradedMatrix{f.terms[k], f.terms[k - 1], 0, f.diff(k)}.check_homogeneity();
    if (!h.empty()) rep.fail("d_" + std::to_string(k) + ": " + h);
    if (k >= 2 && !(f.diff(k - 1) * f.diff(k)).is_zero()) rep.fail("d_" + std::to_string(k - 1) + " d_" + std::to_string(k) + " != 0");
  }
  return rep;
}

Report validate_homotopies(const HigherHomotopies& h) {
  Report rep = validate_resolution(h.res);
  const FreeResolution& F = h.res;
  int N = F.length();
  if (N < 0) return rep;
  for (int n = 1; n < static_cast<int>(h.s.size()); ++n)
    for (int k = 0; k + 2 * n - 1 <= N; ++k) {
      std::string bad = GradedMatrix{F.terms[k], F.terms[k + 2 * n - 1], n * h.d, h.s[n][k]}.check_homogeneity();
      if (!bad.empty()) rep.fail("s_" + std::to_string(n) + " on F^-" + std::to_string(k) + ": " + bad);
    }
  for (int n = 1; 2 * n - 2 <= N; ++n)
    for (int k = 0; k + 2 * n - 2 <= N; ++k) {
      Mat r = relation(h, n, k, true);
      if (n == 1) r -= Mat::scalar(F.terms[k].rank(), h.w);
      if (!r.is_zero())
        rep.fail("relation n=" + std::to_string(n) + " fails on F^-" + std::to_string(k));
    }
  return rep;
}

std::vector<std::vector<int>> koszul_subsets(size_t l, size_t k) {
  // even/odd subset lists of the iterated tensor product
  std::vector<std::vector<int>> even{{}}, odd{{0}};
  if (l == 0) odd.clear();
  for (size_t i = 1; i < l; ++i) {
    std::vector<std::vector<int>> ne = even, no;
    for (auto s : odd) {
      s.push_back(static_cast<int>(i));
      ne.push_back(s);
    }
    for (auto s : even) {
      s.push_back(static_cast<int>(i));
      no.push_back(s);
    }
    for (auto& s : odd) no.push_back(s);
    even = ne;
    odd = no;
  }
  std::vector<std::vector<int>> out;
  for (auto& s : (k % 2 == 0 ? even : odd))
    if (s.size() == k) out.push_back(s);
  return out;
}

namespace {

// sign of e_i ^ e_S relative to the sorted basis element
int wedge_sign(int i, const std::vector<int>& s) {
  int c = 0;
  for (int j : s)
    if (j < i) ++c;
  return c % 2 ? -1 : 1;
}

struct ExteriorBasis {
  std::vector<std::vector<std::vector<int>>> by_degree;
  std::vector<std::map<std::vector<int>, size_t>> index;
};

ExteriorBasis exterior_basis(size_t l) {
  ExteriorBasis b;
  for (size_t k = 0; k <= l; ++k) {
    b.by_degree.push_back(koszul_subsets(l, k));
    std::map<std::vector<int>, size_t> idx;
    for (size_t j = 0; j < b.by_degree[k].size(); ++j) idx[b.by_degree[k][j]] = j;
    b.index.push_back(idx);
  }
  return b;
}

}  // namespace

FreeResolution koszul_resolution(const std::vector<Poly>& xs) {
  if (xs.empty()) throw std::invalid_argument("koszul_resolution: empty sequence");
  RingPtr r = xs[0].ring();
  std::vector<int> deg;
  for (auto& x : xs) deg.push_back(hdeg(x, "koszul_resolution"));
  size_t l = xs.size();
  ExteriorBasis b = exterior_basis(l);
  FreeResolution F;
  F.ring = r;
  for (size_t k = 0; k <= l; ++k) {
    GradedFreeModule m{r, {}};
    for (auto& s : b.by_degree[k]) {
      int t = 0;
      for (int i : s) t += deg[i];
      m.shifts.push_back(-t);
    }
    F.terms.push_back(m);
  }
  for (size_t k = 1; k <= l; ++k) {
    Mat d(b.by_degree[k - 1].size(), b.by_degree[k].size(), r);
    for (size_t j = 0; j < b.by_degree[k].size(); ++j) {
      const auto& s = b.by_degree[k][j];
      for (size_t p = 0; p < s.size(); ++p) {
        std::vector<int> rest = s;
        rest.erase(rest.begin() + static_cast<long>(p));
        Poly term = xs[s[p]];
        if (p % 2) term = -term;
        d(b.index[k - 1].at(rest), j) += term;
      }
    }
    F.diffs.push_back(d);
  }
  return F;
}

HigherHomotopies koszul_homotopies(const std::vector<Poly>& xs, const std::vector<Poly>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("koszul_homotopies: length mismatch");
  HigherHomotopies h;
  h.res = koszul_resolution(xs);
  RingPtr r = h.res.ring;
  size_t l = xs.size();
  h.w = Poly(r);
  for (size_t i = 0; i < l; ++i) h.w += xs[i] * ys[i];
  h.d = hdeg(xs[0], "koszul_homotopies") + hdeg(ys[0], "koszul_homotopies");
  for (size_t i = 0; i < l; ++i)
    if (hdeg(xs[i], "koszul_homotopies") + hdeg(ys[i], "koszul_homotopies") != h.d)
      throw std::invalid_argument("koszul_homotopies: mixed potential degrees");
  ExteriorBasis b = exterior_basis(l);
  h.s.resize(2);
  for (size_t k = 0; k < l; ++k) {
    Mat s(b.by_degree[k + 1].size(), b.by_degree[k].size(), r);
    for (size_t j = 0; j < b.by_degree[k].size(); ++j) {
      const auto& set = b.by_degree[k][j];
      for (size_t i = 0; i < l; ++i) {
        if (std::find(set.begin(), set.end(), static_cast<int>(i)) != set.end()) continue;
        std::vector<int> bigger = set;
        bigger.push_back(static_cast<int>(i));
        std::sort(bigger.begin(), bigger.end());
        Poly term = ys[i];
        if (wedge_sign(static_cast<int>(i), set) < 0) term = -term;
        s(b.index[k + 1].at(bigger), j) += term;
      }
    }
    h.s[1].push_back(s);
  }
  return h;
}

HigherHomotopies find_higher_homotopies(const FreeResolution& F, const Poly& w, int d, int depth) {
  Report rr = validate_resolution(F);
  if (!rr.ok) throw std::invalid_argument("find_higher_homotopies: " + rr.to_string());
  HigherHomotopies h;
  h.res = F;
  h.w = w;
  h.d = d;
  int N = F.length();
  if (depth < 0) depth = N / 2 + 1;
  h.s.resize(static_cast<size_t>(depth) + 1);
  for (int n = 1; n <= depth; ++n) {
    for (int k = 0; k + 2 * n - 2 <= N; ++k) {
      int tgt = k + 2 * n - 2;
      // s0 s_n + s_n s0 = (n == 1 ? w : 0) - sum of inner terms
      Mat rhs = relation(h, n, k, false);
      rhs = -rhs;
      if (n == 1) rhs += Mat::scalar(F.terms[k].rank(), w);
      if (k >= 1) {
        if (const Mat* prev = smap(h, n, k - 1)) rhs -= (*prev) * F.diff(k);
      }
      if (k + 2 * n - 1 > N) {
        if (!rhs.is_zero()) {
          if (n == 1 && k == 0) throw std::invalid_argument("find_higher_homotopies: w does not annihilate the cokernel");
          throw std::logic_error("find_higher_homotopies: relation n=" + std::to_string(n) + " not closed at F^-" +
                                 std::to_string(k));
        }
        continue;
      }
      LinearSystem sys(F.ring);
      int u = sys.add_unknown(F.terms[k], F.terms[k + 2 * n - 1], n * d);
      sys.add_equation({{u, &F.diff(tgt + 1), nullptr}}, rhs);
      auto x = sys.solve();
      if (!x) {
        if (n == 1 && k == 0) throw std::invalid_argument("find_higher_homotopies: w does not annihilate the cokernel");
        throw std::logic_error("find_higher_homotopies: inductive system unsolvable at n=" + std::to_string(n));
      }
      if (static_cast<int>(h.s[n].size()) != k) throw std::logic_error("find_higher_homotopies: index drift");
      h.s[n].push_back(sys.extract(u, *x));
    }
  }
  Report rep = validate_homotopies(h);
  if (!rep.ok) throw std::logic_error("find_higher_homotopies: " + rep.to_string());
  return h;
}

EisenbudResolution eisenbud_resolution(const HigherHomotopies& h, int length) {
  const FreeResolution& F = h.res;
  int N = F.length();
  EisenbudResolution e;
  e.ring = F.ring;
  e.w = h.w;
  e.d = h.d;
  // block (m, j) of C^{-c} with j = c - 2m; offsets per c
  std::vector<std::vector<std::pair<int, size_t>>> blocks(length + 1);
  for (int c = 0; c <= length; ++c) {
    GradedFreeModule mod{F.ring, {}};
    for (int m = 0; 2 * m <= c; ++m) {
      int j = c - 2 * m;
      if (j > N) continue;
      blocks[c].push_back({m, mod.rank()});
      for (int s : F.terms[j].shifts) mod.shifts.push_back(s - m * h.d);
    }
    e.terms.push_back(mod);
  }
  for (int c = 1; c <= length; ++c) {
    Mat dm(e.terms[c - 1].rank(), e.terms[c].rank(), F.ring);
    for (auto [m, off] : blocks[c]) {
      int j = c - 2 * m;
      for (int k = 0; k <= m; ++k) {
        const Mat* s = smap(h, k, j);
        if (!s) continue;
        int m2 = m - k, j2 = j + 2 * k - 1;
        for (auto [mm, off2] : blocks[c - 1])
          if (mm == m2 && c - 1 - 2 * mm == j2) place(dm, *s, off2, off);
      }
    }
    e.diffs.push_back(dm);
  }
  return e;
}

bool eisenbud_composites_vanish(const EisenbudResolution& e) {
  for (size_t c = 1; c < e.diffs.size(); ++c) {
    Mat comp = e.diffs[c - 1] * e.diffs[c];
    for (auto& p : comp.a) {
      if (p.is_zero()) continue;
      if (e.w.is_zero() || !p.divide_exact(e.w)) return false;
    }
  }
  return true;
}

long long eisenbud_homology(const EisenbudResolution& r, int c, int e) {
  if (c < 1 || c + 1 >= static_cast<int>(r.terms.size()))
    throw std::out_of_range("eisenbud_homology: degree outside the truncation");
  GradedMatrix a{r.terms[c], r.terms[c - 1], 0, r.diffs[c - 1]};
  GradedMatrix b{r.terms[c + 1], r.terms[c], 0, r.diffs[c]};
  return homology_mod_w(a, b, r.w, r.d, e);
}

long long eisenbud_cokernel(const EisenbudResolution& r, int e) {
  GradedFreeModule none{r.ring, {}};
  GradedMatrix a{r.terms[0], none, 0, Mat(0, r.terms[0].rank(), r.ring)};
  GradedMatrix b{r.terms[1], r.terms[0], 0, r.diffs[0]};
  return homology_mod_w(a, b, r.w, r.d, e);
}

MF stabilize_module(const HigherHomotopies& h) {
  const FreeResolution& F = h.res;
  RingPtr ring = F.ring ? F.ring : h.w.ring();
  int N = F.length();
  if (N < 0) return zero_mf(ring, h.w, h.d);
  GradedFreeModule m0{ring, {}}, m1{ring, {}};
  std::vector<size_t> off(N + 1);
  for (int j = 0; j <= N; ++j) {
    GradedFreeModule& tgt = j % 2 ? m1 : m0;
    off[j] = tgt.rank();
    for (int s : F.terms[j].shifts) tgt.shifts.push_back(s + h.d * (j / 2));
  }
  Mat f(m1.rank(), m0.rank(), ring), g(m0.rank(), m1.rank(), ring);
  for (int j = 0; j <= N; ++j)
    for (int n = 0; j + 2 * n - 1 <= N; ++n) {
      const Mat* s = smap(h, n, j);
      if (!s) continue;
      int j2 = j + 2 * n - 1;
      place(j % 2 ? g : f, *s, off[j2], off[j]);
    }
  MF out{ring, h.w, h.d, m0, m1, f, g};
  require_valid(out, "stabilize_module");
  return out;
}

std::optional<std::vector<Poly>> telescoping_coefficients(const std::vector<Poly>& xs, const Poly& w) {
  if (xs.empty()) return std::nullopt;
  RingPtr r = xs[0].ring();
  std::vector<Poly> ys;
  std::vector<bool> used(r->nvars(), false);
  Poly cur = w;
  for (auto& x : xs) {
    // a variable v occurring in x only as a*v
    int v = -1;
    Q a;
    for (size_t i = 0; i < r->nvars() && v < 0; ++i) {
      if (used[i]) continue;
      int hits = 0;
      bool linear = true;
      Q coef;
      for (auto& [e, c] : x.terms()) {
        if (e[i] == 0) continue;
        ++hits;
        int tot = 0;
        for (int k : e) tot += k;
        if (e[i] != 1 || tot != 1) linear = false;
        coef = c;
      }
      if (hits == 1 && linear) {
        v = static_cast<int>(i);
        a = coef;
      }
    }
    if (v < 0) return std::nullopt;
    used[v] = true;
    Poly vv = Poly::var(r, v);
    Poly value = (vv - (1 / a) * x);  // v := -h/a where x = a v + h
    Poly next = cur.substitute_var(v, value);
    auto q = (cur - next).divide_exact(x);
    if (!q) return std::nullopt;
    ys.push_back(*q);
    cur = next;
  }
  if (!cur.is_zero()) return std::nullopt;
  return ys;
}

std::optional<std::vector<Poly>> ideal_coefficients(const std::vector<Poly>& xs, const Poly& w) {
  if (xs.empty()) return std::nullopt;
  RingPtr r = xs[0].ring();
  int d = hdeg(w, "ideal_coefficients");
  GradedFreeModule one{r, {0}}, tgt{r, {}};
  Mat row(1, xs.size(), r);
  for (size_t i = 0; i < xs.size(); ++i) {
    tgt.shifts.push_back(-hdeg(xs[i], "ideal_coefficients"));
    row(0, i) = xs[i];
  }
  LinearSystem sys(r);
  int u = sys.add_unknown(one, tgt, d);
  Mat rhs(1, 1, r);
  rhs(0, 0) = w;
  sys.add_equation({{u, &row, nullptr}}, rhs);
  auto x = sys.solve();
  if (!x) return std::nullopt;
  Mat y = sys.extract(u, *x);
  std::vector<Poly> ys;
  for (size_t i = 0; i < xs.size(); ++i) ys.push_back(y(i, 0));
  return ys;
}

MF stabilize_ci(const std::vector<Poly>& xs, const Poly& w) {
  auto ys = telescoping_coefficients(xs, w);
  if (!ys) ys = ideal_coefficients(xs, w);
  if (!ys) throw std::invalid_argument("stabilize_ci: w is not in the ideal generated by xs");
  return koszul_factorization(xs, *ys);
}

MF koszul2(const std::array<Poly, 2>& x, const std::array<Poly, 2>& y) {
  MF k = koszul_factorization({x[0], x[1]}, {y[0], y[1]});
  return permute_mf(k, {0, 1}, {1, 0});
}

MorphismStabData make_morphism_stab_data(const std::array<Poly, 2>& x, const std::array<Poly, 2>& xt,
                                         const std::array<Poly, 2>& y, const std::array<Poly, 2>& yt,
                                         const Poly& alpha, const std::array<std::array<Poly, 2>, 2>& lambda) {
  MorphismStabData d{x, xt, y, yt, alpha, lambda, Poly(), Poly()};
  for (int i = 0; i < 2; ++i)
    if (alpha * x[i] != lambda[i][0] * xt[0] + lambda[i][1] * xt[1])
      throw std::invalid_argument("morphism data: alpha*x" + std::to_string(i + 1) + " != sum_j lambda_" +
                                  std::to_string(i + 1) + "j xt_j");
  Poly num = lambda[0][1] * y[0] + lambda[1][1] * y[1] - alpha * yt[1];
  auto mu = num.divide_exact(xt[0]);
  if (!mu) throw std::invalid_argument("morphism data: mu = (l12 y1 + l22 y2 - alpha yt2)/xt1 is not exact");
  d.mu = *mu;
  if (lambda[0][0] * y[0] + lambda[1][0] * y[1] != alpha * yt[0] - d.mu * xt[1])
    throw std::invalid_argument("morphism data: l11 y1 + l21 y2 != alpha yt1 - mu xt2");
  Poly disc = lambda[0][0] * lambda[1][1] - lambda[0][1] * lambda[1][0];
  auto q = disc.divide_exact(alpha);
  if (!q) throw std::invalid_argument("morphism data: (l11 l22 - l12 l21)/alpha is not exact");
  d.discriminant_quotient = *q;
  return d;
}

MFMorphism stabilize_morphism_ci2(const MorphismStabData& data) {
  // the module map has the internal degree of alpha
  MF src = koszul2(data.x, data.y), tgt = shift_mf(koszul2(data.xt, data.yt), 0, hdeg(data.alpha, "alpha"));
  RingPtr r = src.ring;
  Mat beta(2, 2, r), alpha(2, 2, r);
  beta(0, 0) = data.lambda[0][0];
  beta(0, 1) = data.lambda[1][0];
  beta(1, 0) = data.lambda[0][1];
  beta(1, 1) = data.lambda[1][1];
  alpha(0, 0) = data.alpha;
  alpha(1, 0) = data.mu;
  alpha(1, 1) = data.discriminant_quotient;
  MFMorphism phi{src, tgt, alpha, beta};
  Report rep = check_morphism(phi);
  if (!rep.ok) throw std::logic_error("stabilize_morphism_ci2: " + rep.to_string());
  return phi;
}

ChiMorphisms chi_morphisms(int n, const Q& lam) {
  if (n < 1) throw std::invalid_argument("chi_morphisms: n >= 1 required");
  RingPtr r = make_ring({"x1", "x2", "y1", "y2"}, {2, 2, 2, 2});
  Poly x1 = Poly::var(r, 0), x2 = Poly::var(r, 1), y1 = Poly::var(r, 2), y2 = Poly::var(r, 3);
  auto pi = [&](const Poly& a, const Poly& b) {
    Poly p(r);
    for (int i = 0; i <= n; ++i) p += a.pow(i) * b.pow(n - i);
    return p;
  };
  Poly pi1 = pi(x1, y1), pi2 = pi(x2, y2);
  auto u = star_coefficients({x1 + x2, x1 * x2}, {y1 + y2, y1 * y2}, n);
  Poly u1 = u[0], u2 = u[1];
  Poly one(r, 1);
  Poly l(r, lam);
  Poly e1 = x1 + x2 - y1 - y2, e2 = x1 * x2 - y1 * y2;

  ChiMorphisms out;
  out.gamma0 = koszul2({e1, e2}, {u1, u2});
  out.gamma1 = koszul2({x1 - y1, x2 - y2}, {pi1, pi2});

  auto quotient = [](const Poly& num, const Poly& den) {
    auto q = num.divide_exact(den);
    if (!q) throw std::logic_error("chi_morphisms: inexact quotient");
    return *q;
  };
  {
    Mat beta(2, 2, r), alpha(2, 2, r);
    beta(0, 0) = one;
    beta(0, 1) = y2 + l * (x2 - y2);
    beta(1, 0) = one;
    beta(1, 1) = x1 + l * (y1 - x1);
    alpha(0, 0) = one;
    alpha(1, 0) = -(l * u2) + quotient(u1 + x1 * u2 - pi2, x1 - y1);
    alpha(1, 1) = x1 - y2 + l * (y1 + y2 - x1 - x2);
    out.chi1 = {out.gamma0, out.gamma1, alpha, beta};
    out.data1 = make_morphism_stab_data({e1, e2}, {x1 - y1, x2 - y2}, {u1, u2}, {pi1, pi2}, one,
                                        {{{one, one}, {y2 + l * (x2 - y2), x1 + l * (y1 - x1)}}});
  }
  {
    Mat beta(2, 2, r), alpha(2, 2, r);
    Poly a0 = y1 - x2 + l * e1;
    beta(0, 0) = y1 + l * (x1 - y1);
    beta(0, 1) = l * (x2 - y2) - x2;
    beta(1, 0) = -one;
    beta(1, 1) = one;
    alpha(0, 0) = a0;
    alpha(1, 0) = (one - l) * u2 + quotient(u1 + x1 * u2 - pi2, y1 - x1);
    alpha(1, 1) = one;
    out.chi0 = {out.gamma1, shift_mf(out.gamma0, 0, 2), alpha, beta};
    out.data0 = make_morphism_stab_data({x1 - y1, x2 - y2}, {e1, e2}, {pi1, pi2}, {u1, u2}, a0,
                                        {{{y1 + l * (x1 - y1), -one}, {l * (x2 - y2) - x2, one}}});
  }
  return out;
}

HigherHomotopies tensor_homotopies(const HigherHomotopies& A, const HigherHomotopies& B) {
  if (A.d != B.d) throw std::invalid_argument("tensor_homotopies: potential degrees differ");
  const FreeResolution &F = A.res, &G = B.res;
  RingPtr r = F.ring;
  int NF = F.length(), NG = G.length(), N = NF + NG;
  HigherHomotopies h;
  h.res.ring = r;
  h.w = A.w + B.w;
  h.d = A.d;
  // (F (x) G)^{-k} = sum_{a+b=k} F^{-a} (x) G^{-b}, a ascending
  std::vector<std::map<int, size_t>> off(N + 1);
  for (int k = 0; k <= N; ++k) {
    std::vector<int> shifts;
    for (int a = 0; a <= k; ++a) {
      int b = k - a;
      if (a > NF || b > NG) continue;
      off[k][a] = shifts.size();
      for (int s : tensor_modules(F.terms[a], G.terms[b]).shifts) shifts.push_back(s);
    }
    h.res.terms.push_back(GradedFreeModule{r, shifts});
  }
  size_t depth = std::max(A.s.size(), B.s.size());
  auto build = [&](int n, int k) {
    int k2 = k + 2 * n - 1;
    Mat m(h.res.terms[k2].rank(), h.res.terms[k].rank(), r);
    for (auto [a, o] : off[k]) {
      int b = k - a;
      if (const Mat* sa = smap(A, n, a)) {
        int a2 = a + 2 * n - 1;
        place(m, kron(*sa, Mat::identity(G.terms[b].rank(), r)), off[k2].at(a2), o);
      }
      if (const Mat* sb = smap(B, n, b)) {
        Mat blk = kron(Mat::identity(F.terms[a].rank(), r), *sb);
        if (a % 2) blk = -blk;
        place(m, blk, off[k2].at(a), o);
      }
    }
    return m;
  };
  // n = 0 is the tensor differential
  for (int k = 1; k <= N; ++k) h.res.diffs.push_back(build(0, k));
  h.s.resize(depth);
  for (int n = 1; n < static_cast<int>(depth); ++n)
    for (int k = 0; k + 2 * n - 1 <= N; ++k) h.s[n].push_back(build(n, k));
  Report rep = validate_homotopies(h);
  if (!rep.ok) throw std::logic_error("tensor_homotopies: " + rep.to_string());
  return h;
}

}  // namespace gmf
