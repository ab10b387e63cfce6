#include "gmf/module.hpp"

#include <sstream>
#include <stdexcept>

namespace gmf {

GradedFreeModule GradedFreeModule::shifted(int k) const {
  GradedFreeModule r = *this;
  for (auto& s : r.shifts) s += k;
  return r;
}

PoincareSeries graded_rank(const GradedFreeModule& m) {
  PoincareSeries p;
  for (int s : m.shifts) p.add(-s, 1);
  return p;
}

GradedFreeModule direct_sum(const GradedFreeModule& a, const GradedFreeModule& b) {
  GradedFreeModule r{a.ring ? a.ring : b.ring, a.shifts};
  r.shifts.insert(r.shifts.end(), b.shifts.begin(), b.shifts.end());
  return r;
}

GradedFreeModule tensor_modules(const GradedFreeModule& a, const GradedFreeModule& b) {
  GradedFreeModule r{a.ring ? a.ring : b.ring, {}};
  for (int x : a.shifts)
    for (int y : b.shifts) r.shifts.push_back(x + y);
  return r;
}

Mat Mat::identity(size_t n, const RingPtr& ring) {
  Mat m(n, n, ring);
  for (size_t i = 0; i < n; ++i) m(i, i) = Poly(ring, 1);
  return m;
}

Mat Mat::scalar(size_t n, const Poly& p) {
  Mat m(n, n, p.ring());
  for (size_t i = 0; i < n; ++i) m(i, i) = p;
  return m;
}

bool Mat::is_zero() const {
  for (auto& p : a)
    if (!p.is_zero()) return false;
  return true;
}

bool Mat::operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

Mat Mat::transpose() const {
  Mat t(cols, rows);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& p : r.a) p = -p;
  return r;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("Mat +: shape mismatch");
  for (size_t k = 0; k < a.size(); ++k) a[k] += o.a[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("Mat -: shape mismatch");
  for (size_t k = 0; k < a.size(); ++k) a[k] -= o.a[k];
  return *this;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("Mat *: shape mismatch");
  Mat r(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      const Poly& p = x(i, k);
      if (p.is_zero()) continue;
      for (size_t j = 0; j < y.cols; ++j) {
        const Poly& q = y(k, j);
        if (q.is_zero()) continue;
        r(i, j) += p * q;
      }
    }
  return r;
}

Mat operator*(const Q& c, Mat x) {
  for (auto& p : x.a) p *= c;
  return x;
}

Mat Mat::map(const std::function<Poly(const Poly&)>& fn) const {
  Mat r = *this;
  for (auto& p : r.a) p = fn(p);
  return r;
}

Mat Mat::select(const std::vector<size_t>& rs, const std::vector<size_t>& cs) const {
  Mat r(rs.size(), cs.size());
  for (size_t i = 0; i < rs.size(); ++i)
    for (size_t j = 0; j < cs.size(); ++j) r(i, j) = (*this)(rs[i], cs[j]);
  return r;
}

Mat Mat::permuted(const std::vector<size_t>& row_perm, const std::vector<size_t>& col_perm) const {
  return select(row_perm, col_perm);
}

Mat kron(const Mat& x, const Mat& y) {
  Mat r(x.rows * y.rows, x.cols * y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t j = 0; j < x.cols; ++j) {
      const Poly& p = x(i, j);
      if (p.is_zero()) continue;
      for (size_t k = 0; k < y.rows; ++k)
        for (size_t l = 0; l < y.cols; ++l) {
          const Poly& q = y(k, l);
          if (q.is_zero()) continue;
          r(i * y.rows + k, j * y.cols + l) = p * q;
        }
    }
  return r;
}

Mat block2(const Mat& a, const Mat& b, const Mat& c, const Mat& d) {
  size_t r0 = std::max(a.rows, b.rows), r1 = std::max(c.rows, d.rows);
  size_t c0 = std::max(a.cols, c.cols), c1 = std::max(b.cols, d.cols);
  Mat r(r0 + r1, c0 + c1);
  auto put = [&](const Mat& m, size_t ro, size_t co) {
    for (size_t i = 0; i < m.rows; ++i)
      for (size_t j = 0; j < m.cols; ++j) r(ro + i, co + j) = m(i, j);
  };
  put(a, 0, 0);
  put(b, 0, c0);
  put(c, r0, 0);
  put(d, r0, c0);
  return r;
}

Mat block_diag(const Mat& a, const Mat& b) { return block2(a, Mat(a.rows, b.cols), Mat(b.rows, a.cols), b); }

std::string GradedMatrix::check_homogeneity() const {
  if (m.rows != target.rank() || m.cols != source.rank()) return "shape does not match modules";
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) {
      const Poly& p = m(i, j);
      if (p.is_zero()) continue;
      auto d = p.degree();
      if (!d || *d != entry_degree(i, j)) {
        std::ostringstream os;
        os << "entry (" << i << "," << j << ") = " << p.to_string() << " is not homogeneous of degree "
           << entry_degree(i, j);
        return os.str();
      }
    }
  return "";
}

SliceBasis slice_basis(const GradedFreeModule& m, int e) {
  SliceBasis b;
  for (size_t j = 0; j < m.rank(); ++j) {
    int md = e + m.shifts[j];
    if (md < 0) continue;
    for (auto& mono : m.ring->monomials(md)) {
      b.index.emplace(std::make_pair(j, mono), static_cast<int>(b.elems.size()));
      b.elems.push_back({j, &mono});
    }
  }
  return b;
}

std::vector<SparseRow> slice_images(const GradedMatrix& a, int e, const SliceBasis& src, const SliceBasis& tgt) {
  std::vector<SparseRow> rows;
  rows.reserve(src.elems.size());
  size_t n = a.source.ring->nvars();
  Exp sum(n);
  for (auto& [j, mono] : src.elems) {
    SparseRow r;
    for (size_t i = 0; i < a.m.rows; ++i) {
      const Poly& p = a.m(i, j);
      for (auto& [pe, c] : p.terms()) {
        for (size_t k = 0; k < n; ++k) sum[k] = pe[k] + (*mono)[k];
        auto it = tgt.index.find({i, sum});
        if (it == tgt.index.end()) throw std::logic_error("slice_images: inhomogeneous entry");
        r[it->second] += c;
      }
    }
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    rows.push_back(std::move(r));
  }
  (void)e;
  return rows;
}

std::pair<size_t, size_t> degree_slice_rank(const GradedMatrix& a, int e) {
  SliceBasis s = slice_basis(a.source, e);
  SliceBasis t = slice_basis(a.target, e + a.degree);
  size_t img = sparse_rank(slice_images(a, e, s, t));
  return {s.elems.size() - img, img};
}

int LinearSystem::add_unknown(const GradedFreeModule& source, const GradedFreeModule& target, int degree) {
  Unknown u;
  u.rows = target.rank();
  u.cols = source.rank();
  for (size_t i = 0; i < u.rows; ++i)
    for (size_t j = 0; j < u.cols; ++j) {
      int d = target.shifts[i] - source.shifts[j] + degree;
      if (d < 0) {
        u.offset.push_back(-1);
        u.monos.push_back(nullptr);
        continue;
      }
      const auto& ms = ring_->monomials(d);
      u.offset.push_back(ncols_);
      u.monos.push_back(&ms);
      ncols_ += static_cast<int>(ms.size());
    }
  unknowns_.push_back(std::move(u));
  return static_cast<int>(unknowns_.size()) - 1;
}

void LinearSystem::add_equation(const std::vector<Term>& terms, const Mat& rhs) {
  if (terms.empty()) throw std::invalid_argument("LinearSystem: empty equation");
  const Unknown& u0 = unknowns_.at(terms[0].unknown);
  size_t R = terms[0].left ? terms[0].left->rows : u0.rows;
  size_t C = terms[0].right ? terms[0].right->cols : u0.cols;
  size_t n = ring_->nvars();
  Exp sum(n);
  for (size_t a = 0; a < R; ++a)
    for (size_t b = 0; b < C; ++b) {
      std::map<Exp, SparseRow> eqs;
      for (auto& t : terms) {
        const Unknown& u = unknowns_.at(t.unknown);
        size_t ilo = 0, ihi = u.rows, jlo = 0, jhi = u.cols;
        if (!t.left) ilo = a, ihi = a + 1;
        if (!t.right) jlo = b, jhi = b + 1;
        for (size_t i = ilo; i < ihi; ++i) {
          if (t.left && (*t.left)(a, i).is_zero()) continue;
          for (size_t j = jlo; j < jhi; ++j) {
            int off = u.offset[i * u.cols + j];
            if (off < 0) continue;
            if (t.right && (*t.right)(j, b).is_zero()) continue;
            Poly coef(ring_, t.scale);
            if (t.left) coef = coef * (*t.left)(a, i);
            if (t.right) coef = coef * (*t.right)(j, b);
            const auto& ms = *u.monos[i * u.cols + j];
            for (size_t k = 0; k < ms.size(); ++k)
              for (auto& [pe, c] : coef.terms()) {
                for (size_t v = 0; v < n; ++v) sum[v] = pe[v] + ms[k][v];
                eqs[sum][off + static_cast<int>(k)] += c;
              }
          }
        }
      }
      if (rhs.rows)
        for (auto& [pe, c] : rhs(a, b).terms()) eqs[pe];
      for (auto& [pe, row] : eqs) {
        for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
        Q r = 0;
        if (rhs.rows) {
          auto f = rhs(a, b).terms().find(pe);
          if (f != rhs(a, b).terms().end()) r = f->second;
        }
        if (row.empty() && r == 0) continue;
        rows_.push_back(std::move(row));
        rhs_.push_back(r);
      }
    }
}

Mat LinearSystem::extract(int id, const std::vector<Q>& x) const {
  const Unknown& u = unknowns_.at(id);
  Mat m(u.rows, u.cols, ring_);
  for (size_t k = 0; k < u.offset.size(); ++k) {
    if (u.offset[k] < 0) continue;
    const auto& ms = *u.monos[k];
    for (size_t t = 0; t < ms.size(); ++t) m.a[k].add_term(ms[t], x[u.offset[k] + t]);
  }
  return m;
}

Mat LinearSystem::extract(int id, const SparseRow& x) const {
  const Unknown& u = unknowns_.at(id);
  Mat m(u.rows, u.cols, ring_);
  for (size_t k = 0; k < u.offset.size(); ++k) {
    if (u.offset[k] < 0) continue;
    const auto& ms = *u.monos[k];
    auto it = x.lower_bound(u.offset[k]);
    for (; it != x.end() && it->first < u.offset[k] + static_cast<int>(ms.size()); ++it)
      m.a[k].add_term(ms[it->first - u.offset[k]], it->second);
  }
  return m;
}

}  // namespace gmf
