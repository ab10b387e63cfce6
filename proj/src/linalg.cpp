#include "gmf/linalg.hpp"

namespace gmf {

void axpy(SparseRow& r, const Q& a, const SparseRow& x) {
  if (a == 0) return;
  auto hint = r.begin();
  for (auto& [k, v] : x) {
    hint = r.lower_bound(k);
    if (hint != r.end() && hint->first == k) {
      hint->second += a * v;
      if (hint->second == 0) hint = r.erase(hint);
    } else {
      hint = r.emplace_hint(hint, k, a * v);
    }
  }
}

SparseRow Echelon::reduce(SparseRow r) const {
  auto it = r.begin();
  while (it != r.end()) {
    int c = it->first;
    auto p = piv_.find(c);
    if (p == piv_.end()) {
      ++it;
      continue;
    }
    Q coef = -it->second;
    axpy(r, coef, p->second);
    it = r.upper_bound(c);
  }
  return r;
}

bool Echelon::add(SparseRow r) {
  r = reduce(std::move(r));
  if (r.empty()) return false;
  Q lead = r.begin()->second;
  if (lead != 1) {
    Q inv = 1 / lead;
    for (auto& [k, v] : r) v *= inv;
  }
  int c = r.begin()->first;
  piv_.emplace(c, std::move(r));
  return true;
}

void Echelon::make_reduced() {
  // process pivots from the right; each row only has columns >= its pivot
  for (auto it = piv_.rbegin(); it != piv_.rend(); ++it) {
    int c = it->first;
    for (auto jt = piv_.begin(); jt->first < c; ++jt) {
      auto f = jt->second.find(c);
      if (f != jt->second.end()) {
        Q coef = -f->second;
        axpy(jt->second, coef, it->second);
      }
    }
  }
}

size_t sparse_rank(const std::vector<SparseRow>& rows) {
  Echelon e;
  for (auto& r : rows) e.add(r);
  return e.rank();
}

std::optional<std::vector<Q>> sparse_solve(const std::vector<SparseRow>& rows, const std::vector<Q>& rhs,
                                           int ncols) {
  Echelon e;
  for (size_t i = 0; i < rows.size(); ++i) {
    SparseRow r = rows[i];
    if (i < rhs.size() && rhs[i] != 0) r[ncols] = rhs[i];
    e.add(std::move(r));
  }
  if (e.pivots().count(ncols)) return std::nullopt;
  std::vector<Q> x(ncols, 0);
  const auto& piv = e.pivots();
  for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
    int c = it->first;
    Q v = 0;
    for (auto& [k, a] : it->second) {
      if (k == c) continue;
      if (k == ncols)
        v += a;
      else
        v -= a * x[k];
    }
    x[c] = v;
  }
  return x;
}

std::vector<SparseRow> sparse_nullspace(const std::vector<SparseRow>& rows, int ncols) {
  Echelon e;
  for (auto& r : rows) e.add(r);
  e.make_reduced();
  const auto& piv = e.pivots();
  // column f -> (pivot column, coefficient) entries of the reduced rows
  std::map<int, std::vector<std::pair<int, Q>>> by_col;
  for (auto& [c, row] : piv)
    for (auto& [k, a] : row)
      if (k != c) by_col[k].push_back({c, a});
  std::vector<SparseRow> out;
  for (int f = 0; f < ncols; ++f) {
    if (piv.count(f)) continue;
    SparseRow v;
    v[f] = 1;
    auto it = by_col.find(f);
    if (it != by_col.end())
      for (auto& [c, a] : it->second) v[c] = -a;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace gmf
