#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gmf/poly.hpp"

namespace gmf {

using SparseRow = std::map<int, Q>;

void axpy(SparseRow& r, const Q& a, const SparseRow& x);  // r += a*x

// Incremental row echelon form over Q. Pivot rows are normalized (pivot = 1)
// and fully reduced against earlier pivots at insertion time.
class Echelon {
 public:
  // Reduce r against the stored pivots; returns the remainder.
  SparseRow reduce(SparseRow r) const;
  // Insert r; returns false when r is dependent on the stored rows.
  bool add(SparseRow r);
  size_t rank() const { return piv_.size(); }
  const std::map<int, SparseRow>& pivots() const { return piv_; }
  // back-substitute so every pivot column is zero outside its pivot row
  void make_reduced();

 private:
  std::map<int, SparseRow> piv_;
};

size_t sparse_rank(const std::vector<SparseRow>& rows);

// Solve sum_j A[i][j] x_j = b_i with free variables set to 0.
// Rows are equations; rhs[i] is the right side of row i.
std::optional<std::vector<Q>> sparse_solve(const std::vector<SparseRow>& rows, const std::vector<Q>& rhs,
                                           int ncols);

// Basis of {x : A x = 0}.
std::vector<SparseRow> sparse_nullspace(const std::vector<SparseRow>& rows, int ncols);

}  // namespace gmf
