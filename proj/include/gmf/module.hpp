#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmf/linalg.hpp"
#include "gmf/poly.hpp"
#include "gmf/series.hpp"

namespace gmf {

// Free module sum_i S<d_i>. Under M<k>_j = M_{j+k} the generator of S<d>
// lives in internal degree -d, so graded_rank = sum_i q^{-d_i}.
struct GradedFreeModule {
  RingPtr ring;
  std::vector<int> shifts;

  size_t rank() const { return shifts.size(); }
  int gen_degree(size_t i) const { return -shifts[i]; }
  GradedFreeModule shifted(int k) const;
  bool operator==(const GradedFreeModule& o) const { return shifts == o.shifts && same_ring(ring, o.ring); }
};

PoincareSeries graded_rank(const GradedFreeModule& m);
GradedFreeModule direct_sum(const GradedFreeModule& a, const GradedFreeModule& b);
// i-major ordering of pairs (i, j)
GradedFreeModule tensor_modules(const GradedFreeModule& a, const GradedFreeModule& b);

// Dense polynomial matrix; rows index the target.
struct Mat {
  size_t rows = 0, cols = 0;
  std::vector<Poly> a;

  Mat() = default;
  Mat(size_t r, size_t c, const RingPtr& ring = nullptr) : rows(r), cols(c), a(r * c, Poly(ring)) {}
  static Mat identity(size_t n, const RingPtr& ring);
  static Mat scalar(size_t n, const Poly& p);

  Poly& operator()(size_t i, size_t j) { return a[i * cols + j]; }
  const Poly& operator()(size_t i, size_t j) const { return a[i * cols + j]; }

  bool is_zero() const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }
  Mat transpose() const;
  Mat operator-() const;
  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  friend Mat operator+(Mat x, const Mat& y) { return x += y; }
  friend Mat operator-(Mat x, const Mat& y) { return x -= y; }
  friend Mat operator*(const Mat& x, const Mat& y);
  friend Mat operator*(const Q& c, Mat x);
  Mat map(const std::function<Poly(const Poly&)>& fn) const;

  Mat select(const std::vector<size_t>& rs, const std::vector<size_t>& cs) const;
  Mat permuted(const std::vector<size_t>& row_perm, const std::vector<size_t>& col_perm) const;
};

Mat kron(const Mat& x, const Mat& y);
// [[a, b], [c, d]]; empty blocks allowed when their shape is implied
Mat block2(const Mat& a, const Mat& b, const Mat& c, const Mat& d);
Mat block_diag(const Mat& a, const Mat& b);

struct GradedMatrix {
  GradedFreeModule source, target;
  int degree = 0;
  Mat m;

  // expected degree of entry (i, j): target shift - source shift + degree
  int entry_degree(size_t i, size_t j) const { return target.shifts[i] - source.shifts[j] + degree; }
  // empty string when every entry is zero or homogeneous of the right degree
  std::string check_homogeneity() const;
};

// Rational linear map induced in internal degree e; rows are images of the
// degree-e basis of the source, expressed in the target degree-(e+degree) basis.
struct SliceBasis {
  std::vector<std::pair<size_t, const Exp*>> elems;
  std::map<std::pair<size_t, Exp>, int> index;
};
SliceBasis slice_basis(const GradedFreeModule& m, int e);
std::vector<SparseRow> slice_images(const GradedMatrix& a, int e, const SliceBasis& src, const SliceBasis& tgt);

// (kernel dim, image dim) of the degree-e slice
std::pair<size_t, size_t> degree_slice_rank(const GradedMatrix& a, int e);

// Linear systems whose unknowns are the coefficients of homogeneous graded
// matrices: equations sum_k L_k U_k R_k = RHS, each polynomial identity expanded
// into coefficient equations.
class LinearSystem {
 public:
  explicit LinearSystem(RingPtr ring) : ring_(std::move(ring)) {}
  // unknown matrix source -> target of given degree; returns its id
  int add_unknown(const GradedFreeModule& source, const GradedFreeModule& target, int degree);
  struct Term {
    int unknown;
    const Mat* left;   // null means identity
    const Mat* right;  // null means identity
    Q scale = 1;
  };
  // adds sum of terms = rhs (rhs rows x cols, or empty Mat for zero)
  void add_equation(const std::vector<Term>& terms, const Mat& rhs);
  int ncols() const { return ncols_; }
  size_t nrows() const { return rows_.size(); }

  std::optional<std::vector<Q>> solve() const { return sparse_solve(rows_, rhs_, ncols_); }
  std::vector<SparseRow> nullspace() const { return sparse_nullspace(rows_, ncols_); }
  // materialize unknown id from a coefficient vector (dense or sparse)
  Mat extract(int id, const std::vector<Q>& x) const;
  Mat extract(int id, const SparseRow& x) const;

 private:
  struct Unknown {
    size_t rows, cols;
    std::vector<int> offset;  // per entry, first column; -1 for impossible degree
    std::vector<const std::vector<Exp>*> monos;
  };
  RingPtr ring_;
  std::vector<Unknown> unknowns_;
  int ncols_ = 0;
  std::vector<SparseRow> rows_;
  std::vector<Q> rhs_;
};

}  // namespace gmf
