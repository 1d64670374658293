#pragma once

#include <conetop/integers.hpp>

namespace conetop {

// Dense integer matrix, row-major. Small dimensions only; exact entries.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Int(0)) {}

  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool operator==(const Mat& o) const = default;

  Mat mul(const Mat& o) const;
  IntVec mul_vec(const IntVec& v) const;
  Mat transpose() const;
  IntVec col(int j) const;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void negate_row(int i);
  void negate_col(int j);
  // row i += k * row j / col analogue
  void add_row(int i, int j, const Int& k);
  void add_col(int i, int j, const Int& k);

  Int det() const;  // exact, via fraction-free elimination
  std::string str() const;

 private:
  int rows_ = 0, cols_ = 0;
  IntVec a_;
};

// u * m * v == d with u, v unimodular and d diagonal with a divisibility chain
// d(0,0) | d(1,1) | ... ; nonzero entries first, all nonnegative.
struct SmithResult {
  Mat u, d, v;
  int rank = 0;                 // number of nonzero diagonal entries
  IntVec invariants;            // nonzero diagonal entries, ascending chain
};

SmithResult smith_normal_form(const Mat& m);

// Column-style Hermite form of the lattice spanned by the columns of m:
// returns an n x s matrix (s = lattice rank) in column echelon form with
// positive pivots, entries above each pivot zero and entries to the left of a
// pivot reduced into [0, pivot). Canonical for the lattice.
Mat hermite_col(const Mat& m);

// x member of the column span of a hermite_col result.
bool lattice_contains(const Mat& hnf, const IntVec& x);

// Exact inverse of a unimodular integer matrix.
Mat inverse_unimodular(const Mat& u);

}  // namespace conetop
