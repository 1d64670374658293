#include <conetop/matrix.hpp>

namespace conetop {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::mul(const Mat& o) const {
  if (cols_ != o.rows_) throw internal_error("matrix product shape mismatch");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

IntVec Mat::mul_vec(const IntVec& v) const {
  if (int(v.size()) != cols_) throw internal_error("matrix-vector shape mismatch");
  IntVec r(rows_, Int(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntVec Mat::col(int j) const {
  IntVec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Mat::swap_rows(int i, int j) {
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}
void Mat::swap_cols(int i, int j) {
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}
void Mat::negate_row(int i) {
  for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}
void Mat::negate_col(int j) {
  for (int r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}
void Mat::add_row(int i, int j, const Int& k) {
  for (int c = 0; c < cols_; ++c) at(i, c) += k * at(j, c);
}
void Mat::add_col(int i, int j, const Int& k) {
  for (int r = 0; r < rows_; ++r) at(r, i) += k * at(r, j);
}

Int Mat::det() const {
  if (rows_ != cols_) throw internal_error("determinant of non-square matrix");
  // Bareiss fraction-free elimination; divisions are exact.
  Mat w = *this;
  int n = rows_;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      w.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        w.at(i, j) = num / prev;
      }
    prev = w.at(k, k);
  }
  Int d = w.at(n - 1, n - 1);
  return sign > 0 ? d : Int(-d);
}

std::string Mat::str() const {
  std::string s = "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) s += "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) s += " ";
      s += at(i, j).get_str();
    }
  }
  return s + "]";
}

namespace {

// Position of the entry with minimal nonzero |value| in the lower-right block.
bool find_pivot(const Mat& d, int k, int& pi, int& pj) {
  bool found = false;
  Int best;
  for (int i = k; i < d.rows(); ++i)
    for (int j = k; j < d.cols(); ++j) {
      if (d.at(i, j) == 0) continue;
      Int a = abs(d.at(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SmithResult smith_normal_form(const Mat& m) {
  SmithResult r;
  r.d = m;
  r.u = Mat::identity(m.rows());
  r.v = Mat::identity(m.cols());
  Mat& d = r.d;
  Mat& u = r.u;
  Mat& v = r.v;

  int n = std::min(m.rows(), m.cols());
  int k = 0;
  while (k < n) {
    int pi = 0, pj = 0;
    if (!find_pivot(d, k, pi, pj)) break;
    d.swap_rows(k, pi);
    u.swap_rows(k, pi);
    d.swap_cols(k, pj);
    v.swap_cols(k, pj);

    bool again = true;
    while (again) {
      again = false;
      for (int i = k + 1; i < d.rows(); ++i) {
        if (d.at(i, k) == 0) continue;
        Int q = floor_div(d.at(i, k), d.at(k, k));
        d.add_row(i, k, -q);
        u.add_row(i, k, -q);
        if (d.at(i, k) != 0) {  // remainder strictly smaller: swap and restart
          d.swap_rows(k, i);
          u.swap_rows(k, i);
          again = true;
        }
      }
      for (int j = k + 1; j < d.cols(); ++j) {
        if (d.at(k, j) == 0) continue;
        Int q = floor_div(d.at(k, j), d.at(k, k));
        d.add_col(j, k, -q);
        v.add_col(j, k, -q);
        if (d.at(k, j) != 0) {
          d.swap_cols(k, j);
          v.swap_cols(k, j);
          again = true;
        }
      }
    }

    if (d.at(k, k) < 0) {
      d.negate_row(k);
      u.negate_row(k);
    }

    // Divisibility sweep: pivot must divide every remaining entry.
    bool clean = true;
    for (int i = k + 1; i < d.rows() && clean; ++i)
      for (int j = k + 1; j < d.cols() && clean; ++j)
        if (!divides(d.at(k, k), d.at(i, j))) {
          d.add_row(k, i, Int(1));
          u.add_row(k, i, Int(1));
          clean = false;
        }
    if (clean) ++k;
  }

  for (int i = 0; i < n; ++i)
    if (r.d.at(i, i) != 0) {
      r.rank++;
      r.invariants.push_back(r.d.at(i, i));
    }
  return r;
}

Mat hermite_col(const Mat& m) {
  Mat w = m;
  int n = w.rows(), c = 0;
  for (int row = 0; row < n && c < w.cols(); ++row) {
    // Collapse row entries in columns >= c into a single pivot via gcd steps.
    while (true) {
      int p = -1;
      for (int j = c; j < w.cols(); ++j)
        if (w.at(row, j) != 0) { p = j; break; }
      if (p < 0) break;
      w.swap_cols(c, p);
      bool lone = true;
      for (int j = c + 1; j < w.cols(); ++j) {
        if (w.at(row, j) == 0) continue;
        Int q = floor_div(w.at(row, j), w.at(row, c));
        w.add_col(j, c, -q);
        if (w.at(row, j) != 0) {
          w.swap_cols(c, j);
          lone = false;
        }
      }
      if (lone) break;
    }
    if (w.at(row, c) == 0) continue;
    if (w.at(row, c) < 0) w.negate_col(c);
    // Reduce earlier columns against this pivot.
    for (int j = 0; j < c; ++j) {
      Int q = floor_div(w.at(row, j), w.at(row, c));
      w.add_col(j, c, -q);
    }
    ++c;
  }
  // Keep the first c columns (echelon basis); the rest are zero.
  Mat h(n, c);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < c; ++j) h.at(i, j) = w.at(i, j);
  return h;
}

bool lattice_contains(const Mat& hnf, const IntVec& x) {
  if (int(x.size()) != hnf.rows()) throw internal_error("lattice membership shape mismatch");
  IntVec r = x;
  int col = 0;
  for (int row = 0; row < hnf.rows(); ++row) {
    if (col < hnf.cols() && hnf.at(row, col) != 0) {
      if (!divides(hnf.at(row, col), r[row])) return false;
      Int q = r[row] / hnf.at(row, col);
      if (q != 0)
        for (int i = row; i < hnf.rows(); ++i) r[i] -= q * hnf.at(i, col);
      ++col;
    } else if (r[row] != 0) {
      return false;
    }
  }
  for (const Int& e : r)
    if (e != 0) return false;
  return true;
}

Mat inverse_unimodular(const Mat& u) {
  int n = u.rows();
  if (u.cols() != n) throw internal_error("inverse of non-square matrix");
  // Rational Gauss-Jordan; result entries must come out integral.
  std::vector<std::vector<Rat>> w(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w[i][j] = Rat(u.at(i, j));
    w[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (w[i][col] != 0) { p = i; break; }
    if (p < 0) throw internal_error("singular matrix passed to inverse_unimodular");
    std::swap(w[col], w[p]);
    Rat inv = 1 / w[col][col];
    for (int j = 0; j < 2 * n; ++j) w[col][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || w[i][col] == 0) continue;
      Rat f = w[i][col];
      for (int j = 0; j < 2 * n; ++j) w[i][j] -= f * w[col][j];
    }
  }
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat e = w[i][n + j];
      if (e.get_den() != 1) throw internal_error("inverse of unimodular matrix not integral");
      inv.at(i, j) = e.get_num();
    }
  return inv;
}

}  // namespace conetop
