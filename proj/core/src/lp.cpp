#include <conetop/lp.hpp>

namespace conetop {

namespace {

// Tableau rows 0..m-1 are constraints with rhs in the last column; row m is the
// reduced-cost row (z_j = c_B B^-1 A_j - c_j, optimal when all z_j >= 0).
struct Tableau {
  RatMat t;
  std::vector<int> basis;
  int m, n;  // constraints, structural+artificial columns

  void pivot(int row, int col) {
    Rat p = t[row][col];
    for (auto& e : t[row]) e /= p;
    for (int i = 0; i <= m; ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rat f = t[i][col];
      for (int j = 0; j <= n; ++j) t[i][j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  // Bland's rule; returns false when unbounded.
  bool run(const std::vector<bool>& allowed) {
    while (true) {
      int col = -1;
      for (int j = 0; j < n; ++j)
        if (allowed[j] && t[m][j] < 0) { col = j; break; }
      if (col < 0) return true;
      int row = -1;
      Rat best;
      for (int i = 0; i < m; ++i) {
        if (t[i][col] <= 0) continue;
        Rat ratio = t[i][n] / t[i][col];
        if (row < 0 || ratio < best || (ratio == best && basis[i] < basis[row])) {
          row = i;
          best = ratio;
        }
      }
      if (row < 0) return false;
      pivot(row, col);
    }
  }
};

}  // namespace

LpResult lp_solve(const RatMat& a, const RatVec& b, const RatVec& c) {
  int m = int(a.size());
  int n = m ? int(a[0].size()) : int(c.size());
  LpResult res;

  Tableau tb;
  tb.m = m;
  tb.n = n + m;  // structural + one artificial per row
  tb.t.assign(m + 1, RatVec(tb.n + 1, Rat(0)));
  tb.basis.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    bool neg = b[i] < 0;
    for (int j = 0; j < n; ++j) tb.t[i][j] = neg ? -a[i][j] : a[i][j];
    tb.t[i][tb.n] = neg ? -b[i] : b[i];
    tb.t[i][n + i] = 1;
    tb.basis[i] = n + i;
  }
  // Phase 1 objective: maximize -(sum of artificials).
  for (int j = 0; j <= tb.n; ++j) {
    Rat s(0);
    for (int i = 0; i < m; ++i) s += tb.t[i][j];
    tb.t[m][j] = (j >= n && j < tb.n) ? Rat(0) : -s;
  }
  std::vector<bool> allowed(tb.n, true);
  if (!tb.run(allowed)) throw internal_error("phase-1 objective unbounded");
  if (tb.t[m][tb.n] != 0) {
    res.status = LpResult::Status::infeasible;
    return res;
  }
  // Drive leftover artificials out of the basis where possible.
  for (int i = 0; i < m; ++i) {
    if (tb.basis[i] < n) continue;
    int col = -1;
    for (int j = 0; j < n; ++j)
      if (tb.t[i][j] != 0) { col = j; break; }
    if (col >= 0) tb.pivot(i, col);
  }
  for (int j = n; j < tb.n; ++j) allowed[j] = false;

  // Phase 2: rebuild the reduced-cost row for the real objective.
  for (int j = 0; j <= tb.n; ++j) tb.t[m][j] = 0;
  for (int j = 0; j < n; ++j) tb.t[m][j] = -c[j];
  for (int i = 0; i < m; ++i) {
    if (tb.basis[i] >= n) continue;  // artificial stuck at zero: cost 0
    Rat cb = c[tb.basis[i]];
    if (cb == 0) continue;
    for (int j = 0; j <= tb.n; ++j) tb.t[m][j] += cb * tb.t[i][j];
  }
  if (!tb.run(allowed)) {
    res.status = LpResult::Status::unbounded;
    return res;
  }
  res.status = LpResult::Status::optimal;
  res.value = tb.t[m][tb.n];
  res.x.assign(n, Rat(0));
  for (int i = 0; i < m; ++i)
    if (tb.basis[i] < n) res.x[tb.basis[i]] = tb.t[i][tb.n];
  return res;
}

bool lp_feasible(const RatMat& a, const RatVec& b) {
  RatVec c(a.empty() ? 0 : a[0].size(), Rat(0));
  if (a.empty()) {
    for (const Rat& e : b)
      if (e != 0) return false;
    return true;
  }
  return lp_solve(a, b, c).status == LpResult::Status::optimal;
}

bool in_rational_cone(const std::vector<IntVec>& gens, const IntVec& v) {
  int dim = int(v.size());
  bool zero = true;
  for (const Int& e : v)
    if (e != 0) { zero = false; break; }
  if (zero) return true;
  if (gens.empty()) return false;
  RatMat a(dim, RatVec(gens.size()));
  RatVec b(dim);
  for (int i = 0; i < dim; ++i) {
    b[i] = Rat(v[i]);
    for (size_t j = 0; j < gens.size(); ++j) a[i][j] = Rat(gens[j][i]);
  }
  return lp_feasible(a, b);
}

std::optional<IntVec> strictly_positive_functional(const std::vector<IntVec>& gens, int dim) {
  if (gens.empty()) return IntVec(dim, Int(0));
  // Find w (free sign) with w.g_i >= 1: write w = p - q, p,q >= 0, slack s_i >= 0,
  // p.g_i - q.g_i - s_i = 1.
  int m = int(gens.size());
  int n = 2 * dim + m;
  RatMat a(m, RatVec(n, Rat(0)));
  RatVec b(m, Rat(1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < dim; ++j) {
      a[i][j] = Rat(gens[i][j]);
      a[i][dim + j] = -Rat(gens[i][j]);
    }
    a[i][2 * dim + i] = -1;
  }
  RatVec c(n, Rat(0));
  LpResult r = lp_solve(a, b, c);
  if (r.status != LpResult::Status::optimal) return std::nullopt;
  RatVec w(dim);
  Int denom = 1;
  for (int j = 0; j < dim; ++j) {
    w[j] = r.x[j] - r.x[dim + j];
    denom = lcm(denom, w[j].get_den());
  }
  IntVec wi(dim);
  for (int j = 0; j < dim; ++j) {
    Rat scaled = w[j] * Rat(denom);
    wi[j] = scaled.get_num();
  }
  for (const auto& g : gens) {
    Int dot = 0;
    for (int j = 0; j < dim; ++j) dot += wi[j] * g[j];
    if (dot < 1) throw internal_error("positivity functional failed integral check");
  }
  return wi;
}

}  // namespace conetop
