#include "tropicast/lp.hpp"

namespace trop {

// Phase-1 simplex on the tableau for min sum(artificials), Ax = b, x >= 0.
// Bland's rule; exact rational pivots.
bool feasible_nonneg(const QMat& a, const QVec& b) {
  size_t m = a.size();
  if (m == 0) return true;
  size_t n = a[0].size();
  // Tableau: rows 0..m-1 constraints (with artificial basis), row m objective.
  // Columns: 0..n-1 structural, n..n+m-1 artificial, n+m rhs.
  size_t cols = n + m + 1;
  QMat t(m + 1, QVec(cols, Rat(0)));
  for (size_t i = 0; i < m; ++i) {
    int s = sgn(b[i]);
    Rat f = (s < 0) ? Rat(-1) : Rat(1);
    for (size_t j = 0; j < n; ++j) t[i][j] = f * a[i][j];
    t[i][n + i] = 1;
    t[i][cols - 1] = f * b[i];
  }
  // Objective row = -(sum of constraint rows) restricted to structural cols.
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) t[m][j] -= t[i][j];
  for (size_t i = 0; i < m; ++i) t[m][cols - 1] -= t[i][cols - 1];
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = n + i;

  while (true) {
    // Bland: smallest index with negative reduced cost.
    size_t enter = cols;
    for (size_t j = 0; j + 1 < cols; ++j)
      if (t[m][j] < 0) { enter = j; break; }
    if (enter == cols) break;
    // Ratio test, Bland tie-break on basis index.
    size_t leave = m;
    Rat best;
    for (size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][cols - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == m) break;  // unbounded below cannot happen in phase 1; bail
    Rat piv = t[leave][enter];
    for (size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
    for (size_t i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  // Feasible iff phase-1 optimum is zero.
  return t[m][cols - 1] == 0;
}

bool in_convex_hull(const QMat& points, const QVec& p) {
  return in_polyhedron_vrep(points, {}, p);
}

bool in_polyhedron_vrep(const QMat& points, const QMat& rays, const QVec& p) {
  if (points.empty() && rays.empty()) return false;
  size_t n = p.size();
  size_t np = points.size(), nr = rays.size();
  QMat a(n + 1, QVec(np + nr, Rat(0)));
  QVec b(n + 1, Rat(0));
  for (size_t j = 0; j < np; ++j) {
    for (size_t i = 0; i < n; ++i) a[i][j] = points[j][i];
    a[n][j] = 1;
  }
  for (size_t j = 0; j < nr; ++j)
    for (size_t i = 0; i < n; ++i) a[i][np + j] = rays[j][i];
  for (size_t i = 0; i < n; ++i) b[i] = p[i];
  b[n] = points.empty() ? Rat(0) : Rat(1);
  if (points.empty()) {
    // Pure cone, anchored at 0: drop the convexity row.
    a.pop_back();
    b.pop_back();
  }
  return feasible_nonneg(a, b);
}

bool in_cone(const QMat& gens, const QVec& g) {
  if (is_zero(g)) return true;
  return in_polyhedron_vrep({}, gens, g);
}

}  // namespace trop
