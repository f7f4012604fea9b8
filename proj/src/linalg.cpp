#include "tropicast/linalg.hpp"

#include <algorithm>

namespace trop {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    Rat inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back((int)c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank_q(const QMat& m) {
  QMat c = m;
  return (int)rref(c).size();
}

int affine_rank(const QMat& pts) {
  if (pts.empty()) return -1;
  QMat diffs;
  for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(vec_sub(pts[i], pts[0]));
  return rank_q(diffs);
}

std::optional<QVec> solve_linear(const QMat& a, const QVec& b) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  QMat aug(rows, QVec(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<int> piv = rref(aug);
  for (int p : piv)
    if (p == (int)cols) return std::nullopt;  // pivot in rhs column: inconsistent
  QVec x(cols, Rat(0));
  for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug[k][cols];
  return x;
}

QMat nullspace(const QMat& a) {
  if (a.empty()) return {};
  size_t cols = a[0].size();
  QMat m = a;
  std::vector<int> piv = rref(m);
  std::vector<bool> is_piv(cols, false);
  for (int p : piv) is_piv[p] = true;
  QMat basis;
  for (size_t c = 0; c < cols; ++c) {
    if (is_piv[c]) continue;
    QVec v(cols, Rat(0));
    v[c] = 1;
    for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m[k][c];
    basis.push_back(v);
  }
  return basis;
}

ZMat nullspace_z(const ZMat& a) {
  QMat aq;
  for (const auto& row : a) aq.push_back(to_q(row));
  QMat nq = nullspace(aq);
  ZMat out;
  for (const auto& row : nq) out.push_back(primitive_q(row));
  return out;
}

ZVec primitive(const ZVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0 || g == 1) return v;
  ZVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

ZVec primitive_q(const QVec& v) {
  Int den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  ZVec z(v.size());
  for (size_t i = 0; i < v.size(); ++i) z[i] = v[i].get_num() * (den / v[i].get_den());
  return primitive(z);
}

ZVec primitive_signed(const ZVec& v) {
  ZVec p = primitive(v);
  for (const auto& x : p) {
    if (x > 0) return p;
    if (x < 0) return zvec_neg(p);
  }
  return p;
}

ZMat hnf_rows(const ZMat& m) {
  if (m.empty()) return {};
  ZMat h = m;
  size_t rows = h.size(), cols = h[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    // Euclidean column sweep: make all entries below row r in column c zero.
    while (true) {
      size_t best = rows;
      for (size_t i = r; i < rows; ++i)
        if (h[i][c] != 0 && (best == rows || abs(h[i][c]) < abs(h[best][c]))) best = i;
      if (best == rows) break;
      std::swap(h[r], h[best]);
      bool done = true;
      for (size_t i = r + 1; i < rows; ++i) {
        if (h[i][c] == 0) continue;
        Int q = h[i][c] / h[r][c];  // truncated division is fine for the sweep
        for (size_t j = 0; j < cols; ++j) h[i][j] -= q * h[r][j];
        if (h[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (h[r][c] == 0) continue;
    if (h[r][c] < 0)
      for (size_t j = 0; j < cols; ++j) h[r][j] = -h[r][j];
    // Reduce entries above the pivot to the canonical range [0, pivot).
    for (size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), h[r][c].get_mpz_t());
      if (q != 0)
        for (size_t j = 0; j < cols; ++j) h[i][j] -= q * h[r][j];
    }
    ++r;
  }
  h.resize(r);
  return h;
}

ZMat integer_kernel(const ZMat& m) {
  if (m.empty()) return {};
  size_t rows = m.size(), cols = m[0].size();
  // Column-style HNF with a unimodular transform tracked in an identity block.
  // Work on the transpose: rows of t are the columns of m extended by I.
  ZMat t(cols, ZVec(rows + cols, Int(0)));
  for (size_t i = 0; i < cols; ++i) {
    for (size_t j = 0; j < rows; ++j) t[i][j] = m[j][i];
    t[i][rows + i] = 1;
  }
  // Eliminate the first `rows` coordinates by unimodular row ops on t.
  size_t r = 0;
  for (size_t c = 0; c < rows && r < cols; ++c) {
    while (true) {
      size_t best = cols;
      for (size_t i = r; i < cols; ++i)
        if (t[i][c] != 0 && (best == cols || abs(t[i][c]) < abs(t[best][c]))) best = i;
      if (best == cols) break;
      std::swap(t[r], t[best]);
      bool done = true;
      for (size_t i = r + 1; i < cols; ++i) {
        if (t[i][c] == 0) continue;
        Int q = t[i][c] / t[r][c];
        for (size_t j = 0; j < rows + cols; ++j) t[i][j] -= q * t[r][j];
        if (t[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r < cols && t[r][c] != 0) ++r;
  }
  ZMat kernel;
  for (size_t i = r; i < cols; ++i) {
    bool zero = true;
    for (size_t c = 0; c < rows; ++c)
      if (t[i][c] != 0) { zero = false; break; }
    if (!zero) fail(Err::Internal, "integer_kernel elimination failed");
    kernel.push_back(ZVec(t[i].begin() + rows, t[i].end()));
  }
  return hnf_rows(kernel);
}

ZMat generated_lattice_basis(const ZMat& gens) { return hnf_rows(gens); }

ZMat saturated_lattice_basis(const ZMat& gens) {
  // Row span V of gens: x in V  iff  N x = 0 with rows of N spanning V-perp.
  ZMat n = nullspace_z(gens);
  if (n.empty()) {
    // V is the full space.
    if (gens.empty()) return {};
    size_t cols = gens[0].size();
    ZMat id(cols, ZVec(cols, Int(0)));
    for (size_t i = 0; i < cols; ++i) id[i][i] = 1;
    return id;
  }
  return integer_kernel(n);
}

QVec lift_functional(const QMat& basis_rows, const QVec& u) {
  size_t d = basis_rows.size();
  if (d == 0) return QVec(u.size(), Rat(0));
  size_t n = basis_rows[0].size();
  // Solve (B B^T) y = u, w = B^T y.
  QMat g(d, QVec(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) g[i][j] = dot(basis_rows[i], basis_rows[j]);
  auto y = solve_linear(g, u);
  if (!y) fail(Err::Internal, "lift_functional: gram matrix singular");
  QVec w(n, Rat(0));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < n; ++j) w[j] += (*y)[i] * basis_rows[i][j];
  return w;
}

std::optional<QVec> coords_in_basis(const QMat& basis_rows, const QVec& v) {
  size_t d = basis_rows.size();
  size_t n = v.size();
  QMat a(n, QVec(d));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < d; ++j) a[i][j] = basis_rows[j][i];
  return solve_linear(a, v);
}

Int det_z(ZMat m) {
  size_t n = m.size();
  // Fraction-free (Bareiss) elimination.
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return n ? Int(sign * m[n - 1][n - 1]) : Int(1);
}

}  // namespace trop
