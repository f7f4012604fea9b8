#include "tropicast/lines.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace trop {

long binom2(long m) { return m * (m - 1) / 2; }

Int count_line_types(int n) {
  if (n < 2) fail(Err::EmptyInput, "count_line_types: n >= 2 required");
  Int prod = 1;
  for (int k = 1; 2 * k - 3 <= 2 * n - 3; ++k)
    if (2 * k - 3 >= 1) prod *= 2 * k - 3;
  return prod;
}

namespace {

// Canonical encoding of a leaf tree: the sorted list of internal-edge splits,
// each split recorded as the sorted side not containing leaf 1.
using TreeKey = std::vector<std::vector<int>>;

struct LeafTree {
  // Adjacency between vertex ids; leaves are 1..L, internal vertices L+1, ...
  std::map<int, std::vector<int>> adj;
  int next_internal;
};

TreeKey tree_key(const LeafTree& t, int leaves) {
  TreeKey key;
  for (const auto& [u, nbrs] : t.adj) {
    for (int v : nbrs) {
      if (u >= v) continue;
      if (u <= leaves || v <= leaves) continue;  // leaf edge: trivial split
      // Side of v after removing edge (u, v).
      std::set<int> side;
      std::vector<int> stack = {v};
      std::set<int> seen = {u, v};
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (x <= leaves) side.insert(x);
        for (int y : t.adj.at(x))
          if (!seen.count(y)) { seen.insert(y); stack.push_back(y); }
      }
      std::vector<int> s(side.begin(), side.end());
      if (side.count(1)) {
        // Take the complement so the recorded side avoids leaf 1.
        std::vector<int> comp;
        for (int l = 1; l <= leaves; ++l)
          if (!side.count(l)) comp.push_back(l);
        s = comp;
      }
      key.push_back(s);
    }
  }
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

std::vector<std::vector<std::vector<int>>> enumerate_line_trees(int n) {
  if (n < 2) fail(Err::EmptyInput, "enumerate_line_trees: n >= 2 required");
  int leaves = n + 1;
  // Start with the star on leaves 1, 2, 3.
  LeafTree start;
  start.next_internal = leaves + 1;
  int c = start.next_internal++;
  for (int l : {1, 2, 3}) {
    start.adj[c].push_back(l);
    start.adj[l].push_back(c);
  }
  std::vector<LeafTree> trees = {start};
  for (int l = 4; l <= leaves; ++l) {
    std::vector<LeafTree> next;
    for (const LeafTree& t : trees) {
      std::vector<std::pair<int, int>> edges;
      for (const auto& [u, nbrs] : t.adj)
        for (int v : nbrs)
          if (u < v) edges.push_back({u, v});
      for (const auto& [u, v] : edges) {
        LeafTree s = t;
        int w = s.next_internal++;
        auto& au = s.adj[u];
        auto& av = s.adj[v];
        au.erase(std::find(au.begin(), au.end(), v));
        av.erase(std::find(av.begin(), av.end(), u));
        s.adj[u].push_back(w);
        s.adj[v].push_back(w);
        s.adj[w] = {u, v, l};
        s.adj[l] = {w};
        next.push_back(s);
      }
    }
    trees = next;
  }
  std::set<TreeKey> seen;
  std::vector<TreeKey> out;
  for (const LeafTree& t : trees) {
    TreeKey k = tree_key(t, leaves);
    if (seen.insert(k).second) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TropicalLine make_line(int n, const std::vector<std::pair<int, int>>& tree_edges,
                       const std::vector<int>& leaf_at, const QVec& edge_lengths,
                       const QVec& base_position) {
  int internal = n - 1;
  if ((int)leaf_at.size() != n + 1 || (int)tree_edges.size() != n - 2 ||
      edge_lengths.size() != tree_edges.size())
    fail(Err::DimMismatch, "make_line: inconsistent tree data");
  std::vector<int> degree(internal, 0);
  for (const auto& [u, v] : tree_edges) { degree[u]++; degree[v]++; }
  for (int l : leaf_at) degree[l]++;
  for (int d : degree)
    if (d != 3) fail(Err::Internal, "make_line: tree is not trivalent");
  for (const auto& t : edge_lengths)
    if (t <= 0) fail(Err::Internal, "make_line: edge lengths must be positive");

  auto leaf_dir = [&](int leaf) {
    ZVec d(n, Int(0));
    if (leaf <= n) d[leaf - 1] = 1;
    else
      for (int i = 0; i < n; ++i) d[i] = -1;
    return d;
  };

  // Direction of edge e as seen from u toward v: sum of the leaf directions
  // on the v side.
  auto edge_dir = [&](int e, int u, int v) {
    std::set<int> side = {v};
    std::vector<int> stack = {v};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (size_t f = 0; f < tree_edges.size(); ++f) {
        if ((int)f == e) continue;
        auto [p, q] = tree_edges[f];
        if (p == x && !side.count(q) && q != u) { side.insert(q); stack.push_back(q); }
        if (q == x && !side.count(p) && p != u) { side.insert(p); stack.push_back(p); }
      }
    }
    ZVec d(n, Int(0));
    for (int leaf = 1; leaf <= n + 1; ++leaf)
      if (side.count(leaf_at[leaf - 1])) d = zvec_add(d, leaf_dir(leaf));
    if (is_zero_z(d)) fail(Err::Internal, "make_line: zero edge direction");
    return d;
  };

  TropicalLine line;
  line.n = n;
  line.tree_edges = tree_edges;
  line.leaf_at = leaf_at;
  line.edge_lengths = edge_lengths;
  line.positions.assign(internal, QVec());
  std::vector<char> have(internal, 0);
  line.positions[0] = base_position;
  have[0] = 1;
  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t e = 0; e < tree_edges.size(); ++e) {
      auto [u, v] = tree_edges[e];
      if (have[u] && !have[v]) {
        line.positions[v] =
            vec_add(line.positions[u], vec_scale(to_q(edge_dir((int)e, u, v)), edge_lengths[e]));
        have[v] = 1;
        progress = true;
      } else if (have[v] && !have[u]) {
        line.positions[u] =
            vec_add(line.positions[v], vec_scale(to_q(edge_dir((int)e, v, u)), edge_lengths[e]));
        have[u] = 1;
        progress = true;
      }
    }
  }
  for (char h : have)
    if (!h) fail(Err::Internal, "make_line: tree is disconnected");

  TropicalComplex& x = line.complex;
  x.ambient_dim = n;
  x.pure_dim = 1;
  QMat verts = line.positions;
  std::sort(verts.begin(), verts.end(), lex_less);
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  if (verts.size() != line.positions.size())
    fail(Err::Internal, "make_line: coincident internal vertices");
  x.vertices = verts;
  auto vid = [&](int internal_vertex) {
    const QVec& p = line.positions[internal_vertex];
    return (int)(std::lower_bound(x.vertices.begin(), x.vertices.end(), p, lex_less) -
                 x.vertices.begin());
  };
  for (int v = 0; v < internal; ++v) {
    TCCell c;
    c.vertices = {vid(v)};
    c.dim = 0;
    x.cells.push_back(c);
  }
  for (size_t e = 0; e < tree_edges.size(); ++e) {
    auto [u, v] = tree_edges[e];
    TCCell c;
    c.vertices = {std::min(vid(u), vid(v)), std::max(vid(u), vid(v))};
    c.dim = 1;
    x.cells.push_back(c);
  }
  for (int leaf = 1; leaf <= n + 1; ++leaf) {
    TCCell c;
    c.vertices = {vid(leaf_at[leaf - 1])};
    c.rays = {leaf_dir(leaf)};
    c.dim = 1;
    x.cells.push_back(c);
  }
  std::sort(x.cells.begin(), x.cells.end(), [](const TCCell& a, const TCCell& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.vertices != b.vertices) return a.vertices < b.vertices;
    return a.rays < b.rays;
  });
  return line;
}

CaterpillarLine caterpillar(int n, const QMat* vertex_positions) {
  if (n < 3) fail(Err::EmptyInput, "caterpillar: n >= 3 required");
  int internal = n - 1;
  std::vector<std::pair<int, int>> spine;
  for (int j = 0; j + 1 < internal; ++j) spine.push_back({j, j + 1});
  std::vector<int> leaf_at(n + 1);
  leaf_at[0] = 0;  // leaf 1
  leaf_at[1] = 0;  // leaf 2
  for (int j = 1; j <= n - 3; ++j) leaf_at[j + 1] = j;  // leaf j+2 at spine vertex j
  leaf_at[n - 1] = internal - 1;                        // leaf n
  leaf_at[n] = internal - 1;                            // leaf n+1

  QVec lengths(spine.size(), Rat(1));
  QVec base(n, Rat(0));
  if (vertex_positions) {
    const QMat& pos = *vertex_positions;
    if ((int)pos.size() != internal)
      fail(Err::NotACaterpillar, "caterpillar: wrong number of vertex positions");
    // Spine edge j must run in direction -(e_1 + ... + e_{j+2}).
    for (size_t j = 0; j < spine.size(); ++j) {
      QVec diff = vec_sub(pos[j + 1], pos[j]);
      Rat t = -diff[0];
      if (t <= 0) fail(Err::NotACaterpillar, "caterpillar: edge direction violated");
      for (int i = 0; i < n; ++i) {
        Rat want = (i <= (int)j + 1) ? -t : Rat(0);
        if (diff[i] != want)
          fail(Err::NotACaterpillar, "caterpillar: edge direction violated");
      }
      lengths[j] = t;
    }
    base = pos[0];
  }
  CaterpillarLine out;
  out.line = make_line(n, spine, leaf_at, lengths, base);

  // Complete-intersection system: one tropical linear form per spine level;
  // variables beyond x_n fold into the constant term.
  auto var_exp = [&](int i) {  // x_i for i <= n, else the constant monomial
    ZVec e(n, Int(0));
    if (i <= n) e[i - 1] = 1;
    return e;
  };
  std::vector<std::pair<ZVec, Rat>> f1;
  f1.push_back({var_exp(1), Rat(0)});
  f1.push_back({var_exp(2), Rat(0)});
  f1.push_back({var_exp(3), Rat(0)});
  {
    ZVec e4 = var_exp(4);
    Rat v4 = lengths[0];
    bool dup = false;
    for (auto& [e, v] : f1)
      if (e == e4) dup = true;
    if (!dup) f1.push_back({e4, v4});
    else fail(Err::Internal, "caterpillar: variable clash");
  }
  out.system.push_back(valued_from_support(n, f1));
  for (int i = 2; i <= n - 1; ++i) {
    std::vector<std::pair<ZVec, Rat>> fi;
    fi.push_back({var_exp(i), lengths[i - 2]});
    fi.push_back({var_exp(i + 1), Rat(0)});
    fi.push_back({var_exp(i + 2), Rat(0)});
    out.system.push_back(valued_from_support(n, fi));
  }
  return out;
}

namespace {

// Certified count for a candidate projection of the standard caterpillar:
// exactly C(n-1,2) self-intersections, all of them crossings of leaf rays
// e_2 .. e_n.
bool certify_crossing_projection(const TropicalLine& line, const ZMat& a) {
  PlaneCurveImage img;
  try {
    img = project_and_intersect(line.complex, a);
  } catch (const TropError&) {
    return false;
  }
  long want = binom2(line.n - 1);
  long count = (long)img.sips.size();
  if (count != want) return false;
  for (const auto& sip : img.sips) {
    for (const auto& [i, j] : sip.piece_pairs) {
      for (int pidx : {i, j}) {
        const TCCell& c = line.complex.cells[img.pieces[pidx].source_cell];
        if (c.rays.size() != 1) return false;  // must be a leaf ray
        int which = -1;
        for (int t = 0; t < line.n; ++t)
          if (c.rays[0][t] == 1) { which = t; break; }
        Int sum = 0;
        for (int t = 0; t < line.n; ++t) sum += abs(c.rays[0][t]);
        if (sum != 1 || which <= 0) return false;  // e_2 .. e_n only
      }
    }
  }
  return true;
}

}  // namespace

ZMat lower_bound_projection(int n) {
  if (n < 3) fail(Err::EmptyInput, "lower_bound_projection: n >= 3 required");
  ZMat a = {{Int(-2), Int(1), Int(0)}, {Int(1), Int(0), Int(1)}};
  if (!certify_crossing_projection(caterpillar(3).line, a))
    fail(Err::ConstructionFailed, "lower_bound_projection: base case failed");
  for (int m = 4; m <= n; ++m) {
    TropicalLine line = caterpillar(m).line;
    bool found = false;
    for (long reach = 1; reach <= 64 && !found; reach *= 2) {
      for (long den = 1; den <= 4 && !found; den *= 2) {
        std::vector<std::pair<long, long>> cands;
        for (long p1 = -8 * reach; p1 <= 8 * reach; ++p1)
          for (long p2 = -8 * reach; p2 <= 8 * reach; ++p2) cands.push_back({p1, p2});
        std::sort(cands.begin(), cands.end(), [](const auto& x, const auto& y) {
          long nx = std::abs(x.first) + std::abs(x.second);
          long ny = std::abs(y.first) + std::abs(y.second);
          if (nx != ny) return nx < ny;
          return x < y;
        });
        for (const auto& [p1, p2] : cands) {
          // Candidate new column (p1/den, p2/den): clear denominators by
          // scaling the whole matrix (the crossing pattern is invariant).
          ZMat trial(2, ZVec(m));
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < m - 1; ++j) trial[i][j] = a[i][j] * den;
          trial[0][m - 1] = p1;
          trial[1][m - 1] = p2;
          if (certify_crossing_projection(line, trial)) {
            a = trial;
            found = true;
            break;
          }
        }
      }
    }
    if (!found)
      fail(Err::ConstructionFailed, "lower_bound_projection: candidate grid exhausted");
  }
  return a;
}

PerturbedProductCurve perturbed_product_curve(int n, const std::vector<int>& degrees,
                                              unsigned long seed, const PerturbOptions& opt) {
  if ((int)degrees.size() != n - 1)
    fail(Err::DimMismatch, "perturbed_product_curve: need n-1 degrees");
  std::vector<ValuedPolynomial> base =
      opt.base_forms ? *opt.base_forms : caterpillar(n).system;
  ZMat a = opt.projection ? *opt.projection : lower_bound_projection(n);

  long dprod = 1;
  for (int d : degrees) dprod *= d;

  for (unsigned long attempt = 0; attempt < 24; ++attempt) {
    unsigned long s = seed + attempt;
    long counter = 0;
    std::vector<ValuedPolynomial> factors;
    for (int i = 0; i < n - 1; ++i) {
      ValuedPolynomial gi;
      for (int c = 0; c < degrees[i]; ++c) {
        ValuedPolynomial copy = base[i];
        if (opt.offsets) {
          const QVec& off = (*opt.offsets)[i][c];
          if (off.size() != copy.terms.size())
            fail(Err::DimMismatch, "perturbed_product_curve: offset arity mismatch");
          for (size_t t = 0; t < copy.terms.size(); ++t) copy.terms[t].val += off[t];
        } else if (c + 1 < degrees[i]) {
          // Perturbation ladder: distinct odd multiples of 1/1000, shifted by
          // the seed; the last copy stays unperturbed.
          for (auto& t : copy.terms) {
            t.val += frac(2 * (counter + (long)(s % 97) * 50) + 1, 1000);
            ++counter;
          }
        }
        gi = (c == 0) ? copy : trop_mul(gi, copy);
      }
      factors.push_back(gi);
    }
    try {
      std::vector<TropicalComplex> hs;
      for (const auto& g : factors) hs.push_back(hypersurface(g));
      PerturbedProductCurve out;
      out.factors = factors;
      out.report = intersect(hs);
      out.projection = a;
      out.image = project_and_intersect(out.report.complex, a);
      out.sip_count = (long)out.image.sips.size();
      out.guaranteed = dprod * dprod * binom2(n - 1);
      return out;
    } catch (const TropError& e) {
      if (opt.offsets) throw;  // explicit data: no reseeding
      if (e.code != Err::OverlapDegenerate && e.code != Err::TieError) throw;
    }
  }
  fail(Err::ConstructionFailed, "perturbed_product_curve: no generic seed found");
}

BoundCheck check_caterpillar_bound(const TropicalLine& line, const ZMat& a) {
  PlaneCurveImage img = project_and_intersect(line.complex, a);
  BoundCheck out;
  out.count = (long)img.sips.size();
  out.bound = binom2(line.n - 1);
  out.ok = out.count <= out.bound;
  return out;
}

TropicalLine random_caterpillar(int n, std::mt19937_64& rng) {
  int internal = n - 1;
  std::vector<std::pair<int, int>> spine;
  for (int j = 0; j + 1 < internal; ++j) spine.push_back({j, j + 1});
  std::vector<int> labels(n + 1);
  for (int i = 0; i < n + 1; ++i) labels[i] = i + 1;
  std::shuffle(labels.begin(), labels.end(), rng);
  std::vector<int> leaf_at(n + 1);
  leaf_at[labels[0] - 1] = 0;
  leaf_at[labels[1] - 1] = 0;
  for (int j = 1; j <= n - 3; ++j) leaf_at[labels[j + 1] - 1] = j;
  leaf_at[labels[n - 1] - 1] = internal - 1;
  leaf_at[labels[n] - 1] = internal - 1;
  QVec lengths;
  std::uniform_int_distribution<int> len(1, 5);
  for (size_t e = 0; e < spine.size(); ++e) lengths.push_back(Rat(len(rng)));
  QVec base(n, Rat(0));
  std::uniform_int_distribution<int> pos(-3, 3);
  for (int i = 0; i < n; ++i) base[i] = Rat(pos(rng));
  return make_line(n, spine, leaf_at, lengths, base);
}

ZMat random_projection_matrix(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-5, 5);
  while (true) {
    ZMat a(2, ZVec(n));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = entry(rng);
    QMat aq;
    for (const auto& row : a) aq.push_back(to_q(row));
    if (rank_q(aq) == 2) return a;
  }
}

std::vector<SweepRow> sweep_caterpillar(int n, int trials, unsigned long seed) {
  std::vector<SweepRow> rows;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    TropicalLine line = random_caterpillar(n, rng);
    SweepRow row{n, t, 0, binom2(n - 1), false};
    for (int retry = 0; retry < 64; ++retry) {
      ZMat a = random_projection_matrix(n, rng);
      try {
        BoundCheck bc = check_caterpillar_bound(line, a);
        row.count = bc.count;
        row.ok = bc.ok;
        break;
      } catch (const TropError& e) {
        if (e.code != Err::DegenerateProjection && e.code != Err::OverlapDegenerate) throw;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace trop
