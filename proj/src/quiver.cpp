#include "qck/quiver.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qck {

namespace {

bool is_corner(const Bary& w) {
  int z = 0;
  for (int x : w) z += (x == 0);
  return z >= 2;
}

}  // namespace

// ---------------------------------------------------------------- surfaces

Surface::Key Surface::key(int t, const Bary& w) const {
  const Tri& tri = tris.at(t);
  int zeros = 0, z = -1;
  for (int k = 0; k < 3; ++k)
    if (w[k] == 0) ++zeros, z = k;
  if (w[0] + w[1] + w[2] != m || zeros >= 2 || w[0] < 0 || w[1] < 0 || w[2] < 0)
    throw std::invalid_argument("not a vertex of the m-triangulation");
  if (zeros == 0) return {1, t, w[0], w[1]};
  int s = (z + 1) % 3, s1 = (s + 1) % 3;
  int e = tri.side[s];
  const Edge& ed = edges.at(e);
  if (ed.u == tri.corner[s] && ed.v == tri.corner[s1]) return {0, e, w[s1], 0};
  if (ed.u == tri.corner[s1] && ed.v == tri.corner[s]) return {0, e, w[s], 0};
  throw std::logic_error("edge endpoints do not match triangle corners");
}

int Surface::tri_with_edge(int e, int skip) const {
  for (size_t t = 0; t < tris.size(); ++t) {
    if (static_cast<int>(t) == skip) continue;
    for (int s : tris[t].side)
      if (s == e) return static_cast<int>(t);
  }
  return -1;
}

Seed surface_seed(const Surface& s) {
  Seed seed = Seed::empty(s.nverts);
  for (const auto& [k, v] : s.vertex)
    if (k[0] == 0 && s.edges.at(k[1]).boundary) seed.frozen[v] = true;
  auto add = [&](size_t u, size_t v, int w) {
    seed.eps2[u][v] += w;
    seed.eps2[v][u] -= w;
  };
  const int m = s.m;
  for (size_t t = 0; t < s.tris.size(); ++t) {
    int ti = static_cast<int>(t);
    for (int a = 1; a <= m; ++a)
      for (int b = 1; a + b <= m; ++b) {
        int c = m + 1 - a - b;
        size_t p1 = s.at(ti, {a - 1, b, c}), p2 = s.at(ti, {a, b, c - 1}), p3 = s.at(ti, {a, b - 1, c});
        add(p1, p2, 2);
        add(p2, p3, 2);
        add(p3, p1, 2);
      }
    for (int side = 0; side < 3; ++side) {
      int s1 = (side + 1) % 3;
      for (int x = 2; x <= m - 1; ++x) {
        Bary from{}, to{};
        from[side] = x, from[s1] = m - x;
        to[side] = x - 1, to[s1] = m - x + 1;
        add(s.at(ti, from), s.at(ti, to), 1);
      }
    }
  }
  return seed;
}

// ---------------------------------------------------------------- triangle and amalgamation

size_t TriangleQuiver::index(const Bary& w) const {
  for (size_t i = 0; i < coords.size(); ++i)
    if (coords[i] == w) return i;
  throw std::out_of_range("no such triangle vertex");
}

TriangleQuiver build_triangle(int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  TriangleQuiver tq;
  tq.m = m;
  Surface& s = tq.surface;
  s.m = m;
  s.edges = {{0, 1, true, "AB"}, {1, 2, true, "BC"}, {2, 0, true, "CA"}};
  s.tris = {{{0, 1, 2}, {0, 1, 2}}};
  for (int a = m; a >= 0; --a)
    for (int b = m - a; b >= 0; --b) {
      Bary w{a, b, m - a - b};
      if (is_corner(w)) continue;
      s.vertex[s.key(0, w)] = tq.coords.size();
      tq.coords.push_back(w);
    }
  s.nverts = tq.coords.size();
  tq.seed = surface_seed(s);
  for (int side = 0; side < 3; ++side) {
    int s1 = (side + 1) % 3;
    for (int x = m - 1; x >= 1; --x) {
      Bary w{};
      w[side] = x, w[s1] = m - x;
      tq.boundary[side].push_back(tq.index(w));
    }
  }
  return tq;
}

AmalgamationMap amalgamate(const Seed& left, const Seed& right, const std::vector<std::pair<size_t, size_t>>& glue,
                           bool unfreeze) {
  AmalgamationMap am;
  am.left = left;
  am.right = right;
  am.glue = glue;
  am.left_to_result.resize(left.size());
  am.right_to_result.assign(right.size(), -1);
  std::set<size_t> lg;
  for (auto [l, r] : glue) {
    if (l >= left.size() || r >= right.size()) throw std::out_of_range("glue index");
    if (!left.frozen[l] || !right.frozen[r]) throw std::invalid_argument("amalgamation must glue frozen vertices");
    if (am.right_to_result[r] != -1 || !lg.insert(l).second) throw std::invalid_argument("glue is not a bijection");
    am.right_to_result[r] = static_cast<long>(l);
  }
  for (size_t i = 0; i < left.size(); ++i) {
    am.left_to_result[i] = static_cast<long>(i);
    am.embed.push_back({static_cast<long>(i), -1});
  }
  for (auto [l, r] : glue) am.embed[l].second = static_cast<long>(r);
  for (size_t j = 0; j < right.size(); ++j) {
    if (am.right_to_result[j] != -1) continue;
    am.right_to_result[j] = static_cast<long>(am.embed.size());
    am.embed.push_back({-1, static_cast<long>(j)});
  }
  size_t n = am.embed.size();
  Seed& res = am.result;
  res = Seed::empty(n);
  for (size_t i = 0; i < left.size(); ++i) {
    res.frozen[i] = left.frozen[i];
    res.labels[i] = left.labels[i];
    for (size_t j = 0; j < left.size(); ++j) res.eps2[i][j] += left.eps2[i][j];
  }
  for (size_t i = 0; i < right.size(); ++i) {
    size_t ri = am.right_to_result[i];
    if (am.embed[ri].first == -1) {
      res.frozen[ri] = right.frozen[i];
      res.labels[ri] = right.labels[i];
    }
    for (size_t j = 0; j < right.size(); ++j) res.eps2[ri][am.right_to_result[j]] += right.eps2[i][j];
  }
  if (unfreeze)
    for (auto [l, r] : glue) res.frozen[l] = false;
  res.validate();
  return am;
}

// ---------------------------------------------------------------- flips

std::vector<size_t> MutationSchedule::steps() const {
  std::vector<size_t> out;
  for (const auto& f : flips)
    for (const auto& st : f) out.insert(out.end(), st.begin(), st.end());
  return out;
}

namespace {

struct QuadFrame {
  int t1, k1, t2, k2;
  int x, u, y, v;
};

QuadFrame quad_frame(const Surface& s, int e) {
  QuadFrame f{};
  f.t1 = s.tri_with_edge(e);
  f.t2 = f.t1 < 0 ? -1 : s.tri_with_edge(e, f.t1);
  if (f.t1 < 0 || f.t2 < 0) throw std::invalid_argument("edge is not a diagonal of a 4-gon");
  const auto& T1 = s.tris[f.t1];
  const auto& T2 = s.tris[f.t2];
  f.k1 = static_cast<int>(std::find(T1.side.begin(), T1.side.end(), e) - T1.side.begin());
  f.k2 = static_cast<int>(std::find(T2.side.begin(), T2.side.end(), e) - T2.side.begin());
  f.x = T1.corner[(f.k1 + 2) % 3];
  f.u = T1.corner[f.k1];
  f.v = T1.corner[(f.k1 + 1) % 3];
  f.y = T2.corner[(f.k2 + 2) % 3];
  if (T2.corner[f.k2] != f.v || T2.corner[(f.k2 + 1) % 3] != f.u) throw std::logic_error("inconsistent orientation");
  return f;
}

// Key of 4-gon position (p, r): Q0 = x, Q1 = u, Q2 = y, Q3 = v; weights p at u, r at v in the x-triangle.
Surface::Key quad_key(const Surface& s, const QuadFrame& f, int p, int r) {
  int m = s.m;
  Bary w{};
  if (p + r <= m) {
    w[(f.k1 + 2) % 3] = m - p - r;
    w[f.k1] = p;
    w[(f.k1 + 1) % 3] = r;
    return s.key(f.t1, w);
  }
  w[(f.k2 + 2) % 3] = p + r - m;
  w[f.k2] = m - p;
  w[(f.k2 + 1) % 3] = m - r;
  return s.key(f.t2, w);
}

bool quad_corner(int m, int p, int r) { return (p == 0 || p == m) && (r == 0 || r == m); }

}  // namespace

FlipResult flip_edge(const Surface& s, int e) {
  QuadFrame f = quad_frame(s, e);
  const int m = s.m;
  std::map<std::pair<int, int>, size_t> at;
  for (int p = 0; p <= m; ++p)
    for (int r = 0; r <= m; ++r)
      if (!quad_corner(m, p, r)) at[{p, r}] = s.vertex.at(quad_key(s, f, p, r));

  FlipResult out;
  Surface& a = out.after;
  a = s;
  const auto& T1 = s.tris[f.t1];
  const auto& T2 = s.tris[f.t2];
  int side_xu = T1.side[(f.k1 + 2) % 3], side_vx = T1.side[(f.k1 + 1) % 3];
  int side_uy = T2.side[(f.k2 + 1) % 3], side_yv = T2.side[(f.k2 + 2) % 3];
  a.tris[f.t1] = {{f.x, f.u, f.y}, {side_xu, side_uy, e}};
  a.tris[f.t2] = {{f.x, f.y, f.v}, {e, side_yv, side_vx}};
  a.edges[e].u = f.x;
  a.edges[e].v = f.y;
  for (const auto& [pr, idx] : at) a.vertex.erase(quad_key(s, f, pr.first, pr.second));
  for (const auto& [pr, idx] : at) {
    auto [p, r] = pr;
    Surface::Key k = p >= r ? a.key(f.t1, {m - p, p - r, r}) : a.key(f.t2, {m - r, p, r - p});
    a.vertex[k] = idx;
    out.position[idx] = pr;
  }
  for (int i = 1; i <= m - 1; ++i) {
    std::vector<size_t> step;
    for (int sum = m - i + 1; sum <= m + i - 1; sum += 2)
      for (int d = -(m - i - 1); d <= m - i - 1; d += 2) step.push_back(at.at({(sum + d) / 2, (sum - d) / 2}));
    std::sort(step.begin(), step.end());
    out.steps.push_back(step);
  }
  return out;
}

QuadGon build_quad(int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  QuadGon q;
  q.m = m;
  Surface& s = q.surface;
  s.m = m;
  s.edges = {{0, 1, true, "Q0Q1"}, {1, 2, true, "Q1Q2"}, {2, 3, true, "Q2Q3"}, {3, 0, true, "Q3Q0"}, {1, 3, false, "diag"}};
  s.tris = {{{0, 1, 3}, {0, 4, 3}}, {{2, 3, 1}, {2, 4, 1}}};
  q.diagonal = 4;
  QuadFrame f = quad_frame(s, 4);
  std::vector<std::pair<int, int>> pos;
  for (int p = 0; p <= m; ++p)
    for (int r = 0; r <= m; ++r)
      if (!quad_corner(m, p, r)) pos.push_back({p, r});
  std::sort(pos.begin(), pos.end(), [](auto a, auto b) {
    int ca = a.first + a.second, cb = b.first + b.second;
    if (ca != cb) return ca < cb;
    return a.first - a.second > b.first - b.second;
  });
  for (size_t i = 0; i < pos.size(); ++i) s.vertex[quad_key(s, f, pos[i].first, pos[i].second)] = i;
  s.nverts = pos.size();
  q.pos = pos;
  q.seed = surface_seed(s);
  return q;
}

MutationSchedule flip_schedule(const QuadGon& q) {
  MutationSchedule ms;
  ms.flips.push_back(flip_edge(q.surface, q.diagonal).steps);
  return ms;
}

// ---------------------------------------------------------------- D_n

int theta(int n, int i) { return n + 1 - i; }

DnQuiver build_dn(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  const int m = n + 1;
  TriangleQuiver t = build_triangle(m);
  std::vector<std::pair<size_t, size_t>> glue;
  for (size_t j = 0; j < t.coords.size(); ++j) {
    auto [a, b, c] = t.coords[j];
    if (c == 0) glue.push_back({j, t.index({a, 0, b})});
    if (b == 0) glue.push_back({j, t.index({a, c, 0})});
  }
  AmalgamationMap am = amalgamate(t.seed, t.seed, glue, true);
  DnQuiver d;
  d.n = n;
  d.m = m;
  d.seed = am.result;
  d.geom.resize(d.seed.size());
  for (size_t i = 0; i < am.embed.size(); ++i) {
    auto [l, r] = am.embed[i];
    d.geom[i] = l >= 0 ? std::make_pair(0, t.coords[l]) : std::make_pair(1, t.coords[r]);
  }
  auto left = [&](Bary w) { return static_cast<size_t>(am.left_to_result[t.index(w)]); };
  auto right = [&](Bary w) { return static_cast<size_t>(am.right_to_result[t.index(w)]); };
  for (int i = 1; i <= n; ++i)
    for (int r = -i; r <= i; ++r) {
      d.V[{i, r}] = r <= 0 ? left({i + r, m - i, -r}) : right({i - r, r, m - i});
      d.L[{i, r}] = r < 0 ? right({i + r, m - i, -r}) : left({i - r, r, m - i});
    }
  for (auto& [ir, v] : d.V) d.seed.labels[v] = "V_{" + std::to_string(ir.first) + "," + std::to_string(ir.second) + "}";
  for (int i = 1; i <= n; ++i) d.seed.labels[d.lam(i, 0)] = "Λ_{" + std::to_string(i) + ",0}";
  return d;
}

// ---------------------------------------------------------------- Z_n

ZnQuiver build_zn(int n) {
  ZnQuiver z;
  z.n = n;
  z.m = n + 1;
  z.d = build_dn(n);
  const DnQuiver& d = z.d;
  std::vector<std::pair<size_t, size_t>> glue;
  for (int i = 1; i <= n; ++i) glue.push_back({d.v(i, i), d.v(i, -i)});
  Seed ls = d.seed, rs = d.seed;
  for (auto& l : ls.labels) l += "|L";
  for (auto& l : rs.labels) l += "|R";
  z.amalg = amalgamate(ls, rs, glue, true);
  z.seed = z.amalg.result;
  for (size_t j = 0; j < d.seed.size(); ++j) {
    z.left.push_back(z.amalg.left_to_result[j]);
    z.right.push_back(z.amalg.right_to_result[j]);
  }

  // Marked points: punctures 0, 1; boundary points 2 (bottom), 3 (top).
  Surface& s = z.surface;
  s.m = z.m;
  s.edges = {{0, 2, false, "c"}, {3, 0, false, "b"}, {2, 3, true, "a"}, {3, 2, false, "chord"},
             {1, 2, false, "f"}, {3, 1, false, "e"}, {3, 2, true, "g"}};
  s.tris = {{{0, 2, 3}, {0, 2, 1}}, {{0, 3, 2}, {1, 3, 0}}, {{1, 2, 3}, {4, 3, 5}}, {{1, 3, 2}, {5, 6, 4}}};
  for (int copy = 0; copy < 2; ++copy)
    for (size_t j = 0; j < d.seed.size(); ++j) {
      auto [tri, w] = d.geom[j];
      size_t zv = copy == 0 ? z.left[j] : z.right[j];
      auto k = s.key(2 * copy + tri, w);
      auto [it, fresh] = s.vertex.emplace(k, zv);
      if (!fresh && it->second != zv) throw std::logic_error("inconsistent surface model");
    }
  s.nverts = z.seed.size();
  if (s.vertex.size() != s.nverts) throw std::logic_error("surface model misses vertices");
  z.sigma = compute_sigma(z);
  return z;
}

namespace {

constexpr int kChord = 3, kEdgeA = 2, kEdgeB = 1, kEdgeC = 0, kEdgeE = 5, kEdgeF = 4, kEdgeG = 6;

}  // namespace

std::vector<Surface> half_dehn_surfaces(const ZnQuiver& z) {
  std::vector<Surface> out;
  Surface s = z.surface;
  for (int e : {kChord, kEdgeB, kEdgeF, kChord}) {
    s = flip_edge(s, e).after;
    out.push_back(s);
  }
  return out;
}

MutationSchedule half_dehn_schedule(const ZnQuiver& z) {
  MutationSchedule ms;
  Surface s = z.surface;
  for (int e : {kChord, kEdgeB, kEdgeF, kChord}) {
    FlipResult f = flip_edge(s, e);
    ms.flips.push_back(f.steps);
    s = f.after;
  }
  return ms;
}

std::vector<size_t> compute_sigma(const ZnQuiver& z) {
  const Surface s = flip_edge(z.surface, kChord).after;
  const int m = s.m, d_edge = kChord;
  int abc = s.tri_with_edge(kEdgeA);
  int bde = s.tri_with_edge(kEdgeB, abc);
  int efg = s.tri_with_edge(kEdgeG);
  int cdf = s.tri_with_edge(kEdgeC, abc);

  // Solid path in triangle t parallel to edge `par` with weight h at the opposite corner, from edge `from`.
  auto path = [&](int t, int par, int from, int h) {
    const auto& T = s.tris[t];
    int sd = static_cast<int>(std::find(T.side.begin(), T.side.end(), par) - T.side.begin());
    int s1 = (sd + 1) % 3, o = (sd + 2) % 3;
    std::vector<size_t> pts;
    for (int j = 0; j <= m - h; ++j) {
      Bary w{};
      w[o] = h, w[sd] = j, w[s1] = m - h - j;
      pts.push_back(s.at(t, w));
    }
    if (T.side[o] == from) std::reverse(pts.begin(), pts.end());
    else if (T.side[s1] != from) throw std::logic_error("path does not start on the requested edge");
    return pts;
  };
  auto continue_from = [&](size_t start, int t, int par, int from) {
    for (int h = 1; h < m; ++h) {
      auto p = path(t, par, from, h);
      if (p.front() == start) return p;
    }
    throw std::logic_error("permutation cycle does not close");
  };

  std::vector<size_t> sigma(s.nverts, static_cast<size_t>(-1));
  Seed seed = surface_seed(s);
  for (size_t v = 0; v < seed.size(); ++v)
    if (seed.frozen[v]) sigma[v] = v;
  for (int i = 1; i <= z.n; ++i) {
    std::vector<size_t> cyc = path(abc, kEdgeA, kEdgeC, i);
    auto seg = continue_from(cyc.back(), bde, d_edge, kEdgeB);
    cyc.insert(cyc.end(), seg.begin() + 1, seg.end());
    seg = continue_from(cyc.back(), efg, kEdgeG, kEdgeE);
    cyc.insert(cyc.end(), seg.begin() + 1, seg.end());
    seg = continue_from(cyc.back(), cdf, d_edge, kEdgeF);
    cyc.insert(cyc.end(), seg.begin() + 1, seg.end());
    if (cyc.back() != cyc.front()) throw std::logic_error("permutation cycle does not close");
    cyc.pop_back();
    for (size_t j = 0; j < cyc.size(); ++j) sigma[cyc[j]] = cyc[(j + i) % cyc.size()];
  }
  for (int t = 1; t < m; ++t) sigma[s.vertex.at({0, d_edge, t, 0})] = s.vertex.at({0, d_edge, m - t, 0});
  for (size_t v : sigma)
    if (v == static_cast<size_t>(-1)) throw std::logic_error("sigma is not total");
  return sigma;
}

std::vector<std::vector<size_t>> sigma_cycles(const std::vector<size_t>& sigma) {
  std::vector<std::vector<size_t>> out;
  std::vector<bool> seen(sigma.size(), false);
  for (size_t v = 0; v < sigma.size(); ++v) {
    if (seen[v] || sigma[v] == v) continue;
    std::vector<size_t> c;
    for (size_t w = v; !seen[w]; w = sigma[w]) {
      seen[w] = true;
      c.push_back(w);
    }
    out.push_back(c);
  }
  return out;
}

Seed apply_sigma(const ZnQuiver& z, const Seed& s) {
  Seed t = s;
  for (size_t u = 0; u < s.size(); ++u) {
    t.frozen[z.sigma[u]] = s.frozen[u];
    t.labels[z.sigma[u]] = s.labels[u];
    for (size_t v = 0; v < s.size(); ++v) t.eps2[z.sigma[u]][z.sigma[v]] = s.eps2[u][v];
  }
  return t;
}

bool is_isomorphism(const Seed& s, const Seed& t, const std::vector<size_t>& p) {
  if (s.size() != t.size() || p.size() != s.size()) return false;
  for (size_t u = 0; u < s.size(); ++u) {
    if (s.frozen[u] != t.frozen[p[u]]) return false;
    for (size_t v = 0; v < s.size(); ++v)
      if (s.eps2[u][v] != t.eps2[p[u]][p[v]]) return false;
  }
  return true;
}

std::vector<std::vector<size_t>> frozen_fixing_isomorphisms(const Seed& s, const Seed& t, size_t limit) {
  std::vector<std::vector<size_t>> out;
  const size_t n = s.size();
  if (t.size() != n) return out;
  auto signature = [](const Seed& x, size_t v) {
    std::vector<int> r = x.eps2[v];
    std::sort(r.begin(), r.end());
    return r;
  };
  constexpr size_t kNone = static_cast<size_t>(-1);
  std::vector<size_t> p(n, kNone);
  std::vector<bool> used(n, false);
  for (size_t v = 0; v < n; ++v) {
    if (s.frozen[v] != t.frozen[v]) return out;
    if (s.frozen[v]) p[v] = v, used[v] = true;
  }
  // Visit vertices adjacent to already-placed ones first.
  std::vector<size_t> order;
  std::vector<bool> placed(n, false);
  for (size_t v = 0; v < n; ++v)
    if (s.frozen[v]) placed[v] = true;
  while (order.size() + std::count(s.frozen.begin(), s.frozen.end(), true) < n) {
    size_t best = kNone;
    int best_links = -1;
    for (size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (size_t w = 0; w < n; ++w) links += placed[w] && s.eps2[v][w] != 0;
      if (links > best_links) best = v, best_links = links;
    }
    placed[best] = true;
    order.push_back(best);
  }
  std::function<void(size_t)> rec = [&](size_t k) {
    if (out.size() >= limit) return;
    if (k == order.size()) {
      if (is_isomorphism(s, t, p)) out.push_back(p);
      return;
    }
    size_t v = order[k];
    auto sig = signature(s, v);
    for (size_t c = 0; c < n; ++c) {
      if (used[c] || t.frozen[c] || signature(t, c) != sig) continue;
      bool ok = true;
      for (size_t w = 0; w < n && ok; ++w)
        if (p[w] != kNone && s.eps2[v][w] != t.eps2[c][p[w]]) ok = false;
      if (!ok) continue;
      p[v] = c, used[c] = true;
      rec(k + 1);
      p[v] = kNone, used[c] = false;
    }
  };
  rec(0);
  return out;
}

// ---------------------------------------------------------------- numberings and paths

std::vector<size_t> figure_order_dn(const DnQuiver& d) {
  std::vector<size_t> order;
  for (int i = 1; i <= d.n; ++i)
    for (int r = -i; r <= i; ++r) order.push_back(d.v(i, r));
  for (int i = 1; i <= d.n; ++i) order.push_back(d.lam(i, 0));
  return order;
}

std::vector<size_t> figure_order_zn(const ZnQuiver& z) {
  std::vector<size_t> order;
  for (int i = 1; i <= z.n; ++i) {
    auto p = vv_path(z, i);
    order.insert(order.end(), p.begin(), p.end());
  }
  for (int i = 1; i <= z.n; ++i) order.push_back(z.left[z.d.lam(i, 0)]);
  for (int i = 1; i <= z.n; ++i) order.push_back(z.right[z.d.lam(i, 0)]);
  return order;
}

std::vector<size_t> vv_path(const ZnQuiver& z, int i) {
  std::vector<size_t> p;
  for (int r = -i; r <= i; ++r) p.push_back(z.left[z.d.v(i, r)]);
  for (int r = -i + 1; r <= i; ++r) p.push_back(z.right[z.d.v(i, r)]);
  return p;
}

std::vector<size_t> lambda_lambda_path(const ZnQuiver& z, int i) {
  std::vector<size_t> p;
  for (int r = -i; r <= i; ++r) p.push_back(z.right[z.d.lam(i, r)]);
  for (int r = -i + 1; r <= i; ++r) p.push_back(z.left[z.d.lam(i, r)]);
  return p;
}

std::vector<size_t> lambda_v_path(const ZnQuiver& z, int i) {
  std::vector<size_t> p;
  int ti = theta(z.n, i);
  for (int r = ti; r >= -ti; --r) p.push_back(z.left[z.d.lam(ti, r)]);
  for (int r = -i + 1; r <= i; ++r) p.push_back(z.right[z.d.v(i, r)]);
  return p;
}

std::string to_dot(const Seed& s, const std::string& name) {
  std::ostringstream o;
  o << "digraph \"" << name << "\" {\n";
  for (size_t i = 0; i < s.size(); ++i)
    o << "  v" << s.ids[i] << " [label=\"" << s.name(i) << "\", shape=" << (s.frozen[i] ? "box" : "circle")
      << "];\n";
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = 0; j < s.size(); ++j) {
      int w = s.eps2[i][j];
      if (w <= 0) continue;
      o << "  v" << s.ids[i] << " -> v" << s.ids[j];
      if (w == 1) o << " [style=dashed, label=\"1/2\"]";
      else if (w != 2) o << " [label=\"" << w / 2 << (w % 2 ? ".5" : "") << "\"]";
      o << ";\n";
    }
  o << "}\n";
  return o.str();
}

}  // namespace qck
