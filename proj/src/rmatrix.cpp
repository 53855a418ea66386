#include "qck/rmatrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qck {

namespace {

std::string wlabel(char c, int a, int b) { return std::string(1, c) + "_" + std::to_string(a) + "^" + std::to_string(b); }

std::string tlabel(const std::string& x, const std::string& y) { return x + "⊗" + y; }

Exp zn_exp(const ZnQuiver& z, const TensorSquare& t, const Exp& te) {
  Exp e(z.seed.size(), 0);
  for (size_t v = 0; v < z.seed.size(); ++v) {
    auto [l, r] = z.amalg.embed[v];
    e[v] = l >= 0 ? te[static_cast<size_t>(l)] : te[t.half + static_cast<size_t>(r)];
  }
  return e;
}

// Preimage of a tensor-square monomial under the amalgamation embedding.
Monomial pull_back(const ZnQuiver& z, const TensorSquare& t, const MonomialMap& f, const Monomial& tm) {
  Exp e = zn_exp(z, t, tm.exp);
  Monomial back = f.apply(Monomial{e, QCoeff(1)});
  if (back.exp != tm.exp) throw std::logic_error("monomial outside the image of Z_n");
  return {e, tm.coef / back.coef};
}

struct PathData {
  std::vector<size_t> path;
  Monomial zm, z0, zp;  // tensor-square monomials
  std::vector<long> x, y;  // D_n indices: X_k = left x[k-1], Y_k = right y[k-1]
};

PathData path_data(const ZnQuiver& z, const TensorSquare& t, int i) {
  const int n = z.n, th = n + 1 - i;
  PathData p;
  p.path = lambda_v_path(z, i);
  for (int k = 1; k <= 2 * th + 1; ++k) p.x.push_back(static_cast<long>(z.d.lam(th, k - 1 - th)));
  for (int k = 1; k <= 2 * i + 1; ++k) p.y.push_back(static_cast<long>(z.d.v(i, k - 1 - i)));
  auto word = [&](const std::vector<std::pair<long, int>>& l, const std::vector<std::pair<long, int>>& r, QCoeff c) {
    std::vector<std::pair<size_t, int>> w;
    for (auto [a, e] : l) w.push_back({static_cast<size_t>(a), e});
    for (auto [a, e] : r) w.push_back({t.half + static_cast<size_t>(a), e});
    return mono_word(t.seed, w, c);
  };
  std::vector<std::pair<long, int>> l, r;
  for (int k = 1; k <= 2 * th + 1; ++k) l.push_back({p.x[k - 1], 1});
  p.zm = word(l, {{p.y[0], 1}}, QCoeff::q(2 * th));
  l.clear();
  for (int k = 2 * th; k >= 1; --k) l.push_back({p.x[k - 1], -1});
  for (int k = 2 * i; k >= 1; --k) r.push_back({p.y[k - 1], -1});
  p.z0 = word(l, r, QCoeff::q(-2 * n));
  r.clear();
  for (int k = 1; k <= 2 * i + 1; ++k) r.push_back({p.y[k - 1], 1});
  p.zp = word({{p.x[0], 1}}, r, QCoeff::q(2 * i));
  return p;
}

long find_vertex(const ZnQuiver& z, long l, long r) {
  for (size_t v = 0; v < z.seed.size(); ++v)
    if (z.amalg.embed[v] == std::make_pair(l, r)) return static_cast<long>(v);
  return -1;
}

size_t zn_vertex(const ZnQuiver& z, long l, long r) {
  long v = find_vertex(z, l, r);
  if (v < 0) throw std::logic_error("no such Z_n vertex");
  return static_cast<size_t>(v);
}

struct Indexed {
  int block, k, j;
  Factor f;
};

std::vector<Indexed> rfact1_indexed(const TensorSquare& t) {
  const Embedding& e = t.emb;
  const int n = e.n();
  std::vector<Indexed> out;
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= e.theta(k); ++j)
      for (int i = -j; i <= j - 1; ++i) {
        int a = e.theta(j), b = k - e.theta(j) - 1;
        out.push_back({1, k, j, {t.tensor(e.w(j, i), e.m(a, b)), tlabel(wlabel('w', j, i), wlabel('m', a, b))}});
      }
  for (int k = 1; k <= n; ++k)
    for (int j = e.theta(k); j <= n; ++j)
      for (int i = -e.theta(j); i <= e.theta(j) - 1; ++i) {
        int c = e.theta(j), b = j - e.theta(k);
        out.push_back({2, k, j, {t.tensor(e.w(c, i), e.m(j, b)), tlabel(wlabel('w', c, i), wlabel('m', j, b))}});
      }
  return out;
}

}  // namespace

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::RFactor: return "r-factor";
    case Provenance::RFact1: return "R-fact1";
    case Provenance::RFact2: return "R-fact2";
    case Provenance::Phi: return "Phi-from-schedule";
  }
  return "?";
}

size_t rfactor_length(int n) {
  size_t m = static_cast<size_t>(n);
  return 4 * (m + 2) * (m + 1) * m / 6;
}

// ---------------------------------------------------------------- Cartan part

MonomialMap cartan_flip_map(const ZnQuiver& z) {
  TensorSquare t(z.n);
  MonomialMap f = z_embedding(z, t);
  const size_t N = z.seed.size();
  MonomialMap out{z.seed, z.seed, std::vector<Monomial>(N)};
  std::vector<bool> set(N, false);
  for (size_t v = 0; v < N; ++v) {
    if (z.seed.frozen[v]) continue;
    auto [l, r] = z.amalg.embed[v];
    long p = find_vertex(z, r, l);
    if (p < 0) continue;
    out.images[v] = generator(z.seed, static_cast<size_t>(p));
    set[v] = true;
  }
  for (int i = 1; i <= z.n; ++i) {
    PathData p = path_data(z, t, i);
    const int th = z.n + 1 - i;
    size_t vx = zn_vertex(z, p.x[2 * th], -1), vxy = zn_vertex(z, p.x[0], p.y[0]), vy = zn_vertex(z, -1, p.y[2 * i]);
    out.images[vx] = pull_back(z, t, f, p.zm);
    out.images[vxy] = pull_back(z, t, f, p.z0);
    out.images[vy] = pull_back(z, t, f, p.zp);
    set[vx] = set[vxy] = set[vy] = true;
  }
  if (std::find(set.begin(), set.end(), false) != set.end()) throw std::logic_error("vertex outside every path");
  return out;
}

PathAction mn_path_action(const ZnQuiver& z, int i) {
  if (i < 1 || i > z.n) throw std::invalid_argument("path index out of range");
  TensorSquare t(z.n);
  MonomialMap f = z_embedding(z, t);
  PathData p = path_data(z, t, i);
  const int th = z.n + 1 - i;
  auto gen = [&](long l, long r) { return generator(z.seed, zn_vertex(z, l, r)); };
  PathAction a;
  a.path = p.path;
  a.images.push_back(pull_back(z, t, f, p.zm));
  for (int k = 2; k <= 2 * i; ++k) a.images.push_back(gen(-1, p.y[k - 1]));
  a.images.push_back(pull_back(z, t, f, p.z0));
  for (int k = 2 * th; k >= 2; --k) a.images.push_back(gen(p.x[k - 1], -1));
  a.images.push_back(pull_back(z, t, f, p.zp));
  return a;
}

bool verify_lemK(const ZnQuiver& z) { return verify_lemK(z, z.sigma); }

bool verify_lemK(const ZnQuiver& z, const std::vector<size_t>& sigma) {
  MonomialMap pk = cartan_flip_map(z);
  ScheduleRun run = run_schedule(z.seed, half_dehn_schedule(z));
  for (size_t v = 0; v < z.seed.size(); ++v)
    if (!(pk.images[v] == run.M.images[sigma[v]])) return false;
  return true;
}

// ---------------------------------------------------------------- factor sequences

FactorSequence gen_rfact1(const TensorSquare& t) {
  FactorSequence s{Provenance::RFact1, {}};
  for (auto& x : rfact1_indexed(t)) s.factors.push_back(x.f);
  return s;
}

FactorSequence gen_rfact2(const TensorSquare& t) {
  const Embedding& e = t.emb;
  const int n = e.n();
  auto th = [n](int k) { return n + 1 - k; };
  FactorSequence s{Provenance::RFact2, {}};
  auto add = [&](int a, int b, int c, int d) {
    s.factors.push_back({t.tensor(e.m(a, b), e.w(c, d)), tlabel(wlabel('m', a, b), wlabel('w', c, d))});
  };
  for (int k = 0; k <= n - 1; ++k)
    for (int j = th(k); j <= n + 1; ++j)
      for (int i = 1; i <= th(k + 1); ++i) add(j - i, i - th(k), i + th(j), -i);
  for (int k = 0; k <= n - 1; ++k)
    for (int j = th(k); j <= n + 1; ++j)
      for (int i = 1; i <= th(k + 1); ++i) add(j - i, i - th(k), i + th(j), th(j));
  for (int k = 1; k <= n; ++k)
    for (int j = k + 1; j <= n + 1; ++j)
      for (int i = 1; i <= k; ++i) add(i + th(j), i - 1, j - i, k - j);
  for (int k = 1; k <= n; ++k)
    for (int j = k + 1; j <= n + 1; ++j)
      for (int i = 1; i <= k; ++i) add(i + th(j), i - 1, j - i, k - i);
  return s;
}

std::vector<RowFactor> rfactor_rows(int n) {
  std::vector<RowFactor> rows;
  int row = 0;
  for (int t = 0; t < n; ++t, ++row)
    for (int a = 1; a <= n - t; ++a) rows.push_back({a, n + 1 - a, -(n + 1 - a) + t, row});
  for (int u = 0; u < n; ++u, ++row)
    for (int a = u + 1; a >= 1; --a) rows.push_back({a, n + 1 - a, u + 1 - a, row});
  return rows;
}

FactorSequence gen_rfactor_triangular(const TensorSquare& t) {
  const Embedding& e = t.emb;
  FactorSequence s{Provenance::RFactor, {}};
  for (const auto& rf : rfactor_rows(e.n())) {
    Monomial mm = e.m(rf.b, rf.c);
    std::vector<Factor> parts;
    for (int r = -rf.a; r <= rf.a - 1; ++r)
      parts.push_back({t.tensor(e.w(rf.a, r), mm), tlabel(wlabel('w', rf.a, r), wlabel('m', rf.b, rf.c))});
    for (size_t x = 0; x < parts.size(); ++x)
      for (size_t y = x + 1; y < parts.size(); ++y)
        if (commutator2(t.seed, parts[x].arg.exp, parts[y].arg.exp) != -2)
          throw std::domain_error("summands of " + parts[x].label + " are not q^-2-commuting");
    s.factors.insert(s.factors.end(), parts.begin(), parts.end());
  }
  return s;
}

FactorSequence phi_args_from_twist(const ZnQuiver& z, const TensorSquare& t) {
  ScheduleRun run = run_schedule(z.seed, half_dehn_schedule(z));
  MonomialMap f = z_embedding(z, t);
  std::map<Exp, std::string> names;
  for (const auto& x : gen_rfact2(t).factors) names[x.arg.exp] = x.label;
  FactorSequence s{Provenance::Phi, {}};
  for (const auto& a : run.args) {
    Monomial m = f.apply(a.arg);
    m.coef = -m.coef;
    auto it = names.find(m.exp);
    s.factors.push_back({m, it == names.end() ? "?" : it->second});
  }
  return s;
}

FactorSequence flip(const TensorSquare& t, const FactorSequence& s) {
  FactorSequence r = s;
  for (auto& f : r.factors) {
    f.arg = t.flip(f.arg);
    auto p = f.label.find("⊗");
    if (p != std::string::npos) f.label = f.label.substr(p + 3) + "⊗" + f.label.substr(0, p);
  }
  return r;
}

bool equivalent_mod_commuting_swaps(const Seed& s, const FactorSequence& a, const FactorSequence& b) {
  if (a.size() != b.size()) throw std::invalid_argument("factor sequences differ in length");
  std::vector<Monomial> rest;
  for (const auto& f : a.factors) rest.push_back(f.arg);
  for (const auto& target : b.factors) {
    auto it = std::find(rest.begin(), rest.end(), target.arg);
    if (it == rest.end()) return false;
    for (auto jt = rest.begin(); jt != it; ++jt)
      if (commutator2(s, jt->exp, it->exp) != 0) return false;
    rest.erase(it);
  }
  return true;
}

std::vector<BlockCommutation> rfact1_block_commutation(const TensorSquare& t) {
  auto xs = rfact1_indexed(t);
  std::vector<BlockCommutation> out;
  for (size_t a = 0; a < xs.size();) {
    size_t b = a;
    while (b < xs.size() && xs[b].block == xs[a].block && xs[b].k == xs[a].k) ++b;
    BlockCommutation c{xs[a].block, xs[a].k, 0, 0, 0};
    for (size_t x = a; x < b; ++x)
      for (size_t y = x + 1; y < b; ++y) {
        ++c.pairs;
        if (commutator2(t.seed, xs[x].f.arg.exp, xs[y].f.arg.exp) != 0) {
          ++c.noncommuting;
          if (xs[x].j != xs[y].j) ++c.noncommuting_distinct_j;
        }
      }
    out.push_back(c);
    a = b;
  }
  return out;
}

// ---------------------------------------------------------------- truncated dilogarithms

Series psi_series(const SeriesRing& ring, const TorusElement& x, long bound) {
  const size_t dim = ring.seed().size();
  Series xs = ring.truncate(ring.exact(x), bound);
  long v = ring.valuation(xs);
  if (!xs.terms.is_zero() && v <= 0) throw std::domain_error("dilogarithm argument needs positive weight");
  int deg = xs.terms.is_zero() ? 0 : static_cast<int>(bound / v) + 1;
  auto c = psi_coefficients(deg);
  Series pw = ring.truncate(ring.exact(TorusElement::scalar(dim, QCoeff(1))), bound);
  Series acc = pw;
  for (int j = 1; j <= deg; ++j) {
    pw = ring.truncate(ring.mul(pw, xs), bound);
    if (pw.terms.is_zero()) break;
    acc = ring.add(acc, {pw.terms.scaled(c[static_cast<size_t>(j)]), pw.bound});
  }
  return ring.truncate(acc, bound);
}

Series psi_minus_series(const SeriesRing& ring, const TorusElement& x, long bound) {
  return psi_series(ring, x.scaled(QCoeff(-1)), bound);
}

Series series_product(const SeriesRing& ring, const std::vector<Series>& xs) {
  Series acc = ring.exact(TorusElement::scalar(ring.seed().size(), QCoeff(1)));
  for (const auto& x : xs) acc = ring.mul(acc, x);
  return acc;
}

std::vector<IdentityCheck> verify_pentagon(int D) {
  Seed s = Seed::empty(2);
  s.eps2[0][1] = 2;
  s.eps2[1][0] = -2;
  if (commutator2(s, generator(s, 0).exp, generator(s, 1).exp) != -2) std::swap(s.eps2[0][1], s.eps2[1][0]);
  SeriesRing ring(s, {1, 1});
  const long b = D + 1;
  TorusElement u(generator(s, 0)), v(generator(s, 1));
  auto mono = [&](const TorusElement& x, const TorusElement& y, int k) {
    return torus_mul(s, x, y).scaled(QCoeff::q(k));
  };
  auto P = [&](const TorusElement& x) { return psi_series(ring, x, b); };
  auto p = [&](const TorusElement& x) { return psi_minus_series(ring, x, b); };
  std::vector<IdentityCheck> out;
  out.push_back({"addition law, printed: Psi(u)Psi(v) = Psi(uv)",
                 ring.agree(series_product(ring, {P(u), P(v)}), P(mono(u, v, 0)))});
  out.push_back({"addition law, corrected: Psi(u)Psi(v) = Psi(u+v)", ring.agree(series_product(ring, {P(u), P(v)}), P(u + v))});
  out.push_back({"pentagon, printed: Psi(v)Psi(u) = Psi(u)Psi(qvu)Psi(v)",
                 ring.agree(series_product(ring, {P(v), P(u)}), series_product(ring, {P(u), P(mono(v, u, 1)), P(v)}))});
  out.push_back({"pentagon, corrected: Psi(v)Psi(u) = Psi(u)Psi(q^-1 vu)Psi(v)",
                 ring.agree(series_product(ring, {P(v), P(u)}), series_product(ring, {P(u), P(mono(v, u, -1)), P(v)}))});
  out.push_back({"pentagon, minus form: psi(v)psi(u) = psi(u)psi(-quv)psi(v)",
                 ring.agree(series_product(ring, {p(v), p(u)}),
                            series_product(ring, {p(u), p(mono(u, v, 1).scaled(QCoeff(-1))), p(v)}))});
  return out;
}

bool verify_pent_lemma_instance(const TensorSquare& t, int i, int j, int s, int D, int corrupt) {
  const Embedding& e = t.emb;
  const int n = e.n();
  if (i < 1 || j < i || j + 1 > n) throw std::invalid_argument("pent lemma needs 1 <= i <= j < n");
  const int tj = e.theta(j + 1);
  if (s < -tj || s >= tj) throw std::invalid_argument("pent lemma index s out of range");
  Monomial ms = e.m(tj, s);
  TorusElement fup = decompose_updown(e.seed(), e.F_root(i, j), ms).plus;
  TorusElement a = t.tensor(e.E_root(i, j), fup);
  TorusElement b = t.tensor(e.E_root(i, j + 1), f_geq(e, i, j + 1, s));
  TorusElement b1 = t.tensor(e.E_root(i, j + 1), f_geq(e, i, j + 1, s + 1));
  TorusElement c = t.tensor(e.E(j + 1), TorusElement(ms));
  SeriesRing ring(t.seed, std::vector<long>(t.seed.size(), 1));
  long wmin = Series::kExact;
  for (const auto* x : {&a, &b, &b1, &c})
    for (const auto& m : x->monomials()) wmin = std::min(wmin, ring.weight(m.exp));
  const long bound = D * wmin + 1;
  auto p = [&](const TorusElement& x) { return psi_minus_series(ring, x, bound); };
  TorusElement al = corrupt == 1 ? a.scaled(QCoeff(-1)) : a;
  Series lhs = series_product(ring, {p(al), p(b), p(c)});
  Series rhs = series_product(ring, {p(c), p(a), p(corrupt == 2 ? b : b1)});
  return ring.agree(lhs, rhs);
}

}  // namespace qck
