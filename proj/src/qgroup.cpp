#include "qck/qgroup.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace qck {

namespace {

QCoeff qmq() { return QCoeff::q(1) - QCoeff::q(-1); }

TorusElement one(const Seed& s) { return TorusElement::scalar(s.size(), QCoeff(1)); }

// x*y - c*y*x divided by (q - q^{-1})
TorusElement bracket(const Seed& s, const TorusElement& x, const TorusElement& y, const QCoeff& c) {
  return q_commutator(s, x, y, c).scaled(qmq().inverse());
}

void check_index(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("generator index out of range");
}

}  // namespace

CartanData cartan_data(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  CartanData d;
  d.n = n;
  d.a.assign(n, std::vector<int>(n, 0));
  d.c.assign(n, std::vector<mpq_class>(n, 0));
  for (int i = 0; i < n; ++i) {
    d.a[i][i] = 2;
    if (i + 1 < n) d.a[i][i + 1] = d.a[i + 1][i] = -1;
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      mpq_class v(std::min(i, j) * (n + 1 - std::max(i, j)), n + 1);
      v.canonicalize();
      d.c[i - 1][j - 1] = v;
    }
  return d;
}

std::vector<Root> positive_roots(int n) {
  std::vector<Root> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out.push_back({i, j});
  return out;
}

// ---------------------------------------------------------------- embedding

Embedding::Embedding(int n) : n_(n), d_(build_dn(n)) {}

Monomial Embedding::w(int i, int r) const {
  std::vector<std::pair<size_t, int>> word;
  for (int t = -i; t <= r; ++t) word.push_back({d_.v(i, t), 1});
  return mono_word(d_.seed, word, QCoeff::I() * QCoeff::q(i + r));
}

Monomial Embedding::m(int i, int r) const {
  std::vector<std::pair<size_t, int>> word;
  for (int t = -i; t <= r; ++t) word.push_back({d_.lam(i, t), 1});
  return mono_word(d_.seed, word, QCoeff::I() * QCoeff::q(i + r));
}

TorusElement Embedding::E(int i) const {
  check_index(n_, i);
  TorusElement x(d_.seed.size());
  for (int r = -i; r < i; ++r) x += TorusElement(w(i, r));
  return x;
}

TorusElement Embedding::F(int j) const {
  check_index(n_, j);
  int i = theta(j);
  TorusElement x(d_.seed.size());
  for (int r = -i; r < i; ++r) x += TorusElement(m(i, r));
  return x;
}

TorusElement Embedding::K(int i) const {
  check_index(n_, i);
  std::vector<std::pair<size_t, int>> word;
  for (int t = -i; t <= i; ++t) word.push_back({d_.v(i, t), 1});
  return TorusElement(mono_word(d_.seed, word, QCoeff::q(2 * i)));
}

TorusElement Embedding::Kp(int j) const {
  check_index(n_, j);
  int i = theta(j);
  std::vector<std::pair<size_t, int>> word;
  for (int t = -i; t <= i; ++t) word.push_back({d_.lam(i, t), 1});
  return TorusElement(mono_word(d_.seed, word, QCoeff::q(2 * i)));
}

TorusElement Embedding::image(Gen g, int i) const {
  switch (g) {
    case Gen::E: return E(i);
    case Gen::F: return F(i);
    case Gen::K: return K(i);
    case Gen::Kp: return Kp(i);
  }
  throw std::logic_error("bad generator");
}

TorusElement Embedding::E_root(int i, int j, int split) const {
  check_index(n_, i);
  check_index(n_, j);
  if (i > j) throw std::invalid_argument("root vector needs i <= j");
  if (i == j) return E(i);
  int k = split == 0 ? i : split;
  if (k < i || k >= j) throw std::invalid_argument("bad split");
  auto key = std::make_tuple(0, i, j, k);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  // (alpha, beta) = -1 for adjacent segments
  TorusElement r = bracket(d_.seed, E_root(i, k), E_root(k + 1, j), QCoeff::q(1));
  memo_.emplace(key, r);
  return r;
}

TorusElement Embedding::F_root(int i, int j, int split) const {
  check_index(n_, i);
  check_index(n_, j);
  if (i > j) throw std::invalid_argument("root vector needs i <= j");
  if (i == j) return F(i);
  int k = split == 0 ? i : split;
  if (k < i || k >= j) throw std::invalid_argument("bad split");
  auto key = std::make_tuple(1, i, j, k);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  TorusElement r = bracket(d_.seed, F_root(k + 1, j), F_root(i, k), QCoeff::q(-1));
  memo_.emplace(key, r);
  return r;
}

TorusElement Embedding::Fp_root(int i, int j, int split) const {
  check_index(n_, i);
  check_index(n_, j);
  if (i > j) throw std::invalid_argument("root vector needs i <= j");
  if (i == j) return F(i);
  int k = split == 0 ? i : split;
  if (k < i || k >= j) throw std::invalid_argument("bad split");
  auto key = std::make_tuple(2, i, j, k);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  // q^{(alpha,beta)}; the opposite power makes leading terms collide
  TorusElement r = bracket(d_.seed, Fp_root(i, k), Fp_root(k + 1, j), QCoeff::q(-1));
  memo_.emplace(key, r);
  return r;
}

// ---------------------------------------------------------------- relations

std::vector<RelationResult> check_relations(const Embedding& emb) {
  const int n = emb.n();
  const Seed& s = emb.seed();
  const CartanData cd = cartan_data(n);
  std::vector<RelationResult> out;
  auto qcomm = [&](const TorusElement& x, const TorusElement& y, int p) {
    return q_commutator(s, x, y, QCoeff::q(p)).is_zero();
  };
  auto tag = [](const char* f, int i, int j) {
    return std::string(f) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int a = cd.a[i - 1][j - 1];
      out.push_back({tag("K E", i, j), qcomm(emb.K(i), emb.E(j), a)});
      out.push_back({tag("K' E", i, j), qcomm(emb.Kp(i), emb.E(j), -a)});
      out.push_back({tag("K F", i, j), qcomm(emb.K(i), emb.F(j), -a)});
      out.push_back({tag("K' F", i, j), qcomm(emb.Kp(i), emb.F(j), a)});
      out.push_back({tag("K K", i, j), qcomm(emb.K(i), emb.K(j), 0)});
      out.push_back({tag("K K'", i, j), qcomm(emb.K(i), emb.Kp(j), 0)});
      out.push_back({tag("K' K'", i, j), qcomm(emb.Kp(i), emb.Kp(j), 0)});
      TorusElement ef = q_commutator(s, emb.E(i), emb.F(j), QCoeff(1));
      if (i == j) ef -= (emb.K(i) - emb.Kp(i)).scaled(qmq());
      out.push_back({tag("[E,F]", i, j), ef.is_zero()});
    }
  const QCoeff qq = QCoeff::q(1) + QCoeff::q(-1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if (std::abs(i - j) > 1) {
        out.push_back({tag("[E,E]", i, j), qcomm(emb.E(i), emb.E(j), 0)});
        out.push_back({tag("[F,F]", i, j), qcomm(emb.F(i), emb.F(j), 0)});
        continue;
      }
      for (bool isE : {true, false}) {
        TorusElement x = isE ? emb.E(i) : emb.F(i), y = isE ? emb.E(j) : emb.F(j);
        TorusElement xx = emb.mul(x, x);
        TorusElement r = emb.mul(xx, y) - emb.mul({x, y, x}).scaled(qq) + emb.mul(y, xx);
        out.push_back({tag(isE ? "Serre E" : "Serre F", i, j), r.is_zero()});
      }
    }
  return out;
}

// ---------------------------------------------------------------- decompositions

UpDown decompose_updown(const Seed& s, const TorusElement& x, const Monomial& ref) {
  UpDown d{TorusElement(s.size()), TorusElement(s.size())};
  for (const auto& y : x.monomials()) {
    int c = commutator2(s, ref.exp, y.exp);
    if (c == 0) throw std::domain_error("decomposition undefined");
    (c > 0 ? d.plus : d.minus).add_term(y.exp, y.coef);
  }
  return d;
}

TorusElement f_geq(const Embedding& emb, int i, int j, int s) {
  const int n = emb.n();
  if (i < 1 || j > n || i >= j) throw std::invalid_argument("f_geq needs 1 <= i < j <= n");
  const int tj = emb.theta(j);
  TorusElement acc(emb.seed().size());
  TorusElement base = emb.F_root(i, j - 1);
  for (int r = std::max(s, -tj); r < tj; ++r) {
    Monomial mr = emb.m(tj, r);
    acc += emb.mul(decompose_updown(emb.seed(), base, mr).plus, TorusElement(mr));
  }
  return acc;
}

// ---------------------------------------------------------------- leading terms and PBW

bool deglex_less(const Exp& a, const Exp& b) {
  long da = 0, db = 0;
  for (int v : a) da += v;
  for (int v : b) db += v;
  if (da != db) return da < db;
  return a < b;
}

Monomial leading_term(const TorusElement& x) {
  if (x.is_zero()) throw std::invalid_argument("leading term of zero");
  const Exp* best = nullptr;
  for (const auto& [e, c] : x.terms())
    if (!best || deglex_less(*best, e)) best = &e;
  return {*best, x.coeff(*best)};
}

PBWMonomial::PBWMonomial(int rank) : n(rank), k(rank, 0), kp(rank, 0), e(rank * (rank + 1) / 2, 0), fp(rank * (rank + 1) / 2, 0) {}

TorusElement pbw_image(const Embedding& emb, const PBWMonomial& p) {
  const auto roots = positive_roots(emb.n());
  std::vector<TorusElement> f;
  for (int i = 1; i <= emb.n(); ++i)
    if (p.k[i - 1]) f.push_back(emb.pow(emb.K(i), p.k[i - 1]));
  for (int i = 1; i <= emb.n(); ++i)
    if (p.kp[i - 1]) f.push_back(emb.pow(emb.Kp(i), p.kp[i - 1]));
  for (size_t a = 0; a < roots.size(); ++a)
    if (p.e[a]) f.push_back(emb.pow(emb.E_root(roots[a].i, roots[a].j), p.e[a]));
  for (size_t a = 0; a < roots.size(); ++a)
    if (p.fp[a]) f.push_back(emb.pow(emb.Fp_root(roots[a].i, roots[a].j), p.fp[a]));
  if (f.empty()) return one(emb.seed());
  return emb.mul(f);
}

namespace {

// Lattice position of a vertex in the right triangle; the left triangle is its point reflection.
std::map<std::pair<int, int>, size_t> triangle_positions(const Embedding& emb, int side) {
  const int n = emb.n();
  const DnQuiver& d = emb.quiver();
  std::map<std::pair<int, int>, size_t> pos;
  for (int i = 1; i <= n; ++i) {
    int ti = n + 1 - i;
    for (int r = 0; r <= i; ++r) {
      size_t v = side == 1 ? d.v(i, r) : d.lam(i, r);
      int x = r + ti, y = r + i - (n + 1);
      pos[side == 1 ? std::make_pair(x, y) : std::make_pair(-x, -y)] = v;
    }
    size_t c = side == 1 ? d.lam(i, 0) : d.v(i, 0);
    int x = ti, y = n + 1 - i;
    pos[side == 1 ? std::make_pair(x, y) : std::make_pair(-x, -y)] = c;
  }
  return pos;
}

}  // namespace

Rhombus rhombus(const Embedding& emb, int side, int i, int j) {
  const int n = emb.n();
  if (i < 1 || j > n || i > j) throw std::invalid_argument("bad rhombus");
  auto pos = triangle_positions(emb, side);
  int x = n - (j - i), y = i + j - (n + 1);
  if (side == 0) {
    x = -x;
    y = -y;
  }
  auto at = [&](int a, int b) -> long {
    auto it = pos.find({a, b});
    return it == pos.end() ? -1 : static_cast<long>(it->second);
  };
  return {at(x, y + 1), at(x, y - 1), at(x + 1, y), at(x - 1, y)};
}

PBWMonomial reconstruct_pbw(const Embedding& emb, const Monomial& lead) {
  const int n = emb.n();
  if (lead.coef.is_zero()) throw std::invalid_argument("zero monomial");
  auto deg = [&](long v) { return v < 0 ? 0 : lead.exp[static_cast<size_t>(v)]; };
  const auto roots = positive_roots(n);
  auto root_index = [&](int i, int j) {
    return static_cast<size_t>(std::find(roots.begin(), roots.end(), Root{i, j}) - roots.begin());
  };
  PBWMonomial p(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      Rhombus r = rhombus(emb, 1, i, j);
      p.e[root_index(i, j)] = deg(r.north) + deg(r.south) - deg(r.east) - deg(r.west);
      Rhombus l = rhombus(emb, 0, i, j);
      p.fp[root_index(n + 1 - j, n + 1 - i)] = deg(l.north) + deg(l.south) - deg(l.east) - deg(l.west);
    }
  for (int i = 1; i <= n; ++i) {
    p.k[i - 1] = deg(rhombus(emb, 1, i, i).east) - deg(rhombus(emb, 1, i, n).north);
    p.kp[n - i] = deg(rhombus(emb, 0, i, i).west) - deg(rhombus(emb, 0, i, n).south);
  }
  for (int v : p.k)
    if (v < 0) throw std::domain_error("not a PBW leading term");
  for (int v : p.kp)
    if (v < 0) throw std::domain_error("not a PBW leading term");
  for (int v : p.e)
    if (v < 0) throw std::domain_error("not a PBW leading term");
  for (int v : p.fp)
    if (v < 0) throw std::domain_error("not a PBW leading term");
  return p;
}

// ---------------------------------------------------------------- tensor square and coproduct

TensorSquare::TensorSquare(int n) : emb(n) {
  seed = amalgamate(emb.seed(), emb.seed(), {}, false).result;
  half = emb.seed().size();
}

Monomial TensorSquare::left(const Monomial& x) const {
  Monomial r{Exp(2 * half, 0), x.coef};
  std::copy(x.exp.begin(), x.exp.end(), r.exp.begin());
  return r;
}

Monomial TensorSquare::right(const Monomial& y) const {
  Monomial r{Exp(2 * half, 0), y.coef};
  std::copy(y.exp.begin(), y.exp.end(), r.exp.begin() + static_cast<long>(half));
  return r;
}

TorusElement TensorSquare::left(const TorusElement& x) const {
  TorusElement r(2 * half);
  for (const auto& m : x.monomials()) {
    Monomial l = left(m);
    r.add_term(l.exp, l.coef);
  }
  return r;
}

TorusElement TensorSquare::right(const TorusElement& y) const {
  TorusElement r(2 * half);
  for (const auto& m : y.monomials()) {
    Monomial l = right(m);
    r.add_term(l.exp, l.coef);
  }
  return r;
}

TorusElement TensorSquare::tensor(const TorusElement& x, const TorusElement& y) const {
  return torus_mul(seed, left(x), right(y));
}

Monomial TensorSquare::tensor(const Monomial& x, const Monomial& y) const { return mono_mul(seed, left(x), right(y)); }

Monomial TensorSquare::flip(const Monomial& x) const {
  Monomial r{Exp(2 * half, 0), x.coef};
  for (size_t v = 0; v < half; ++v) {
    r.exp[v] = x.exp[v + half];
    r.exp[v + half] = x.exp[v];
  }
  return r;
}

MonomialMap z_embedding(const ZnQuiver& z, const TensorSquare& t) {
  MonomialMap f{z.seed, t.seed, {}};
  for (size_t v = 0; v < z.seed.size(); ++v) {
    auto [l, r] = z.amalg.embed[v];
    Monomial m = unit_monomial(t.seed);
    if (l >= 0) m.exp[static_cast<size_t>(l)] = 1;
    if (r >= 0) m.exp[t.half + static_cast<size_t>(r)] = 1;
    f.images.push_back(m);
  }
  return f;
}

TorusElement coproduct_image(const ZnQuiver& z, Gen g, int i) {
  check_index(z.n, i);
  const bool lower = g == Gen::F || g == Gen::Kp;
  const int p = lower ? z.n + 1 - i : i;
  std::vector<size_t> path = lower ? lambda_lambda_path(z, p) : vv_path(z, p);
  if (g == Gen::K || g == Gen::Kp) {
    std::vector<std::pair<size_t, int>> word;
    for (size_t v : path) word.push_back({v, 1});
    return TorusElement(mono_word(z.seed, word, QCoeff::q(4 * p)));
  }
  TorusElement x(z.seed.size());
  std::vector<std::pair<size_t, int>> word;
  for (size_t r = 0; r + 1 < path.size(); ++r) {
    word.push_back({path[r], 1});
    x += TorusElement(mono_word(z.seed, word, QCoeff::I() * QCoeff::q(static_cast<int>(r))));
  }
  return x;
}

TorusElement coproduct_hopf(const TensorSquare& t, Gen g, int i) {
  const Embedding& e = t.emb;
  const TorusElement u = one(e.seed());
  switch (g) {
    case Gen::E: return t.tensor(e.E(i), u) + t.tensor(e.K(i), e.E(i));
    case Gen::K: return t.tensor(e.K(i), e.K(i));
    case Gen::F: return t.tensor(e.F(i), e.Kp(i)) + t.tensor(u, e.F(i));
    case Gen::Kp: return t.tensor(e.Kp(i), e.Kp(i));
  }
  throw std::logic_error("bad generator");
}

}  // namespace qck
