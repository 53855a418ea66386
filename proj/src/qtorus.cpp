#include "qck/qtorus.hpp"

#include <algorithm>
#include <stdexcept>

namespace qck {

// ---------------------------------------------------------------- Seed

Seed Seed::empty(size_t n) {
  Seed s;
  s.ids.resize(n);
  for (size_t i = 0; i < n; ++i) s.ids[i] = static_cast<int>(i) + 1;
  s.frozen.assign(n, false);
  s.eps2.assign(n, std::vector<int>(n, 0));
  s.labels.assign(n, "");
  return s;
}

size_t Seed::index_of(int id) const {
  for (size_t i = 0; i < ids.size(); ++i)
    if (ids[i] == id) return i;
  throw std::out_of_range("no vertex with id " + std::to_string(id));
}

std::string Seed::name(size_t i) const {
  if (i < labels.size() && !labels[i].empty()) return labels[i];
  return "X" + std::to_string(ids[i]);
}

void Seed::validate() const {
  size_t n = ids.size();
  if (frozen.size() != n || eps2.size() != n) throw std::invalid_argument("seed size mismatch");
  for (size_t i = 0; i < n; ++i) {
    if (eps2[i].size() != n) throw std::invalid_argument("seed size mismatch");
    for (size_t j = 0; j < n; ++j) {
      if (eps2[i][j] != -eps2[j][i]) throw std::invalid_argument("exchange matrix not skew-symmetric");
      if (eps2[i][j] % 2 != 0 && !(frozen[i] && frozen[j]))
        throw std::invalid_argument("half-integral entry between non-frozen vertices");
    }
  }
}

Seed reorder_seed(const Seed& s, const std::vector<size_t>& order) {
  Seed r = Seed::empty(order.size());
  for (size_t a = 0; a < order.size(); ++a) {
    r.frozen[a] = s.frozen[order[a]];
    r.labels[a] = order[a] < s.labels.size() ? s.labels[order[a]] : "";
    for (size_t b = 0; b < order.size(); ++b) r.eps2[a][b] = s.eps2[order[a]][order[b]];
  }
  return r;
}

// ---------------------------------------------------------------- monomials

Monomial generator(const Seed& s, size_t i, int power) {
  Monomial m{Exp(s.size(), 0), QCoeff(1)};
  m.exp.at(i) = power;
  return m;
}

Monomial unit_monomial(const Seed& s) { return Monomial{Exp(s.size(), 0), QCoeff(1)}; }

bool is_zero_exp(const Exp& e) {
  return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

int commutator2(const Seed& s, const Exp& a, const Exp& b) {
  if (a.size() != s.size() || b.size() != s.size()) throw std::invalid_argument("exponent/seed size mismatch");
  long acc = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) acc += static_cast<long>(a[i]) * b[j] * s.eps2[j][i];
  }
  return static_cast<int>(acc);
}

mpq_class torus_commutator_qpower(const Seed& s, const Monomial& m1, const Monomial& m2) {
  mpq_class c(commutator2(s, m1.exp, m2.exp), 2);
  c.canonicalize();
  return c;
}

int ordering_shift(const Seed& s, const Exp& a, const Exp& b) {
  if (a.size() != s.size() || b.size() != s.size()) throw std::invalid_argument("exponent/seed size mismatch");
  long acc = 0;
  for (size_t j = 0; j < b.size(); ++j) {
    if (b[j] == 0) continue;
    for (size_t i = j + 1; i < a.size(); ++i)
      if (a[i] != 0) acc += static_cast<long>(a[i]) * b[j] * s.eps2[j][i];
  }
  return static_cast<int>(acc);
}

Monomial mono_mul(const Seed& s, const Monomial& a, const Monomial& b) {
  Monomial r;
  r.exp.resize(a.exp.size());
  for (size_t i = 0; i < a.exp.size(); ++i) r.exp[i] = a.exp[i] + b.exp.at(i);
  r.coef = (a.coef * b.coef).shifted(ordering_shift(s, a.exp, b.exp));
  return r;
}

Monomial mono_inverse(const Seed& s, const Monomial& a) {
  Exp neg(a.exp.size());
  for (size_t i = 0; i < neg.size(); ++i) neg[i] = -a.exp[i];
  return Monomial{neg, a.coef.inverse().shifted(-ordering_shift(s, a.exp, neg))};
}

Monomial mono_pow(const Seed& s, const Monomial& a, int k) {
  Monomial base = k < 0 ? mono_inverse(s, a) : a;
  Monomial r = unit_monomial(s);
  for (int t = 0; t < std::abs(k); ++t) r = mono_mul(s, r, base);
  return r;
}

Monomial mono_word(const Seed& s, const std::vector<std::pair<size_t, int>>& word, const QCoeff& c) {
  Monomial r = unit_monomial(s);
  r.coef = c;
  for (auto [v, p] : word) r = mono_mul(s, r, generator(s, v, p));
  return r;
}

// ---------------------------------------------------------------- TorusElement

TorusElement::TorusElement(const Monomial& m) : dim_(m.exp.size()) {
  if (!m.coef.is_zero()) terms_.emplace(m.exp, m.coef);
}

TorusElement TorusElement::scalar(size_t dim, const QCoeff& c) { return TorusElement(Monomial{Exp(dim, 0), c}); }

std::vector<Monomial> TorusElement::monomials() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back({e, c});
  return out;
}

QCoeff TorusElement::coeff(const Exp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? QCoeff() : it->second;
}

void TorusElement::add_term(const Exp& e, const QCoeff& c) {
  if (c.is_zero()) return;
  if (dim_ == 0) dim_ = e.size();
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TorusElement TorusElement::scaled(const QCoeff& c) const {
  TorusElement r(dim_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  if (dim_ == 0) dim_ = o.dim_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  if (dim_ == 0) dim_ = o.dim_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TorusElement torus_mul(const Seed& s, const TorusElement& x, const TorusElement& y) {
  size_t n = s.size();
  if ((x.dim() != 0 && x.dim() != n) || (y.dim() != 0 && y.dim() != n))
    throw std::invalid_argument("torus element does not belong to this seed");
  TorusElement r(n);
  std::vector<long> pre(n);
  Exp sum(n);
  for (const auto& [b, cb] : y.terms()) {
    // pre[i] = sum_{j<i} b_j eps2[j][i]
    for (size_t i = 0; i < n; ++i) {
      long acc = 0;
      for (size_t j = 0; j < i; ++j)
        if (b[j] != 0) acc += static_cast<long>(b[j]) * s.eps2[j][i];
      pre[i] = acc;
    }
    for (const auto& [a, ca] : x.terms()) {
      long shift = 0;
      for (size_t i = 0; i < n; ++i) {
        if (a[i] != 0) shift += a[i] * pre[i];
        sum[i] = a[i] + b[i];
      }
      r.add_term(sum, (ca * cb).shifted(static_cast<int>(shift)));
    }
  }
  return r;
}

TorusElement torus_mul(const Seed& s, const std::vector<TorusElement>& factors) {
  TorusElement r = TorusElement::scalar(s.size(), 1);
  for (const auto& f : factors) r = torus_mul(s, r, f);
  return r;
}

TorusElement torus_pow(const Seed& s, const TorusElement& x, int k) {
  if (k < 0) {
    if (x.size() != 1) throw std::domain_error("negative power of a non-monomial");
    return TorusElement(mono_pow(s, x.monomials()[0], k));
  }
  TorusElement r = TorusElement::scalar(s.size(), 1);
  for (int t = 0; t < k; ++t) r = torus_mul(s, r, x);
  return r;
}

TorusElement q_commutator(const Seed& s, const TorusElement& x, const TorusElement& y, const QCoeff& c) {
  return torus_mul(s, x, y) - torus_mul(s, y, x).scaled(c);
}

std::string render_monomial(const Seed& s, const Monomial& m) {
  std::string vars;
  for (size_t i = 0; i < m.exp.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!vars.empty()) vars += "*";
    vars += s.name(i);
    if (m.exp[i] != 1) vars += "^" + std::to_string(m.exp[i]);
  }
  std::string c = render(m.coef);
  if (vars.empty()) return c;
  if (m.coef.is_one()) return vars;
  if (c.find(' ') != std::string::npos) c = "(" + c + ")";
  return c + "*" + vars;
}

std::string render(const Seed& s, const TorusElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& m : x.monomials()) {
    if (!out.empty()) out += " + ";
    out += render_monomial(s, m);
  }
  return out;
}

// ---------------------------------------------------------------- binomials

int QBinomialInverse::shift() const {
  if (!coef.is_monomial() || !coef.num().terms()[0].second.is_one())
    throw std::domain_error("binomial coefficient is not a power of q");
  return coef.num().terms()[0].first;
}

QBinomialInverse binomial(int shift, const Exp& mono) {
  if (is_zero_exp(mono)) throw std::invalid_argument("binomial with zero monomial");
  return {QCoeff::q(shift), mono};
}

TorusElement binomial_poly(const Seed& s, const QBinomialInverse& b) {
  TorusElement r = TorusElement::scalar(s.size(), 1);
  r.add_term(b.mono, b.coef);
  return r;
}

QBinomialInverse transport(const Seed& s, const QBinomialInverse& b, const Exp& e) {
  return {b.coef.shifted(commutator2(s, b.mono, e)), b.mono};
}

namespace {

bool pairwise_commute(const Seed& s, const std::vector<QBinomialInverse>& d) {
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = i + 1; j < d.size(); ++j)
      if (commutator2(s, d[i].mono, d[j].mono) != 0) return false;
  return true;
}

bool binomial_less(const QBinomialInverse& a, const QBinomialInverse& b) {
  if (a.mono != b.mono) return a.mono < b.mono;
  return render(a.coef) < render(b.coef);
}

TorusElement mul_polys(const Seed& s, TorusElement x, const std::vector<QBinomialInverse>& d) {
  for (const auto& b : d) x = torus_mul(s, x, binomial_poly(s, b));
  return x;
}

// a minus b as multisets
std::vector<QBinomialInverse> multiset_minus(std::vector<QBinomialInverse> a, const std::vector<QBinomialInverse>& b) {
  for (const auto& x : b) {
    auto it = std::find(a.begin(), a.end(), x);
    if (it != a.end()) a.erase(it);
  }
  return a;
}

std::vector<QBinomialInverse> multiset_union(const std::vector<QBinomialInverse>& a,
                                             const std::vector<QBinomialInverse>& b) {
  std::vector<QBinomialInverse> r = a;
  auto extra = multiset_minus(b, a);
  r.insert(r.end(), extra.begin(), extra.end());
  return r;
}

}  // namespace

bool right_divide(const Seed& s, const TorusElement& x, const QBinomialInverse& b, TorusElement& quotient) {
  size_t p = 0;
  while (p < b.mono.size() && b.mono[p] == 0) ++p;
  if (p == b.mono.size()) throw std::invalid_argument("binomial with zero monomial");
  auto level = [&](const Exp& e) {
    int a = e[p], d = b.mono[p];
    int t = a / d;
    if ((a % d != 0) && ((a < 0) != (d < 0))) --t;
    return t;
  };
  std::map<std::pair<int, Exp>, QCoeff> rem;
  int max_level = 0;
  bool any = false;
  for (const auto& [e, c] : x.terms()) {
    int t = level(e);
    rem.emplace(std::make_pair(t, e), c);
    max_level = any ? std::max(max_level, t) : t;
    any = true;
  }
  quotient = TorusElement(s.size());
  Monomial tail{b.mono, b.coef};
  while (!rem.empty()) {
    auto it = rem.begin();
    if (it->first.first >= max_level) return false;  // remaining term cannot be absorbed
    Monomial m{it->first.second, it->second};
    rem.erase(it);
    quotient.add_term(m.exp, m.coef);
    Monomial prod = mono_mul(s, m, tail);
    auto key = std::make_pair(level(prod.exp), prod.exp);
    auto [jt, inserted] = rem.emplace(key, -prod.coef);
    if (!inserted) {
      jt->second -= prod.coef;
      if (jt->second.is_zero()) rem.erase(jt);
    }
  }
  return true;
}

FracElement frac_normalize(const Seed& s, FracElement x) {
  if (x.num.is_zero()) return FracElement(TorusElement(s.size()));
  if (pairwise_commute(s, x.dens)) {
    std::sort(x.dens.begin(), x.dens.end(), binomial_less);
    bool progress = true;
    while (progress) {
      progress = false;
      for (size_t k = 0; k < x.dens.size(); ++k) {
        TorusElement quo;
        if (right_divide(s, x.num, x.dens[k], quo)) {
          x.num = std::move(quo);
          x.dens.erase(x.dens.begin() + static_cast<long>(k));
          progress = true;
          break;
        }
      }
    }
  } else {
    TorusElement quo;
    while (!x.dens.empty() && right_divide(s, x.num, x.dens.front(), quo)) {
      x.num = quo;
      x.dens.erase(x.dens.begin());
    }
  }
  return x;
}

FracElement frac_add(const Seed& s, const FracElement& x, const FracElement& y) {
  if (x.num.is_zero()) return y;
  if (y.num.is_zero()) return x;
  if (x.dens == y.dens) return frac_normalize(s, FracElement(x.num + y.num, x.dens));
  std::vector<QBinomialInverse> all = x.dens;
  all.insert(all.end(), y.dens.begin(), y.dens.end());
  if (!pairwise_commute(s, all)) throw std::domain_error("sum of fractions with non-commuting denominators");
  auto u = multiset_union(x.dens, y.dens);
  TorusElement nx = mul_polys(s, x.num, multiset_minus(u, x.dens));
  TorusElement ny = mul_polys(s, y.num, multiset_minus(u, y.dens));
  return frac_normalize(s, FracElement(nx + ny, u));
}

FracElement frac_neg(const FracElement& x) { return FracElement(-x.num, x.dens); }

FracElement frac_mul(const Seed& s, const FracElement& x, const FracElement& y) {
  if (x.num.is_zero() || y.num.is_zero()) return FracElement(TorusElement(s.size()));
  if (x.dens.empty()) return frac_normalize(s, FracElement(torus_mul(s, x.num, y.num), y.dens));
  FracElement acc(TorusElement(s.size()));
  for (const auto& m : y.num.monomials()) {
    std::vector<QBinomialInverse> d;
    for (const auto& b : x.dens) d.push_back(transport(s, b, m.exp));
    d.insert(d.end(), y.dens.begin(), y.dens.end());
    FracElement piece(torus_mul(s, x.num, TorusElement(m)), d);
    acc = y.num.size() == 1 ? frac_normalize(s, piece) : frac_add(s, acc, piece);
  }
  return acc;
}

FracElement frac_binomial_inverse(const Seed& s, const QBinomialInverse& b) {
  return FracElement(TorusElement::scalar(s.size(), 1), {b});
}

bool frac_eq(const Seed& s, const FracElement& x, const FracElement& y) {
  return frac_add(s, x, frac_neg(y)).num.is_zero();
}

std::string render(const Seed& s, const FracElement& x) {
  std::string out = "(" + render(s, x.num) + ")";
  for (const auto& b : x.dens)
    out += "*(1 + " + render_monomial(s, Monomial{b.mono, b.coef}) + ")^-1";
  return out;
}

}  // namespace qck
