#include "qck/mutate.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>

namespace qck {

namespace {

void require_mutable(const Seed& s, size_t k) {
  if (k >= s.size()) throw std::out_of_range("mutation vertex out of range");
  if (s.frozen[k]) throw std::invalid_argument("cannot mutate at a frozen vertex");
}

// eps_{ki}, integral because k is mutable.
int eps_int(const Seed& s, size_t k, size_t i) { return s.eps2[k][i] / 2; }

Exp unit_exp(size_t n, size_t i, int p) {
  Exp e(n, 0);
  e[i] = p;
  return e;
}

FracElement frac_one(const Seed& s) { return FracElement(TorusElement(unit_monomial(s))); }

FracElement frac_pow(const Seed& s, const FracElement& x, int p) {
  FracElement acc = frac_one(s);
  for (int j = 0; j < p; ++j) acc = frac_mul(s, acc, x);
  return acc;
}

}  // namespace

Seed mutate_eps(const Seed& s, size_t k) {
  require_mutable(s, k);
  Seed r = s;
  const size_t n = s.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        r.eps2[i][j] = -s.eps2[i][j];
        continue;
      }
      int a = s.eps2[i][k], b = s.eps2[k][j];
      r.eps2[i][j] = s.eps2[i][j] + (std::abs(a) * b + a * std::abs(b)) / 4;
    }
  return r;
}

// ---------------------------------------------------------------- monomial maps

MonomialMap MonomialMap::identity(const Seed& s) {
  MonomialMap f{s, s, {}};
  for (size_t i = 0; i < s.size(); ++i) f.images.push_back(generator(s, i));
  return f;
}

Monomial MonomialMap::apply(const Monomial& m) const {
  Monomial acc = unit_monomial(target);
  acc.coef = m.coef;
  for (size_t i = 0; i < m.exp.size(); ++i)
    if (m.exp[i] != 0) acc = mono_mul(target, acc, mono_pow(target, images[i], m.exp[i]));
  return acc;
}

TorusElement MonomialMap::apply(const TorusElement& x) const {
  TorusElement r(target.size());
  for (const auto& m : x.monomials()) {
    Monomial im = apply(m);
    r.add_term(im.exp, im.coef);
  }
  return r;
}

bool MonomialMap::is_homomorphism() const {
  for (size_t i = 0; i < images.size(); ++i)
    for (size_t j = 0; j < images.size(); ++j)
      if (commutator2(target, images[i].exp, images[j].exp) != source.eps2[j][i]) return false;
  return true;
}

MonomialMap compose(const MonomialMap& f, const MonomialMap& g) {
  MonomialMap h{g.source, f.target, {}};
  for (const auto& im : g.images) h.images.push_back(f.apply(im));
  return h;
}

MonomialMap inverse(const MonomialMap& f) {
  const size_t n = f.images.size();
  // Solve A x = e_j where column i of A is the exponent of images[i].
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) a[r][c] = f.images[c].exp[r];
    a[r][n + r] = 1;
  }
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("monomial map is not invertible");
    std::swap(a[p], a[c]);
    mpq_class piv = a[c][c];
    for (auto& v : a[c]) v /= piv;
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpq_class fct = a[r][c];
      for (size_t k = 0; k < 2 * n; ++k) a[r][k] -= fct * a[c][k];
    }
  }
  MonomialMap g{f.target, f.source, {}};
  for (size_t j = 0; j < n; ++j) {
    Exp b(n);
    for (size_t r = 0; r < n; ++r) {
      mpq_class v = a[r][n + j];
      v.canonicalize();
      if (v.get_den() != 1) throw std::domain_error("monomial map inverse is not integral");
      b[r] = static_cast<int>(v.get_num().get_si());
    }
    Monomial cand{b, QCoeff(1)};
    Monomial img = f.apply(cand);
    cand.coef = img.coef.inverse();
    g.images.push_back(cand);
  }
  return g;
}

// ---------------------------------------------------------------- quantum mutation

MonomialMap mutation_prime(const Seed& s, size_t k) {
  require_mutable(s, k);
  MonomialMap f{mutate_eps(s, k), s, {}};
  for (size_t i = 0; i < s.size(); ++i) {
    if (i == k) {
      f.images.push_back(generator(s, k, -1));
      continue;
    }
    int e = eps_int(s, k, i);
    if (e >= 0) f.images.push_back(mono_word(s, {{i, 1}, {k, e}}, QCoeff::q(-e * e)));
    else f.images.push_back(generator(s, i));
  }
  return f;
}

FracElement mutate_quantum_generator(const Seed& s, size_t k, size_t i, int power) {
  require_mutable(s, k);
  const size_t n = s.size();
  if (i == k) return FracElement(generator(s, k, -power));
  int e = eps_int(s, k, i);
  FracElement g, ginv;
  if (e >= 0) {
    std::vector<QBinomialInverse> d;
    for (int r = 1; r <= e; ++r) d.push_back(binomial(2 * r - 1, unit_exp(n, k, -1)));
    g = FracElement(TorusElement(generator(s, i)), d);
    // (X_i D_1^{-1} ... D_e^{-1})^{-1} = D_e ... D_1 X_i^{-1}
    TorusElement inv(unit_monomial(s));
    for (int r = e; r >= 1; --r) inv = torus_mul(s, inv, binomial_poly(s, d[r - 1]));
    ginv = FracElement(torus_mul(s, inv, TorusElement(generator(s, i, -1))));
  } else {
    TorusElement p(generator(s, i));
    std::vector<QBinomialInverse> d;
    for (int r = 1; r <= -e; ++r) {
      QBinomialInverse b = binomial(2 * r - 1, unit_exp(n, k, 1));
      p = torus_mul(s, p, binomial_poly(s, b));
      d.insert(d.begin(), b);
    }
    g = FracElement(p);
    ginv = frac_mul(s, FracElement(TorusElement(unit_monomial(s)), d), FracElement(generator(s, i, -1)));
  }
  return power >= 0 ? frac_pow(s, g, power) : frac_pow(s, ginv, -power);
}

FracElement mutate_quantum(const Seed& s, size_t k, const TorusElement& x) {
  require_mutable(s, k);
  FracElement acc{TorusElement(s.size())};
  for (const auto& m : x.monomials()) {
    FracElement term(TorusElement::scalar(s.size(), m.coef));
    for (size_t i = 0; i < m.exp.size(); ++i)
      if (m.exp[i] != 0) term = frac_mul(s, term, mutate_quantum_generator(s, k, i, m.exp[i]));
    acc = frac_add(s, acc, term);
  }
  return acc;
}

FracElement mutate_quantum(const Seed& s, size_t k, const FracElement& x) {
  FracElement acc = mutate_quantum(s, k, x.num);
  for (const auto& d : x.dens) {
    for (size_t i = 0; i < d.mono.size(); ++i)
      if (i != k && d.mono[i] != 0) throw std::domain_error("denominator image is not a binomial");
    acc = frac_mul(s, acc, frac_binomial_inverse(s, QBinomialInverse{d.coef, unit_exp(s.size(), k, -d.mono[k])}));
  }
  return acc;
}

// ---------------------------------------------------------------- schedules

ScheduleRun run_schedule(const Seed& s, const std::vector<size_t>& steps) {
  ScheduleRun run{MonomialMap::identity(s), {}, s};
  for (size_t k : steps) {
    require_mutable(run.final_seed, k);
    run.args.push_back({run.M.apply(generator(run.final_seed, k))});
    run.M = compose(run.M, mutation_prime(run.final_seed, k));
    run.final_seed = mutate_eps(run.final_seed, k);
  }
  return run;
}

ScheduleRun run_schedule(const Seed& s, const MutationSchedule& sched) { return run_schedule(s, sched.steps()); }

// ---------------------------------------------------------------- dilogarithm conjugation

FracElement ad_dilog(const Seed& s, const Monomial& u, const TorusElement& x) {
  FracElement acc{TorusElement(s.size())};
  for (const auto& y : x.monomials()) {
    int c = commutator2(s, y.exp, u.exp);
    if (c % 2 != 0) throw std::domain_error("non-even q-commutation");
    int m = c / 2;
    FracElement term{TorusElement(y)};
    if (m > 0) {
      for (int r = 1; r <= m; ++r) term.dens.push_back({QCoeff::q(1 - 2 * r) * u.coef, u.exp});
    } else if (m < 0) {
      TorusElement p(y);
      for (int r = 1; r <= -m; ++r) p = torus_mul(s, p, binomial_poly(s, {QCoeff::q(2 * r - 1) * u.coef, u.exp}));
      term = FracElement(p);
    }
    acc = frac_add(s, acc, term);
  }
  return acc;
}

FracElement ad_dilog_chain(const Seed& s, const std::vector<Monomial>& args, const TorusElement& x) {
  FracElement cur(x);
  for (size_t r = args.size(); r-- > 0;) {
    for (const auto& d : cur.dens)
      if (commutator2(s, d.mono, args[r].exp) != 0) throw std::domain_error("denominator does not commute with argument");
    FracElement next = ad_dilog(s, args[r], cur.num);
    for (const auto& d : cur.dens) next = frac_mul(s, next, frac_binomial_inverse(s, d));
    cur = next;
  }
  return cur;
}

// ---------------------------------------------------------------- decomposition check

namespace {

// 1 + c*S or its inverse, as a series.
Series binomial_series(const SeriesRing& ring, const QCoeff& c, const Series& sv, bool invert, long rel) {
  Series one = ring.exact(TorusElement::scalar(ring.seed().size(), QCoeff(1)));
  Series b = ring.add(one, {sv.terms.scaled(c), sv.bound});
  return invert ? ring.inverse(b, rel) : b;
}

Series monomial_series(const SeriesRing& ring, const Monomial& m) { return ring.exact(TorusElement(m)); }

}  // namespace

DecompositionCheck check_decomposition(const SeriesRing& ring, const std::vector<size_t>& steps, size_t j, long rel) {
  const Seed& s0 = ring.seed();
  std::vector<Seed> seeds{s0};
  for (size_t k : steps) seeds.push_back(mutate_eps(seeds.back(), k));
  const size_t K = steps.size();

  // lhs: value in s0 of a monomial of seeds[level].
  std::map<std::pair<size_t, Exp>, Series> memo;
  std::function<Series(size_t, const Exp&)> eval = [&](size_t level, const Exp& e) -> Series {
    if (level == 0) return monomial_series(ring, Monomial{e, QCoeff(1)});
    auto key = std::make_pair(level, e);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const Seed& prev = seeds[level - 1];
    size_t k = steps[level - 1];
    Series acc = ring.exact(TorusElement::scalar(s0.size(), QCoeff(1)));
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      FracElement g = mutate_quantum_generator(prev, k, i, e[i]);
      Series val{TorusElement(s0.size()), Series::kExact};
      for (const auto& m : g.num.monomials()) {
        Series t = eval(level - 1, m.exp);
        val = ring.add(val, {t.terms.scaled(m.coef), t.bound});
      }
      for (const auto& d : g.dens) val = ring.mul(val, binomial_series(ring, d.coef, eval(level - 1, d.mono), true, rel));
      acc = ring.mul(acc, val);
    }
    memo.emplace(key, acc);
    return acc;
  };

  DecompositionCheck out;
  out.lhs = eval(K, unit_exp(s0.size(), j, 1));

  // rhs: A_r(z) = Ad(a_1) ... Ad(a_r)(z) for monomials z of s0.
  ScheduleRun run = run_schedule(s0, steps);
  std::map<std::pair<size_t, Exp>, Series> memo2;
  std::function<Series(size_t, const Monomial&)> ad = [&](size_t r, const Monomial& z) -> Series {
    if (r == 0) return monomial_series(ring, z);
    auto key = std::make_pair(r, z.exp);
    Series base;
    if (auto it = memo2.find(key); it != memo2.end()) {
      base = it->second;
    } else {
      const Monomial& a = run.args[r - 1].arg;
      Monomial zu{z.exp, QCoeff(1)};
      int c = commutator2(s0, zu.exp, a.exp);
      if (c % 2 != 0) throw std::domain_error("non-even q-commutation");
      int m = c / 2;
      base = ad(r - 1, zu);
      if (m != 0) {
        Series av = ad(r - 1, Monomial{a.exp, QCoeff(1)});
        for (int t = 1; t <= std::abs(m); ++t) {
          QCoeff cf = QCoeff::q(m > 0 ? 1 - 2 * t : 2 * t - 1) * a.coef;
          base = ring.mul(base, binomial_series(ring, cf, av, m > 0, rel));
        }
      }
      memo2.emplace(key, base);
    }
    return {base.terms.scaled(z.coef), base.bound};
  };
  out.rhs = ad(K, run.M.images[j]);
  out.agree = ring.agree(out.lhs, out.rhs);
  long b = std::min(out.lhs.bound, out.rhs.bound);
  out.margin = b - std::min(ring.valuation(out.lhs), ring.valuation(out.rhs));
  return out;
}

}  // namespace qck
