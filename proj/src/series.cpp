#include "qck/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qck {

namespace {

long sat_add(long a, long b) {
  if (a >= Series::kExact || b >= Series::kExact) return Series::kExact;
  return a + b;
}

}  // namespace

SeriesRing::SeriesRing(Seed seed, std::vector<long> weight) : seed_(std::move(seed)), w_(std::move(weight)) {
  if (w_.size() != seed_.size()) throw std::invalid_argument("weight vector size mismatch");
}

long SeriesRing::weight(const Exp& e) const {
  long s = 0;
  for (size_t i = 0; i < e.size(); ++i) s += w_[i] * e[i];
  return s;
}

long SeriesRing::valuation(const Series& x) const {
  long v = x.bound;
  for (const auto& [e, c] : x.terms.terms()) v = std::min(v, weight(e));
  return v;
}

Series SeriesRing::truncate(Series x, long bound) const {
  if (bound >= Series::kExact) return x;
  bound = std::min(bound, x.bound);
  TorusElement t(seed_.size());
  for (const auto& [e, c] : x.terms.terms())
    if (weight(e) < bound) t.add_term(e, c);
  return {t, bound};
}

Series SeriesRing::add(const Series& x, const Series& y) const {
  long b = std::min(x.bound, y.bound);
  return truncate({x.terms + y.terms, b}, b);
}

Series SeriesRing::sub(const Series& x, const Series& y) const {
  long b = std::min(x.bound, y.bound);
  return truncate({x.terms - y.terms, b}, b);
}

Series SeriesRing::mul(const Series& x, const Series& y) const {
  long b = std::min(sat_add(valuation(x), y.bound), sat_add(valuation(y), x.bound));
  TorusElement t(seed_.size());
  std::vector<std::pair<long, Monomial>> ym;
  for (const auto& m : y.terms.monomials()) ym.push_back({weight(m.exp), m});
  for (const auto& a : x.terms.monomials()) {
    long wa = weight(a.exp);
    for (const auto& [wb, bm] : ym) {
      if (wa + wb >= b) continue;
      Monomial p = mono_mul(seed_, a, bm);
      t.add_term(p.exp, p.coef);
    }
  }
  return {t, b};
}

Series SeriesRing::inverse(const Series& x, long rel) const {
  long v = valuation(x);
  if (v >= x.bound) throw std::domain_error("series has no known nonzero term");
  std::vector<Monomial> low;
  for (const auto& m : x.terms.monomials())
    if (weight(m.exp) == v) low.push_back(m);
  if (low.size() != 1) throw std::domain_error("lowest-weight part is not a single monomial; choose a generic weight");
  if (!x.exact()) rel = std::min(rel, x.bound - v);
  Monomial linv = mono_inverse(seed_, low[0]);
  // x = L (1 + y), x^{-1} = (1 + y)^{-1} L^{-1}
  Series y = mul(exact(TorusElement(linv)), x);
  y.terms -= TorusElement::scalar(seed_.size(), QCoeff(1));
  y = truncate(y, rel);
  Series acc = truncate(exact(TorusElement::scalar(seed_.size(), QCoeff(1))), rel);
  Series pw = acc;
  Series negy{y.terms.scaled(QCoeff(-1)), y.bound};
  long vy = valuation(negy);
  if (vy <= 0 && !negy.terms.is_zero()) throw std::logic_error("non-positive correction weight");
  while (!pw.terms.is_zero()) {
    pw = truncate(mul(pw, negy), rel);
    acc = add(acc, pw);
  }
  acc = truncate(acc, rel);
  return mul(acc, exact(TorusElement(linv)));
}

Series SeriesRing::from_frac(const FracElement& x, long rel) const {
  Series acc = exact(x.num);
  for (const auto& d : x.dens) acc = mul(acc, inverse(exact(binomial_poly(seed_, d)), rel));
  return acc;
}

Series SeriesRing::power_series(const Monomial& u, const std::vector<QCoeff>& coeffs, long rel) const {
  long wu = weight(u.exp);
  if (wu <= 0) throw std::domain_error("power series variable must have positive weight");
  TorusElement t(seed_.size());
  Monomial p = unit_monomial(seed_);
  for (size_t j = 0; j < coeffs.size() && static_cast<long>(j) * wu < rel; ++j) {
    t.add_term(p.exp, p.coef * coeffs[j]);
    p = mono_mul(seed_, p, u);
  }
  long b = std::min<long>(rel, static_cast<long>(coeffs.size()) * wu);
  return {t, b};
}

bool SeriesRing::agree(const Series& x, const Series& y) const {
  long b = std::min(x.bound, y.bound);
  Series d = truncate({x.terms - y.terms, b}, b);
  return d.terms.is_zero();
}

std::vector<QCoeff> psi_coefficients(int d) {
  std::vector<QCoeff> c;
  QCoeff den(1);
  for (int n = 0; n <= d; ++n) {
    if (n > 0) den = den * (QCoeff(1) - QCoeff::q(2 * n));
    QCoeff num = QCoeff::q(n) * QCoeff(n % 2 ? -1 : 1);
    c.push_back(num / den);
  }
  return c;
}

}  // namespace qck
