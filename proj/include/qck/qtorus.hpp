#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "qck/coeff.hpp"

namespace qck {

using Exp = std::vector<int>;

// Exchange matrix is stored doubled (eps2 = 2*eps) so halves stay integral.
struct Seed {
  std::vector<int> ids;
  std::vector<bool> frozen;
  std::vector<std::vector<int>> eps2;
  std::vector<std::string> labels;

  static Seed empty(size_t n);
  size_t size() const { return ids.size(); }
  mpq_class eps(size_t i, size_t j) const {
    mpq_class e(eps2[i][j], 2);
    e.canonicalize();
    return e;
  }
  size_t index_of(int id) const;
  std::string name(size_t i) const;
  void validate() const;
  bool same_shape(const Seed& o) const { return ids == o.ids && frozen == o.frozen && eps2 == o.eps2; }
  friend bool operator==(const Seed& a, const Seed& b) { return a.same_shape(b); }
};

// Reorders vertices: new vertex k is old vertex order[k]; ids renumbered 1..n.
Seed reorder_seed(const Seed& s, const std::vector<size_t>& order);

struct Monomial {
  Exp exp;
  QCoeff coef{1};

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp && a.coef == b.coef; }
};

Monomial generator(const Seed& s, size_t i, int power = 1);
Monomial unit_monomial(const Seed& s);
// 2c where m1*m2 = q^{2c} m2*m1.
int commutator2(const Seed& s, const Exp& a, const Exp& b);
mpq_class torus_commutator_qpower(const Seed& s, const Monomial& m1, const Monomial& m2);
// X^a X^b = q^{ordering_shift(a,b)} X^{a+b} for normal-form monomials.
int ordering_shift(const Seed& s, const Exp& a, const Exp& b);
Monomial mono_mul(const Seed& s, const Monomial& a, const Monomial& b);
Monomial mono_inverse(const Seed& s, const Monomial& a);
Monomial mono_pow(const Seed& s, const Monomial& a, int k);
// Ordered product of generator powers, e.g. {{0,1},{2,-1}} = X_1 X_3^{-1}.
Monomial mono_word(const Seed& s, const std::vector<std::pair<size_t, int>>& word, const QCoeff& c = 1);
bool is_zero_exp(const Exp& e);

class TorusElement {
 public:
  TorusElement() = default;
  explicit TorusElement(size_t dim) : dim_(dim) {}
  TorusElement(const Monomial& m);
  static TorusElement scalar(size_t dim, const QCoeff& c);

  size_t dim() const { return dim_; }
  const std::map<Exp, QCoeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  std::vector<Monomial> monomials() const;
  QCoeff coeff(const Exp& e) const;

  void add_term(const Exp& e, const QCoeff& c);
  TorusElement scaled(const QCoeff& c) const;
  TorusElement operator-() const { return scaled(QCoeff(-1)); }
  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  friend bool operator==(const TorusElement& a, const TorusElement& b) { return a.terms_ == b.terms_; }

 private:
  size_t dim_ = 0;
  std::map<Exp, QCoeff> terms_;
};

TorusElement torus_mul(const Seed& s, const TorusElement& x, const TorusElement& y);
TorusElement torus_mul(const Seed& s, const std::vector<TorusElement>& factors);
TorusElement torus_pow(const Seed& s, const TorusElement& x, int k);
// x*y - c*y*x
TorusElement q_commutator(const Seed& s, const TorusElement& x, const TorusElement& y, const QCoeff& c);

std::string render_monomial(const Seed& s, const Monomial& m);
std::string render(const Seed& s, const TorusElement& x);

// (1 + coef * X^mono)^{-1}; coef is q^shift for every binomial produced by mutation.
struct QBinomialInverse {
  QCoeff coef;
  Exp mono;

  int shift() const;
  friend bool operator==(const QBinomialInverse& a, const QBinomialInverse& b) {
    return a.mono == b.mono && a.coef == b.coef;
  }
};

QBinomialInverse binomial(int shift, const Exp& mono);
TorusElement binomial_poly(const Seed& s, const QBinomialInverse& b);
// b^{-1} X^e = X^e b'^{-1}
QBinomialInverse transport(const Seed& s, const QBinomialInverse& b, const Exp& e);

// num * dens[0]^{-1} * dens[1]^{-1} * ...
struct FracElement {
  TorusElement num;
  std::vector<QBinomialInverse> dens;

  FracElement() = default;
  FracElement(TorusElement n) : num(std::move(n)) {}
  FracElement(TorusElement n, std::vector<QBinomialInverse> d) : num(std::move(n)), dens(std::move(d)) {}
  FracElement(const Monomial& m) : num(m) {}
};

// Q with Q*b = x, if it exists.
bool right_divide(const Seed& s, const TorusElement& x, const QBinomialInverse& b, TorusElement& quotient);
FracElement frac_normalize(const Seed& s, FracElement x);
FracElement frac_add(const Seed& s, const FracElement& x, const FracElement& y);
FracElement frac_neg(const FracElement& x);
FracElement frac_mul(const Seed& s, const FracElement& x, const FracElement& y);
FracElement frac_binomial_inverse(const Seed& s, const QBinomialInverse& b);
bool frac_eq(const Seed& s, const FracElement& x, const FracElement& y);
std::string render(const Seed& s, const FracElement& x);

}  // namespace qck
