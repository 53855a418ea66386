#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace qck {

struct GaussianRational {
  mpq_class re{0};
  mpq_class im{0};

  GaussianRational() = default;
  GaussianRational(long r) : re(r) {}
  GaussianRational(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  static GaussianRational I() { return {0, 1}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_one() const { return re == 1 && sgn(im) == 0; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational conj() const { return {re, -im}; }
  GaussianRational inverse() const;

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  GaussianRational& operator+=(const GaussianRational& b) { re += b.re; im += b.im; return *this; }
  GaussianRational& operator-=(const GaussianRational& b) { re -= b.re; im -= b.im; return *this; }
  GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
};

std::string render(const GaussianRational& g);

// Laurent polynomial in q with Gaussian rational coefficients, sparse and sorted by exponent.
class QLaurent {
 public:
  using Term = std::pair<int, GaussianRational>;

  QLaurent() = default;
  QLaurent(long c);
  QLaurent(const GaussianRational& c, int k = 0);
  static QLaurent q(int k = 1) { return QLaurent(GaussianRational(1), k); }
  static QLaurent from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one(); }
  bool is_monomial() const { return terms_.size() == 1; }
  int min_exp() const { return terms_.front().first; }
  int max_exp() const { return terms_.back().first; }
  GaussianRational coeff(int k) const;

  QLaurent shifted(int k) const;
  QLaurent scaled(const GaussianRational& c) const;

  QLaurent operator-() const;
  friend QLaurent operator+(const QLaurent& a, const QLaurent& b);
  friend QLaurent operator-(const QLaurent& a, const QLaurent& b);
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term> terms_;
};

std::string render(const QLaurent& p);

// Element of Q(i)(q) kept as num/den with gcd removed, den monic with nonzero constant term.
class QCoeff {
 public:
  QCoeff() : num_(), den_(1) {}
  QCoeff(long c) : num_(c), den_(1) {}
  QCoeff(const GaussianRational& c) : num_(c), den_(1) {}
  QCoeff(QLaurent p) : num_(std::move(p)), den_(1) {}
  QCoeff(QLaurent num, QLaurent den);

  static QCoeff q(int k = 1) { return QCoeff(QLaurent::q(k)); }
  static QCoeff I() { return QCoeff(GaussianRational::I()); }

  const QLaurent& num() const { return num_; }
  const QLaurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  // True when the value is c*q^k for a Gaussian rational c.
  bool is_monomial() const { return den_.is_one() && num_.is_monomial(); }

  QCoeff shifted(int k) const;
  QCoeff inverse() const;

  QCoeff operator-() const;
  friend QCoeff operator+(const QCoeff& a, const QCoeff& b);
  friend QCoeff operator-(const QCoeff& a, const QCoeff& b);
  friend QCoeff operator*(const QCoeff& a, const QCoeff& b);
  friend QCoeff operator/(const QCoeff& a, const QCoeff& b);
  friend bool operator==(const QCoeff& a, const QCoeff& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  QCoeff& operator+=(const QCoeff& b) { return *this = *this + b; }
  QCoeff& operator-=(const QCoeff& b) { return *this = *this - b; }
  QCoeff& operator*=(const QCoeff& b) { return *this = *this * b; }

 private:
  struct Raw {};
  QCoeff(QLaurent num, QLaurent den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  QLaurent num_;
  QLaurent den_;
};

QCoeff qc_add(const QCoeff& a, const QCoeff& b);
QCoeff qc_neg(const QCoeff& a);
QCoeff qc_mul(const QCoeff& a, const QCoeff& b);
QCoeff qc_divexact(const QCoeff& a, const QCoeff& b);

std::string render(const QCoeff& c);
QCoeff parse_qcoeff(const std::string& text);

// Polynomial gcd over Q(i), exposed for tests. Coefficients indexed by degree.
std::vector<GaussianRational> poly_gcd(std::vector<GaussianRational> a, std::vector<GaussianRational> b);

}  // namespace qck
