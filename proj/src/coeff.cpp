#include "qck/coeff.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace qck {

GaussianRational GaussianRational::inverse() const {
  mpq_class n = re * re + im * im;
  if (sgn(n) == 0) throw std::domain_error("division by zero");
  return {re / n, -im / n};
}

std::string render(const GaussianRational& g) {
  if (sgn(g.im) == 0) return g.re.get_str();
  auto imag = [](const mpq_class& v) -> std::string {
    if (v == 1) return "i";
    if (v == -1) return "-i";
    return v.get_str() + "*i";
  };
  if (sgn(g.re) == 0) return imag(g.im);
  std::string s = "(" + g.re.get_str();
  if (sgn(g.im) > 0) s += "+" + imag(g.im);
  else s += "-" + imag(-g.im);
  return s + ")";
}

// ---------------------------------------------------------------- QLaurent

QLaurent::QLaurent(long c) {
  if (c != 0) terms_.emplace_back(0, GaussianRational(c));
}

QLaurent::QLaurent(const GaussianRational& c, int k) {
  if (!c.is_zero()) terms_.emplace_back(k, c);
}

QLaurent QLaurent::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  QLaurent r;
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first) r.terms_.back().second += t.second;
    else r.terms_.push_back(std::move(t));
    if (r.terms_.back().second.is_zero()) r.terms_.pop_back();
  }
  return r;
}

GaussianRational QLaurent::coeff(int k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == k) return it->second;
  return {};
}

QLaurent QLaurent::shifted(int k) const {
  QLaurent r = *this;
  for (auto& t : r.terms_) t.first += k;
  return r;
}

QLaurent QLaurent::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return {};
  QLaurent r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

QLaurent QLaurent::operator-() const {
  QLaurent r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

QLaurent operator+(const QLaurent& a, const QLaurent& b) {
  QLaurent r;
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
      r.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->first < i->first) {
      r.terms_.push_back(*j++);
    } else {
      GaussianRational s = i->second + j->second;
      if (!s.is_zero()) r.terms_.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  return r;
}

QLaurent operator-(const QLaurent& a, const QLaurent& b) { return a + (-b); }

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1) return b.scaled(a.terms_[0].second).shifted(a.terms_[0].first);
  if (b.terms_.size() == 1) return a.scaled(b.terms_[0].second).shifted(b.terms_[0].first);
  int lo = a.min_exp() + b.min_exp();
  int hi = a.max_exp() + b.max_exp();
  std::vector<GaussianRational> dense(static_cast<size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) dense[static_cast<size_t>(ea + eb - lo)] += ca * cb;
  QLaurent r;
  for (size_t k = 0; k < dense.size(); ++k)
    if (!dense[k].is_zero()) r.terms_.emplace_back(lo + static_cast<int>(k), std::move(dense[k]));
  return r;
}

std::string render(const QLaurent& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    GaussianRational c = it->second;
    int k = it->first;
    bool neg = (sgn(c.im) == 0 && sgn(c.re) < 0) || (sgn(c.re) == 0 && sgn(c.im) < 0);
    if (neg) c = -c;
    std::string body;
    if (k == 0) {
      body = render(c);
    } else {
      std::string qp = k == 1 ? "q" : "q^" + std::to_string(k);
      body = c.is_one() ? qp : render(c) + "*" + qp;
    }
    if (first) out += (neg ? "-" : "") + body;
    else out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------- polynomials

namespace {

using Poly = std::vector<GaussianRational>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Returns quotient, leaves remainder in a.
Poly poly_divmod(Poly& a, const Poly& b) {
  trim(a);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() < b.size()) return {};
  Poly quo(a.size() - b.size() + 1);
  GaussianRational lead_inv = b.back().inverse();
  for (size_t k = a.size(); k-- >= b.size();) {
    if (a[k].is_zero()) continue;
    GaussianRational f = a[k] * lead_inv;
    size_t shift = k - (b.size() - 1);
    quo[shift] = f;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    if (k == 0) break;
  }
  trim(a);
  return quo;
}

// p = q^{shift} * poly with poly(0) != 0
Poly to_poly(const QLaurent& p, int& shift) {
  shift = p.min_exp();
  Poly r(static_cast<size_t>(p.max_exp() - shift + 1));
  for (const auto& [e, c] : p.terms()) r[static_cast<size_t>(e - shift)] = c;
  return r;
}

QLaurent from_poly(const Poly& p, int shift) {
  std::vector<QLaurent::Term> t;
  for (size_t k = 0; k < p.size(); ++k)
    if (!p[k].is_zero()) t.emplace_back(static_cast<int>(k) + shift, p[k]);
  return QLaurent::from_terms(std::move(t));
}

}  // namespace

std::vector<GaussianRational> poly_gcd(std::vector<GaussianRational> a, std::vector<GaussianRational> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    poly_divmod(a, b);
    std::swap(a, b);
  }
  if (a.empty()) return a;
  GaussianRational inv = a.back().inverse();
  for (auto& c : a) c *= inv;
  return a;
}

// ---------------------------------------------------------------- QCoeff

QCoeff::QCoeff(QLaurent num, QLaurent den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  if (num.is_zero()) {
    num_ = QLaurent();
    den_ = QLaurent(1);
    return;
  }
  if (den.is_monomial()) {
    const auto& [e, c] = den.terms()[0];
    num_ = num.scaled(c.inverse()).shifted(-e);
    den_ = QLaurent(1);
    return;
  }
  int sn = 0, sd = 0;
  Poly pn = to_poly(num, sn);
  Poly pd = to_poly(den, sd);
  Poly g = poly_gcd(pn, pd);
  if (g.size() > 1) {
    pn = poly_divmod(pn, g);
    pd = poly_divmod(pd, g);
  }
  GaussianRational lead_inv = pd.back().inverse();
  for (auto& c : pn) c *= lead_inv;
  for (auto& c : pd) c *= lead_inv;
  num_ = from_poly(pn, sn - sd);
  den_ = from_poly(pd, 0);
}

QCoeff QCoeff::shifted(int k) const { return QCoeff(num_.shifted(k), den_, Raw{}); }

QCoeff QCoeff::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return QCoeff(den_, num_);
}

QCoeff QCoeff::operator-() const { return QCoeff(-num_, den_, Raw{}); }

QCoeff operator+(const QCoeff& a, const QCoeff& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return QCoeff(a.num_ + b.num_, QLaurent(1), QCoeff::Raw{});
    return QCoeff(a.num_ + b.num_, a.den_);
  }
  return QCoeff(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QCoeff operator-(const QCoeff& a, const QCoeff& b) { return a + (-b); }

QCoeff operator*(const QCoeff& a, const QCoeff& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_one() && b.den_.is_one()) return QCoeff(a.num_ * b.num_, QLaurent(1), QCoeff::Raw{});
  return QCoeff(a.num_ * b.num_, a.den_ * b.den_);
}

QCoeff operator/(const QCoeff& a, const QCoeff& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return QCoeff(a.num_ * b.den_, a.den_ * b.num_);
}

QCoeff qc_add(const QCoeff& a, const QCoeff& b) { return a + b; }
QCoeff qc_neg(const QCoeff& a) { return -a; }
QCoeff qc_mul(const QCoeff& a, const QCoeff& b) { return a * b; }
QCoeff qc_divexact(const QCoeff& a, const QCoeff& b) { return a / b; }

std::string render(const QCoeff& c) {
  if (c.den().is_one()) return render(c.num());
  return "(" + render(c.num()) + ")/(" + render(c.den()) + ")";
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  QCoeff coeff() {
    skip();
    size_t start = pos_;
    if (peek() == '(') {
      size_t close = matching(pos_);
      size_t after = close + 1;
      while (after < s_.size() && std::isspace(static_cast<unsigned char>(s_[after]))) ++after;
      if (after < s_.size() && s_[after] == '/') {
        Parser num(s_.substr(pos_ + 1, close - pos_ - 1));
        QLaurent n = num.laurent_all();
        pos_ = after + 1;
        skip();
        if (peek() != '(') fail("expected '(' after '/'");
        size_t close2 = matching(pos_);
        Parser den(s_.substr(pos_ + 1, close2 - pos_ - 1));
        QLaurent d = den.laurent_all();
        pos_ = close2 + 1;
        skip();
        if (pos_ != s_.size()) fail("trailing characters");
        return QCoeff(n, d);
      }
    }
    pos_ = start;
    return QCoeff(laurent_all());
  }

  QLaurent laurent_all() {
    QLaurent r = laurent();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return r;
  }

 private:
  std::string s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse coefficient '" + s_ + "': " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  size_t matching(size_t open) const {
    int depth = 0;
    for (size_t k = open; k < s_.size(); ++k) {
      if (s_[k] == '(') ++depth;
      if (s_[k] == ')' && --depth == 0) return k;
    }
    fail("unbalanced parenthesis");
  }

  QLaurent laurent() {
    std::vector<QLaurent::Term> terms;
    bool first = true;
    for (;;) {
      char c = peek();
      bool neg = false;
      if (c == '+' || c == '-') {
        neg = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      if (c == '\0') fail("unexpected end");
      auto [k, g] = term();
      terms.emplace_back(k, neg ? -g : g);
      first = false;
    }
    return QLaurent::from_terms(std::move(terms));
  }

  mpq_class rational() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
        std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    if (start == pos_) fail("expected number");
    mpq_class v(s_.substr(start, pos_ - start));
    v.canonicalize();
    return v;
  }

  // rational | i | rational*i
  GaussianRational real_or_imag() {
    if (peek() == 'i') {
      ++pos_;
      return GaussianRational::I();
    }
    mpq_class v = rational();
    size_t save = pos_;
    if (peek() == '*') {
      ++pos_;
      if (peek() == 'i') {
        ++pos_;
        return {0, v};
      }
    }
    pos_ = save;
    return {v, 0};
  }

  GaussianRational complex_scalar() {
    ++pos_;  // '('
    GaussianRational acc;
    bool first = true;
    while (peek() != ')') {
      bool neg = false;
      char c = peek();
      if (c == '+' || c == '-') {
        neg = c == '-';
        ++pos_;
      } else if (!first) {
        fail("expected sign");
      }
      GaussianRational part = real_or_imag();
      acc += neg ? -part : part;
      first = false;
      if (peek() == '\0') fail("unbalanced parenthesis");
    }
    ++pos_;
    return acc;
  }

  int qpower() {
    ++pos_;  // 'q'
    if (peek() != '^') return 1;
    ++pos_;
    skip();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    int k = std::stoi(s_.substr(start, pos_ - start));
    return neg ? -k : k;
  }

  std::pair<int, GaussianRational> term() {
    char c = peek();
    if (c == 'q') return {qpower(), GaussianRational(1)};
    GaussianRational g = c == '(' ? complex_scalar() : real_or_imag();
    size_t save = pos_;
    if (peek() == '*') {
      ++pos_;
      if (peek() == 'q') return {qpower(), g};
    }
    pos_ = save;
    return {0, g};
  }
};

}  // namespace

QCoeff parse_qcoeff(const std::string& text) {
  Parser p(text);
  return p.coeff();
}

}  // namespace qck
