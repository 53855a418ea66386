#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qck/mutate.hpp"
#include "qck/quiver.hpp"
#include "qck/qtorus.hpp"

namespace qck {

struct CartanData {
  int n = 0;
  std::vector<std::vector<int>> a;
  std::vector<std::vector<mpq_class>> c;
  int theta(int i) const { return n + 1 - i; }
};

CartanData cartan_data(int n);

enum class Gen { E, F, K, Kp };

// Positive root alpha_i + ... + alpha_j, 1-based.
struct Root {
  int i = 0, j = 0;
  friend bool operator<(const Root& x, const Root& y) { return x.i != y.i ? x.i < y.i : x.j < y.j; }
  friend bool operator==(const Root& x, const Root& y) { return x.i == y.i && x.j == y.j; }
};

// Normal order a_1 < a_1+a_2 < ... < a_1+..+a_n < a_2 < ... < a_n.
std::vector<Root> positive_roots(int n);

// Images of the Drinfeld double generators in the torus of the D_n quiver.
class Embedding {
 public:
  explicit Embedding(int n);

  int n() const { return n_; }
  const DnQuiver& quiver() const { return d_; }
  const Seed& seed() const { return d_.seed; }
  int theta(int i) const { return n_ + 1 - i; }

  Monomial V(int i, int r) const { return generator(d_.seed, d_.v(i, r)); }
  Monomial L(int i, int r) const { return generator(d_.seed, d_.lam(i, r)); }
  // i q^{i+r} V_{i,-i} ... V_{i,r}
  Monomial w(int i, int r) const;
  // i q^{i+r} L_{i,-i} ... L_{i,r}
  Monomial m(int i, int r) const;

  TorusElement E(int i) const;
  TorusElement F(int i) const;
  TorusElement K(int i) const;
  TorusElement Kp(int i) const;
  TorusElement image(Gen g, int i) const;

  // Root vectors by the recursion; `split` picks the bracketing alpha_i..alpha_k | alpha_{k+1}..alpha_j (0 = i).
  TorusElement E_root(int i, int j, int split = 0) const;
  TorusElement F_root(int i, int j, int split = 0) const;
  TorusElement Fp_root(int i, int j, int split = 0) const;

  TorusElement mul(const TorusElement& x, const TorusElement& y) const { return torus_mul(d_.seed, x, y); }
  TorusElement mul(const std::vector<TorusElement>& xs) const { return torus_mul(d_.seed, xs); }
  TorusElement pow(const TorusElement& x, int k) const { return torus_pow(d_.seed, x, k); }

 private:
  int n_;
  DnQuiver d_;
  mutable std::map<std::tuple<int, int, int, int>, TorusElement> memo_;
};

struct RelationResult {
  std::string name;
  bool ok = false;
};

// Defining relations of the double, pushed through the embedding.
std::vector<RelationResult> check_relations(const Embedding& emb);

// Splits x by the sign of its q-commutation with ref: ref*x_pm = q^{pm1} x_pm*ref.
struct UpDown {
  TorusElement minus, plus;
};
UpDown decompose_updown(const Seed& s, const TorusElement& x, const Monomial& ref);

// F_{i,j}^{>= s} = sum over r >= s of F_{i,j-1}^{up r+} m_{theta(j)}^r.
TorusElement f_geq(const Embedding& emb, int i, int j, int s);

// Degree-lexicographic maximum; generators ranked X_1 > X_2 > ...
Monomial leading_term(const TorusElement& x);
bool deglex_less(const Exp& a, const Exp& b);

// Exponents in K_1..K_n K'_1..K'_n, E_alpha (normal order), F'_alpha (normal order).
struct PBWMonomial {
  int n = 0;
  std::vector<int> k, kp;
  std::vector<int> e, fp;  // indexed like positive_roots(n)

  explicit PBWMonomial(int rank = 0);
  friend bool operator==(const PBWMonomial& a, const PBWMonomial& b) {
    return a.k == b.k && a.kp == b.kp && a.e == b.e && a.fp == b.fp;
  }
  friend bool operator<(const PBWMonomial& a, const PBWMonomial& b) {
    return std::tie(a.k, a.kp, a.e, a.fp) < std::tie(b.k, b.kp, b.e, b.fp);
  }
};

TorusElement pbw_image(const Embedding& emb, const PBWMonomial& p);
// Inverts leading terms via the rhombus degree formulas on the two triangles.
PBWMonomial reconstruct_pbw(const Embedding& emb, const Monomial& lead);

// Rhombus (i, j) of the right (side = 1) or left (side = 0) triangle: north, south, east, west vertex or -1.
struct Rhombus {
  long north = -1, south = -1, east = -1, west = -1;
};
Rhombus rhombus(const Embedding& emb, int side, int i, int j);

// Tensor square D_n (x) D_n as one torus: vertices of the first factor, then of the second.
struct TensorSquare {
  Embedding emb;
  Seed seed;
  size_t half = 0;

  explicit TensorSquare(int n);
  Monomial left(const Monomial& x) const;
  Monomial right(const Monomial& y) const;
  TorusElement left(const TorusElement& x) const;
  TorusElement right(const TorusElement& y) const;
  // x (x) y
  TorusElement tensor(const TorusElement& x, const TorusElement& y) const;
  Monomial tensor(const Monomial& x, const Monomial& y) const;
  // Exchange of the factors.
  Monomial flip(const Monomial& x) const;
};

// Amalgamation Z_n -> D_n (x) D_n on generators.
MonomialMap z_embedding(const ZnQuiver& z, const TensorSquare& t);

TorusElement coproduct_image(const ZnQuiver& z, Gen g, int i);
// (iota (x) iota)(Delta(g)) in the tensor square.
TorusElement coproduct_hopf(const TensorSquare& t, Gen g, int i);

}  // namespace qck
