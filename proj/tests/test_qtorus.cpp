#include <random>

#include "doctest.h"
#include "qck/qtorus.hpp"
#include "test_util.hpp"

using namespace qck;
using namespace qck_test;

TEST_SUITE("qtorus") {
  TEST_CASE("D_1 relations") {
    Seed s = figure_d1();
    Monomial x1 = generator(s, 0), x2 = generator(s, 1), x3 = generator(s, 2);
    TorusElement a = torus_mul(s, TorusElement(x1), TorusElement(x2));
    TorusElement b = torus_mul(s, TorusElement(x2), TorusElement(x1));
    CHECK(a == b.scaled(QCoeff::q(-2)));
    CHECK(torus_mul(s, TorusElement(x1), TorusElement(x3)) == torus_mul(s, TorusElement(x3), TorusElement(x1)));
    CHECK(torus_commutator_qpower(s, x1, x2) == -1);
    CHECK(torus_commutator_qpower(s, x1, x1) == 0);
    // bilinearity against pairwise swaps
    Monomial x12 = mono_mul(s, x1, x2);
    CHECK(torus_commutator_qpower(s, x12, x3) ==
          torus_commutator_qpower(s, x1, x3) + torus_commutator_qpower(s, x2, x3));
    TorusElement one = TorusElement::scalar(s.size(), 1);
    CHECK(torus_mul(s, a, one) == a);
  }

  TEST_CASE("normal form soundness and associativity") {
    std::mt19937 rng(3);
    for (int t = 0; t < 40; ++t) {
      Seed s = random_seed(rng, 4 + t % 3);
      Monomial m1 = random_monomial(rng, s), m2 = random_monomial(rng, s);
      TorusElement ab = torus_mul(s, TorusElement(m1), TorusElement(m2));
      TorusElement ba = torus_mul(s, TorusElement(m2), TorusElement(m1));
      CHECK(ab == ba.scaled(QCoeff::q(commutator2(s, m1.exp, m2.exp))));
      TorusElement x = random_element(rng, s, 3), y = random_element(rng, s, 3), z = random_element(rng, s, 2);
      CHECK(torus_mul(s, torus_mul(s, x, y), z) == torus_mul(s, x, torus_mul(s, y, z)));
      Monomial inv = mono_inverse(s, m1);
      CHECK(mono_mul(s, m1, inv) == unit_monomial(s));
      CHECK(mono_mul(s, inv, m1) == unit_monomial(s));
    }
  }

  TEST_CASE("mismatched seed") {
    Seed s = figure_d1();
    TorusElement bad(Monomial{Exp(3, 0), QCoeff(1)});
    CHECK_THROWS(torus_mul(s, bad, bad));
  }

  TEST_CASE("binomial transport example") {
    // X Y = q^2 Y X
    Seed s = Seed::empty(2);
    s.eps2[1][0] = 2;
    s.eps2[0][1] = -2;
    Monomial X = generator(s, 0), Y = generator(s, 1);
    REQUIRE(torus_commutator_qpower(s, X, Y) == 1);
    FracElement lhs = frac_mul(s, frac_binomial_inverse(s, binomial(1, X.exp)), FracElement(Y));
    FracElement rhs(TorusElement(Y), {binomial(3, X.exp)});
    CHECK(frac_eq(s, lhs, rhs));
    CHECK(lhs.dens.size() == 1);
    CHECK(lhs.dens[0].shift() == 3);
    // clearing denominators: (1+qX) Y = Y (1+q^3 X)
    CHECK(torus_mul(s, binomial_poly(s, binomial(1, X.exp)), TorusElement(Y)) ==
          torus_mul(s, TorusElement(Y), binomial_poly(s, binomial(3, X.exp))));
    CHECK_FALSE(frac_eq(s, lhs, FracElement(TorusElement(Y), {binomial(1, X.exp)})));
  }

  TEST_CASE("cancellation and identity") {
    Seed s = Seed::empty(2);
    s.eps2[1][0] = 2;
    s.eps2[0][1] = -2;
    Monomial X = generator(s, 0);
    FracElement a(TorusElement(X), {binomial(1, X.exp)});
    FracElement b(binomial_poly(s, binomial(1, X.exp)));
    FracElement p = frac_mul(s, a, b);
    CHECK(p.dens.empty());
    CHECK(p.num == TorusElement(X));
    CHECK(frac_eq(s, frac_mul(s, a, FracElement(TorusElement::scalar(2, 1))), a));
    CHECK(frac_eq(s, a, a));
  }

  TEST_CASE("denominator transport property") {
    std::mt19937 rng(9);
    for (int t = 0; t < 30; ++t) {
      Seed s = random_seed(rng, 3);
      Monomial m = random_monomial(rng, s);
      Exp M = random_monomial(rng, s).exp;
      if (is_zero_exp(M)) continue;
      QBinomialInverse b = binomial(2 * (t % 3) + 1, M);
      FracElement lhs = frac_mul(s, frac_binomial_inverse(s, b), FracElement(m));
      FracElement rhs(TorusElement(m), {transport(s, b, m.exp)});
      CHECK(frac_eq(s, lhs, rhs));
    }
  }

  TEST_CASE("fraction associativity") {
    std::mt19937 rng(21);
    for (int t = 0; t < 20; ++t) {
      Seed s = random_seed(rng, 3);
      Exp M = generator(s, t % 3).exp;
      auto frac = [&]() {
        return FracElement(random_element(rng, s, 2), {binomial(1 + 2 * (t % 2), M)});
      };
      FracElement x = frac(), y = frac(), z = frac();
      CHECK(frac_eq(s, frac_mul(s, frac_mul(s, x, y), z), frac_mul(s, x, frac_mul(s, y, z))));
    }
  }

  TEST_CASE("right division") {
    std::mt19937 rng(33);
    for (int t = 0; t < 30; ++t) {
      Seed s = random_seed(rng, 3);
      TorusElement x = random_element(rng, s, 3);
      Exp M = random_monomial(rng, s).exp;
      if (is_zero_exp(M)) continue;
      QBinomialInverse b = binomial(1, M);
      TorusElement prod = torus_mul(s, x, binomial_poly(s, b)), quo;
      REQUIRE(right_divide(s, prod, b, quo));
      CHECK(quo == x);
      TorusElement plus = prod + TorusElement(generator(s, 0, 7));
      CHECK_FALSE(right_divide(s, plus, b, quo));
    }
  }
}
