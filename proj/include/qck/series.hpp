#pragma once

#include <climits>
#include <vector>

#include "qck/qtorus.hpp"

namespace qck {

// Truncated series in a quantum torus, graded by a weight vector on exponents.
// Every term of weight below `bound` is exact; terms at or above it are dropped.
struct Series {
  TorusElement terms;
  long bound = kExact;

  static constexpr long kExact = LONG_MAX / 4;
  bool exact() const { return bound >= kExact; }
};

class SeriesRing {
 public:
  SeriesRing(Seed seed, std::vector<long> weight);

  const Seed& seed() const { return seed_; }
  long weight(const Exp& e) const;
  // Minimum weight of a nonzero term, or `bound` when no term is known to be nonzero.
  long valuation(const Series& x) const;

  Series exact(const TorusElement& x) const { return {x, Series::kExact}; }
  Series truncate(Series x, long bound) const;
  Series add(const Series& x, const Series& y) const;
  Series sub(const Series& x, const Series& y) const;
  Series mul(const Series& x, const Series& y) const;
  // Inverse of an element with a unique lowest-weight term; `rel` is the relative precision used for exact inputs.
  Series inverse(const Series& x, long rel) const;
  Series from_frac(const FracElement& x, long rel) const;
  // Sum over j of c_j u^j for the monomial u of positive weight, up to the given relative precision.
  Series power_series(const Monomial& u, const std::vector<QCoeff>& coeffs, long rel) const;

  // Terms of x - y below min(bound_x, bound_y) all vanish.
  bool agree(const Series& x, const Series& y) const;

 private:
  Seed seed_;
  std::vector<long> w_;
};

// Coefficients of the expansion of the quantum dilogarithm 1/((1+qu)(1+q^3u)...) in powers of u, up to degree d.
std::vector<QCoeff> psi_coefficients(int d);

}  // namespace qck
