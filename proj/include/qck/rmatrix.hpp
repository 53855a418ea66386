#pragma once

#include <string>
#include <vector>

#include "qck/mutate.hpp"
#include "qck/qgroup.hpp"
#include "qck/quiver.hpp"
#include "qck/series.hpp"

namespace qck {

// One factor psi(arg) = Psi^q(-arg); arg is a monomial of the tensor-square torus.
struct Factor {
  Monomial arg;
  std::string label;
};

enum class Provenance { RFactor, RFact1, RFact2, Phi };
std::string provenance_name(Provenance p);

struct FactorSequence {
  Provenance provenance = Provenance::RFact1;
  std::vector<Factor> factors;
  size_t size() const { return factors.size(); }
};

// 4 * C(n+2, 3)
size_t rfactor_length(int n);

// P o Ad_K on the generators of Z_n.
MonomialMap cartan_flip_map(const ZnQuiver& z);

// The LambdaV_i-path (top row) and the images M_N assigns to it (bottom row), as Z_n monomials.
struct PathAction {
  std::vector<size_t> path;
  std::vector<Monomial> images;
};
PathAction mn_path_action(const ZnQuiver& z, int i);

// P o Ad_K == M_N o sigma on every generator; the second form takes an explicit vertex permutation.
bool verify_lemK(const ZnQuiver& z);
bool verify_lemK(const ZnQuiver& z, const std::vector<size_t>& sigma);

FactorSequence gen_rfact1(const TensorSquare& t);
// Arguments m (x) w, i.e. the factorization of P(R-bar).
FactorSequence gen_rfact2(const TensorSquare& t);

// Composite factor psi(E_a (x) m_b^c) of the triangular layout.
struct RowFactor {
  int a = 0, b = 0, c = 0;
  int row = 0;
};
std::vector<RowFactor> rfactor_rows(int n);
// Splits each psi(E_a (x) m) into psi(w_a^r (x) m), r ascending; throws std::domain_error
// unless every pair of summands q^{-2}-commutes in that order.
FactorSequence gen_rfactor_triangular(const TensorSquare& t);

// Arguments of Phi_N for the half Dehn twist, pushed into the tensor square, as psi-arguments.
FactorSequence phi_args_from_twist(const ZnQuiver& z, const TensorSquare& t);

// Exchanges the tensor factors of every argument.
FactorSequence flip(const TensorSquare& t, const FactorSequence& s);

// a turns into b by swapping adjacent factors with exactly commuting arguments.
// Throws std::invalid_argument on a length mismatch.
bool equivalent_mod_commuting_swaps(const Seed& s, const FactorSequence& a, const FactorSequence& b);

// Ordered runs of factors sharing the outer index k in R-fact1, with the pairs in a run that fail to commute.
struct BlockCommutation {
  int block = 0, k = 0;
  size_t pairs = 0, noncommuting = 0, noncommuting_distinct_j = 0;
};
std::vector<BlockCommutation> rfact1_block_commutation(const TensorSquare& t);

// Psi^q(x) expanded in powers of x, truncated at the ring bound.
Series psi_series(const SeriesRing& ring, const TorusElement& x, long bound);
// psi(x) = Psi^q(-x)
Series psi_minus_series(const SeriesRing& ring, const TorusElement& x, long bound);
Series series_product(const SeriesRing& ring, const std::vector<Series>& xs);

struct IdentityCheck {
  std::string name;
  bool holds = false;
};
// Addition law and pentagon, printed and corrected forms, in a two-variable torus with uv = q^{-2}vu, to degree D.
std::vector<IdentityCheck> verify_pentagon(int D);

// Both sides of the pent lemma for (i, j, s) over the tensor square, truncated at argument degree D.
// corrupt = 1 negates the first argument on the left; corrupt = 2 keeps F^{>=s} on the right.
bool verify_pent_lemma_instance(const TensorSquare& t, int i, int j, int s, int D, int corrupt = 0);

}  // namespace qck
