#pragma once

#include <vector>

#include "qck/quiver.hpp"
#include "qck/qtorus.hpp"
#include "qck/series.hpp"

namespace qck {

Seed mutate_eps(const Seed& s, size_t k);

// Homomorphism of quantum tori sending source generator i to images[i] in the target torus.
struct MonomialMap {
  Seed source;
  Seed target;
  std::vector<Monomial> images;

  static MonomialMap identity(const Seed& s);
  Monomial apply(const Monomial& m) const;
  TorusElement apply(const TorusElement& x) const;
  // Images of generators satisfy the source relations in the target torus.
  bool is_homomorphism() const;
};

// f o g: first g, then f.
MonomialMap compose(const MonomialMap& f, const MonomialMap& g);
MonomialMap inverse(const MonomialMap& f);

// Maps generators of the mutated torus into fractions over the torus of s.
FracElement mutate_quantum_generator(const Seed& s, size_t k, size_t i, int power = 1);
FracElement mutate_quantum(const Seed& s, size_t k, const TorusElement& x);
// Denominators must be binomials in powers of X_k.
FracElement mutate_quantum(const Seed& s, size_t k, const FracElement& x);

// Monomial part: mutated torus -> torus of s.
MonomialMap mutation_prime(const Seed& s, size_t k);

struct DilogArgument {
  Monomial arg;
};

struct ScheduleRun {
  MonomialMap M;
  std::vector<DilogArgument> args;
  Seed final_seed;
};

ScheduleRun run_schedule(const Seed& s, const std::vector<size_t>& steps);
ScheduleRun run_schedule(const Seed& s, const MutationSchedule& sched);

// Conjugation by the quantum dilogarithm of u, applied to a Laurent polynomial.
FracElement ad_dilog(const Seed& s, const Monomial& u, const TorusElement& x);
// Conjugations applied right to left: Ad(args[0]) Ad(args[1]) ... (x), for x whose terms stay monomial-commuting.
FracElement ad_dilog_chain(const Seed& s, const std::vector<Monomial>& args, const TorusElement& x);

// Both sides of the mutation decomposition for generator j, expanded in `ring` (whose seed is s).
// lhs: step-by-step quantum mutation; rhs: Ad-chain over the dilogarithm arguments after M.
struct DecompositionCheck {
  Series lhs, rhs;
  bool agree = false;
  long margin = 0;  // bound minus valuation of the compared range
};
DecompositionCheck check_decomposition(const SeriesRing& ring, const std::vector<size_t>& steps, size_t j, long rel);

}  // namespace qck
