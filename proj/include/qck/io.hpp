#pragma once

#include <string>
#include <vector>

#include "qck/mutate.hpp"
#include "qck/quiver.hpp"
#include "qck/rmatrix.hpp"

namespace qck {

// {"vertices":[{"id","frozen","label"}],"epsilon":[["p/q",...],...]}
std::string seed_json(const Seed& s);
std::string seed_dot(const Seed& s, const std::string& name);

// Output position k of every exponent vector reads internal index perm[k]; empty perm keeps the order.
std::vector<int> permute_exp(const Exp& e, const std::vector<size_t>& perm);

// [{"pos","arg_exp","arg_coef","label"}]
std::string factors_json(const FactorSequence& f, const std::vector<size_t>& perm = {});

// Steps grouped by flip and rectangle-step, vertex ids of z.seed, and the Phi arguments over Z_n.
std::string schedule_json(const ZnQuiver& z, const MutationSchedule& m, const ScheduleRun& run,
                          const std::vector<size_t>& perm = {});

}  // namespace qck
