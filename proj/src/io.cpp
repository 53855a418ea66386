#include "qck/io.hpp"

#include <json.hpp>

namespace qck {

using nlohmann::ordered_json;

namespace {

std::string rational(int twice) {
  mpq_class e(twice, 2);
  e.canonicalize();
  return e.get_str();
}

ordered_json monomial_json(const Monomial& m, const std::vector<size_t>& perm) {
  return {{"arg_exp", permute_exp(m.exp, perm)}, {"arg_coef", render(m.coef)}};
}

}  // namespace

std::string seed_json(const Seed& s) {
  ordered_json j;
  j["vertices"] = ordered_json::array();
  for (size_t v = 0; v < s.size(); ++v)
    j["vertices"].push_back({{"id", s.ids[v]}, {"frozen", static_cast<bool>(s.frozen[v])}, {"label", s.name(v)}});
  j["epsilon"] = ordered_json::array();
  for (const auto& row : s.eps2) {
    ordered_json r = ordered_json::array();
    for (int w : row) r.push_back(rational(w));
    j["epsilon"].push_back(r);
  }
  return j.dump(2);
}

std::string seed_dot(const Seed& s, const std::string& name) { return to_dot(s, name); }

std::vector<int> permute_exp(const Exp& e, const std::vector<size_t>& perm) {
  if (perm.empty()) return {e.begin(), e.end()};
  std::vector<int> out;
  for (size_t k : perm) out.push_back(e.at(k));
  return out;
}

std::string factors_json(const FactorSequence& f, const std::vector<size_t>& perm) {
  ordered_json j = ordered_json::array();
  for (size_t r = 0; r < f.size(); ++r) {
    ordered_json x = {{"pos", r}};
    x.update(monomial_json(f.factors[r].arg, perm));
    x["label"] = f.factors[r].label;
    j.push_back(x);
  }
  return j.dump(2);
}

std::string schedule_json(const ZnQuiver& z, const MutationSchedule& m, const ScheduleRun& run,
                          const std::vector<size_t>& perm) {
  std::vector<size_t> rank(z.seed.size());
  for (size_t k = 0; k < rank.size(); ++k) rank[perm.empty() ? k : perm[k]] = k;
  auto id = [&](size_t v) { return rank[v] + 1; };
  ordered_json j;
  j["n"] = z.n;
  j["length"] = m.length();
  j["flips"] = ordered_json::array();
  for (const auto& fl : m.flips) {
    ordered_json steps = ordered_json::array();
    for (const auto& st : fl) {
      ordered_json ids = ordered_json::array();
      for (size_t v : st) ids.push_back(id(v));
      steps.push_back(ids);
    }
    j["flips"].push_back(steps);
  }
  j["steps"] = ordered_json::array();
  for (size_t v : m.steps()) j["steps"].push_back(id(v));
  j["phi_args"] = ordered_json::array();
  for (size_t r = 0; r < run.args.size(); ++r) {
    ordered_json x = {{"pos", r}};
    x.update(monomial_json(run.args[r].arg, perm));
    j["phi_args"].push_back(x);
  }
  return j.dump(2);
}

}  // namespace qck
