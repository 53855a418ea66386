#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <thread>

#include "qck/io.hpp"
#include "qck/qgroup.hpp"
#include "qck/rmatrix.hpp"

using namespace qck;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2, kBounds = 3, kTimeout = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BoundsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string kind;
  int n = 0, m = 0, truncate = -1;
  std::string format = "json", labels = "internal", out;
  double timeout = 0;
};

int max_rank(bool lemk) {
  if (const char* e = std::getenv("QCK_MAX_N")) return std::atoi(e);
  return lemk ? 2 : 3;
}

void check_rank(int n, bool lemk = false) {
  if (n < 1) throw UsageError("--n must be at least 1");
  if (n > max_rank(lemk))
    throw BoundsError("rank " + std::to_string(n) + " exceeds the configured maximum " + std::to_string(max_rank(lemk)));
}

bool paper_labels(const Options& o) {
  if (o.labels != "paper") return false;
  if (o.n > 2) throw UsageError("figure numbering exists for n <= 2 only");
  return true;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text << "\n";
}

std::vector<size_t> tensor_perm(const DnQuiver& d) {
  auto fo = figure_order_dn(d);
  std::vector<size_t> p = fo;
  for (size_t v : fo) p.push_back(v + d.seed.size());
  return p;
}

int cmd_build(const Options& o) {
  Seed s;
  std::string name = o.kind;
  if (o.kind == "triangle") {
    if (o.m < 1) throw UsageError("--m must be at least 1");
    s = build_triangle(o.m).seed;
    name += std::to_string(o.m);
  } else {
    check_rank(o.n);
    name += std::to_string(o.n);
    if (o.kind == "dn") {
      DnQuiver d = build_dn(o.n);
      s = paper_labels(o) ? reorder_seed(d.seed, figure_order_dn(d)) : d.seed;
    } else {
      ZnQuiver z = build_zn(o.n);
      s = paper_labels(o) ? reorder_seed(z.seed, figure_order_zn(z)) : z.seed;
    }
  }
  if (o.format == "dot") emit(o, seed_dot(s, name));
  else emit(o, seed_json(s));
  return kOk;
}

struct Check {
  std::string name;
  std::function<bool()> run;
};

std::vector<Check> suite_checks(const std::string& suite, int n, int truncate, std::vector<std::string>& notes) {
  std::vector<Check> c;
  if (suite == "embedding" || suite == "all")
    c.push_back({"embedding relations n=" + std::to_string(n), [n] {
                   for (const auto& r : check_relations(Embedding(n)))
                     if (!r.ok) return false;
                   return true;
                 }});
  if (suite == "lemK" || (suite == "all" && n <= max_rank(true)))
    c.push_back({"lemK n=" + std::to_string(n), [n] { return verify_lemK(build_zn(n)); }});
  if (suite == "rsequences" || suite == "all") {
    c.push_back({"rsequences lengths", [n] {
                   TensorSquare t(n);
                   ZnQuiver z = build_zn(n);
                   size_t N = rfactor_length(n);
                   return gen_rfact1(t).size() == N && gen_rfact2(t).size() == N && phi_args_from_twist(z, t).size() == N;
                 }});
    c.push_back({"rsequences P(R-fact1) ~ R-fact2", [n] {
                   TensorSquare t(n);
                   return equivalent_mod_commuting_swaps(t.seed, flip(t, gen_rfact1(t)), gen_rfact2(t));
                 }});
    c.push_back({"rsequences Phi ~ R-fact2", [n] {
                   TensorSquare t(n);
                   return equivalent_mod_commuting_swaps(t.seed, phi_args_from_twist(build_zn(n), t), gen_rfact2(t));
                 }});
    c.push_back({"rsequences P(R-fact1) ~ Phi", [n] {
                   TensorSquare t(n);
                   return equivalent_mod_commuting_swaps(t.seed, flip(t, gen_rfact1(t)), phi_args_from_twist(build_zn(n), t));
                 }});
    c.push_back({"rsequences triangular expansion == R-fact1", [n] {
                   TensorSquare t(n);
                   auto a = gen_rfactor_triangular(t), b = gen_rfact1(t);
                   if (a.size() != b.size()) return false;
                   for (size_t k = 0; k < a.size(); ++k)
                     if (!(a.factors[k].arg == b.factors[k].arg)) return false;
                   return true;
                 }});
  }
  if (suite == "pentagon" || suite == "all") {
    int d = truncate < 0 ? 6 : truncate;
    auto ids = verify_pentagon(d);
    for (const auto& r : ids) {
      if (r.name.find("printed") != std::string::npos) {
        notes.push_back(r.name + (r.holds ? " holds" : " does not hold") + " to degree " + std::to_string(d));
        continue;
      }
      bool h = r.holds;
      c.push_back({r.name + " D=" + std::to_string(d), [h] { return h; }});
    }
    int dl = truncate < 0 ? 4 : truncate;
    for (int j = 1; j < n; ++j)
      for (int i = 1; i <= j; ++i)
        for (int s = -(n - j); s < n - j; ++s)
          c.push_back({"pent lemma (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(s) +
                           ") D=" + std::to_string(dl),
                       [=] { return verify_pent_lemma_instance(TensorSquare(n), i, j, s, dl); }});
  }
  return c;
}

int cmd_verify(const Options& o) {
  static const std::vector<std::string> suites = {"embedding", "lemK", "rsequences", "pentagon", "all"};
  if (std::find(suites.begin(), suites.end(), o.kind) == suites.end()) throw UsageError("unknown suite " + o.kind);
  check_rank(o.n, o.kind == "lemK");
  std::vector<std::string> notes;
  auto checks = suite_checks(o.kind, o.n, o.truncate, notes);
  nlohmann::ordered_json report = {{"command", "verify " + o.kind}, {"n", o.n}, {"checks", nlohmann::ordered_json::array()}};
  bool all = true;
  for (const auto& c : checks) {
    auto t0 = std::chrono::steady_clock::now();
    auto fut = std::async(std::launch::async, c.run);
    if (o.timeout > 0 && fut.wait_for(std::chrono::duration<double>(o.timeout)) == std::future_status::timeout) {
      std::cout << "TIMEOUT " << c.name << std::endl;
      std::_Exit(kTimeout);
    }
    bool ok = fut.get();
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && ok;
    std::cout << (ok ? "PASS " : "FAIL ") << c.name << "\n";
    report["checks"].push_back({{"name", c.name}, {"status", ok ? "pass" : "fail"}, {"elapsed", dt}});
  }
  for (const auto& n : notes) std::cout << "note: " << n << "\n";
  report["notes"] = notes;
  if (!o.out.empty()) {
    report["artifacts"] = {o.out};
    std::ofstream(o.out) << report.dump(2) << "\n";
  }
  return all ? kOk : kFail;
}

int cmd_schedule(const Options& o) {
  check_rank(o.n);
  ZnQuiver z = build_zn(o.n);
  MutationSchedule m = half_dehn_schedule(z);
  ScheduleRun run = run_schedule(z.seed, m);
  emit(o, schedule_json(z, m, run, paper_labels(o) ? figure_order_zn(z) : std::vector<size_t>{}));
  return kOk;
}

int cmd_factors(const Options& o) {
  check_rank(o.n);
  TensorSquare t(o.n);
  FactorSequence f;
  if (o.kind == "rfact1") f = gen_rfact1(t);
  else if (o.kind == "rfact2") f = gen_rfact2(t);
  else if (o.kind == "triangular") f = gen_rfactor_triangular(t);
  else if (o.kind == "phi") f = phi_args_from_twist(build_zn(o.n), t);
  else throw UsageError("unknown factor sequence " + o.kind);
  emit(o, factors_json(f, paper_labels(o) ? tensor_perm(t.emb.quiver()) : std::vector<size_t>{}));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum cluster toolkit"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* s) {
    s->add_option("--n", o.n, "rank");
    s->add_option("--seed-labels", o.labels, "vertex numbering")->check(CLI::IsMember({"paper", "internal"}));
    s->add_option("--out", o.out, "output file");
  };
  auto* build = app.add_subcommand("build", "export a quiver");
  build->add_option("kind", o.kind)->required()->check(CLI::IsMember({"triangle", "dn", "zn"}));
  build->add_option("--m", o.m, "triangulation order");
  build->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot"}));
  common(build);
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", o.kind)->required();
  verify->add_option("--truncate", o.truncate, "series cutoff");
  verify->add_option("--timeout", o.timeout, "seconds per check");
  common(verify);
  auto* schedule = app.add_subcommand("schedule", "half Dehn twist schedule");
  common(schedule);
  auto* factors = app.add_subcommand("factors", "dilogarithm factor sequence");
  o.kind = "rfact1";
  factors->add_option("--kind", o.kind)->check(CLI::IsMember({"rfact1", "rfact2", "triangular", "phi"}));
  common(factors);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    if (build->parsed()) return cmd_build(o);
    if (verify->parsed()) return cmd_verify(o);
    if (schedule->parsed()) return cmd_schedule(o);
    return cmd_factors(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const BoundsError& e) {
    std::cerr << "bounds error: " << e.what() << "\n";
    return kBounds;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
