#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "dimjump/cli.hpp"
#include "dimjump/fuzz.hpp"
#include "dimjump/parse.hpp"
#include "oracle.hpp"

using namespace dimjump;

namespace {

std::string corpus_path(const std::string& name) { return std::string(DIMJUMP_CORPUS_DIR) + "/" + name; }

std::string slurp(const std::string& name) {
  std::ifstream in(corpus_path(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DispatchResult run(const std::string& command, const std::string& file, std::optional<Window> window = {},
                   std::optional<int> qmax = {}) {
  SessionConfig c;
  c.command = command;
  c.input_path = file;
  c.window = window;
  c.qmax = qmax;
  return dispatch(c, slurp(file));
}

struct Verdict {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

FPModule principal(const RingPtr& R, const std::vector<std::string>& gens) {
  std::vector<Polynomial> row;
  std::vector<int> tw;
  for (const auto& g : gens) {
    row.push_back(parse_polynomial(R, g));
    tw.push_back(0);
  }
  return FPModule::coker(GradedMatrix::from_rows(FreeModule{R, tw}, FreeModule{R, {0}}, {row}), Grading::ungraded);
}

Verdict example15() {
  Verdict v;
  auto r = run("check:all", "example15.task");
  v.require(r.status == kExitPass && r.reports.size() == 1, "example15 check did not pass");
  v.require(graded_baer_check(GradedRankOne::J, 8).pass, "graded Baer check for J fails");
  auto R = make_ring(Field::rationals(), {{"t", 1}});
  FPModule witness = principal(R, {"t - 1"});
  v.require(ext_against_injective_model(witness, InjectiveModel::J, 1) == VectorDim::finite(1),
            "Ext^1(k[t]/(t - 1), J) is not 1");
  v.require(ext_against_J_via_resolution(witness, 1) == VectorDim::finite(1), "resolution route disagrees on witness");
  std::size_t probes = 0;
  for (auto gens : std::vector<std::vector<std::string>>{
           {"t"}, {"t^2"}, {"t - 1"}, {"t + 1"}, {"t^2 - 1"}, {"t^3 - t"}, {"t^2 + 1"}, {"t^4 - t^2"}, {"0"}}) {
    FPModule M = principal(R, gens);
    for (int q = 2; q <= 4; ++q) {
      v.require(ext_against_injective_model(M, InjectiveModel::J, q).is_zero(), "Ext^q(probe, J) != 0 for q >= 2");
      v.require(ext_against_J_via_resolution(M, q).is_zero(), "resolution route: Ext^q(probe, J) != 0");
    }
    v.require(ext_against_injective_model(M, InjectiveModel::TorsionAtZero, 1).is_zero(), "Ext^1(probe, I0) != 0");
    ++probes;
  }
  v.detail = v.pass ? "Baer(J) n<=8 ok, Ext^1(k[t]/(t-1), J) = 1, " + std::to_string(probes) +
                          " probes vanish for q>=2 against J and q=1 against I0"
                    : v.detail;
  return v;
}

Verdict lemma3() {
  Verdict v;
  auto r = run("check:all", "lemma3.task");
  std::size_t torsion = 0, names_seen = 0;
  for (const auto& rep : r.reports) {
    v.require(rep.pass, rep.name + " failed: " + rep.counterexample);
    if (rep.evidence["t_regular"] == false) ++torsion;
    for (const char* need : {"lemma3:T1", "lemma3:T2", "lemma3:Mt", "lemma3:Ut"})
      if (rep.name == need) ++names_seen;
  }
  v.require(r.status == kExitPass, "status " + std::to_string(r.status));
  v.require(r.reports.size() >= 8, "fewer than 8 modules");
  v.require(names_seen == 4, "missing A~/(T), A~/(T^2) or Rees modules");
  v.require(torsion >= 2, "no T-torsion examples");
  if (v.pass)
    v.detail = std::to_string(r.reports.size()) + " modules, " + std::to_string(torsion) +
               " with T-torsion; support in {-1, 0}, H^-1 = 0 iff T-regular";
  return v;
}

Verdict lemma1() {
  Verdict v;
  std::size_t pairs = 0;
  for (const char* f : {"lemma1_kx.task", "lemma1_kxy.task", "lemma1_kxy12.task"}) {
    auto r = run("check:lemma1", f, Window{-12, 20}, 4);
    v.require(r.status == kExitPass, std::string(f) + ": " + r.diagnostics);
    v.require(!r.reports.empty(), std::string(f) + " has no pairs");
    for (const auto& rep : r.reports) v.require(rep.pass, rep.name + ": " + rep.counterexample);
    pairs += r.reports.size();
  }
  v.require(pairs >= 6, "fewer than 6 pairs");
  if (v.pass) v.detail = std::to_string(pairs) + " pairs over k[x], k[x,y](1,1), k[x,y](1,2); q<=4, window -12:20";
  return v;
}

Verdict lemma2() {
  Verdict v;
  auto r = run("check:lemma2", "lemma2.task", {}, 4);
  v.require(r.status == kExitPass, "status " + std::to_string(r.status) + " " + r.diagnostics);
  for (const auto& rep : r.reports) v.require(rep.pass, rep.name + ": " + rep.counterexample);
  v.require(r.reports.size() >= 6, "fewer than 6 pairs");
  if (v.pass) v.detail = std::to_string(r.reports.size()) + " pairs, q<=4";
  return v;
}

Verdict corridor() {
  Verdict v;
  std::size_t entries = 0, jumps = 0;
  bool graded_probes = false, ungraded_probes = false;
  for (const char* f : {"jump_kt.task", "jump_kt_free.task", "jump_poly.task"}) {
    auto r = run("check:jump", f);
    v.require(r.status == kExitPass, std::string(f) + ": status " + std::to_string(r.status));
    for (const auto& rep : r.reports) {
      v.require(rep.pass, rep.name + ": " + rep.counterexample);
      int dg = rep.evidence["d_gr"], du = rep.evidence["d_ungr"];
      v.require(du <= dg + 1, rep.name + ": d_ungr > d_gr + 1");
      if (std::string(f) == "jump_kt.task" && rep.evidence["model"] == "J" && du == dg + 1) ++jumps;
      graded_probes = graded_probes || rep.evidence["graded_nonvanishing"].size() > 1;
      ungraded_probes = ungraded_probes || rep.evidence["ungraded_nonvanishing"].size() >
                                               rep.evidence["graded_nonvanishing"].size();
      ++entries;
    }
  }
  v.require(entries >= 5, "fewer than 5 entries");
  v.require(jumps >= 1, "no entry attains d_ungr = d_gr + 1");
  v.require(graded_probes && ungraded_probes, "probe families missing");
  if (v.pass)
    v.detail = std::to_string(entries) + " entries satisfy d_ungr <= d_gr + 1; k[t], J attains equality (0 -> 1)";
  return v;
}

Verdict oracles() {
  Verdict v;
  auto instances = oracle::suite();
  std::size_t comparisons = 0;
  for (const auto& inst : instances) {
    auto o = oracle::check_instance(inst);
    comparisons += o.comparisons;
    v.require(o.pass, o.failure);
  }
  v.require(instances.size() >= 40, "fewer than 40 instances");
  if (v.pass)
    v.detail = std::to_string(instances.size()) + " instances, " + std::to_string(comparisons) +
               " comparisons (membership, syzygies, resolutions, Ext)";
  return v;
}

Verdict robustness() {
  Verdict v;
  std::vector<std::string> files{"example15.task",         "jump_kt.task",     "jump_kt_free.task",
                                 "jump_poly.task",         "lemma1_kx.task",   "lemma1_kxy.task",
                                 "lemma1_kxy12.task",      "lemma2.task",      "lemma3.task",
                                 "negative/corrupted_degree.task", "negative/j_swapped.task",
                                 "counterexamples/lemma1_torsion.task"};
  const std::size_t total = 10000;
  std::size_t done = 0, internal = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    std::size_t runs = total / files.size() + (i < total % files.size() ? 1 : 0);
    auto s = fuzz_task(slurp(files[i]), 5000 + i, runs, 2'000'000);
    done += s.runs;
    internal += s.by_status[kExitInternal];
  }
  v.require(done == total, "mutant count");
  v.require(internal == 0, std::to_string(internal) + " mutants exited with status 3");
  auto bad = run("check:all", "negative/corrupted_degree.task");
  v.require(bad.status == kExitUsage && bad.diagnostics.find("entry (0, 1)") != std::string::npos,
            "corrupted matrix not rejected with status 2 naming the entry");
  auto swap = run("check:all", "negative/j_swapped.task");
  v.require(swap.status == kExitFail, "J -> k[t] swap did not fail");
  if (v.pass)
    v.detail = std::to_string(done) + " mutants, no status 3; corrupted matrix -> 2 at entry (0, 1); J -> k[t] swap -> 1";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit;
    std::function<Verdict()> run;
  };
  std::vector<Criterion> criteria{{1, "graded injectivity witness over k[t]", 1, example15},
                                  {2, "Lsp0 support and T-regularity", 5, lemma3},
                                  {3, "Hom profile identity with partial sums", 60, lemma1},
                                  {4, "specialization at T = 1", 60, lemma2},
                                  {5, "injective dimension corridor", 30, corridor},
                                  {6, "linear-algebra oracles", 120, oracles},
                                  {7, "robustness and negative controls", 600, robustness}};
  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (v.pass && secs > c.limit) {
      v.pass = false;
      v.detail += " (over time limit)";
    }
    if (!v.pass) ++failures;
    std::printf("criterion %d %-40s %s  %.2fs/%gs  %s\n", c.id, c.title, v.pass ? "PASS" : "FAIL", secs, c.limit,
                v.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
