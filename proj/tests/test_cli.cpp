#include <filesystem>
#include <fstream>
#include <sstream>

#include "dimjump/cli.hpp"
#include "doctest.h"

using namespace dimjump;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(DIMJUMP_CORPUS_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DispatchResult run(const std::string& command, const std::string& text, std::vector<std::string> names = {}) {
  SessionConfig c;
  c.command = command;
  c.names = std::move(names);
  return dispatch(c, text);
}

int cli(std::vector<std::string> args, std::string* out = nullptr, std::string* err = nullptr) {
  std::vector<const char*> argv{"dimjump"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  int rc = run_cli(int(argv.size()), argv.data(), o, e);
  if (out) *out = o.str();
  if (err) *err = e.str();
  return rc;
}

Json strip_millis(const std::string& report) {
  Json j = Json::parse(report);
  for (auto& c : j["checks"]) c.erase("millis");
  return j;
}

}  // namespace

TEST_CASE("empty report") {
  CHECK(emit_report({}, "json") == R"({"version":1,"checks":[]})");
  auto r = run("check:all", "ring QQ[x]\n");
  CHECK(r.status == kExitPass);
  CHECK(r.reports.empty());
}

TEST_CASE("bundled corpus passes check:all") {
  for (const char* f : {"lemma1_kx.task", "lemma1_kxy.task", "lemma1_kxy12.task", "lemma2.task", "lemma3.task",
                        "jump_kt.task", "jump_kt_free.task", "jump_poly.task", "example15.task"}) {
    INFO(f);
    auto r = run("check:all", slurp(f));
    CHECK(r.status == kExitPass);
    CHECK_FALSE(r.reports.empty());
    Json j = Json::parse(emit_report(r.reports, "json"));
    for (const auto& c : j["checks"]) CHECK(c["status"] == "pass");
  }
}

TEST_CASE("failures and diagnostics") {
  auto bad = run("check:all", slurp("counterexamples/lemma1_torsion.task"));
  CHECK(bad.status == kExitFail);
  Json j = Json::parse(emit_report(bad.reports, "json"));
  CHECK(j["checks"][0]["status"] == "fail");
  CHECK(j["checks"][0]["evidence"]["counterexample"] == "T1,A: q=0 degree 0 lhs 0 rhs 1");

  auto deg = run("check:all", slurp("negative/corrupted_degree.task"));
  CHECK(deg.status == kExitUsage);
  CHECK(deg.diagnostics.find("entry (0, 1)") != std::string::npos);
  CHECK(deg.diagnostics.find(":3:23:") != std::string::npos);

  CHECK(run("check:lemma3", slurp("lemma3.task"), {"Nope"}).status == kExitUsage);
  CHECK(run("check:lemma3", slurp("lemma3.task"), {"Mt", "Ut"}).status == kExitUsage);
  CHECK(run("gb", "").status == kExitUsage);
  CHECK(run("frobnicate", "ring QQ[x]").status == kExitUsage);
}

TEST_CASE("kernel commands") {
  std::string t = "ring QQ[x, y]\nmodule K = coker [[x, y]] rows [0] cols [1, 1]\nmodule A = free [0]\n"
                  "module Kt = rees K\n";
  auto gb = run("gb", t, {"K"});
  REQUIRE(gb.status == kExitPass);
  CHECK(gb.reports[0].evidence["basis"].size() == 2);
  auto res = run("resolve", t, {"K"});
  CHECK(res.reports[0].evidence["length"] == 2);
  SessionConfig c;
  c.command = "ext";
  c.names = {"K", "A"};
  c.q = 2;
  c.window = Window{-3, 0};
  auto ext = dispatch(c, t);
  REQUIRE(ext.status == kExitPass);
  CHECK(ext.reports[0].evidence["ext"][0]["dims"] == Json({{"-2", 1}}));
  CHECK(run("sp0", t, {"Kt"}).reports[0].evidence["hilbert"] == Json({{"0", 1}}));
  CHECK(run("lsp0", t, {"Kt"}).status == kExitPass);
  CHECK(run("rees", t, {"K"}).reports[0].evidence["t_regular"] == true);
}

TEST_CASE("work budget turns runaway input into a usage error") {
  SessionConfig c;
  c.command = "check:all";
  c.budget = 50;
  auto r = dispatch(c, slurp("lemma1_kxy.task"));
  CHECK(r.status == kExitUsage);
  CHECK(r.diagnostics.find("resource limit") != std::string::npos);
}

TEST_CASE("command line") {
  std::string path = std::string(DIMJUMP_CORPUS_DIR) + "/lemma3.task";
  std::string out, err;
  CHECK(cli({"check:lemma3", path, "T1", "--window", "-5:5", "--format", "text"}, &out) == kExitPass);
  CHECK(out.rfind("PASS  lemma3:T1", 0) == 0);
  CHECK(cli({"check:lemma3", path, "T1", "--window=-5:5"}, &out) == kExitPass);
  CHECK(cli({"check:lemma3", path, "--field", "Fp=7"}) == kExitPass);
  CHECK(cli({"check:lemma3", path, "--field", "Fp=8"}, nullptr, &err) == kExitUsage);
  CHECK(cli({"check:lemma3", path, "--window", "5:1"}) == kExitUsage);
  CHECK(cli({"check:lemma3", path, "--format", "xml"}) == kExitUsage);
  CHECK(cli({"check:lemma3", "/nonexistent.task"}) == kExitUsage);
  CHECK(cli({"check:example15", "control"}) == kExitFail);
  CHECK(cli({"--help"}, &out) == kExitPass);
  CHECK(out.find("--max-q") != std::string::npos);
}

TEST_CASE("reports are deterministic apart from timing") {
  std::string a, b;
  std::string path = std::string(DIMJUMP_CORPUS_DIR) + "/lemma2.task";
  cli({"check:all", path}, &a);
  cli({"check:all", path}, &b);
  CHECK(strip_millis(a) == strip_millis(b));
  CHECK(strip_millis(a).dump() == strip_millis(b).dump());
}
