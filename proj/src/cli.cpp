#include "dimjump/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dimjump/budget.hpp"
#include "dimjump/errors.hpp"
#include "dimjump/fuzz.hpp"

namespace dimjump {

namespace {

Window window_of(const TaskFile* t, const SessionConfig& c) {
  if (c.window) return *c.window;
  if (t && t->window) return *t->window;
  return Window{};
}

int qmax_of(const TaskFile* t, const SessionConfig& c) {
  if (c.qmax) return *c.qmax;
  if (t && t->qmax) return *t->qmax;
  return 4;
}

const ModuleDef& lookup(const TaskFile& t, const std::string& name) {
  const ModuleDef* d = t.find(name);
  if (!d) throw AlgebraError("unknown module '" + name + "'");
  return *d;
}

const FPModule& module_of(const TaskFile& t, const std::string& name) {
  const ModuleDef& d = lookup(t, name);
  if (!d.module) throw AlgebraError("'" + name + "' is a model, not a finitely presented module");
  return *d.module;
}

const FPModule& rees_arg(const TaskFile& t, const std::string& name) {
  const ModuleDef& d = lookup(t, name);
  if (!d.over_rees) throw AlgebraError("'" + name + "' is not a module over the Rees ring");
  return *d.module;
}

const FPModule& base_arg(const TaskFile& t, const std::string& name) {
  const ModuleDef& d = lookup(t, name);
  if (d.over_rees || !d.module) throw AlgebraError("'" + name + "' is not a module over the base ring");
  return *d.module;
}

void need_args(const std::vector<std::string>& args, std::size_t n, const std::string& what) {
  if (args.size() != n) throw AlgebraError(what + " takes " + std::to_string(n) + " module name(s)");
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

Json twists_json(const FreeModule& F) { return Json(F.twists); }

Json vec_list(const std::vector<Vec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(v.to_string());
  return a;
}

Json module_json(const FPModule& M, Window w) {
  Json e;
  e["presentation"] = M.presentation().to_string();
  e["rows"] = twists_json(M.presentation().target());
  e["cols"] = twists_json(M.presentation().source());
  e["graded"] = M.graded();
  if (M.graded())
    e["hilbert"] = profile_json(M.hilbert_profile(w.lo, w.hi), w.lo);
  else
    e["dimension"] = M.dimension().to_string();
  return e;
}

std::vector<NamedModule> probes(const TaskFile& t, bool graded) {
  std::vector<NamedModule> out;
  for (const auto& p : t.probes)
    if (p.graded == graded) out.emplace_back(p.name(), p.module());
  return out;
}

CheckReport info(const std::string& name, Json evidence) {
  CheckReport r(name);
  r.evidence = std::move(evidence);
  return r;
}

std::vector<CheckReport> run_command(const TaskFile& t, const SessionConfig& c) {
  const std::string& cmd = c.command;
  const auto& a = c.names;
  Window w = window_of(&t, c);
  if (cmd == "gb") {
    need_args(a, 1, cmd);
    const FPModule& M = module_of(t, a[0]);
    Json e;
    e["ambient"] = twists_json(M.generators());
    e["basis"] = vec_list(M.relations_gb().elements());
    return {info("gb:" + a[0], e)};
  }
  if (cmd == "resolve") {
    need_args(a, 1, cmd);
    FreeComplex C = free_resolution(module_of(t, a[0]));
    Json e;
    e["length"] = C.length();
    Json terms = Json::array();
    for (int i = 0; i <= C.length(); ++i) terms.push_back(twists_json(C.term(-i)));
    e["twists"] = terms;
    Json diffs = Json::array();
    for (int i = -C.length(); i < 0; ++i) diffs.push_back(C.differential(i).to_string());
    e["differentials"] = diffs;
    e["is_complex"] = C.is_complex();
    CheckReport r = info("resolve:" + a[0], e);
    if (!C.is_complex()) r.fail(a[0] + ": d o d != 0");
    return {r};
  }
  if (cmd == "ext") {
    need_args(a, 2, cmd);
    ExtCalculator calc(module_of(t, a[0]), module_of(t, a[1]));
    std::vector<int> qs;
    if (c.q)
      qs.push_back(*c.q);
    else
      for (int q = 0; q <= qmax_of(&t, c); ++q) qs.push_back(q);
    Json rows = Json::array();
    for (int q : qs) {
      ExtProfile p = calc.profile(q, w);
      Json row{{"q", q}, {"vanishes", p.vanishes}};
      if (p.mode == Grading::graded)
        row["dims"] = profile_json(p.dims, w.lo);
      else
        row["total"] = p.total->to_string();
      rows.push_back(row);
    }
    Json e;
    e["mode"] = calc.mode() == Grading::graded ? "graded" : "ungraded";
    e["window"] = {w.lo, w.hi};
    e["ext"] = rows;
    return {info("ext:" + a[0] + "," + a[1], e)};
  }
  const ReesRing& R = t.rees_ring();
  if (cmd == "rees") {
    need_args(a, 1, cmd);
    const ModuleDef& d = lookup(t, a[0]);
    FPModule Mt = d.over_rees ? *d.module : rees_module(R, base_arg(t, a[0])).tilde;
    Json e = module_json(Mt, w);
    e["ring"] = describe(*R.total);
    e["t_regular"] = t_regular(R, Mt);
    return {info("rees:" + a[0], e)};
  }
  if (cmd == "sp0" || cmd == "sp1") {
    need_args(a, 1, cmd);
    const FPModule& Mt = rees_arg(t, a[0]);
    return {info(cmd + ":" + a[0], module_json(cmd == "sp0" ? sp0(R, Mt) : sp1(R, Mt), w))};
  }
  if (cmd == "lsp0") {
    need_args(a, 1, cmd);
    LSp0 L = lsp0(R, rees_arg(t, a[0]));
    Json e;
    e["h-1"] = module_json(L.h_minus1, w);
    e["h0"] = module_json(L.h0, w);
    return {info("lsp0:" + a[0], e)};
  }
  if (cmd.rfind("check:", 0) == 0) {
    std::string kind = cmd.substr(6);
    std::vector<CheckDef> checks;
    if (kind == "all") {
      checks = t.checks;
    } else if (!a.empty()) {
      checks.push_back(CheckDef{kind, a, 0});
    } else {
      for (const auto& ch : t.checks)
        if (ch.kind == kind) checks.push_back(ch);
    }
    return run_checks(t, c, checks);
  }
  throw AlgebraError("unknown command '" + cmd + "'");
}

bool is_profile(const Json& v) {
  if (!v.is_object() || v.empty()) return false;
  for (auto it = v.begin(); it != v.end(); ++it) {
    if (!it.value().is_number_integer()) return false;
    const std::string& k = it.key();
    if (k.empty() || k.find_first_not_of("-0123456789") != std::string::npos) return false;
  }
  return true;
}

bool is_flat(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  for (const auto& x : v)
    if (x.is_object() || x.is_array()) return false;
  return true;
}

void render(std::ostream& os, const Json& v, int indent) {
  std::string pad(std::size_t(indent), ' ');
  for (auto it = v.begin(); it != v.end(); ++it) {
    const Json& x = it.value();
    std::string key = v.is_object() ? it.key() : "-";
    if (is_profile(x)) {
      std::vector<std::string> degs, dims;
      for (auto p = x.begin(); p != x.end(); ++p) {
        degs.push_back(p.key());
        dims.push_back(std::to_string(p.value().get<long>()));
      }
      std::ostringstream d, n;
      d << pad << key << "  deg |";
      n << pad << std::string(key.size(), ' ') << "  dim |";
      for (std::size_t i = 0; i < degs.size(); ++i) {
        std::size_t width = std::max(degs[i].size(), dims[i].size());
        d << ' ' << std::setw(int(width)) << degs[i];
        n << ' ' << std::setw(int(width)) << dims[i];
      }
      os << d.str() << "\n" << n.str() << "\n";
    } else if (is_flat(x)) {
      os << pad << key << ": " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
    } else {
      os << pad << key << ":\n";
      render(os, x, indent + 2);
    }
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"gb",          "resolve",      "ext",          "rees",
                                              "sp0",         "sp1",          "lsp0",         "check:lemma1",
                                              "check:lemma2", "check:lemma3", "check:jump",   "check:example15",
                                              "check:all"};
  return names;
}

std::vector<CheckReport> run_checks(const TaskFile& t, const SessionConfig& c, const std::vector<CheckDef>& checks) {
  std::vector<CheckReport> out;
  const ReesRing& R = t.rees_ring();
  Window w = window_of(&t, c);
  int qmax = qmax_of(&t, c);
  for (const auto& ch : checks) {
    const auto& a = ch.args;
    std::string label = join(a, ",");
    if (ch.kind == "lemma1") {
      need_args(a, 2, "lemma1");
      out.push_back(check_lemma1(R, label, rees_arg(t, a[0]), base_arg(t, a[1]), qmax, w));
    } else if (ch.kind == "lemma2") {
      need_args(a, 2, "lemma2");
      out.push_back(check_lemma2(R, label, rees_arg(t, a[0]), rees_arg(t, a[1]), qmax));
    } else if (ch.kind == "lemma3") {
      need_args(a, 1, "lemma3");
      out.push_back(check_lemma3(R, label, rees_arg(t, a[0]), w));
    } else if (ch.kind == "jump") {
      need_args(a, 1, "jump");
      const ModuleDef& d = lookup(t, a[0]);
      if (d.over_rees) throw AlgebraError("'" + a[0] + "' is not over the base ring");
      if (d.kind == ModuleDef::Kind::model)
        out.push_back(check_dimension_jump(label, t.ring, d.model, probes(t, true), probes(t, false)));
      else
        out.push_back(check_dimension_jump(label, *d.module, probes(t, true), probes(t, false)));
    } else if (ch.kind == "example15") {
      bool control = !a.empty() && a[0] == "control";
      if (a.size() > (control ? 1u : 0u)) throw AlgebraError("example15 takes no modules");
      out.push_back(check_example15(t.ring->field(), control ? GradedRankOne::PolynomialRing : GradedRankOne::J));
    } else {
      throw AlgebraError("unknown check '" + ch.kind + "'");
    }
  }
  return out;
}

DispatchResult dispatch(const SessionConfig& config, const std::string& task_text) {
  using Clock = std::chrono::steady_clock;
  auto started = Clock::now();
  DispatchResult res;
  try {
    std::optional<WorkBudget> budget;
    if (config.budget) budget.emplace(*config.budget);
    const auto& cmds = command_names();
    if (config.command != "fuzz" && std::find(cmds.begin(), cmds.end(), config.command) == cmds.end())
      throw AlgebraError("unknown command '" + config.command + "'");
    if (config.qmax && (*config.qmax < 0 || *config.qmax > kMaxQ))
      throw AlgebraError("--max-q must lie in 0.." + std::to_string(kMaxQ));
    if (config.command == "fuzz") {
      if (task_text.empty()) throw AlgebraError("fuzz needs a task file");
      budget.reset();
      FuzzSummary f = fuzz_task(task_text, config.seed, config.runs, config.budget.value_or(2'000'000));
      CheckReport r("fuzz:" + (config.input_path.empty() ? std::string("<input>") : config.input_path));
      r.evidence["seed"] = config.seed;
      r.evidence["mutants"] = f.runs;
      r.evidence["by_status"] = Json{{"pass", f.by_status[0]}, {"fail", f.by_status[1]}, {"rejected", f.by_status[2]},
                                     {"internal", f.by_status[3]}};
      r.evidence["internal"] = f.internal;
      if (!f.internal.empty()) r.fail(std::to_string(f.internal.size()) + " mutants raised internal errors");
      res.reports.push_back(std::move(r));
    } else if (config.command == "check:example15" && task_text.empty()) {
      bool control = !config.names.empty() && config.names[0] == "control";
      res.reports.push_back(check_example15(config.field.value_or(Field::rationals()),
                                            control ? GradedRankOne::PolynomialRing : GradedRankOne::J));
    } else {
      if (task_text.empty()) throw AlgebraError("command '" + config.command + "' needs a task file");
      TaskFile task = parse_task(task_text, TaskOverrides{config.field, config.order});
      res.reports = run_command(task, config);
    }
    for (const auto& r : res.reports)
      if (!r.pass) res.status = kExitFail;
    if (res.reports.size() == 1 && res.reports[0].millis == 0)
      res.reports[0].millis = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started).count();
  } catch (const ParseError& e) {
    res.status = kExitUsage;
    res.diagnostics = (config.input_path.empty() ? std::string("<input>") : config.input_path) + ":" + e.what();
  } catch (const DegreeError& e) {
    res.status = kExitUsage;
    res.diagnostics = std::string("degree error: ") + e.what();
  } catch (const ResourceLimit& e) {
    res.status = kExitUsage;
    res.diagnostics = std::string("resource limit: ") + e.what();
  } catch (const AlgebraError& e) {
    res.status = kExitUsage;
    res.diagnostics = std::string("error: ") + e.what();
  } catch (const InternalError& e) {
    res.status = kExitInternal;
    res.diagnostics = std::string("internal error: ") + e.what();
  } catch (const std::exception& e) {
    res.status = kExitInternal;
    res.diagnostics = std::string("internal error: ") + e.what();
  }
  if (res.status >= kExitUsage) res.reports.clear();
  return res;
}

std::string emit_report(const std::vector<CheckReport>& reports, const std::string& format) {
  if (format == "text") {
    std::ostringstream os;
    for (const auto& r : reports) {
      os << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.millis << " ms)\n";
      if (!r.pass) os << "  counterexample: " << r.counterexample << "\n";
      render(os, r.evidence, 2);
    }
    return os.str();
  }
  if (reports.empty()) return R"({"version":1,"checks":[]})";
  std::string s = "{\"version\":1,\"checks\":[\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const CheckReport& r = reports[i];
    Json ev = r.evidence;
    if (!r.pass) ev["counterexample"] = r.counterexample;
    Json o{{"name", r.name}, {"status", r.pass ? "pass" : "fail"}, {"evidence", ev}, {"millis", r.millis}};
    s += o.dump() + (i + 1 < reports.size() ? ",\n" : "\n");
  }
  return s + "]}";
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Rees-ring and Ext computations over weighted polynomial rings"};
  SessionConfig cfg;
  std::vector<std::string> positional;
  std::string field, order, window, output;
  std::uint64_t budget = 0;
  app.add_option("command", cfg.command, "one of: " + join(command_names(), ", ") + ", fuzz")->required();
  app.add_option("args", positional, "task file followed by module names");
  app.add_option("--field", field, "QQ or Fp=<p>");
  app.add_option("--order", order, "grevlex or lex");
  app.add_option("--window", window, "degree window lo:hi (default -20:20)");
  app.add_option("--max-q", cfg.qmax, "largest cohomological index (default 4, at most 8)");
  app.add_option("--q", cfg.q, "single Ext index for the ext command");
  app.add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", cfg.seed, "seed for fuzz corpora");
  app.add_option("--runs", cfg.runs, "number of mutants for fuzz (default 1000)")->check(CLI::Range(1, 1000000));
  app.add_option("--budget", budget, "cap on elementary work steps (0 = unlimited)");
  app.add_option("-o,--output", output, "write the report to this file");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    if (!field.empty()) {
      if (field == "QQ")
        cfg.field = Field::rationals();
      else if (field.rfind("Fp=", 0) == 0 && field.size() > 3 && field.size() <= 13 &&
               field.find_first_not_of("0123456789", 3) == std::string::npos)
        cfg.field = Field::prime(std::stoull(field.substr(3)));
      else
        throw AlgebraError("--field expects QQ or Fp=<p>");
    }
    if (!order.empty()) {
      if (order == "grevlex")
        cfg.order = OrderKind::grevlex;
      else if (order == "lex")
        cfg.order = OrderKind::lex;
      else
        throw AlgebraError("--order expects grevlex or lex");
    }
    if (!window.empty()) {
      int lo = 0, hi = 0;
      char colon = 0;
      std::istringstream is(window);
      if (!(is >> lo >> colon >> hi) || colon != ':' || !is.eof() || lo > hi || std::abs(lo) > kMaxWindow ||
          std::abs(hi) > kMaxWindow)
        throw AlgebraError("--window expects lo:hi with |lo|, |hi| <= " + std::to_string(kMaxWindow));
      cfg.window = Window{lo, hi};
    }
    if (budget) cfg.budget = budget;
  } catch (const AlgebraError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::string text;
  std::size_t first_name = 0;
  bool needs_task = !(cfg.command == "check:example15" && (positional.empty() || positional[0] == "control"));
  if (needs_task) {
    if (positional.empty()) {
      err << "usage error: command '" << cfg.command << "' needs a task file\n";
      return kExitUsage;
    }
    cfg.input_path = positional[0];
    std::ifstream in(cfg.input_path, std::ios::binary);
    if (!in) {
      err << "error: cannot read " << cfg.input_path << "\n";
      return kExitUsage;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
    if (text.empty()) text = " ";
    first_name = 1;
  }
  cfg.names.assign(positional.begin() + long(first_name), positional.end());
  DispatchResult res = dispatch(cfg, text);
  if (!res.diagnostics.empty()) err << res.diagnostics << "\n";
  if (res.status < kExitUsage) {
    std::string report = emit_report(res.reports, cfg.format);
    if (!output.empty()) {
      std::ofstream f(output, std::ios::binary);
      if (!f) {
        err << "error: cannot write " << output << "\n";
        return kExitUsage;
      }
      f << report << "\n";
    } else {
      out << report << "\n";
    }
  }
  return res.status;
}

}  // namespace dimjump
