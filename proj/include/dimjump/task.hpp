#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dimjump/pid.hpp"
#include "dimjump/rees.hpp"

namespace dimjump {

// Task file language. Newlines are insignificant; '#' starts a comment.
//
//   ring QQ[x:1, y:2]            (or GF(p)[...]; weights default to 1)
//   order lex                    (default grevlex)
//   window -12:20
//   qmax 4
//   module M = coker [[x^2 - y]] rows [0] cols [2]
//   module U = coker [[x - 1]] ungraded
//   module F = free [0, 1]
//   module Mt = rees M                      canonical filtration
//   module Ut = rees U filtration [0]       good filtration by generator levels
//   module Q = over rees coker [[X^2 - T^2]] rows [0] cols [2]
//   module J = model J                      (or model I0; rings in one variable)
//   probe (x - 1, y)                        A/I, graded when all generators are
//   check lemma1 Mt M
//   check lemma2 Mt Q | lemma3 Mt | jump M | example15 [control]
struct ModuleDef {
  enum class Kind { coker, free, rees, model };
  std::string name;
  Kind kind = Kind::coker;
  bool over_rees = false;
  std::optional<FPModule> module;  // absent for models
  std::string source;              // rees: the module it was built from
  std::optional<Filtration> filtration;
  InjectiveModel model = InjectiveModel::J;
  int line = 0;
};

struct ProbeDef {
  std::vector<Polynomial> generators;
  bool graded = true;
  std::string name() const;
  FPModule module() const;
};

struct CheckDef {
  std::string kind;
  std::vector<std::string> args;
  int line = 0;
};

struct TaskOverrides {
  std::optional<Field> field;
  std::optional<OrderKind> order;
};

struct TaskFile {
  RingPtr ring;
  std::optional<ReesRing> rees;
  std::vector<ModuleDef> modules;
  std::vector<ProbeDef> probes;
  std::vector<CheckDef> checks;
  std::optional<Window> window;
  std::optional<int> qmax;

  const ModuleDef* find(const std::string& name) const;
  const ReesRing& rees_ring() const { return *rees; }
};

inline constexpr int kMaxTaskVars = 6;
inline constexpr int kMaxTwist = 1000;
inline constexpr int kMaxWindow = 200;
inline constexpr int kMaxQ = 8;

// Throws ParseError with the location of the offending token; degree
// violations name the matrix cell.
TaskFile parse_task(std::string_view text, const TaskOverrides& overrides = {});
// Canonical text; parse_task(format_task(t)) formats back to the same text.
std::string format_task(const TaskFile& t);

}  // namespace dimjump
