#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dimjump/pid.hpp"
#include "dimjump/rees.hpp"

namespace dimjump {

using Json = nlohmann::ordered_json;

struct CheckReport {
  explicit CheckReport(std::string n) : name(std::move(n)) {}
  std::string name;
  bool pass = true;
  Json evidence = Json::object();
  long millis = 0;
  // Set on failure: the instance that broke the check.
  std::string counterexample;

  void fail(std::string instance) {
    if (pass) counterexample = std::move(instance);
    pass = false;
  }
};

// Sparse {degree: dim} table of the nonzero entries.
Json profile_json(const std::vector<std::size_t>& dims, int lo);

CheckReport check_lemma3(const ReesRing& R, const std::string& name, const FPModule& Mt, Window window = {});

CheckReport check_lemma1(const ReesRing& R, const std::string& name, const FPModule& Mt, const FPModule& N, int qmax,
                         Window window = {-12, 20});

CheckReport check_lemma2(const ReesRing& R, const std::string& name, const FPModule& Mt, const FPModule& Nt, int qmax);

using NamedModule = std::pair<std::string, FPModule>;

// Probe modules A/I; the free module A is always added to the graded probes.
CheckReport check_dimension_jump(const std::string& name, const FPModule& N, const std::vector<NamedModule>& graded,
                                 const std::vector<NamedModule>& ungraded);
// Same for the non finitely generated modules over k[t], through their models.
CheckReport check_dimension_jump(const std::string& name, const RingPtr& ring, InjectiveModel model,
                                 const std::vector<NamedModule>& graded, const std::vector<NamedModule>& ungraded);

// baer_model replaces J in the graded Baer check (negative control).
CheckReport check_example15(const Field& field = Field::rationals(), GradedRankOne baer_model = GradedRankOne::J);

}  // namespace dimjump
