#include "dimjump/verify.hpp"

#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

TEST_CASE("Lsp0 support check on small modules") {
  auto A = qq({{"x", 1}});
  ReesRing R = rees_ring(A);
  CHECK(check_lemma3(R, "free", free_module(R.total, {0})).pass);
  CheckReport t = check_lemma3(R, "T", coker(R.total, {{"T"}}, {0}, {1}));
  CHECK(t.pass);
  CHECK(t.evidence["t_regular"] == false);
  CHECK(t.evidence["h-1"]["1"] == 1);
  CheckReport t2 = check_lemma3(R, "T2", coker(R.total, {{"T^2"}}, {0}, {2}));
  CHECK(t2.pass);
  CHECK(t2.evidence["h-1"]["2"] == 1);
  CHECK(t2.evidence["h-1"].find("1") == t2.evidence["h-1"].end());
}

TEST_CASE("Hom profile identity on small pairs") {
  auto A = qq({{"x", 1}});
  ReesRing R = rees_ring(A);
  FPModule N = free_module(A, {0});
  CHECK(check_lemma1(R, "free", free_module(R.total, {0}), N, 4).pass);
  CHECK(check_lemma1(R, "X-T", coker(R.total, {{"X - T"}}, {0}, {1}), N, 4).pass);
  // Hom(A~/(T), A~) = 0 but Hom(A, A) = A: the identity breaks on T-torsion.
  CheckReport t = check_lemma1(R, "T", coker(R.total, {{"T"}}, {0}, {1}), N, 4);
  CHECK_FALSE(t.pass);
  CHECK(t.counterexample == "T: q=0 degree 0 lhs 0 rhs 1");
  FPModule M2 = rees_module(R, coker(A, {{"x^2"}}, {0}, {2})).tilde;
  CHECK(check_lemma1(R, "x2", M2, coker(A, {{"x^3"}}, {0}, {3}), 4).pass);
}

TEST_CASE("specialization at T = 1 on small pairs") {
  auto A = qq({{"x", 1}});
  ReesRing R = rees_ring(A);
  FPModule Q = coker(R.total, {{"X^2 - T^2"}}, {0}, {2});
  CHECK(check_lemma2(R, "free", free_module(R.total, {0}), Q, 4).pass);
  CHECK(check_lemma2(R, "quad", Q, Q, 4).pass);
  CHECK(check_lemma2(R, "T", coker(R.total, {{"T"}}, {0}, {1}), Q, 4).pass);
}

TEST_CASE("dimension jump over k[t] and k[x,y]") {
  auto A = qq({{"t", 1}});
  auto g = [&](const std::string& f, int d) { return NamedModule{f, coker(A, {{f}}, {0}, {d})}; };
  auto u = [&](const std::string& f) { return NamedModule{f, coker(A, {{f}}, {0}, {0}, Grading::ungraded)}; };
  CheckReport r = check_dimension_jump("kt", free_module(A, {0}), {g("t", 1), g("t^2", 2)}, {u("t - 1"), u("t^2 - 1")});
  CHECK(r.pass);
  CHECK(r.evidence["d_gr"] == 1);
  CHECK(r.evidence["d_ungr"] == 1);

  CheckReport j = check_dimension_jump("J", A, InjectiveModel::J, {g("t", 1), g("t^2", 2)}, {u("t - 1"), u("t^2 - 1")});
  CHECK(j.pass);
  CHECK(j.evidence["d_gr"] == 0);
  CHECK(j.evidence["d_ungr"] == 1);
  CHECK(j.evidence["jump"] == true);

  auto B = qq({{"x", 1}, {"y", 1}});
  std::vector<NamedModule> gp{{"(x,y)", coker(B, {{"x", "y"}}, {0}, {1, 1})},
                              {"(x)", coker(B, {{"x"}}, {0}, {1})},
                              {"(x^2,xy)", coker(B, {{"x^2", "x*y"}}, {0}, {2, 2})}};
  std::vector<NamedModule> up{{"(x-1,y-1)", coker(B, {{"x - 1", "y - 1"}}, {0}, {0, 0}, Grading::ungraded)},
                              {"(x-1)", coker(B, {{"x - 1"}}, {0}, {0}, Grading::ungraded)},
                              {"(x^2-y)", coker(B, {{"x^2 - y"}}, {0}, {0}, Grading::ungraded)}};
  CheckReport b = check_dimension_jump("kxy", free_module(B, {0}), gp, up);
  CHECK(b.pass);
  CHECK(b.evidence["d_gr"] == 2);
  CHECK(b.evidence["d_ungr"] == 2);
  CheckReport b2 = check_dimension_jump("kxy2", free_module(B, {0, 1}), gp, up);
  CHECK(b2.evidence["d_gr"] == 2);
}

TEST_CASE("graded ring of fractions over k[t]") {
  CheckReport r = check_example15();
  CHECK(r.pass);
  CHECK(r.evidence["witness"]["ext1"] == "1");
  CHECK_FALSE(check_example15(Field::rationals(), GradedRankOne::PolynomialRing).pass);
  CHECK(check_example15(Field::prime(2)).pass);
}
