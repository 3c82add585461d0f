#include "dimjump/rees.hpp"

#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

namespace {

std::vector<std::size_t> profile(const FPModule& M, int lo, int hi) { return M.hilbert_profile(lo, hi); }

}  // namespace

TEST_CASE("rees ring dimensions") {
  auto A = qq({{"x", 1}});
  ReesRing R = rees_ring(A);
  CHECK(describe(*R.total) == "QQ[X:1, T:1]");
  CHECK(rees_dimension_identity(R, 10));
  CHECK(monomials_of_degree(*R.total, 3).size() == 4);

  auto B = qq({{"x", 1}, {"y", 2}});
  ReesRing S = rees_ring(B);
  CHECK(describe(*S.total) == "QQ[X:1, Y:2, T:1]");
  CHECK(monomials_of_degree(*S.total, 2).size() == 4);
  CHECK(rees_dimension_identity(S, 12));

  ReesRing K = rees_ring(qq({}));
  CHECK(K.total->num_vars() == 1);
  CHECK(rees_dimension_identity(K, 5));
}

TEST_CASE("rees ring variable names avoid collisions") {
  ReesRing R = rees_ring(qq({{"t", 1}, {"T", 1}}));
  CHECK(R.total->num_vars() == 3);
  CHECK(R.total->variables()[2].name == "T1");
}

TEST_CASE("canonical rees module") {
  auto A = qq({{"x", 1}});
  ReesRing R = rees_ring(A);
  FPModule M = coker(A, {{"x^2"}}, {0}, {2});
  ReesModuleData d = rees_module(R, M);
  CHECK(profile(d.tilde, 0, 3) == std::vector<std::size_t>{1, 2, 2, 2});
  CHECK(t_regular(R, d.tilde));
  CHECK(profile(sp0(R, d.tilde), -10, 15) == profile(M, -10, 15));

  FPModule F = free_module(A, {-1, 2});
  CHECK(rees_module(R, F).tilde.generators().twists == std::vector<int>{-1, 2});
}

TEST_CASE("good filtration rees module") {
  auto A = qq({{"x", 1}});
  ReesRing R = rees_ring(A);
  FPModule M = coker(A, {{"x^2 - 1"}}, {0}, {0}, Grading::ungraded);
  ReesModuleData d = rees_module(R, M, Filtration{{0}});
  CHECK(d.saturation_steps == 0);
  CHECK(t_regular(R, d.tilde));
  FPModule g = sp0(R, d.tilde);
  CHECK(profile(g, 0, 4) == std::vector<std::size_t>{1, 1, 0, 0, 0});
  CHECK(sp1(R, d.tilde).dimension() == VectorDim::finite(2));
}

TEST_CASE("good filtration needs saturation") {
  // (x y - 1, x) = (1): the homogenized relations X Y - T^2, X are not saturated.
  auto A = qq({{"x", 1}, {"y", 1}});
  ReesRing R = rees_ring(A);
  FPModule M = coker(A, {{"x*y - 1", "x"}}, {0}, {0, 0}, Grading::ungraded);
  ReesModuleData d = rees_module(R, M, Filtration{{0}});
  CHECK(d.saturation_steps > 0);
  CHECK(d.tilde.is_zero());
  CHECK(t_regular(R, d.tilde));
}

TEST_CASE("specializations") {
  auto A = qq({{"x", 1}});
  ReesRing R = rees_ring(A);
  FPModule At = free_module(R.total, {0});
  CHECK(profile(sp0(R, At), 0, 5) == profile(free_module(A, {0}), 0, 5));
  CHECK(sp1(R, At).dimension().infinite);

  FPModule Q = coker(R.total, {{"X^2 - T^2"}}, {0}, {2});
  CHECK(sp0(R, Q).presentation().entry(0, 0) == P(A, "x^2"));
  CHECK(sp1(R, Q).presentation().entry(0, 0) == P(A, "x^2 - 1"));
  CHECK_FALSE(sp1(R, Q).graded());
}

TEST_CASE("derived specialization") {
  auto A = qq({{"x", 1}});
  ReesRing R = rees_ring(A);

  LSp0 free = lsp0(R, free_module(R.total, {0}));
  CHECK(free.h_minus1.is_zero());

  LSp0 t = lsp0(R, coker(R.total, {{"T"}}, {0}, {1}));
  CHECK(profile(t.h_minus1, -2, 5) == profile(free_module(A, {1}), -2, 5));
  CHECK(profile(t.h0, -2, 5) == profile(free_module(A, {0}), -2, 5));

  LSp0 t2 = lsp0(R, coker(R.total, {{"T^2"}}, {0}, {2}));
  CHECK(profile(t2.h_minus1, -2, 5) == profile(free_module(A, {2}), -2, 5));
  CHECK_FALSE(t_regular(R, coker(R.total, {{"T^2"}}, {0}, {2})));

  LSp0 q = lsp0(R, coker(R.total, {{"X^2 - T^2"}}, {0}, {2}));
  CHECK(q.h_minus1.is_zero());
  CHECK(profile(q.h0, 0, 4) == std::vector<std::size_t>{1, 1, 0, 0, 0});
}
