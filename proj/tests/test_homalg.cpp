#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

TEST_CASE("graded matrix degree validation") {
  auto R = qq({{"x", 1}});
  CHECK_FALSE(validate_graded_matrix(matrix(R, {{"x^2"}}, {0}, {2})));
  auto v = validate_graded_matrix(matrix(R, {{"x"}}, {0}, {2}));
  REQUIRE(v);
  CHECK(v->expected == 2);
  CHECK(v->found == 1);
  CHECK_FALSE(validate_graded_matrix(matrix(R, {{"0", "0"}}, {0}, {5, 7})));
  CHECK_THROWS_AS(coker(R, {{"x + 1"}}, {0}, {1}), DegreeError);
}

TEST_CASE("koszul resolution of the residue field") {
  auto R = qq({{"x", 1}, {"y", 1}});
  FreeComplex C = free_resolution(residue_field(R));
  CHECK(C.length() == 2);
  CHECK(C.is_complex());
  CHECK(C.term(0).twists == std::vector<int>{0});
  CHECK(C.term(-1).twists == std::vector<int>{1, 1});
  CHECK(C.term(-2).twists == std::vector<int>{2});
}

TEST_CASE("small resolutions") {
  auto R = qq({{"t", 1}});
  CHECK(free_resolution(free_module(R, {0, 3})).length() == 0);
  FreeComplex C = free_resolution(coker(R, {{"t^2"}}, {0}, {2}));
  CHECK(C.length() == 1);
  CHECK(C.term(-1).twists == std::vector<int>{2});
}

TEST_CASE("hom complex of a rank one map") {
  auto R = qq({{"t", 1}});
  FreeComplex C = free_resolution(coker(R, {{"t"}}, {0}, {1}));
  ModuleComplex H = hom_complex(C, free_module(R, {0}));
  REQUIRE(H.terms.size() == 2);
  CHECK(H.lo == 0);
  CHECK(H.terms[0].generators().twists == std::vector<int>{0});
  CHECK(H.terms[1].generators().twists == std::vector<int>{-1});
  CHECK(H.maps[0].entry(0, 0) == P(R, "t"));
}

TEST_CASE("koszul cohomology") {
  auto R = qq({{"x", 1}, {"y", 1}});
  FPModule A = free_module(R, {0});
  ExtCalculator calc(residue_field(R), A);
  CHECK(calc.vanishes(0));
  CHECK(calc.vanishes(1));
  CHECK_FALSE(calc.vanishes(2));
  ExtProfile p = calc.profile(2, {-5, 5});
  for (int d = -5; d <= 5; ++d) CHECK(p.at(d) == (d == -2 ? 1u : 0u));
  FPModule H2 = calc.module(2);
  CHECK(H2.dimension() == VectorDim::finite(1));
  CHECK(H2.hilbert_profile(-2, -2) == std::vector<std::size_t>{1});
  CHECK(ext_vanishes_above(residue_field(R), A, 2));
  CHECK_FALSE(ext_vanishes_above(residue_field(R), A, 1));
}

TEST_CASE("ext of a cyclic module over k[t]") {
  auto R = qq({{"t", 1}});
  ExtProfile p = ext_profile(coker(R, {{"t"}}, {0}, {1}), free_module(R, {0}), 1, {-5, 5});
  for (int d = -5; d <= 5; ++d) CHECK(p.at(d) == (d == -1 ? 1u : 0u));
  ExtProfile f = ext_profile(free_module(R, {0, 2}), coker(R, {{"t"}}, {0}, {1}), 1);
  CHECK(f.vanishes);
}

TEST_CASE("hom between cyclic modules") {
  auto R = qq({{"x", 1}, {"y", 1}});
  FPModule M = coker(R, {{"x"}}, {0}, {1});
  ExtProfile p = ext_profile(M, M, 0, {-3, 3});
  // Hom(A/x, A/x) = A/x = k[y]
  for (int d = -3; d <= 3; ++d) CHECK(p.at(d) == (d >= 0 ? 1u : 0u));
}

TEST_CASE("ungraded ext totals") {
  auto R = qq({{"x", 1}});
  FPModule M = coker(R, {{"x - 1"}}, {0}, {0}, Grading::ungraded);
  FPModule A = FPModule::free(FreeModule{R, {0}}, Grading::ungraded);
  ExtCalculator calc(M, A);
  CHECK(calc.total(0).vanishes);
  ExtProfile e1 = calc.total(1);
  REQUIRE(e1.total);
  CHECK(*e1.total == VectorDim::finite(1));
  CHECK(calc.total(2).vanishes);
  // x^2 - 1 = (x-1)(x+1): two points
  FPModule M2 = coker(R, {{"x^2 - 1"}}, {0}, {0}, Grading::ungraded);
  CHECK(*ExtCalculator(M2, A).total(1).total == VectorDim::finite(2));
  CHECK(ExtCalculator(A, A).total(0).total->infinite);
}

TEST_CASE("ungraded resolution over two variables") {
  auto R = qq({{"x", 1}, {"y", 1}});
  FPModule pt = coker(R, {{"x - 1", "y - 1"}}, {0}, {0, 0}, Grading::ungraded);
  FreeComplex C = free_resolution(pt);
  CHECK(C.length() == 2);
  CHECK(C.is_complex());
  FPModule A = FPModule::free(FreeModule{R, {0}}, Grading::ungraded);
  ExtCalculator calc(pt, A);
  CHECK(calc.vanishes(1));
  CHECK(*calc.total(2).total == VectorDim::finite(1));
}
