#include "doctest.h"
#include "dimjump/parse.hpp"
#include "oracle.hpp"

TEST_CASE("oracle linear algebra sanity") {
  auto R = dimjump::make_ring(dimjump::Field::rationals(), {{"x", 1}, {"y", 2}});
  CHECK(oracle::exponents_of_degree(*R, 4).size() == 3);
  CHECK(oracle::exponents_of_degree(*R, -1).empty());
  oracle::RowSpace S(3);
  CHECK(S.add({1, 2, 3}));
  CHECK(S.add({2, 4, 7}));
  CHECK_FALSE(S.add({0, 0, 5}));
  CHECK(S.rank() == 2);
  CHECK(S.contains({1, 2, 0}));
  CHECK(S.free_columns() == std::vector<std::size_t>{1});
}

TEST_CASE("kernel agrees with the linear-algebra oracle") {
  auto instances = oracle::suite();
  CHECK(instances.size() >= 40);
  std::size_t comparisons = 0;
  for (const auto& inst : instances) {
    auto o = oracle::check_instance(inst);
    comparisons += o.comparisons;
    CHECK_MESSAGE(o.pass, o.failure);
  }
  MESSAGE("oracle comparisons: " << comparisons);
}

TEST_CASE("oracle detects a truncated resolution and reproduces Koszul Ext") {
  using namespace dimjump;
  auto R = make_ring(Field::rationals(), {{"x", 1}, {"y", 1}});
  auto x = parse_polynomial(R, "x"), y = parse_polynomial(R, "y");
  FPModule k = FPModule::coker(GradedMatrix::from_rows(FreeModule{R, {1, 1}}, FreeModule{R, {0}}, {{x, y}}));
  FPModule A = FPModule::free(FreeModule{R, {0}});
  FreeComplex C = free_resolution(k);
  CHECK(oracle::resolves(C, k, -2, 6));
  FreeComplex cut(-1, {C.term(-1), C.term(0)}, {C.differential(-1)}, Grading::graded);
  CHECK_FALSE(oracle::resolves(cut, k, -2, 6));
  auto ext2 = oracle::ext_profile(C, A, 2, -3, 0);
  CHECK(ext2 == std::vector<std::size_t>{0, 1, 0, 0});
  CHECK(oracle::ext_profile(C, A, 1, -3, 0) == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(oracle::syzygy_dim(FreeModule{R, {0}}, {Vec::single(x, 0), Vec::single(y, 0)}, {1, 1}, 2) == 1);
}
