#pragma once

#include <string>
#include <vector>

#include "dimjump/homalg.hpp"
#include "dimjump/errors.hpp"
#include "dimjump/parse.hpp"

namespace testing {

using namespace dimjump;

inline RingPtr qq(std::vector<Variable> vars, OrderKind order = OrderKind::grevlex) {
  return make_ring(Field::rationals(), std::move(vars), order);
}

inline Polynomial P(const RingPtr& R, const std::string& s) { return parse_polynomial(R, s); }

inline GradedMatrix matrix(const RingPtr& R, const std::vector<std::vector<std::string>>& rows,
                           std::vector<int> row_tw, std::vector<int> col_tw) {
  std::vector<std::vector<Polynomial>> polys;
  for (const auto& r : rows) {
    std::vector<Polynomial> pr;
    for (const auto& e : r) pr.push_back(P(R, e));
    polys.push_back(pr);
  }
  return GradedMatrix::from_rows(FreeModule{R, col_tw}, FreeModule{R, row_tw}, polys);
}

inline FPModule coker(const RingPtr& R, const std::vector<std::vector<std::string>>& rows, std::vector<int> row_tw,
                      std::vector<int> col_tw, Grading mode = Grading::graded) {
  return FPModule::coker(matrix(R, rows, std::move(row_tw), std::move(col_tw)), mode);
}

// k = A / (all variables), generated in degree 0.
inline FPModule residue_field(const RingPtr& R) {
  std::vector<std::string> row;
  std::vector<int> tw;
  for (std::size_t i = 0; i < R->num_vars(); ++i) {
    row.push_back(R->variables()[i].name);
    tw.push_back(R->variables()[i].weight);
  }
  return coker(R, {row}, {0}, tw);
}

inline FPModule free_module(const RingPtr& R, std::vector<int> tw) { return FPModule::free(FreeModule{R, tw}); }

}  // namespace testing
