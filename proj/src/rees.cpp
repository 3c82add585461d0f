#include "dimjump/rees.hpp"

#include <cctype>
#include <functional>
#include <set>

#include "dimjump/errors.hpp"

namespace dimjump {

namespace {

std::string upper(std::string s) {
  for (auto& c : s) c = char(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

Vec map_vec(const Vec& v, const RingPtr& target, const std::function<Polynomial(const Polynomial&)>& f,
            std::size_t rank) {
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < rank; ++i) comps.push_back(f(v.component(i)));
  return Vec::from_components(target, comps);
}

GradedMatrix map_matrix(const GradedMatrix& m, const RingPtr& target,
                        const std::function<Polynomial(const Polynomial&)>& f, bool keep_twists = true) {
  std::vector<Vec> cols;
  for (const auto& c : m.columns()) cols.push_back(map_vec(c, target, f, m.rows()));
  FreeModule src{target, m.source().twists};
  FreeModule tgt{target, m.target().twists};
  if (!keep_twists) {
    src = FreeModule::zero_twists(target, m.cols());
    tgt = FreeModule::zero_twists(target, m.rows());
  }
  return GradedMatrix(std::move(src), std::move(tgt), std::move(cols));
}

void check_base(const ReesRing& R, const FPModule& M) {
  if (!same_ring(R.base, M.ring())) throw AlgebraError("module is not over the base ring of the Rees ring");
}

void check_total(const ReesRing& R, const FPModule& M) {
  if (!same_ring(R.total, M.ring())) throw AlgebraError("module is not over the Rees ring");
}

}  // namespace

ReesRing rees_ring(const RingPtr& base) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  bool clash = false;
  for (const auto& v : base->variables()) {
    names.push_back(upper(v.name));
    clash |= !seen.insert(names.back()).second;
  }
  if (clash) {
    names.clear();
    for (const auto& v : base->variables()) names.push_back(v.name);
    seen = std::set<std::string>(names.begin(), names.end());
  }
  std::string t = "T";
  for (int i = 1; seen.count(t); ++i) t = "T" + std::to_string(i);
  Homogenization h = adjoin_variable(base, t, names);
  return ReesRing{base, h.target, h};
}

bool rees_dimension_identity(const ReesRing& R, int emax) {
  std::size_t partial = 0;
  for (int e = 0; e <= emax; ++e) {
    partial += monomials_of_degree(*R.base, e).size();
    if (monomials_of_degree(*R.total, e).size() != partial) return false;
  }
  return true;
}

ReesModuleData rees_module(const ReesRing& R, const FPModule& M) {
  check_base(R, M);
  if (!M.graded()) throw AlgebraError("canonical Rees module needs a graded module; supply generator degrees");
  GradedMatrix P = map_matrix(M.presentation(), R.total, [&](const Polynomial& p) { return R.lift(p); });
  return ReesModuleData{FPModule::coker(std::move(P)), M, ReesKind::canonical, 0};
}

ReesModuleData rees_module(const ReesRing& R, const FPModule& M, const Filtration& F) {
  check_base(R, M);
  const GradedMatrix& P = M.presentation();
  if (F.generator_degrees.size() != P.rows())
    throw AlgebraError("filtration needs one degree per generator (" + std::to_string(P.rows()) + ")");
  FreeModule Ft{R.total, F.generator_degrees};
  std::vector<Vec> cols;
  for (const auto& col : P.columns()) {
    if (col.is_zero()) continue;
    std::optional<int> a;
    for (std::size_t i = 0; i < P.rows(); ++i) {
      Polynomial e = col.component(i);
      if (e.is_zero()) continue;
      int d = *e.weighted_degree() + F.generator_degrees[i];
      if (!a || d > *a) a = d;
    }
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < P.rows(); ++i) {
      Polynomial e = col.component(i);
      comps.push_back(e.is_zero() ? Polynomial(R.total) : homogenize(e, R.h, *a - F.generator_degrees[i]));
    }
    cols.push_back(Vec::from_components(R.total, comps));
  }
  Saturation sat = saturate(buchberger(Ft, cols), R.T());
  std::vector<int> tw;
  for (const auto& v : sat.basis.elements()) tw.push_back(v.degree(Ft).value());
  GradedMatrix Pt(FreeModule{R.total, tw}, Ft, sat.basis.elements());
  return ReesModuleData{FPModule::coker(std::move(Pt)).minimized(), M, ReesKind::good_filtration, sat.iterations};
}

FPModule sp0(const ReesRing& R, const FPModule& Mt) {
  check_total(R, Mt);
  auto f = [&](const Polynomial& p) { return dehomogenize(p, R.h, 0); };
  return FPModule::coker(map_matrix(Mt.presentation(), R.base, f));
}

FPModule sp1(const ReesRing& R, const FPModule& Mt) {
  check_total(R, Mt);
  auto f = [&](const Polynomial& p) { return dehomogenize(p, R.h, 1); };
  return FPModule::coker(map_matrix(Mt.presentation(), R.base, f, false), Grading::ungraded);
}

FreeComplex sp0(const ReesRing& R, const FreeComplex& C) {
  if (!same_ring(C.ring(), R.total)) throw AlgebraError("complex is not over the Rees ring");
  auto f = [&](const Polynomial& p) { return dehomogenize(p, R.h, 0); };
  std::vector<FreeModule> terms;
  std::vector<GradedMatrix> diffs;
  for (int i = C.lo(); i <= C.hi(); ++i) terms.push_back(FreeModule{R.base, C.term(i).twists});
  for (int i = C.lo(); i < C.hi(); ++i) diffs.push_back(map_matrix(C.differential(i), R.base, f));
  return FreeComplex(C.lo(), std::move(terms), std::move(diffs), C.mode());
}

LSp0 lsp0(const ReesRing& R, const FPModule& Mt) {
  check_total(R, Mt);
  const GroebnerBasis& U = Mt.relations_gb();
  Subquotient ann{Mt.generators(), module_quotient(U, R.T()), U};
  FPModule K = present_subquotient(ann, Grading::graded).twisted(-1);
  return LSp0{sp0(R, K), sp0(R, Mt)};
}

bool t_regular(const ReesRing& R, const FPModule& Mt) {
  check_total(R, Mt);
  const GroebnerBasis& U = Mt.relations_gb();
  return U.contains_all(module_quotient(U, R.T()).elements());
}

}  // namespace dimjump
