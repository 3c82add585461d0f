#pragma once

#include <optional>
#include <vector>

#include "dimjump/homalg.hpp"

namespace dimjump {

// A~ = k[X_1..X_n, T] with deg X_i = deg x_i and deg T = 1; X_i stands for
// x_i t^{d_i}, T for t.
struct ReesRing {
  RingPtr base;
  RingPtr total;
  Homogenization h;

  std::size_t t_index() const { return h.extra; }
  Polynomial T() const { return Polynomial::variable(total, h.extra); }
  // x_i -> X_i
  Polynomial lift(const Polynomial& p) const { return embed(p, h); }
};

ReesRing rees_ring(const RingPtr& base);

// dim A~_e == #{monomials of A of degree <= e} for 0 <= e <= emax.
bool rees_dimension_identity(const ReesRing& R, int emax);

// Filtration F_i(M) = sum_j F_{i - b_j}(A) m_j given by generator levels b_j.
struct Filtration {
  std::vector<int> generator_degrees;
};

enum class ReesKind { canonical, good_filtration };

struct ReesModuleData {
  FPModule tilde;
  FPModule origin;
  ReesKind kind;
  int saturation_steps = 0;
};

// Canonical graded filtration F_i(M) = sum_{j <= i} M_j.
ReesModuleData rees_module(const ReesRing& R, const FPModule& M);
ReesModuleData rees_module(const ReesRing& R, const FPModule& M, const Filtration& F);

// T -> 0, graded over A.
FPModule sp0(const ReesRing& R, const FPModule& Mt);
// T -> 1, ungraded over A.
FPModule sp1(const ReesRing& R, const FPModule& Mt);
FreeComplex sp0(const ReesRing& R, const FreeComplex& C);

// Cohomology of the Koszul complex Mt(-1) --T--> Mt.
struct LSp0 {
  FPModule h_minus1;  // ann(T)(-1), a graded A-module
  FPModule h0;        // Mt / T Mt
};

LSp0 lsp0(const ReesRing& R, const FPModule& Mt);

// (U : T) == U for the relation module U of Mt.
bool t_regular(const ReesRing& R, const FPModule& Mt);

}  // namespace dimjump
