#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dimjump/homalg.hpp"

namespace dimjump {

// Univariate polynomial, coefficients from the constant term up.
class UPoly {
 public:
  explicit UPoly(Field k) : k_(k) {}
  UPoly(Field k, std::vector<Scalar> coeffs);
  static UPoly constant(Field k, const Scalar& c) { return UPoly(k, {c}); }
  static UPoly monomial(Field k, const Scalar& c, unsigned degree);

  const Field& field() const { return k_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }
  int valuation() const;
  const Scalar& lead() const { return c_.back(); }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator-() const;
  UPoly scaled(const Scalar& c) const;
  UPoly shifted(int k) const;  // times t^k; k < 0 drops the low terms
  UPoly monic() const;
  bool operator==(const UPoly& o) const { return k_ == o.k_ && c_ == o.c_; }

  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  Field k_;
  std::vector<Scalar> c_;
};

UPoly gcd(UPoly a, UPoly b);

enum class PIDKind { polynomial, laurent };

// Element of k[t] or k[t, t^-1]. Laurent elements are kept as t^shift * p
// with p(0) != 0 so that the degree of p is a Euclidean norm.
class PIDElem {
 public:
  PIDElem(PIDKind kind, UPoly p, int shift = 0);
  static PIDElem zero(PIDKind kind, Field k) { return PIDElem(kind, UPoly(k)); }
  static PIDElem one(PIDKind kind, Field k) { return PIDElem(kind, UPoly::constant(k, 1)); }

  PIDKind kind() const { return kind_; }
  const Field& field() const { return p_.field(); }
  const UPoly& poly() const { return p_; }
  int shift() const { return shift_; }
  bool is_zero() const { return p_.is_zero(); }
  bool is_unit() const { return p_.degree() == 0; }
  int norm() const { return p_.degree(); }

  PIDElem operator+(const PIDElem& o) const;
  PIDElem operator-(const PIDElem& o) const;
  PIDElem operator*(const PIDElem& o) const;
  PIDElem operator-() const;
  bool operator==(const PIDElem& o) const;

  // this = unit * normalized, normalized monic (and free of t in the Laurent ring).
  PIDElem unit_part() const;
  PIDElem normalized() const;
  PIDElem inverse() const;  // units only
  // dim_k R/(this); infinite for zero.
  VectorDim residue_dimension() const;

  static void divmod(const PIDElem& a, const PIDElem& b, PIDElem& q, PIDElem& r);
  std::string to_string() const;

 private:
  PIDKind kind_;
  UPoly p_;
  int shift_ = 0;
};

class PIDMatrix {
 public:
  PIDMatrix(PIDKind kind, Field k, std::size_t rows, std::size_t cols);
  static PIDMatrix identity(PIDKind kind, Field k, std::size_t n);

  PIDKind kind() const { return kind_; }
  const Field& field() const { return k_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PIDElem& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  PIDElem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  PIDMatrix operator*(const PIDMatrix& o) const;
  bool operator==(const PIDMatrix& o) const;
  PIDMatrix transpose() const;
  // Same entries viewed in the other ring.
  PIDMatrix in_kind(PIDKind kind) const;
  std::string to_string() const;

 private:
  PIDKind kind_;
  Field k_;
  std::size_t rows_, cols_;
  std::vector<PIDElem> data_;
};

struct SmithForm {
  PIDMatrix U, D, V;               // U * A * V = D
  std::vector<PIDElem> invariants;  // nonzero diagonal, d_i | d_{i+1}, normalized
  std::size_t rank() const { return invariants.size(); }
};

SmithForm smith_normal_form(const PIDMatrix& A);
PIDElem determinant(const PIDMatrix& A);

// A module over a one-variable ring as a PID matrix.
UPoly to_upoly(const Polynomial& p);
PIDMatrix pid_matrix(const GradedMatrix& m, PIDKind kind);

enum class InjectiveModel { J, TorsionAtZero };

std::string model_name(InjectiveModel m);

// dim_k Ext^q(M, model) for M over k[t].
VectorDim ext_against_injective_model(const FPModule& M, InjectiveModel model, int q);
// Same for J, from the resolution 0 -> A^{k-r} -> A^k -> A^m given by the
// presentation and its kernel, Hom'd into J.
VectorDim ext_against_J_via_resolution(const FPModule& M, int q);

// Rank-one graded modules over k[t] described by their nonzero degrees.
enum class GradedRankOne { J, PolynomialRing, TorsionAtZero };

struct BaerResult {
  bool pass = true;
  int failing_n = 0;
  int failing_degree = 0;
};

// Every degree-zero map (t^n)(s) -> I extends to A(s) -> I, for n <= nmax and
// shifts s in the window: surjectivity of t^n : I_s -> I_{s+n}.
BaerResult graded_baer_check(GradedRankOne model, int nmax, Window window = {});

struct ProbeRow {
  std::string name;
  std::vector<VectorDim> ext;  // q = 0, 1, 2
};

std::vector<ProbeRow> ungraded_injectivity_probe(InjectiveModel model,
                                                 const std::vector<std::pair<std::string, FPModule>>& probes);

}  // namespace dimjump
