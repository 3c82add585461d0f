#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dimjump/groebner.hpp"

namespace dimjump {

// Map of free modules source -> target given by its columns (images of the
// source generators). In graded mode entry (i, j) is homogeneous of degree
// source.twists[j] - target.twists[i], i.e. the map has degree zero.
class GradedMatrix {
 public:
  GradedMatrix(FreeModule source, FreeModule target, std::vector<Vec> columns);
  static GradedMatrix from_rows(FreeModule source, FreeModule target, const std::vector<std::vector<Polynomial>>& rows);
  static GradedMatrix zero(FreeModule source, FreeModule target);

  const FreeModule& source() const { return source_; }
  const FreeModule& target() const { return target_; }
  const std::vector<Vec>& columns() const { return columns_; }
  const RingPtr& ring() const { return target_.ring; }
  std::size_t rows() const { return target_.rank(); }
  std::size_t cols() const { return source_.rank(); }
  Polynomial entry(std::size_t i, std::size_t j) const;
  bool is_zero() const;

  // Image of a source element.
  Vec apply(const Vec& v) const;
  // this o right (right: X -> source).
  GradedMatrix compose(const GradedMatrix& right) const;
  std::string to_string() const;

 private:
  FreeModule source_;
  FreeModule target_;
  std::vector<Vec> columns_;
};

struct DegreeViolation {
  std::size_t row = 0;
  std::size_t col = 0;
  int expected = 0;
  std::optional<int> found;  // nullopt when the entry is not homogeneous
  std::string message() const;
};

std::optional<DegreeViolation> validate_graded_matrix(const GradedMatrix& m);

enum class Grading { graded, ungraded };

// Cokernel of a presentation matrix.
class FPModule {
 public:
  // Validates degrees in graded mode (throws DegreeError).
  static FPModule coker(GradedMatrix presentation, Grading mode = Grading::graded);
  static FPModule free(FreeModule F, Grading mode = Grading::graded);

  const GradedMatrix& presentation() const { return presentation_; }
  const FreeModule& generators() const { return presentation_.target(); }
  const RingPtr& ring() const { return presentation_.ring(); }
  Grading mode() const { return mode_; }
  bool graded() const { return mode_ == Grading::graded; }
  std::size_t num_generators() const { return generators().rank(); }

  // Groebner basis of the relation module, computed once and shared by copies.
  const GroebnerBasis& relations_gb() const;
  // dim_k M_d for d in [lo, hi]; graded modules only.
  std::vector<std::size_t> hilbert_profile(int lo, int hi) const;
  bool is_zero() const;
  VectorDim dimension() const;

  FPModule as_ungraded() const;
  // Serre twist M(n): M(n)_d = M_{n+d}.
  FPModule twisted(int n) const;
  // Same module with unit entries of the presentation eliminated.
  FPModule minimized() const;
  std::string to_string() const;

 private:
  FPModule(GradedMatrix presentation, Grading mode);
  struct Cache;
  GradedMatrix presentation_;
  Grading mode_;
  std::shared_ptr<Cache> cache_;
};

// Bounded cochain complex of free modules C^lo -> ... -> C^hi.
class FreeComplex {
 public:
  FreeComplex(int lo, std::vector<FreeModule> terms, std::vector<GradedMatrix> differentials, Grading mode);

  int lo() const { return lo_; }
  int hi() const { return lo_ + int(terms_.size()) - 1; }
  Grading mode() const { return mode_; }
  const RingPtr& ring() const { return terms_.front().ring; }
  // Zero free module outside [lo, hi].
  FreeModule term(int i) const;
  // d^i : C^i -> C^{i+1}; zero map when either side is out of range.
  GradedMatrix differential(int i) const;
  // Resolution length: number of nonzero terms minus one (for complexes ending in degree 0).
  int length() const;
  bool is_complex() const;  // d^{i+1} o d^i = 0 exactly
  std::string to_string() const;

 private:
  int lo_;
  std::vector<FreeModule> terms_;
  std::vector<GradedMatrix> diffs_;
  Grading mode_;
};

// Terms are finitely presented modules; maps are lifts between the ambient
// free modules of consecutive terms.
struct ModuleComplex {
  int lo = 0;
  std::vector<FPModule> terms;
  std::vector<GradedMatrix> maps;  // maps[k] : ambient(terms[k]) -> ambient(terms[k+1])
  Grading mode = Grading::graded;

  int hi() const { return lo + int(terms.size()) - 1; }
};

// Free resolution ... -> F_1 -> F_0 -> M as a complex in degrees -len..0.
// Graded mode: minimal (unit entries pruned). Ungraded mode: the presentation
// is homogenized with an extra variable, resolved, and dehomogenized.
// Throws InternalError if the length would exceed max_len.
FreeComplex free_resolution(const FPModule& M, int max_len);
FreeComplex free_resolution(const FPModule& M);

// Hom(C^{-q}, N) in degree q with the transposed differentials.
ModuleComplex hom_complex(const FreeComplex& C, const FPModule& N);
// The complex of free modules viewed as a ModuleComplex (no relations).
ModuleComplex as_module_complex(const FreeComplex& C);

// ker d^q / im d^{q-1} as a subquotient of the ambient free module of term q.
struct Subquotient {
  FreeModule ambient;
  GroebnerBasis numerator;    // kernel + relations
  GroebnerBasis denominator;  // image + relations
  bool vanishes() const { return denominator.contains_all(numerator.elements()); }
  std::vector<std::size_t> hilbert_profile(int lo, int hi) const;
};

Subquotient cohomology_subquotient(const ModuleComplex& C, int q);
// Finite presentation of numerator / denominator (unit entries pruned).
FPModule present_subquotient(const Subquotient& sq, Grading mode);
// Finite presentation of H^q.
FPModule cohomology_at(const ModuleComplex& C, int q);

struct Window {
  int lo = -20;
  int hi = 20;
};

struct ExtProfile {
  int q = 0;
  Grading mode = Grading::graded;
  bool vanishes = true;
  Window window;
  std::vector<std::size_t> dims;     // graded mode: dim Ext^q_d for d in window
  std::optional<VectorDim> total;    // ungraded mode: total dimension
  std::size_t at(int d) const { return d < window.lo || d > window.hi ? 0 : dims[std::size_t(d - window.lo)]; }
};

// Ext by resolving the first argument. Keeps the resolution and Hom complex
// so profiles for several q share the work.
class ExtCalculator {
 public:
  ExtCalculator(const FPModule& M, const FPModule& N);

  Grading mode() const { return mode_; }
  const FreeComplex& resolution() const { return resolution_; }
  const ModuleComplex& hom() const { return hom_; }
  ExtProfile profile(int q, Window window) const;
  // Ungraded-mode style total: dimension of the presented Ext module.
  ExtProfile total(int q) const;
  FPModule module(int q) const;
  bool vanishes(int q) const;
  // Upper bound for nonvanishing indices (global dimension of the ring,
  // or the resolution length if larger).
  int top_index() const;

 private:
  Grading mode_;
  FreeComplex resolution_;
  ModuleComplex hom_;
};

ExtProfile ext_profile(const FPModule& M, const FPModule& N, int q, Window window = {});
// True iff Ext^q(M, N) = 0 for all q0 < q <= top index.
bool ext_vanishes_above(const FPModule& M, const FPModule& N, int q0);

}  // namespace dimjump
