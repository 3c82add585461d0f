#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dimjump/polynomial.hpp"

namespace dimjump {

// Free module F = A(-t_0) + ... + A(-t_{r-1}); generator i sits in degree t_i.
struct FreeModule {
  RingPtr ring;
  std::vector<int> twists;

  std::size_t rank() const { return twists.size(); }
  static FreeModule zero_twists(RingPtr ring, std::size_t rank) {
    return FreeModule{std::move(ring), std::vector<int>(rank, 0)};
  }
};

bool same_module(const FreeModule& a, const FreeModule& b);

struct VTerm {
  Scalar coef;
  Monomial mono;
  std::uint32_t comp;
};

// Element of a free module. Terms are sorted by the position-over-term order:
// lower component index first, then decreasing monomial order within a component.
class Vec {
 public:
  explicit Vec(RingPtr ring) : ring_(std::move(ring)) {}
  Vec(RingPtr ring, std::vector<VTerm> terms);

  static Vec from_components(RingPtr ring, std::span<const Polynomial> comps);
  static Vec unit(RingPtr ring, std::uint32_t comp);
  static Vec single(const Polynomial& p, std::uint32_t comp);

  const RingPtr& ring() const { return ring_; }
  const std::vector<VTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const VTerm& lead() const { return terms_.front(); }
  Polynomial component(std::size_t i) const;
  // Largest component index + 1 carrying a term.
  std::size_t span() const;

  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec times(const Scalar& c, const Monomial& m) const;
  Vec scaled(const Scalar& c) const { return times(c, Monomial{}); }
  Vec mul(const Polynomial& p) const;
  bool operator==(const Vec& o) const;
  // Components shifted by `offset` (may be negative when all terms allow it).
  Vec shifted(long offset) const;
  // Keeps components in [lo, hi), renumbered from 0.
  Vec slice(std::size_t lo, std::size_t hi) const;
  Vec in_ring(const RingPtr& ring) const;
  Vec monic() const;

  // Max of (term degree + twist); nullopt for zero.
  std::optional<int> degree(const FreeModule& F) const;
  // Homogeneous w.r.t. the twists of F (zero counts as homogeneous).
  bool is_homogeneous(const FreeModule& F) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<VTerm> terms_;
};

// > 0 when (m1, c1) is larger than (m2, c2) in the position-over-term order.
int compare_pot(const Ring& ring, const Monomial& m1, std::uint32_t c1, const Monomial& m2, std::uint32_t c2);

struct VectorDim {
  bool infinite = false;
  std::size_t value = 0;
  static VectorDim finite(std::size_t v) { return {false, v}; }
  static VectorDim inf() { return {true, 0}; }
  bool is_zero() const { return !infinite && value == 0; }
  bool operator==(const VectorDim&) const = default;
  std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
};

// Reduced Groebner basis of a submodule of a free module.
class GroebnerBasis {
 public:
  explicit GroebnerBasis(FreeModule ambient) : ambient_(std::move(ambient)) {}
  GroebnerBasis(FreeModule ambient, std::vector<Vec> reduced_elements);

  const FreeModule& ambient() const { return ambient_; }
  const RingPtr& ring() const { return ambient_.ring; }
  const std::vector<Vec>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  Vec normal_form(const Vec& v) const;
  bool contains(const Vec& v) const { return normal_form(v).is_zero(); }
  bool contains_all(std::span<const Vec> vs) const;
  // True when the submodule is the whole ambient module.
  bool is_everything() const;

  // Lead monomials of basis elements on component c.
  std::vector<Monomial> leads_on(std::uint32_t c) const;

 private:
  FreeModule ambient_;
  std::vector<Vec> elements_;
};

// Buchberger with the normal selection strategy (sugar) and the Gebauer-Moeller
// criteria. Uses the ambient ring's order unless `order` asks for another, in
// which case the basis lives over the re-ordered ring.
GroebnerBasis buchberger(const FreeModule& F, std::span<const Vec> gens, std::optional<OrderKind> order = {});

struct LiftedBasis {
  GroebnerBasis basis;
  // certificates[i] expresses basis element i in terms of the generators:
  // basis_i = sum_j certificates[i]_j * gens_j.
  std::vector<Vec> certificates;
  // Free module indexing the generators (twists = generator degrees).
  FreeModule source;
  // Generators of the module of relations among the generators.
  std::vector<Vec> syzygies;
};

// Groebner basis together with lifting data, computed by running the
// completion on (gens_i, e_i) in F + source with F's components first.
LiftedBasis buchberger_lifted(const FreeModule& F, std::span<const Vec> gens,
                              std::optional<std::vector<int>> gen_degrees = {});

struct SyzygyModule {
  FreeModule source;  // rank = #gens, twists = generator degrees
  std::vector<Vec> generators;
};

SyzygyModule syzygies(const FreeModule& F, std::span<const Vec> gens,
                      std::optional<std::vector<int>> gen_degrees = {});

// (U : f) = {v : f v in U}. Throws AlgebraError when f = 0.
GroebnerBasis module_quotient(const GroebnerBasis& U, const Polynomial& f);

struct Saturation {
  GroebnerBasis basis;
  int iterations = 0;  // number of quotient steps that enlarged the module
};

inline constexpr int kSaturationCap = 64;

// (U : f^inf); InternalError after kSaturationCap non-stabilizing steps.
Saturation saturate(const GroebnerBasis& U, const Polynomial& f);

// K subset of U, i.e. the subquotient (K + U)/U vanishes.
bool is_zero_quotient(std::span<const Vec> K, const GroebnerBasis& U);

// dim_k (F/U)_d for d in [lo, hi] by counting standard monomials.
// Throws AlgebraError if the ring has a variable of weight < 1 (never) or
// the window is reversed.
std::vector<std::size_t> hilbert_profile(const GroebnerBasis& U, int lo, int hi);

// Total k-dimension of F/U (finite iff every component without a unit lead
// has a pure power of every variable among its leads).
VectorDim quotient_dimension(const GroebnerBasis& U);

// Post-hoc check: every S-pair of the basis reduces to zero.
bool verify_groebner(const GroebnerBasis& G);

}  // namespace dimjump
