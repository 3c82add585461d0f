#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dimjump/ring.hpp"

namespace dimjump {

struct Term {
  Scalar coef;
  Monomial mono;
};

// Sparse polynomial; terms strictly decreasing in the ring's order, no zero
// coefficients. The zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  // Sorts, merges duplicates and drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, std::size_t i, unsigned power = 1);
  static Polynomial monomial(RingPtr ring, const Scalar& c, const Monomial& m);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  const Term& lead() const { return terms_.front(); }
  std::size_t size() const { return terms_.size(); }

  // Maximum weighted degree of a term; nullopt stands for minus infinity (p = 0).
  std::optional<int> weighted_degree() const;
  // Lowest weighted degree of a term; nullopt for p = 0.
  std::optional<int> low_degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times(const Scalar& c, const Monomial& m) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Same polynomial re-sorted for another order on the same variables.
  Polynomial in_ring(const RingPtr& ring) const;
  // Sum of the terms of the given weighted degree.
  Polynomial homogeneous_part(int degree) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

struct Homogeneity {
  bool homogeneous = false;
  // Common degree; nullopt for the zero polynomial, which is homogeneous of every degree.
  std::optional<int> degree;
};

Homogeneity is_homogeneous(const Polynomial& p);

// Ring homomorphism x_i -> images[i] into `target`.
Polynomial substitute(const Polynomial& p, const RingPtr& target, std::span<const Polynomial> images);

// Embedding of a ring into a larger one with one extra homogenizing variable.
struct Homogenization {
  RingPtr base;
  RingPtr target;
  std::vector<std::size_t> var_map;  // base variable i -> target variable var_map[i]
  std::size_t extra;                 // index of the homogenizing variable (weight 1)
};

// Adjoins a weight-one variable `extra_name`; base variables are renamed by
// `rename` when given (same order), otherwise kept.
Homogenization adjoin_variable(const RingPtr& base, const std::string& extra_name,
                               const std::vector<std::string>& rename = {});

// Pads each term with powers of the extra variable up to `degree` (default:
// the weighted degree of p). Throws AlgebraError for p = 0 without an explicit
// degree, or when a term exceeds the requested degree.
Polynomial homogenize(const Polynomial& p, const Homogenization& h, std::optional<int> degree = std::nullopt);
// extra -> value (0 or 1 in practice), other variables mapped back to the base ring.
Polynomial dehomogenize(const Polynomial& p, const Homogenization& h, long value = 1);
// Base ring polynomial mapped into the target without padding.
Polynomial embed(const Polynomial& p, const Homogenization& h);

}  // namespace dimjump
