#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dimjump/field.hpp"

namespace dimjump {

// Rings carry at most this many variables (the user ring, the Rees variable
// and one homogenizing variable for ungraded resolutions).
inline constexpr std::size_t kMaxVars = 8;
inline constexpr unsigned kMaxExponent = 60000;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::int32_t degree = 0;  // weighted degree, kept in sync by the Ring helpers

  bool operator==(const Monomial& o) const { return exp == o.exp; }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp[i] > o.exp[i]) return false;
    return true;
  }
  bool is_one() const {
    for (auto e : exp)
      if (e) return false;
    return true;
  }
};

Monomial operator*(const Monomial& a, const Monomial& b);
// Requires b | a.
Monomial operator/(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

enum class OrderKind { grevlex, lex };

struct Variable {
  std::string name;
  int weight = 1;
  bool operator==(const Variable&) const = default;
};

// Weighted polynomial ring k[x1..xn]; weights are positive so the ring is
// N-graded with degree-zero piece k. The monomial order is part of the ring.
class Ring {
 public:
  Ring(Field field, std::vector<Variable> vars, OrderKind order = OrderKind::grevlex);

  const Field& field() const { return field_; }
  const std::vector<Variable>& variables() const { return vars_; }
  std::size_t num_vars() const { return vars_.size(); }
  OrderKind order() const { return order_; }
  int weight(std::size_t i) const { return vars_[i].weight; }
  // Index of the variable with this name, or num_vars() when absent.
  std::size_t find(const std::string& name) const;

  Monomial monomial(std::span<const int> exps) const;
  Monomial variable(std::size_t i, unsigned power = 1) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  // > 0 when a is larger than b in the ring's order.
  int compare(const Monomial& a, const Monomial& b) const;
  std::string format(const Monomial& m) const;

  bool operator==(const Ring& o) const;

 private:
  Field field_;
  std::vector<Variable> vars_;
  OrderKind order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(Field field, std::vector<Variable> vars, OrderKind order = OrderKind::grevlex);
RingPtr with_order(const RingPtr& ring, OrderKind order);
bool same_ring(const RingPtr& a, const RingPtr& b);
std::string describe(const Ring& ring);

// All monomials of the given weighted degree, in decreasing ring order.
std::vector<Monomial> monomials_of_degree(const Ring& ring, int degree);

}  // namespace dimjump
