#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace dimjump {

// Field elements are always stored as GMP rationals. Over a prime field the
// value is an integer in [0, p).
using Scalar = mpq_class;

class Field {
 public:
  static Field rationals() { return Field(0); }
  // Throws AlgebraError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  bool is_rationals() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  Scalar from_int(long v) const;
  // Maps a rational into the field; throws when the denominator vanishes mod p.
  Scalar from_rational(const mpq_class& v) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }
  static bool is_one(const Scalar& a) { return a == 1; }

  std::string name() const;
  std::string format(const Scalar& a) const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  Scalar reduce(const mpz_class& v) const;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace dimjump
